#include "yang/transitions.hpp"

#include <cmath>

#include "yang/mesons.hpp"
#include "yang/su2.hpp"
#include "yang/su3.hpp"

namespace yang {

namespace {

double plog3p(double p) {
  if (p <= 0.0) return 0.0;
  return -p * std::log(p) / std::log(3.0);
}

}  // namespace

PureState qubit_initial_state(cdouble alpha, cdouble beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol::normalization)
    throw NotNormalized("qubit_initial_state: |alpha|^2 + |beta|^2 must be 1");
  const double r2 = 1.0 / std::sqrt(2.0);
  Vector v(4);
  v << alpha * r2, beta * r2, beta * r2, alpha * r2;
  return PureState{{2, 2}, std::move(v)};
}

GeneratorSet sl2_operator_catalog(const Params& p) {
  const GeneratorSet j = yangian_j(p);
  const GeneratorSet y = reduced_generators_su2(p);
  return GeneratorSet{"sl2-catalog",
                      4,
                      {{"J+", j.at("J+")},
                       {"J-", j.at("J-")},
                       {"J3", j.at("J3")},
                       {"Y+", y.at("Y+")},
                       {"Y-", y.at("Y-")},
                       {"Y3", y.at("Y3")}}};
}

GeneratorSet su3_operator_catalog(const Params& p, Su3Family family) {
  if (family == Su3Family::tilde) {
    const GeneratorSet t = tilde_operators(p);
    GeneratorSet g{"su3-tilde", 9, {}};
    for (const char* label : {"Itilde+", "Itilde-", "Utilde+", "Utilde-", "Vtilde+",
                              "Vtilde-", "Itilde3", "Itilde8"})
      g.members.emplace_back(label, t.at(label));
    return g;
  }
  return reduced_generators_su3(p);
}

std::pair<Matrix, std::string> operator_by_label(const Params& p, const std::string& label) {
  if (label == "J+" || label == "J-" || label == "J3")
    return {yangian_j(p).at(label), "su2"};
  if (label == "Y+" || label == "Y-" || label == "Y3")
    return {reduced_generators_su2(p).at(label), "su2"};
  if (label.find("tilde") != std::string::npos) {
    const GeneratorSet t = tilde_operators(p);
    if (t.has(label)) return {t.at(label), "su3"};
  }
  if (label.find("bar") != std::string::npos) {
    const GeneratorSet r = reduced_generators_su3(p);
    if (r.has(label)) return {r.at(label), "su3"};
  }
  throw ValidationError("unknown operator label: " + label);
}

TransitionOutcome apply_transition(const std::string& label, const Matrix& op,
                                   const PureState& s, double channel_tol) {
  if (op.rows() != op.cols()) throw WrongShape("apply_transition: operator must be square");
  if (op.rows() != s.amps.size())
    throw DimensionMismatch("apply_transition: operator and state dimensions differ");
  const bool qubits =
      s.party_dims.size() == 2 && s.party_dims[0] == 2 && s.party_dims[1] == 2;
  const bool qutrits =
      s.party_dims.size() == 2 && s.party_dims[0] == 3 && s.party_dims[1] == 3;
  if (!qubits && !qutrits)
    throw WrongShape("apply_transition: state must be a qubit or qutrit pair");
  s.require_normalized();

  TransitionOutcome out;
  out.operator_label = label;
  out.entanglement_before = qubits ? concurrence(s) : mean_entropy(s);
  out.raw_state = op * s.amps;
  out.raw_norm = out.raw_state.norm();
  out.annihilated = out.raw_norm <= tol::annihilation;
  if (out.annihilated) return out;

  out.final_state = PureState{s.party_dims, (out.raw_state / out.raw_norm).eval()};
  out.entanglement_after =
      qubits ? concurrence(out.final_state) : mean_entropy(out.final_state);
  if (qutrits) {
    const Decomposition d = decompose(out.final_state);
    for (const auto& c : d.components) {
      out.components.emplace_back(c.label, c.coefficient);
      if (std::abs(c.coefficient) > channel_tol) out.channels.push_back(c.label);
    }
  }
  return out;
}

SweepResult sweep_c1(double lambda, double mu_min, double mu_max, int steps) {
  if (steps < 2) throw EmptyRange("sweep_c1: steps must be at least 2");
  if (!(mu_max >= mu_min)) throw EmptyRange("sweep_c1: empty mu range");
  SweepResult out;
  for (int i = 0; i < steps; ++i) {
    const double mu = mu_min + (mu_max - mu_min) * static_cast<double>(i) / (steps - 1);
    const double w = mu - lambda / 2.0;
    const double p = w * w;
    if (p > 1.0) {
      ++out.omitted;
      continue;
    }
    out.points.push_back({mu, plog3p(p) + plog3p(1.0 - p)});
  }
  if (out.points.empty())
    throw EmptyRange("sweep_c1: no grid point satisfies (mu - lambda/2)^2 <= 1");
  return out;
}

}  // namespace yang
