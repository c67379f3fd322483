#include "yang/mesons.hpp"

#include <cmath>

#include "yang/transitions.hpp"

namespace yang {

namespace {

Vector unit9(int idx) {
  Vector v = Vector::Zero(9);
  v(idx) = 1.0;
  return v;
}

// Product index 3q + qbar with u=0, d=1, s=2.
std::vector<std::pair<std::string, Vector>> build_dictionary() {
  const double r2 = 1.0 / std::sqrt(2.0);
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  std::vector<std::pair<std::string, Vector>> d;
  d.emplace_back("pi+", (-unit9(1)).eval());                    // -|u dbar>
  d.emplace_back("pi-", unit9(3));                              //  |d ubar>
  d.emplace_back("K0", unit9(5));                               //  |d sbar>
  d.emplace_back("Kbar0", unit9(7));                            //  |s dbar>
  d.emplace_back("K+", unit9(2));                               //  |u sbar>
  d.emplace_back("K-", unit9(6));                               //  |s ubar>
  d.emplace_back("pi0", (r2 * (unit9(0) - unit9(4))).eval());
  d.emplace_back("eta0", (r6 * (-unit9(0) - unit9(4) + 2.0 * unit9(8))).eval());
  d.emplace_back("eta0'", (r3 * (unit9(0) + unit9(4) + unit9(8))).eval());
  return d;
}

const std::vector<std::pair<std::string, Vector>>& dictionary() {
  static const auto d = build_dictionary();
  return d;
}

}  // namespace

const std::vector<std::string>& meson_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& [name, vec] : dictionary()) out.push_back(name);
    return out;
  }();
  return labels;
}

const Vector& meson_vector(const std::string& label) {
  for (const auto& [name, vec] : dictionary())
    if (name == label) return vec;
  throw ValidationError("unknown meson label: " + label);
}

Decomposition decompose(const PureState& s) {
  if (s.party_dims.size() != 2 || s.party_dims[0] != 3 || s.party_dims[1] != 3 ||
      s.amps.size() != 9)
    throw WrongShape("decompose: state must be a qutrit pair");
  Decomposition out;
  Vector rebuilt = Vector::Zero(9);
  for (const auto& [name, vec] : dictionary()) {
    const cdouble c = vec.dot(s.amps);  // Eigen dot conjugates the left factor
    out.components.push_back({name, c});
    rebuilt += c * vec;
  }
  out.residual = (s.amps - rebuilt).norm();
  return out;
}

std::string channel_label(const Decomposition& d, double threshold) {
  std::string out;
  for (const auto& comp : d.components)
    if (std::abs(comp.coefficient) > threshold) out += comp.label;
  return out;
}

PureState construct_eta(double alpha1, double alpha2) {
  if (std::abs(alpha1 * alpha1 + alpha2 * alpha2 - 1.0) > tol::normalization)
    throw NotNormalized("construct_eta: alpha1^2 + alpha2^2 must be 1");
  Vector v = alpha1 * meson_vector("eta0'") + alpha2 * meson_vector("eta0");
  return PureState{{3, 3}, std::move(v)};
}

Vector eta8_asymmetric_variant(double alpha1, double alpha2) {
  const double cm = alpha1 / std::sqrt(3.0) - alpha2 / std::sqrt(6.0);
  const double cp = alpha1 / std::sqrt(3.0) + 2.0 * alpha2 / std::sqrt(6.0);
  return cm * (unit9(0) / 3.0 - unit9(4) / 2.0) - (2.0 / 3.0) * cp * unit9(8);
}

namespace {

DecayRow make_row(const std::string& label, const Matrix& op, const PureState& eta,
                  double channel_tol) {
  const TransitionOutcome out = apply_transition(label, op, eta, channel_tol);
  DecayRow row;
  row.operator_label = label;
  row.raw_norm = out.raw_norm;
  row.annihilated = out.annihilated;
  row.entanglement_after = out.annihilated ? 0.0 : out.entanglement_after;
  for (const auto& ch : out.channels) row.channel += ch;
  const Decomposition raw_dec = decompose(PureState{{3, 3}, out.raw_state});
  for (const auto& c : raw_dec.components) row.components.push_back(c);
  return row;
}

}  // namespace

DecayReport decay_report(const Params& p, double alpha1, double alpha2,
                         double channel_tol) {
  p.require_constraint();
  const PureState eta = construct_eta(alpha1, alpha2);

  DecayReport rep;
  rep.params = p;
  rep.alpha1 = alpha1;
  rep.alpha2 = alpha2;
  rep.entanglement_initial = mean_entropy(eta);
  rep.special_mixing = std::abs(alpha1 + std::sqrt(2.0) * alpha2) <= tol::entropy_zero;

  const GeneratorSet tilde = su3_operator_catalog(p, Su3Family::tilde);
  const GeneratorSet reduced = su3_operator_catalog(p, Su3Family::reduced);
  for (const auto& [label, op] : tilde.members)
    rep.general.push_back(make_row(label, op, eta, channel_tol));
  for (const auto& [label, op] : reduced.members)
    rep.reduced.push_back(make_row(label, op, eta, channel_tol));

  const Matrix& i8bar = reduced.at("Ibar8");
  rep.i8_variant_deviation =
      ((i8bar * eta.amps).eval() - eta8_asymmetric_variant(alpha1, alpha2)).norm();
  return rep;
}

}  // namespace yang
