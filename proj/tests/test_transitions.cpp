#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "yang/mesons.hpp"
#include "yang/transitions.hpp"

using yang::cdouble;
using yang::GeneratorSet;
using yang::Matrix;
using yang::Params;
using yang::PureState;
using yang::Vector;

namespace {

const Params kConstrained{2.0, -0.5, 2.0};
constexpr double kLog32 = 0.6309297535714574;

double base3_mix(double p) {
  auto h = [](double x) { return x > 0.0 ? -x * std::log(x) / std::log(3.0) : 0.0; };
  return h(p) + h(1.0 - p);
}

}  // namespace

TEST_CASE("qubit initial state: amplitudes and concurrence") {
  PureState s = yang::qubit_initial_state(1.0, 0.0);
  const double r2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.amps(0) - cdouble(r2)) < 1e-15);
  CHECK(std::abs(s.amps(3) - cdouble(r2)) < 1e-15);
  CHECK(std::abs(s.amps(1)) == 0.0);
  CHECK(yang::concurrence(s) == doctest::Approx(1.0).epsilon(1e-12));

  PureState mixed = yang::qubit_initial_state(0.8, 0.6);
  CHECK(yang::concurrence(mixed) == doctest::Approx(0.28).epsilon(1e-12));

  PureState balanced = yang::qubit_initial_state(r2, r2);
  CHECK(yang::concurrence(balanced) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(yang::qubit_initial_state(1.0, 1.0), yang::NotNormalized);
}

TEST_CASE("operator catalogs") {
  GeneratorSet sl2 = yang::sl2_operator_catalog(kConstrained);
  CHECK(sl2.members.size() == 6);
  for (const char* l : {"J+", "J-", "J3", "Y+", "Y-", "Y3"}) CHECK(sl2.has(l));
  CHECK_THROWS_AS(yang::sl2_operator_catalog(Params{1.0, 1.0, 1.0}),
                  yang::ConstraintViolated);

  GeneratorSet tilde = yang::su3_operator_catalog(kConstrained, yang::Su3Family::tilde);
  CHECK(tilde.members.size() == 8);
  CHECK(tilde.members.front().first == "Itilde+");
  CHECK(tilde.members.back().first == "Itilde8");
  GeneratorSet reduced =
      yang::su3_operator_catalog(kConstrained, yang::Su3Family::reduced);
  CHECK(reduced.members.size() == 8);
  CHECK(reduced.members.front().first == "Ibar+");
  CHECK(reduced.members.back().first == "Ibar8");

  CHECK(yang::operator_by_label(kConstrained, "J+").second == "su2");
  CHECK(yang::operator_by_label(kConstrained, "Itilde8").second == "su3");
  CHECK(yang::operator_by_label(kConstrained, "Vbar-").second == "su3");
  CHECK_THROWS_AS(yang::operator_by_label(kConstrained, "Z9"), yang::ValidationError);
}

TEST_CASE("deformed raising operator on the symmetric Bell state") {
  GeneratorSet sl2 = yang::sl2_operator_catalog(kConstrained);
  PureState s = yang::qubit_initial_state(1.0, 0.0);
  yang::TransitionOutcome out = yang::apply_transition("J+", sl2.at("J+"), s);
  CHECK_FALSE(out.annihilated);
  CHECK(out.entanglement_before == doctest::Approx(1.0).epsilon(1e-12));
  const double r5 = 1.0 / std::sqrt(5.0);
  CHECK(std::abs(out.final_state.amps(0)) < 1e-13);
  CHECK(std::abs(out.final_state.amps(1) - cdouble(r5)) < 1e-12);
  CHECK(std::abs(out.final_state.amps(2) - cdouble(2.0 * r5)) < 1e-12);
  CHECK(std::abs(out.final_state.amps(3)) < 1e-13);
  CHECK(out.entanglement_after == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(out.channels.empty());  // qubit pairs carry no meson channels
}

TEST_CASE("raising the top state annihilates it") {
  GeneratorSet sl2 = yang::sl2_operator_catalog(kConstrained);
  PureState top;
  top.party_dims = {2, 2};
  top.amps = Vector::Zero(4);
  top.amps(3) = 1.0;
  yang::TransitionOutcome out = yang::apply_transition("J+", sl2.at("J+"), top);
  CHECK(out.annihilated);
  CHECK(out.raw_norm < 1e-12);
  CHECK(out.entanglement_after == 0.0);
}

TEST_CASE("reduced ladder operators produce exactly unentangled states") {
  GeneratorSet sl2 = yang::sl2_operator_catalog(kConstrained);
  const double half_pi = std::acos(-1.0) / 2.0;
  for (int k = 0; k <= 20; ++k) {
    const double t = half_pi * k / 20.0;
    PureState s = yang::qubit_initial_state(std::cos(t), std::sin(t));
    for (const char* label : {"Y+", "Y-"}) {
      yang::TransitionOutcome out = yang::apply_transition(label, sl2.at(label), s);
      REQUIRE_FALSE(out.annihilated);
      CHECK(out.entanglement_after == 0.0);
    }
  }
}

TEST_CASE("Cartan preservation and breaking of the concurrence") {
  // Deformed J3 preserves concurrence on the lambda = 2 mu slice.
  const Params slice{1.0, 0.7, 2.0};
  Matrix j3 = yang::operator_by_label(slice, "J3").first;
  const double half_pi = std::acos(-1.0) / 2.0;
  for (int k = 0; k <= 20; ++k) {
    const double t = half_pi * k / 20.0;
    PureState s = yang::qubit_initial_state(std::cos(t), std::sin(t));
    yang::TransitionOutcome out = yang::apply_transition("J3", j3, s);
    REQUIRE_FALSE(out.annihilated);
    CHECK(out.entanglement_after ==
          doctest::Approx(out.entanglement_before).epsilon(1e-12));
  }

  // The block-diagonal Cartan preserves it on the constraint manifold.
  GeneratorSet sl2 = yang::sl2_operator_catalog(kConstrained);
  for (int k = 0; k <= 20; ++k) {
    const double t = half_pi * k / 20.0;
    PureState s = yang::qubit_initial_state(std::cos(t), std::sin(t));
    yang::TransitionOutcome out = yang::apply_transition("Y3", sl2.at("Y3"), s);
    REQUIRE_FALSE(out.annihilated);
    CHECK(out.entanglement_after ==
          doctest::Approx(out.entanglement_before).epsilon(1e-12));
  }

  // Off the slice the deformed Cartan changes the concurrence.
  yang::TransitionOutcome broken = yang::apply_transition(
      "J3", sl2.at("J3"), yang::qubit_initial_state(0.8, 0.6));
  CHECK_FALSE(broken.annihilated);
  CHECK(std::abs(broken.entanglement_after - broken.entanglement_before) > 0.1);
}

TEST_CASE("apply_transition invariances") {
  PureState s = yang::qubit_initial_state(0.8, 0.6);
  Matrix id = Matrix::Identity(4, 4);
  yang::TransitionOutcome out = yang::apply_transition("id", id, s);
  CHECK((out.final_state.amps - s.amps).norm() < 1e-14);
  CHECK(out.entanglement_after == doctest::Approx(out.entanglement_before).epsilon(1e-13));

  // Overall operator scale cannot matter after renormalization.
  GeneratorSet sl2 = yang::sl2_operator_catalog(kConstrained);
  yang::TransitionOutcome a = yang::apply_transition("J+", sl2.at("J+"), s);
  yang::TransitionOutcome b =
      yang::apply_transition("J+", Matrix(2.7 * sl2.at("J+")), s);
  CHECK((a.final_state.amps - b.final_state.amps).norm() < 1e-13);
  CHECK(a.entanglement_after == doctest::Approx(b.entanglement_after).epsilon(1e-13));
  CHECK(b.raw_norm == doctest::Approx(2.7 * a.raw_norm).epsilon(1e-13));
}

TEST_CASE("apply_transition validation") {
  PureState s = yang::qubit_initial_state(1.0, 0.0);
  CHECK_THROWS_AS(yang::apply_transition("op", Matrix::Identity(9, 9), s),
                  yang::DimensionMismatch);
  CHECK_THROWS_AS(yang::apply_transition("op", Matrix::Zero(4, 3), s),
                  yang::WrongShape);
  PureState off;
  off.party_dims = {2, 2};
  off.amps = Vector::Zero(4);
  off.amps(0) = 0.5;
  CHECK_THROWS_AS(yang::apply_transition("op", Matrix::Identity(4, 4), off),
                  yang::NotNormalized);
}

TEST_CASE("general-family ladders share one post-transition entropy") {
  GeneratorSet tilde = yang::su3_operator_catalog(kConstrained, yang::Su3Family::tilde);
  PureState eta = yang::construct_eta(0.8, 0.6);
  std::vector<double> ents;
  for (const char* label : {"Itilde+", "Itilde-", "Utilde+", "Utilde-", "Vtilde+", "Vtilde-"}) {
    yang::TransitionOutcome out = yang::apply_transition(label, tilde.at(label), eta);
    REQUIRE_FALSE(out.annihilated);
    ents.push_back(out.entanglement_after);
  }
  // p-hat = (mu - lambda/2)^2 / ((mu - lambda/2)^2 + (nu + lambda/2)^2) = 0.8 here.
  for (double e : ents) CHECK(e == doctest::Approx(base3_mix(0.8)).epsilon(1e-12));
  for (double e : ents) CHECK(e == doctest::Approx(0.45548591500359525).epsilon(1e-12));

  // Channel bookkeeping rides along.
  yang::TransitionOutcome iplus =
      yang::apply_transition("Itilde+", tilde.at("Itilde+"), eta);
  REQUIRE(iplus.channels.size() == 2);
  CHECK(iplus.channels[0] == "pi+");
  CHECK(iplus.channels[1] == "pi-");
}

TEST_CASE("shared entropy at the entropy-matching parameter point") {
  // Root of (mu - 1)^2 (mu^2 + 1) = mu^2 in [1.6, 2], by bisection.
  auto g = [](double m) {
    return (m - 1.0) * (m - 1.0) * (m * m + 1.0) - m * m;
  };
  double lo = 1.6, hi = 2.0;
  REQUIRE(g(lo) < 0.0);
  REQUIRE(g(hi) > 0.0);
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double mu_star = 0.5 * (lo + hi);
  CHECK(mu_star == doctest::Approx(1.883203505913526).epsilon(1e-11));
  const Params star{mu_star, -1.0 / mu_star, 2.0};
  REQUIRE(star.constraint_ok());

  GeneratorSet tilde = yang::su3_operator_catalog(star, yang::Su3Family::tilde);
  PureState eta = yang::construct_eta(0.8, 0.6);
  for (const char* label : {"Itilde+", "Utilde-", "Vtilde+"}) {
    yang::TransitionOutcome out = yang::apply_transition(label, tilde.at(label), eta);
    REQUIRE_FALSE(out.annihilated);
    CHECK(out.entanglement_after ==
          doctest::Approx(0.47955649157644276).epsilon(1e-11));
  }
}

TEST_CASE("entanglement sweep over the coupling window") {
  yang::SweepResult r = yang::sweep_c1(2.0, 0.0, 2.0, 199);
  REQUIRE(r.points.size() == 199);
  CHECK(r.omitted == 0);
  CHECK(r.points.front().mu == 0.0);
  CHECK(r.points.back().mu == doctest::Approx(2.0).epsilon(1e-15));
  // mu = 1 sits at the center: p = 0, c1 = 0.
  CHECK(r.points[99].mu == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.points[99].c1 == 0.0);
  // Endpoints have p = 1, c1 = 0.
  CHECK(r.points.front().c1 == 0.0);
  CHECK(r.points.back().c1 == doctest::Approx(0.0).epsilon(1e-12));
  // Symmetry about mu = lambda/2.
  for (int i = 0; i < 199; ++i)
    CHECK(r.points[i].c1 == doctest::Approx(r.points[198 - i].c1).epsilon(1e-12));
  // All interior values stay below one trit.
  double peak = 0.0;
  for (const auto& pt : r.points) peak = std::max(peak, pt.c1);
  CHECK(peak <= kLog32 + 1e-12);
  CHECK(peak > kLog32 - 1e-3);

  // The two balanced points hit exactly log3(2).
  const double r2 = 1.0 / std::sqrt(2.0);
  yang::SweepResult exact = yang::sweep_c1(2.0, 1.0 - r2, 1.0 + r2, 2);
  REQUIRE(exact.points.size() == 2);
  CHECK(exact.points[0].c1 == doctest::Approx(kLog32).epsilon(1e-12));
  CHECK(exact.points[1].c1 == doctest::Approx(kLog32).epsilon(1e-12));

  // Window wider than the normalization region: points drop out.
  yang::SweepResult wide = yang::sweep_c1(2.0, 0.01, 3.99, 200);
  CHECK(wide.omitted == 100);
  CHECK(wide.points.size() == 100);

  CHECK_THROWS_AS(yang::sweep_c1(2.0, 0.0, 2.0, 1), yang::EmptyRange);
  CHECK_THROWS_AS(yang::sweep_c1(2.0, 2.0, 0.0, 10), yang::EmptyRange);
  CHECK_THROWS_AS(yang::sweep_c1(2.0, 5.0, 6.0, 10), yang::EmptyRange);
}
