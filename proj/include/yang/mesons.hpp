#pragma once

#include "yang/entanglement.hpp"
#include "yang/params.hpp"

namespace yang {

// Canonical channel order. Basis: quark index q and antiquark index qbar
// (u=0, d=1, s=2) give product index 3q + qbar.
const std::vector<std::string>& meson_labels();

// Unit vector in C^9 for one meson label.
const Vector& meson_vector(const std::string& label);

struct MesonComponent {
  std::string label;
  cdouble coefficient;
};

struct Decomposition {
  std::vector<MesonComponent> components;  // canonical order, all nine
  double residual = 0.0;                   // reconstruction defect, ~0 always
};

// Expansion of a qutrit-pair state over the meson basis.
Decomposition decompose(const PureState& s);

// Labels with |coefficient| > threshold, concatenated in canonical order.
std::string channel_label(const Decomposition& d, double threshold = tol::channel_support);

// Mixing state alpha1 |eta0'> + alpha2 |eta0>; requires alpha1^2 + alpha2^2 = 1.
PureState construct_eta(double alpha1, double alpha2);

// The asymmetric display variant of the Itilde8 image: with
// c- = a1/sqrt(3) - a2/sqrt(6) and c+ = a1/sqrt(3) + 2 a2/sqrt(6),
//   c- ( |u ubar>/3 - |d dbar>/2 ) - (2/3) c+ |s sbar>.
// Kept for the deviation diagnostic in decay reports; the symmetric form
// c- ( |u ubar> + |d dbar> )/3 - (2/3) c+ |s sbar> is what the operator produces.
Vector eta8_asymmetric_variant(double alpha1, double alpha2);

struct DecayRow {
  std::string operator_label;
  double raw_norm = 0.0;
  bool annihilated = false;
  double entanglement_after = 0.0;
  std::string channel;
  // Meson decomposition of the unnormalized image, so coefficients carry the
  // transition weight itself (e.g. the Itilde8 row's eta0' coefficient is
  // -sqrt(2) alpha2 / 3).
  std::vector<MesonComponent> components;
};

struct DecayReport {
  Params params;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double entanglement_initial = 0.0;
  std::vector<DecayRow> general;  // tilde family rows
  std::vector<DecayRow> reduced;  // bar family rows
  // || Itilde8 eta - asymmetric variant ||, both unnormalized.
  double i8_variant_deviation = 0.0;
  // alpha1 = -sqrt(2) alpha2 (up to overall sign): the Itilde8 row then has
  // no |s sbar> component and its entanglement is exactly log3(2).
  bool special_mixing = false;
};

// Both operator families applied to the mixing state, with channels and
// entanglement per row. Requires the constraint (reduced half).
DecayReport decay_report(const Params& p, double alpha1, double alpha2,
                         double channel_tol = tol::channel_support);

}  // namespace yang
