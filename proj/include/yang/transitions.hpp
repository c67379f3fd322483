#pragma once

#include "yang/entanglement.hpp"
#include "yang/generators.hpp"

namespace yang {

// (1/sqrt(2)) [ alpha (|00> + |11>) + beta (|01> + |10>) ], normalized for
// any |alpha|^2 + |beta|^2 = 1.
PureState qubit_initial_state(cdouble alpha, cdouble beta);

// The six 4x4 transition operators J+, J-, J3, Y+, Y-, Y3. The reduced half
// requires the constraint.
GeneratorSet sl2_operator_catalog(const Params& p);

enum class Su3Family { tilde, reduced };

// Eight 9x9 transition operators of the chosen family, shift ops first:
// (I/U/V)(+/-) then I3, I8 (tilde or bar labels).
GeneratorSet su3_operator_catalog(const Params& p, Su3Family family);

// Single operator looked up by label across both algebras, for the CLI.
// Returns the matrix and the algebra tag ("su2" or "su3").
std::pair<Matrix, std::string> operator_by_label(const Params& p, const std::string& label);

struct TransitionOutcome {
  std::string operator_label;
  Vector raw_state;      // op * state, unnormalized
  double raw_norm = 0.0;
  bool annihilated = false;          // raw_norm <= annihilation tolerance
  PureState final_state;             // meaningful only when !annihilated
  double entanglement_before = 0.0;  // concurrence (qubits) or mean entropy (qutrits)
  double entanglement_after = 0.0;   // 0 when annihilated
  std::vector<std::string> channels;        // meson labels, qutrit pairs only
  std::vector<std::pair<std::string, cdouble>> components;  // full meson decomposition
};

// Apply, renormalize, then measure entanglement; name the decay channel for
// qutrit pairs. channel_tol is the amplitude magnitude that counts as support.
TransitionOutcome apply_transition(const std::string& label, const Matrix& op,
                                   const PureState& s,
                                   double channel_tol = tol::channel_support);

struct SweepPoint {
  double mu = 0.0;
  double c1 = 0.0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  int omitted = 0;  // grid points with (mu - lambda/2)^2 > 1
};

// Entanglement curve on the normalization manifold: with p = (mu - lambda/2)^2,
// c1 = -p log3 p - (1-p) log3 (1-p). Grid points with p > 1 are omitted and
// counted. Inclusive endpoints, steps >= 2.
SweepResult sweep_c1(double lambda, double mu_min, double mu_max, int steps);

}  // namespace yang
