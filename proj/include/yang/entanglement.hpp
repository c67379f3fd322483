#pragma once

#include "yang/linalg.hpp"

namespace yang {

// Normalized pure state of a bipartite system, amplitudes in row-major
// product order: amps[i * dim2 + j] multiplies |i>|j>.
struct PureState {
  std::vector<int> party_dims;
  Vector amps;

  int dim() const { return static_cast<int>(amps.size()); }

  bool normalized(double tolerance = tol::normalization) const {
    return std::abs(amps.norm() - 1.0) <= tolerance;
  }

  void require_shape(int d1, int d2) const {
    if (party_dims.size() != 2 || party_dims[0] != d1 || party_dims[1] != d2 ||
        amps.size() != static_cast<Eigen::Index>(d1) * d2)
      throw WrongShape("state shape mismatch");
  }

  void require_normalized() const {
    if (!normalized()) throw NotNormalized("state is not normalized");
  }
};

// Two-qubit concurrence 2 |a00 a11 - a01 a10|, clamped to [0,1].
double concurrence(const PureState& s);

// Partial trace over the other party; `party` is 1 or 2.
Matrix reduced_density(const PureState& s, int party);

// Von Neumann entropy with base-3 logarithm; 0 log 0 := 0. Gates: Hermitian,
// unit trace, eigenvalues >= -1e-12.
double entropy_base3(const Matrix& rho);

// (S(rho1) + S(rho2)) / 2 for a qutrit pair, except exactly 0.0 when either
// single-party entropy is at or below the product-state floor.
double mean_entropy(const PureState& s);

// Closed form for the mean entropy of the eta mixing state:
// p = (a1/sqrt(3) - a2/sqrt(6))^2, q = (a1/sqrt(3) + 2 a2/sqrt(6))^2,
// value -2 p log3 p - q log3 q. Requires a1^2 + a2^2 = 1.
double c_ini_closed_form(double alpha1, double alpha2);

}  // namespace yang
