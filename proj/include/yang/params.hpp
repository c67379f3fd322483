#pragma once

#include <cmath>

#include "yang/errors.hpp"
#include "yang/tolerances.hpp"

namespace yang {

// Deformation parameters shared by the su(2) and su(3) two-site families.
struct Params {
  double mu = 0.0;
  double nu = 0.0;
  double lambda = 0.0;

  // Scale carried by the reduced ladder blocks.
  double xi() const { return nu - lambda / 2.0; }

  // True on the manifold mu*nu = -lambda^2/4 where the deformed family
  // closes on the undeformed commutation table.
  bool constraint_ok() const {
    return std::abs(mu * nu + lambda * lambda / 4.0) <= tol::constraint;
  }

  void require_nondegenerate() const {
    if (std::abs(mu + nu) <= tol::degenerate)
      throw DegenerateParams("mu + nu is zero: generators are undefined");
  }

  void require_constraint() const {
    require_nondegenerate();
    if (!constraint_ok())
      throw ConstraintViolated("parameters are off the mu*nu = -lambda^2/4 manifold");
  }
};

}  // namespace yang
