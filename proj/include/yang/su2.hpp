#pragma once

#include "yang/generators.hpp"

namespace yang {

// Single spin-1/2 site. Basis: index 0 = m=-1/2, index 1 = m=+1/2, so S+
// maps e0 to e1. Members: S1, S2, S3, S+, S-.
GeneratorSet spin_half_ops();

// Undeformed two-site total spin on C^2 x C^2. Members: I1..I3, I+, I-.
GeneratorSet total_spin();

// Deformed family J_a = (mu S1_a + nu S2_a + i lambda (S1 x S2)_a) / (mu+nu).
// Defined for any nondegenerate parameters. Members: J1..J3, J+, J-.
GeneratorSet yangian_j(const Params& p);

// Similarity transform that block-diagonalizes the deformed family over the
// index partition {0,1} | {2,3}. Identity except the middle 2x2 block
// [[nu, -lambda/2], [-lambda/2, nu]] on indices {1,2}. Throws SingularMatrix
// when nu^2 = lambda^2/4.
Matrix tau_matrix(const Params& p);

// Y_a = tau^-1 J_a tau for the ladder/Cartan triple, with verified off-block
// dust removed. Requires the constraint. Members: Y+, Y-, Y3.
GeneratorSet reduced_generators_su2(const Params& p);

// Max Frobenius norm over both signs of [J_pm, [J3, J_pm]] minus
// (h^2/4) I_pm (J_pm I3 - I_pm J3). Both sides vanish identically on this
// representation, so the value is a consistency diagnostic, not a constraint.
double serre_residual(const Params& p, double h);

// Full identity sweep: su(2) closure of I, covariance [I,J], deformed closure
// and Casimir of J (expected only on the constraint manifold), and the
// tau-reduction block structure with measured block scalars.
RelationReport verify_su2_relations(const Params& p);

}  // namespace yang
