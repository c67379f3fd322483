#pragma once

#include "yang/generators.hpp"

namespace yang {

// Totally antisymmetric su(3) structure constants, 1-based indices.
struct StructureConstants {
  double t[8][8][8];
  double operator()(int a, int b, int c) const { return t[a - 1][b - 1][c - 1]; }
};

const StructureConstants& structure_constants();

// Gell-Mann matrices L1..L8 and the normalized generators F1..F8 = L/2.
GeneratorSet gell_mann();

// Fundamental (3-dim) shift and Cartan operators with explicit entries:
// I+, I-, U+, U-, V+, V-, I3, I8 (hypercharge), U3, V3, Q (charge).
// Flavor basis order: u=0, d=1, s=2.
GeneratorSet shift_ops_fundamental();

// Two-site family on C^3 x C^3: I_a = F1_a + F2_a and
// Y_a = (mu F1_a + nu F2_a + (i lambda/2) f_abc (F1_b F2_c - F2_b F1_c)) / (mu+nu).
// Members: I1..I8, Y1..Y8.
GeneratorSet two_site_generators(const Params& p);

// Ladder combinations of the deformed family:
//   Itilde+- = Y1 +- i Y2, Utilde+- = Y6 +- i Y7,
//   Vtilde+- = Y4 -+ i Y5 (mirrored pairing; the +i variant fails the
//   commutation table, see the altpairing diagnostics in the verify report),
//   Itilde3 = Y3, Itilde8 = (2/sqrt(3)) Y8,
//   Utilde3 = -Itilde3/2 + (3/4) Itilde8, Vtilde3 = -Itilde3/2 - (3/4) Itilde8.
GeneratorSet tilde_operators(const Params& p);

// Roots of the characteristic polynomial of Itilde3, sorted by (re, im).
// Complex off the constraint manifold; {-1/2 x3, 0 x3, +1/2 x3} on it.
std::vector<cdouble> i3_spectrum(const Params& p, double root_tol = tol::roots);

// Similarity transform block-diagonalizing the tilde family over the
// partition {0,1,2} | {3,4,5} | {6,7,8}. Identity on indices {0,4,8} plus
// [[nu, -lambda/2], [-lambda/2, nu]] blocks on index pairs (1,3), (2,6), (5,7).
// Throws SingularMatrix when nu^2 = lambda^2/4.
Matrix a_matrix(const Params& p);

// Ibar_x = A^-1 Xtilde A for the eight tilde operators, dust removed.
// Requires the constraint. Members: Ibar+, Ibar-, Ubar+, Ubar-, Vbar+,
// Vbar-, Ibar3, Ibar8.
GeneratorSet reduced_generators_su3(const Params& p);

// Full identity sweep: the 28-row ladder/Cartan commutation table of the
// tilde family (expected on the constraint manifold), covariance of Y under
// I, both quadratic sums, the A-reduction block structure with measured
// block scalars, and alternate-pairing diagnostics.
RelationReport verify_tilde_commutators(const Params& p);

}  // namespace yang
