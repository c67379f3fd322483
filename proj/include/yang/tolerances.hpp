#pragma once

namespace yang::tol {

// Frobenius-norm budget for algebraic identities (commutators, Casimir sums, block structure).
inline constexpr double algebra = 1e-12;

// Residual bound |p(root)| <= roots * max|coeff| accepted by the root finder.
inline constexpr double roots = 1e-8;

// Hermiticity gate ||A - A^dagger||_F and state-normalization gate | ||v|| - 1 |.
inline constexpr double hermitian_gate = 1e-10;
inline constexpr double normalization = 1e-10;

// Absolute pivot magnitude below which Gauss-Jordan declares the matrix singular.
inline constexpr double singular_pivot = 1e-12;

// |mu + nu| at or below this is degenerate (generators carry a 1/(mu+nu) prefactor).
inline constexpr double degenerate = 1e-12;

// Residual of mu*nu + lambda^2/4 accepted as "on the constraint manifold".
inline constexpr double constraint = 1e-12;

// Amplitude magnitude that counts as support when naming decay channels.
inline constexpr double channel_support = 1e-9;

// Single-party entropy at or below this is treated as an exact product state.
inline constexpr double entropy_zero = 1e-9;

// Raw image norm at or below this means the operator annihilated the state.
inline constexpr double annihilation = 1e-12;

}  // namespace yang::tol
