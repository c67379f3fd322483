#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "yang/errors.hpp"
#include "yang/tolerances.hpp"

namespace yang {

using cdouble = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Kronecker product, row-major site ordering: basis index of a two-site
// product state |i,j> is i * dim_2 + j.
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using Scalar = typename DA::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return r;
}

template <typename DA, typename DB>
auto commutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw DimensionMismatch("commutator: operands must be square and equal-sized");
  return (a * b - b * a).eval();
}

// Gauss-Jordan elimination with partial pivoting. The pivot tolerance is an
// absolute magnitude; matrices here are O(1)-scaled so no column equilibration.
template <typename Derived>
auto gauss_jordan_inverse(const Eigen::MatrixBase<Derived>& m,
                          double pivot_tol = tol::singular_pivot) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: matrix must be square");
  const Eigen::Index n = m.rows();
  Mat a = m;
  Mat inv = Mat::Identity(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index piv = col;
    double best = std::abs(a(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const double mag = std::abs(a(r, col));
      if (mag > best) {
        best = mag;
        piv = r;
      }
    }
    if (best <= pivot_tol) throw SingularMatrix("inverse: pivot below singular tolerance");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      inv.row(piv).swap(inv.row(col));
    }
    const Scalar d = a(col, col);
    a.row(col) /= d;
    inv.row(col) /= d;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar f = a(r, col);
      if (f != Scalar(0)) {
        a.row(r) -= f * a.row(col);
        inv.row(r) -= f * inv.row(col);
      }
    }
  }
  return inv;
}

// Zero out entries that are numerical dust relative to the largest entry.
// Used after a conjugation whose block structure has already been verified.
inline Matrix chop(const Matrix& m, double rel_tol = tol::algebra) {
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return m;
  Matrix r = m;
  for (Eigen::Index i = 0; i < r.rows(); ++i)
    for (Eigen::Index j = 0; j < r.cols(); ++j)
      if (std::abs(r(i, j)) <= rel_tol * scale) r(i, j) = cdouble(0.0);
  return r;
}

// Least-squares scalar s minimizing ||block - s*pattern||_F, plus that deviation.
inline cdouble pattern_fit(const Matrix& block, const Matrix& pattern,
                           double* deviation = nullptr) {
  if (block.rows() != pattern.rows() || block.cols() != pattern.cols())
    throw DimensionMismatch("pattern_fit: shapes differ");
  const cdouble denom = (pattern.adjoint() * pattern).trace();
  if (std::abs(denom) == 0.0) throw WrongShape("pattern_fit: zero pattern");
  const cdouble s = (pattern.adjoint() * block).trace() / denom;
  if (deviation) *deviation = (block - s * pattern).norm();
  return s;
}

// Coefficients ascending: coeff[k] multiplies x^k.
struct Polynomial {
  std::vector<cdouble> coeff;

  int degree() const { return static_cast<int>(coeff.size()) - 1; }

  cdouble eval(cdouble x) const {
    cdouble acc(0.0);
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial trimmed(double lead_tol = 0.0) const {
    Polynomial p = *this;
    while (p.coeff.size() > 1 && std::abs(p.coeff.back()) <= lead_tol) p.coeff.pop_back();
    return p;
  }
};

// Faddeev-LeVerrier recursion; returns the monic characteristic polynomial
// det(xI - A) with ascending coefficients. Exact up to rounding, no pivoting.
inline Polynomial char_poly(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("char_poly: matrix must be square");
  const int n = static_cast<int>(a.rows());
  std::vector<cdouble> c(n + 1, cdouble(0.0));
  c[n] = 1.0;
  Matrix m = Matrix::Identity(n, n);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) m = (a * m + c[n - k + 1] * Matrix::Identity(n, n)).eval();
    c[n - k] = -(a * m).trace() / static_cast<double>(k);
  }
  return Polynomial{std::move(c)};
}

// Durand-Kerner simultaneous iteration. Deterministic: fixed starting circle,
// fixed sweep order. Near-coincident roots are collapsed to their cluster mean
// so multiplicities come out as repeated values; the collapsed value is then
// polished by Newton on the (m-1)-th derivative, where a genuine m-fold root
// is simple, which recovers multiple roots to machine precision instead of
// the eps^(1/m) a direct iteration can reach.
inline std::vector<cdouble> poly_roots(const Polynomial& p, double root_tol = tol::roots,
                                       int max_iter = 500) {
  const Polynomial q = p.trimmed(0.0);
  const int n = q.degree();
  if (n < 1) throw WrongShape("poly_roots: degree must be at least 1");

  std::vector<cdouble> c = q.coeff;
  const cdouble lead = c.back();
  for (auto& x : c) x /= lead;

  double radius = 0.0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
  radius += 1.0;

  const double pi = std::acos(-1.0);
  std::vector<cdouble> z(n);
  for (int k = 0; k < n; ++k) {
    const double ang = 2.0 * pi * k / n + 0.4;
    z[k] = radius * cdouble(std::cos(ang), std::sin(ang));
  }

  const auto peval = [&](cdouble x) {
    cdouble acc(0.0);
    for (int i = n; i >= 0; --i) acc = acc * x + c[i];
    return acc;
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    double move = 0.0;
    double zmax = 0.0;
    for (int k = 0; k < n; ++k) {
      cdouble denom(1.0);
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      if (std::abs(denom) < 1e-300) denom = cdouble(1e-300);
      const cdouble dz = peval(z[k]) / denom;
      z[k] -= dz;
      move = std::max(move, std::abs(dz));
      zmax = std::max(zmax, std::abs(z[k]));
    }
    if (move < 1e-14 * (1.0 + zmax)) break;
  }

  double zmax = 0.0;
  for (const auto& r : z) zmax = std::max(zmax, std::abs(r));
  const double cluster_radius = 1e-4 * (1.0 + zmax);
  std::vector<bool> assigned(n, false);
  for (int k = 0; k < n; ++k) {
    if (assigned[k]) continue;
    std::vector<int> cluster{k};
    assigned[k] = true;
    for (std::size_t head = 0; head < cluster.size(); ++head) {
      for (int j = 0; j < n; ++j) {
        if (!assigned[j] && std::abs(z[j] - z[cluster[head]]) <= cluster_radius) {
          assigned[j] = true;
          cluster.push_back(j);
        }
      }
    }
    if (cluster.size() > 1) {
      cdouble mean(0.0);
      for (int idx : cluster) mean += z[idx];
      mean /= static_cast<double>(cluster.size());

      const int m = static_cast<int>(cluster.size());
      std::vector<cdouble> d = c;
      for (int t = 0; t < m - 1; ++t) {
        for (std::size_t i = 1; i < d.size(); ++i)
          d[i - 1] = static_cast<double>(i) * d[i];
        d.pop_back();
      }
      std::vector<cdouble> dd(d.size() - 1);
      for (std::size_t i = 1; i < d.size(); ++i)
        dd[i - 1] = static_cast<double>(i) * d[i];
      const auto horner = [](const std::vector<cdouble>& v, cdouble x) {
        cdouble acc(0.0);
        for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * x + *it;
        return acc;
      };
      cdouble x = mean;
      for (int it = 0; it < 60; ++it) {
        const cdouble den = horner(dd, x);
        if (std::abs(den) < 1e-300) break;
        const cdouble step = horner(d, x) / den;
        x -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(x))) break;
      }
      // Keep the polish only while it stays local: a cluster of close but
      // distinct simple roots is better represented by its mean.
      if (std::abs(x - mean) <= cluster_radius) mean = x;
      for (int idx : cluster) z[idx] = mean;
    }
  }

  double coeff_scale = 0.0;
  for (int i = 0; i <= n; ++i) coeff_scale = std::max(coeff_scale, std::abs(c[i]));
  for (const auto& r : z)
    if (std::abs(peval(r)) > root_tol * coeff_scale)
      throw NoConvergence("poly_roots: residual above tolerance after iteration cap");

  std::sort(z.begin(), z.end(), [](const cdouble& a, const cdouble& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return z;
}

// Cyclic complex Jacobi: each (p,q) entry is first made real by a diagonal
// phase similarity, then annihilated by a real rotation. Ascending eigenvalues.
inline std::vector<double> hermitian_eigenvalues(const Matrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("hermitian_eigenvalues: matrix must be square");
  if ((a - a.adjoint()).norm() > tol::hermitian_gate)
    throw NotHermitian("hermitian_eigenvalues: matrix is not Hermitian");

  const Eigen::Index n = a.rows();
  Matrix h = 0.5 * (a + a.adjoint());
  const double threshold = 1e-14 * std::max(1.0, h.norm());
  const double skip = threshold / (10.0 * static_cast<double>(std::max<Eigen::Index>(n, 1)));

  bool converged = false;
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) off += std::norm(h(i, j));
    if (std::sqrt(off) < threshold) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = std::abs(h(p, q));
        if (apq <= skip) continue;
        const cdouble w = std::conj(h(p, q) / apq);
        h.col(q) *= w;
        h.row(q) *= std::conj(w);
        const double app = h(p, p).real();
        const double aqq = h(q, q).real();
        const double b = h(p, q).real();
        const double tau = (aqq - app) / (2.0 * b);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const cdouble ct(1.0 / std::sqrt(1.0 + t * t), 0.0);
        const cdouble st(t / std::sqrt(1.0 + t * t), 0.0);
        const Vector cp = h.col(p), cq = h.col(q);
        h.col(p) = ct * cp - st * cq;
        h.col(q) = st * cp + ct * cq;
        const Eigen::RowVectorXcd rp = h.row(p), rq = h.row(q);
        h.row(p) = ct * rp - st * rq;
        h.row(q) = st * rp + ct * rq;
      }
    }
  }
  if (!converged)
    throw NoConvergence("hermitian_eigenvalues: Jacobi sweep cap reached");

  std::vector<double> ev(n);
  for (Eigen::Index i = 0; i < n; ++i) ev[i] = h(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace yang
