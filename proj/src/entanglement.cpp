#include "yang/entanglement.hpp"

#include <cmath>

namespace yang {

namespace {

double log3(double x) { return std::log(x) / std::log(3.0); }

// -p log3 p with the 0 log 0 := 0 convention.
double plog3p(double p) {
  if (p <= 0.0) return 0.0;
  return -p * log3(p);
}

}  // namespace

double concurrence(const PureState& s) {
  s.require_shape(2, 2);
  s.require_normalized();
  const Vector& a = s.amps;
  const double c = 2.0 * std::abs(a(0) * a(3) - a(1) * a(2));
  return std::min(1.0, std::max(0.0, c));
}

Matrix reduced_density(const PureState& s, int party) {
  if (s.party_dims.size() != 2) throw WrongShape("reduced_density: state is not bipartite");
  const int d1 = s.party_dims[0];
  const int d2 = s.party_dims[1];
  if (s.amps.size() != static_cast<Eigen::Index>(d1) * d2)
    throw WrongShape("reduced_density: amplitude count does not match party dims");
  if (party != 1 && party != 2) throw WrongShape("reduced_density: party must be 1 or 2");
  s.require_normalized();

  if (party == 1) {
    Matrix rho = Matrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j)
        for (int k = 0; k < d2; ++k)
          rho(i, j) += s.amps(i * d2 + k) * std::conj(s.amps(j * d2 + k));
    return rho;
  }
  Matrix rho = Matrix::Zero(d2, d2);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j)
      for (int k = 0; k < d1; ++k)
        rho(i, j) += s.amps(k * d2 + i) * std::conj(s.amps(k * d2 + j));
  return rho;
}

double entropy_base3(const Matrix& rho) {
  if (rho.rows() != rho.cols()) throw WrongShape("entropy_base3: matrix must be square");
  if ((rho - rho.adjoint()).norm() > tol::hermitian_gate)
    throw NotDensity("entropy_base3: matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > tol::hermitian_gate ||
      std::abs(rho.trace().imag()) > tol::hermitian_gate)
    throw NotDensity("entropy_base3: trace is not 1");
  const std::vector<double> ev = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (double p : ev) {
    if (p < -1e-12) throw NotDensity("entropy_base3: negative eigenvalue");
    s += plog3p(p);
  }
  return s;
}

double mean_entropy(const PureState& s) {
  s.require_shape(3, 3);
  s.require_normalized();
  const double s1 = entropy_base3(reduced_density(s, 1));
  const double s2 = entropy_base3(reduced_density(s, 2));
  if (s1 <= tol::entropy_zero || s2 <= tol::entropy_zero) return 0.0;
  return 0.5 * (s1 + s2);
}

double c_ini_closed_form(double alpha1, double alpha2) {
  if (std::abs(alpha1 * alpha1 + alpha2 * alpha2 - 1.0) > tol::normalization)
    throw NotNormalized("c_ini_closed_form: alpha1^2 + alpha2^2 must be 1");
  const double r3 = 1.0 / std::sqrt(3.0);
  const double r6 = 1.0 / std::sqrt(6.0);
  const double p = std::pow(alpha1 * r3 - alpha2 * r6, 2);
  const double q = std::pow(alpha1 * r3 + 2.0 * alpha2 * r6, 2);
  return 2.0 * plog3p(p) + plog3p(q);
}

}  // namespace yang
