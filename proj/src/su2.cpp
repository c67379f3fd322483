#include "yang/su2.hpp"

#include <cmath>

namespace yang {

namespace {

int eps(int a, int b, int c) {
  if (a == b || b == c || a == c) return 0;
  if ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) return 1;
  return -1;
}

int third_index(int a, int b) { return 6 - a - b; }

struct SiteOps {
  Matrix s1[4], s2[4];  // 1-based component index, embedded on C^2 x C^2
};

SiteOps embedded_sites() {
  GeneratorSet site = spin_half_ops();
  const Matrix id2 = Matrix::Identity(2, 2);
  SiteOps out;
  for (int a = 1; a <= 3; ++a) {
    const Matrix& s = site.at("S" + std::to_string(a));
    out.s1[a] = kron(s, id2);
    out.s2[a] = kron(id2, s);
  }
  return out;
}

}  // namespace

GeneratorSet spin_half_ops() {
  Matrix sp = Matrix::Zero(2, 2);
  sp(1, 0) = 1.0;
  Matrix sm = sp.adjoint();
  Matrix s3 = Matrix::Zero(2, 2);
  s3(0, 0) = -0.5;
  s3(1, 1) = 0.5;
  Matrix s1 = 0.5 * (sp + sm);
  Matrix s2 = cdouble(0.0, -0.5) * (sp - sm);
  return GeneratorSet{"su2-site", 2,
                      {{"S1", s1}, {"S2", s2}, {"S3", s3}, {"S+", sp}, {"S-", sm}}};
}

GeneratorSet total_spin() {
  const SiteOps site = embedded_sites();
  GeneratorSet g{"su2-general", 4, {}};
  for (int a = 1; a <= 3; ++a)
    g.members.emplace_back("I" + std::to_string(a), site.s1[a] + site.s2[a]);
  const Matrix& i1 = g.members[0].second;
  const Matrix& i2 = g.members[1].second;
  g.members.emplace_back("I+", i1 + cdouble(0.0, 1.0) * i2);
  g.members.emplace_back("I-", i1 - cdouble(0.0, 1.0) * i2);
  return g;
}

GeneratorSet yangian_j(const Params& p) {
  p.require_nondegenerate();
  const SiteOps site = embedded_sites();
  GeneratorSet g{"su2-general", 4, {}};
  for (int a = 1; a <= 3; ++a) {
    Matrix cross = Matrix::Zero(4, 4);
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c) {
        const int sign = eps(a, b, c);
        if (sign != 0) cross += static_cast<double>(sign) * site.s1[b] * site.s2[c];
      }
    Matrix j = (p.mu * site.s1[a] + p.nu * site.s2[a] + cdouble(0.0, p.lambda) * cross) /
               (p.mu + p.nu);
    g.members.emplace_back("J" + std::to_string(a), std::move(j));
  }
  const Matrix& j1 = g.members[0].second;
  const Matrix& j2 = g.members[1].second;
  g.members.emplace_back("J+", j1 + cdouble(0.0, 1.0) * j2);
  g.members.emplace_back("J-", j1 - cdouble(0.0, 1.0) * j2);
  return g;
}

Matrix tau_matrix(const Params& p) {
  p.require_nondegenerate();
  if (std::abs(p.nu * p.nu - p.lambda * p.lambda / 4.0) <= tol::singular_pivot)
    throw SingularMatrix("tau_matrix: middle block is singular (nu^2 = lambda^2/4)");
  Matrix t = Matrix::Identity(4, 4);
  t(1, 1) = p.nu;
  t(1, 2) = -p.lambda / 2.0;
  t(2, 1) = -p.lambda / 2.0;
  t(2, 2) = p.nu;
  return t;
}

GeneratorSet reduced_generators_su2(const Params& p) {
  p.require_constraint();
  const Matrix t = tau_matrix(p);
  const Matrix tinv = gauss_jordan_inverse(t);
  const GeneratorSet j = yangian_j(p);
  GeneratorSet g{"su2-reduced", 4, {}};
  const std::pair<const char*, const char*> names[] = {
      {"Y+", "J+"}, {"Y-", "J-"}, {"Y3", "J3"}};
  for (const auto& [out_label, in_label] : names) {
    Matrix y = tinv * j.at(in_label) * t;
    const double scale = y.cwiseAbs().maxCoeff();
    const double off = std::sqrt(y.block(0, 2, 2, 2).squaredNorm() +
                                 y.block(2, 0, 2, 2).squaredNorm());
    if (off > tol::algebra * std::max(1.0, scale))
      throw NumericalError("reduced_generators_su2: off-block weight survived the reduction");
    g.members.emplace_back(out_label, chop(y));
  }
  return g;
}

double serre_residual(const Params& p, double h) {
  const GeneratorSet j = yangian_j(p);
  const GeneratorSet i = total_spin();
  const Matrix& j3 = j.at("J3");
  const Matrix& i3 = i.at("I3");
  double worst = 0.0;
  for (const char* sign : {"+", "-"}) {
    const Matrix& js = j.at(std::string("J") + sign);
    const Matrix& is = i.at(std::string("I") + sign);
    const Matrix lhs = commutator(js, commutator(j3, js));
    const Matrix rhs = (h * h / 4.0) * is * (js * i3 - is * j3);
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

RelationReport verify_su2_relations(const Params& p) {
  p.require_nondegenerate();
  RelationReport rep;
  rep.algebra = "su2";
  rep.params = p;
  const bool on_manifold = p.constraint_ok();

  const GeneratorSet iset = total_spin();
  const GeneratorSet jset = yangian_j(p);
  const Matrix* icomp[4] = {nullptr, &iset.at("I1"), &iset.at("I2"), &iset.at("I3")};
  const Matrix* jcomp[4] = {nullptr, &jset.at("J1"), &jset.at("J2"), &jset.at("J3")};

  auto add = [&](std::string name, double residual, bool expected) {
    rep.relations.push_back({std::move(name), residual, expected});
  };
  // Nine rows [A_a, B_b] - i eps_abc T_c for one pair of component families.
  auto closure_block = [&](const char* pa, const Matrix* const* xa, const char* pb,
                           const Matrix* const* xb, const char* pt,
                           const Matrix* const* xt, bool expected) {
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        Matrix target = Matrix::Zero(4, 4);
        std::string name =
            "[" + std::string(pa) + std::to_string(a) + "," + pb + std::to_string(b) + "]";
        if (a != b) {
          const int c = third_index(a, b);
          const int sign = eps(a, b, c);
          target = cdouble(0.0, static_cast<double>(sign)) * (*xt[c]);
          name += (sign > 0 ? "-i*" : "+i*");
          name += pt;
          name += std::to_string(c);
        }
        add(std::move(name), (commutator(*xa[a], *xb[b]) - target).norm(), expected);
      }
  };

  closure_block("I", icomp, "I", icomp, "I", icomp, true);
  // Covariance [I_a, J_b] = i eps_abc J_c holds for all parameters;
  // the deformed closure of J only on the constraint manifold.
  closure_block("I", icomp, "J", jcomp, "J", jcomp, true);
  closure_block("J", jcomp, "J", jcomp, "J", jcomp, on_manifold);
  {
    Matrix sum = Matrix::Zero(4, 4);
    for (int a = 1; a <= 3; ++a) sum += (*jcomp[a]) * (*jcomp[a]);
    add("sum(J^2)-(3/4)*id", (sum - 0.75 * Matrix::Identity(4, 4)).norm(), on_manifold);
  }

  // Reduction is always attempted so a singular middle block surfaces as
  // SingularMatrix; the block structure itself is a manifold identity.
  const Matrix t = tau_matrix(p);
  const Matrix tinv = gauss_jordan_inverse(t);
  const GeneratorSet site = spin_half_ops();
  const double xi = p.xi();
  const struct {
    const char* out;
    const char* in;
    const char* pattern;
    cdouble expected[2];
  } rows[] = {
      {"Y+", "J+", "S+", {cdouble(1.0 / xi), cdouble(xi)}},
      {"Y-", "J-", "S-", {cdouble(xi), cdouble(1.0 / xi)}},
      {"Y3", "J3", "S3", {cdouble(1.0), cdouble(1.0)}},
  };
  for (const auto& row : rows) {
    const Matrix y = tinv * jset.at(row.in) * t;
    const double off = std::sqrt(y.block(0, 2, 2, 2).squaredNorm() +
                                 y.block(2, 0, 2, 2).squaredNorm());
    add(std::string("offblock(") + row.out + ")", off, on_manifold);

    const Matrix& pat = site.at(row.pattern);
    double dev1 = 0.0, dev2 = 0.0;
    const cdouble s1 = pattern_fit(y.block(0, 0, 2, 2), pat, &dev1);
    const cdouble s2 = pattern_fit(y.block(2, 2, 2, 2), pat, &dev2);
    rep.block_scalars[row.out] = {s1, s2};
    add(std::string("blockfit(") + row.out + ")", std::sqrt(dev1 * dev1 + dev2 * dev2),
        on_manifold);

    // Scalars compared against the (xi, 1/xi) pattern up to one global
    // factor per generator; orientation fixed by this very conjugation.
    const cdouble g = s1 / row.expected[0];
    add(std::string("scalarpattern(") + row.out + ")", std::abs(s2 - g * row.expected[1]),
        on_manifold);
    add(std::string("globalfactor(") + row.out + ")-1", std::abs(g - 1.0), false);
  }

  return rep;
}

}  // namespace yang
