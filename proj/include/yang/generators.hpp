#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "yang/linalg.hpp"
#include "yang/params.hpp"

namespace yang {

// Ordered, labeled family of operators acting on one Hilbert space.
struct GeneratorSet {
  std::string algebra;  // e.g. "su2-general", "su3-tilde"
  int dim = 0;
  std::vector<std::pair<std::string, Matrix>> members;

  bool has(const std::string& label) const {
    for (const auto& [name, mat] : members)
      if (name == label) return true;
    return false;
  }

  const Matrix& at(const std::string& label) const {
    for (const auto& [name, mat] : members)
      if (name == label) return mat;
    throw ValidationError("unknown generator label: " + label);
  }
};

// One checked identity: residual is a Frobenius norm; `expected` marks whether
// the identity should hold for the given parameters (off-manifold rows are
// reported but never counted against max_residual).
struct Relation {
  std::string name;
  double residual = 0.0;
  bool expected = true;
};

struct RelationReport {
  std::string algebra;
  Params params;
  std::vector<Relation> relations;

  // Block scalars measured during the similarity reduction, keyed by the
  // reduced generator label. Logged, not asserted against any fixed norm.
  std::map<std::string, std::vector<cdouble>> block_scalars;

  double max_residual() const {
    double m = 0.0;
    for (const auto& r : relations)
      if (r.expected && r.residual > m) m = r.residual;
    return m;
  }

  const Relation* find(const std::string& name) const {
    for (const auto& r : relations)
      if (r.name == name) return &r;
    return nullptr;
  }
};

}  // namespace yang
