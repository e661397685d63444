#pragma once

#include <vector>

#include "qlt/expr.hpp"

namespace qlt {

// A path gamma: R -> R^n given componentwise by expressions of one real
// parameter. `origin` and `velocity` are gamma(t0) and gamma'(t0), cached at
// construction.
struct PathSpec {
  std::vector<Expr> components;
  double t0 = 0.0;
  Vec origin;
  Vec velocity;

  int dimension() const { return static_cast<int>(components.size()); }
};

// Builds a PathSpec, rejecting non-real components and a vanishing velocity.
PathSpec make_path(std::vector<Expr> components, double t0 = 0.0);

// gamma(t); every component must evaluate to a real number.
Vec path_point(const PathSpec& path, double t);

}  // namespace qlt
