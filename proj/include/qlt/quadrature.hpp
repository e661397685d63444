#pragma once

#include <vector>

namespace qlt {

// Nodes and weights on [0, 1].
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre rule with `order` points mapped to [0, 1]; exact for
// polynomials of degree <= 2*order - 1. Rules are cached; the returned
// reference stays valid for the program lifetime and is safe to share
// across threads.
const QuadratureRule& gauss_legendre(int order);

}  // namespace qlt
