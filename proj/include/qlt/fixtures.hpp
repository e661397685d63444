#pragma once

#include <string>
#include <string_view>

#include "qlt/expr.hpp"

namespace qlt {

// Expected behaviour of the derivative ratio of a pair on its zero set.
// When complex_linear, `lambda` gives the extension value as an expression
// over the pair's variables, so it can vary along the zero set.
struct ExpectedClassification {
  bool complex_linear = false;
  Expr lambda;
};

struct ExpectedLimit {
  std::vector<std::string> path;  // component sources in the parameter t
  Complex value{0, 0};
};

struct FixturePair {
  std::string name;
  Expr f, g;
  int dimension = 2;
  std::vector<Vec> known_zeros;
  ExpectedClassification expected;
  std::vector<ExpectedLimit> expected_limits;
  // Radius around the zeros inside which the pair is meant to be probed
  // (OP2's second factor must stay away from its own zero).
  double window = 1.0;
  std::string notes;
};

// The built-in catalog: E1, E2, E3, OP1, OP2, SELF, D3.
const std::vector<FixturePair>& catalog();

// nullptr when the name is unknown.
const FixturePair* find_fixture(std::string_view name);

// Throws std::out_of_range when the name is unknown.
const FixturePair& fixture(std::string_view name);

// Sum of truncation+1 smooth bumps in R^3: bump n has profile
// B(r) = exp(1 - 1/(1 - r^2)) for r < 1 and 0 otherwise, center
// (2^-n, 0, 2^(1-n/2)) and radius 2^-n, so every support touches the z-axis
// and all centers lie on the curve z = 2 sqrt(x).
double bump_sum(const Vec& point, int truncation);

}  // namespace qlt
