#pragma once

#include <iosfwd>
#include <string>

#include "qlt/extension.hpp"

namespace qlt {

enum class GridFormat { Csv, Json };

// A rectangular evaluation job over the first two coordinates; `slice` pins
// the remaining coordinates when the pair lives in more than two variables.
struct GridJob {
  Expr f, g;
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  int nx = 0, ny = 0;
  Vec slice;
  GridFormat format = GridFormat::Csv;
  int quad_order = kQuadOrder;
  double near_tol = kNearTol;
  int threads = 0;  // 0 = hardware default
};

// Shortest round-trip decimal representation; NaN prints as "nan".
std::string format_double(double v);

// Streams one record per node, row-major by y then x. Output is
// byte-identical for any worker count. Nodes on the zero set without a
// continuous value print nan fields with method "on_gamma_undefined";
// evaluation errors mark only the affected node with method "error".
void emit_grid(const GridJob& job, std::ostream& out);

}  // namespace qlt
