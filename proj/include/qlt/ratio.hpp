#pragma once

#include "qlt/zerofind.hpp"

namespace qlt {

inline constexpr double kClassifyTol = 1e-6;
inline constexpr double kRatioTol = 1e-6;
inline constexpr double kNormFloor = 1e-300;

// Result of testing a 2x2 matrix for the scaled-rotation form
// [[u, -v], [v, u]]. `defect` is the relative deviation from that form and is
// reported in both outcomes; `lambda` = u + iv is meaningful only when
// complex_linear.
struct Classification {
  bool complex_linear = false;
  Complex lambda{0, 0};
  double defect = 0;
};

// The unique real 2x2 matrix A with Jf = A Jg at a common simple zero,
// together with its diagnostics.
struct DerivativeRatio {
  Mat2 A;
  double residual = 0;  // ||Jf - A Jg||_F
  SingularValues2 sigma;
  double det = 0;
  Classification classification;
};

// lambda from the symmetric/antisymmetric split; the singular-value
// characterization (equal singular values, positive determinant) is computed
// as a cross-check.
Classification classify_scaled_rotation(const Mat2& a, double tol = kClassifyTol);

// A = Jf Jg^+ via the 2x2 Gram system of the rank-2 matrix Jg.
DerivativeRatio derivative_ratio(const JacobianR& jf, const JacobianR& jg,
                                 double ratio_tol = kRatioTol,
                                 double rank_tol = kRankTol,
                                 double classify_tol = kClassifyTol);

}  // namespace qlt
