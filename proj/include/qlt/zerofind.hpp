#pragma once

#include "qlt/autodiff.hpp"

namespace qlt {

inline constexpr double kZeroTol = 1e-10;
inline constexpr double kRankTol = 1e-6;
inline constexpr int kMaxNewtonIter = 50;

// A certified common simple zero of a pair (f, g): both residuals are within
// zero_tol and both smallest singular values are at least rank_tol.
struct ZeroPoint {
  Vec location;
  JacobianR jac_f, jac_g;
  double sigma2_f = 0, sigma2_g = 0;
  double residual_f = 0, residual_g = 0;
};

struct SimpleZeroCheck {
  bool simple = false;
  double sigma1 = 0, sigma2 = 0;
};

// True iff the smallest singular value of the 2xn Jacobian is >= rank_tol.
SimpleZeroCheck is_simple_zero(const JacobianR& j, double rank_tol = kRankTol);

// Gauss-Newton with minimal-norm steps on (Re f, Im f) = 0, then certifies
// the result as a common simple zero of the pair.
ZeroPoint refine_zero(const Expr& f, const Expr& g, const Vec& seed,
                      double zero_tol = kZeroTol, double rank_tol = kRankTol,
                      int max_iter = kMaxNewtonIter);

// Local foot point of x on the common zero set: minimal-norm Gauss-Newton
// started at x, which agrees with the Euclidean projection up to curvature
// of the zero set. Returns x unchanged when x is already certified.
ZeroPoint nearest_zero(const Expr& f, const Expr& g, const Vec& x,
                       double zero_tol = kZeroTol, double rank_tol = kRankTol);

}  // namespace qlt
