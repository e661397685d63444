#pragma once

#include "qlt/limits.hpp"

namespace qlt {

inline constexpr double kNearTol = 1e-4;
inline constexpr double kFtcTol = 1e-9;
inline constexpr int kQuadOrder = 32;

// Segment-averaged Jacobian P of e over [a, x]: the quadrature approximation
// of the integral of De along the segment, which satisfies the fundamental
// theorem of calculus identity e(x) - e(a) = P (x - a) exactly in the limit.
struct AveragedJacobian {
  Mat2xN P;
  Vec base, target;
  int quad_order = kQuadOrder;
  double reconstruction_error = 0;  // |P (x - a) - e(x)|, with e(a) = 0
};

enum class EvalMethod { Direct, Averaged, OnGamma };

const char* to_string(EvalMethod m);

struct QuotientValue {
  Complex value{0, 0};
  EvalMethod method = EvalMethod::Direct;
};

// Requires e(a) = 0 within zero_tol; throws ReconstructionFailure when the
// identity check exceeds 100 * ftc_tol relatively.
AveragedJacobian averaged_jacobian(const Expr& e, const Vec& a, const Vec& x,
                                   int quad_order = kQuadOrder,
                                   double zero_tol = kZeroTol,
                                   double ftc_tol = kFtcTol);

// f(x)/g(x), evaluated stably near the common zero set: direct division away
// from it, the ratio of averaged Jacobians applied to x - a near it, and the
// classification value lambda on it (which must exist, else
// NotComplexLinear).
QuotientValue quotient_eval(const Expr& f, const Expr& g, const Vec& x,
                            double near_tol = kNearTol,
                            int quad_order = kQuadOrder,
                            double zero_tol = kZeroTol,
                            double rank_tol = kRankTol);

}  // namespace qlt
