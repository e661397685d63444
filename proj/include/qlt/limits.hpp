#pragma once

#include "qlt/path.hpp"
#include "qlt/ratio.hpp"

namespace qlt {

inline constexpr double kTransversalTol = 1e-8;

struct PathLimit {
  Complex value{0, 0};
  Complex g_prime{0, 0};  // Dg at gamma(t0) applied to gamma'(t0)
  DerivativeRatio ratio;  // diagnostics at the base point
};

struct LimitSample {
  double t = 0;
  Complex quotient{0, 0};
};

struct EmpiricalLimit {
  Complex value{0, 0};  // affine-fit intercept over the last four samples
  std::vector<LimitSample> table;
};

// t0 + 2^-k for k = 3..12.
std::vector<double> default_limit_samples(double t0 = 0.0);

// Directional limit of f/g along the path: (1/g') (A g') with A the
// derivative ratio at gamma(t0), the matrix acting on g' as a real 2-vector
// and the outer division complex. Requires gamma(t0) on the common zero set
// and |g'| >= transversal_tol.
PathLimit path_limit_formula(const Expr& f, const Expr& g, const PathSpec& path,
                             double zero_tol = kZeroTol,
                             double rank_tol = kRankTol,
                             double transversal_tol = kTransversalTol);

// Extrapolated limit of f(gamma(t))/g(gamma(t)) over a sample schedule that
// decreases strictly toward t0.
EmpiricalLimit path_limit_empirical(const Expr& f, const Expr& g, const PathSpec& path,
                                    std::span<const double> samples);

}  // namespace qlt
