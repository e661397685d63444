#pragma once

#include "qlt/extension.hpp"

namespace qlt {

// A complex-valued function of one real parameter: either a one-variable
// expression, or a multivariable expression composed with a path.
class Function1D {
 public:
  explicit Function1D(Expr one_variable);
  Function1D(Expr e, PathSpec path);

  double base_parameter() const { return path_.t0; }
  Complex value(double t) const;
  TaylorJet jet(double t, int order) const;
  // j-th derivative at t (j >= 0).
  Complex derivative(int j, double t) const;

 private:
  Expr expr_;
  PathSpec path_;
};

// The factorization f(x) = f(0) + x g(x) evaluated at one point, with the
// derivative table of the remainder g up to order - 1.
struct Factor1D {
  double x = 0;
  int order = 0;
  Complex remainder{0, 0};           // g(x)
  std::vector<Complex> derivatives;  // g^{(j)}(x) for j = 0..order-1
};

// g^(j)(x) for the remainder g of the first-order factorization of f about
// its base parameter, by the integral formula
//   g^(j)(x) = x^{-j-1} Integral_0^x t^j f^{(j+1)}(t) dt
// rewritten over [0, 1]; at x = 0 this is the limit f^{(j+1)}(0) / (j+1).
Complex peano_derivatives(const Function1D& f, int j, double x,
                          int quad_order = kQuadOrder);

Factor1D factor_1d(const Function1D& f, int order, double x,
                   int quad_order = kQuadOrder);

// phi(t) with f(gamma(t)) = g(gamma(t)) phi(t) near a common simple zero of
// the pair at the path origin: the direct quotient away from t0 and the
// ratio of first-order remainders near it, so that
// phi(t0) = f'_gamma(t0) / g'_gamma(t0).
Complex complex_quotient_1d(const Expr& f, const Expr& g, const PathSpec& path, double t,
                            double near_tol = kNearTol,
                            int quad_order = kQuadOrder,
                            double zero_tol = kZeroTol,
                            double transversal_tol = kTransversalTol);

}  // namespace qlt
