#include "qlt/whitney.hpp"

#include <cmath>
#include <stdexcept>

#include "qlt/error.hpp"
#include "qlt/quadrature.hpp"

namespace qlt {

namespace {

PathSpec identity_path(const Expr& one_variable) {
  PathSpec p;
  p.components = {Expr::variable(0, one_variable.variables())};
  p.t0 = 0.0;
  p.origin = {0.0};
  p.velocity = {1.0};
  return p;
}

}  // namespace

Function1D::Function1D(Expr one_variable)
    : expr_(std::move(one_variable)), path_(identity_path(expr_)) {
  if (expr_.dimension() != 1)
    throw std::invalid_argument("Function1D: expression must have one variable");
}

Function1D::Function1D(Expr e, PathSpec path) : expr_(std::move(e)), path_(std::move(path)) {
  if (expr_.dimension() != path_.dimension())
    throw std::invalid_argument("Function1D: path dimension mismatch");
}

Complex Function1D::value(double t) const { return evaluate(expr_, path_point(path_, t)); }

TaylorJet Function1D::jet(double t, int order) const {
  return taylor_jet(expr_, path_, order, t);
}

Complex Function1D::derivative(int j, double t) const {
  if (j < 0) throw std::invalid_argument("Function1D::derivative: negative order");
  if (j == 0) return value(t);
  return jet(t, j).derivative(j);
}

Complex peano_derivatives(const Function1D& f, int j, double x, int quad_order) {
  if (j < 0) throw std::invalid_argument("peano_derivatives: negative order");
  const double t0 = f.base_parameter();
  const double u = x - t0;
  if (u == 0.0)
    return f.derivative(j + 1, t0) / static_cast<double>(j + 1);

  // After substituting t = t0 + s u the integral formula becomes
  // Integral_0^1 s^j f^{(j+1)}(t0 + s u) ds, with no singular prefactor.
  const QuadratureRule& rule = gauss_legendre(quad_order);
  Complex acc{0, 0};
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double s = rule.nodes[q];
    double sj = 1;
    for (int i = 0; i < j; ++i) sj *= s;
    acc += rule.weights[q] * sj * f.derivative(j + 1, t0 + s * u);
  }
  return acc;
}

Factor1D factor_1d(const Function1D& f, int order, double x, int quad_order) {
  if (order < 1) throw std::invalid_argument("factor_1d: order must be >= 1");
  Factor1D fac;
  fac.x = x;
  fac.order = order;
  fac.derivatives.reserve(static_cast<std::size_t>(order));
  for (int j = 0; j < order; ++j)
    fac.derivatives.push_back(peano_derivatives(f, j, x, quad_order));
  fac.remainder = fac.derivatives[0];
  return fac;
}

Complex complex_quotient_1d(const Expr& f, const Expr& g, const PathSpec& path, double t,
                            double near_tol, int quad_order,
                            double zero_tol, double transversal_tol) {
  const Function1D ff(f, path);
  const Function1D gg(g, path);
  const double t0 = path.t0;

  if (std::abs(ff.value(t0)) > zero_tol || std::abs(gg.value(t0)) > zero_tol)
    throw DomainError("path origin is not a common zero of the pair", "whitney");
  const Complex fp = ff.derivative(1, t0);
  const Complex gp = gg.derivative(1, t0);
  if (std::abs(fp) < transversal_tol || std::abs(gp) < transversal_tol)
    throw ZeroDerivativeOnPath(
        "a first derivative along the path vanishes at the zero (|f'| = " +
        std::to_string(std::abs(fp)) + ", |g'| = " + std::to_string(std::abs(gp)) + ")");

  if (std::abs(t - t0) > near_tol) {
    const Complex gv = gg.value(t);
    if (gv == Complex{0, 0})
      throw DomainError("g vanishes away from the factorization point", "whitney");
    const Complex q = ff.value(t) / gv;
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
      throw DomainError("direct quotient is non-finite", "whitney");
    return q;
  }

  // Near the zero both functions factor as (t - t0) * remainder; the
  // remainders stay bounded away from zero, so their ratio is stable.
  const Complex fr = peano_derivatives(ff, 0, t, quad_order);
  const Complex gr = peano_derivatives(gg, 0, t, quad_order);
  if (gr == Complex{0, 0})
    throw DomainError("remainder of g vanishes near the zero", "whitney");
  return fr / gr;
}

}  // namespace qlt
