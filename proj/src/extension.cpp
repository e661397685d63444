#include "qlt/extension.hpp"

#include <cmath>
#include <stdexcept>

#include "qlt/error.hpp"
#include "qlt/quadrature.hpp"

namespace qlt {

const char* to_string(EvalMethod m) {
  switch (m) {
    case EvalMethod::Direct: return "direct";
    case EvalMethod::Averaged: return "averaged";
    case EvalMethod::OnGamma: return "on_gamma";
  }
  return "?";
}

AveragedJacobian averaged_jacobian(const Expr& e, const Vec& a, const Vec& x,
                                   int quad_order, double zero_tol, double ftc_tol) {
  const int n = e.dimension();
  if (static_cast<int>(a.size()) != n || static_cast<int>(x.size()) != n)
    throw std::invalid_argument("averaged_jacobian: dimension mismatch");
  if (quad_order < 1) throw std::invalid_argument("averaged_jacobian: quad_order must be >= 1");
  const Complex ea = evaluate(e, a);
  if (std::abs(ea) > zero_tol)
    throw std::invalid_argument("averaged_jacobian: e does not vanish at the base point");

  AveragedJacobian avg;
  avg.base = a;
  avg.target = x;
  avg.quad_order = quad_order;
  avg.P = Mat2xN(n);

  const QuadratureRule& rule = gauss_legendre(quad_order);
  Vec p(static_cast<std::size_t>(n));
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double t = rule.nodes[q];
    for (int c = 0; c < n; ++c)
      p[static_cast<std::size_t>(c)] =
          a[static_cast<std::size_t>(c)] +
          t * (x[static_cast<std::size_t>(c)] - a[static_cast<std::size_t>(c)]);
    avg.P = avg.P + rule.weights[q] * jacobian(e, p).entries;
  }

  const Vec v = sub(x, a);
  const Complex ex = evaluate(e, x);
  avg.reconstruction_error = std::abs(avg.P.apply(v) - ex);
  if (avg.reconstruction_error > 100.0 * ftc_tol * (1.0 + std::abs(ex)))
    throw ReconstructionFailure(
        "segment reconstruction error " + std::to_string(avg.reconstruction_error) +
        " (raise the quadrature order, or the base point is not a zero)");
  return avg;
}

QuotientValue quotient_eval(const Expr& f, const Expr& g, const Vec& x,
                            double near_tol, int quad_order,
                            double zero_tol, double rank_tol) {
  if (f.dimension() != g.dimension() || static_cast<int>(x.size()) != f.dimension())
    throw std::invalid_argument("quotient_eval: dimension mismatch");

  const Complex gx = evaluate(g, x);
  if (std::abs(gx) > near_tol) {
    const Complex q = evaluate(f, x) / gx;
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
      throw DomainError("direct quotient is non-finite", "extension");
    return {q, EvalMethod::Direct};
  }

  const ZeroPoint zp = nearest_zero(f, g, x, zero_tol, rank_tol);
  const Vec v = sub(x, zp.location);

  if (norm(v) <= zero_tol) {
    const DerivativeRatio ratio = derivative_ratio(zp.jac_f, zp.jac_g, kRatioTol, rank_tol);
    if (!ratio.classification.complex_linear)
      throw NotComplexLinear(
          "the quotient has no continuous value on the zero set here (defect " +
          std::to_string(ratio.classification.defect) + ")");
    return {ratio.classification.lambda, EvalMethod::OnGamma};
  }

  const AveragedJacobian pf = averaged_jacobian(f, zp.location, x, quad_order, zero_tol);
  const AveragedJacobian qg = averaged_jacobian(g, zp.location, x, quad_order, zero_tol);
  const Complex den = qg.P.apply(v);
  if (den == Complex{0, 0})
    throw DomainError("averaged denominator vanishes along x - a", "extension");
  const Complex q = pf.P.apply(v) / den;
  if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
    throw DomainError("averaged quotient is non-finite", "extension");
  return {q, EvalMethod::Averaged};
}

}  // namespace qlt
