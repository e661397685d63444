#include "qlt/zerofind.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qlt/error.hpp"

namespace qlt {

namespace {

std::string point_str(const Vec& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
  os << ")";
  return os.str();
}

ZeroPoint certify(const Expr& f, const Expr& g, const Vec& location,
                  double zero_tol, double rank_tol) {
  ZeroPoint z;
  z.location = location;
  z.jac_f = jacobian(f, location);
  z.jac_g = jacobian(g, location);
  z.residual_f = std::abs(z.jac_f.value);
  z.residual_g = std::abs(z.jac_g.value);

  const SimpleZeroCheck cf = is_simple_zero(z.jac_f, rank_tol);
  const SimpleZeroCheck cg = is_simple_zero(z.jac_g, rank_tol);
  z.sigma2_f = cf.sigma2;
  z.sigma2_g = cg.sigma2;

  if (z.residual_g > zero_tol)
    throw NotCommonZero("g does not vanish at the zero of f found at " + point_str(location) +
                        " (|g| = " + std::to_string(z.residual_g) + ")");
  if (!cf.simple)
    throw NotSimpleZero("f has a degenerate zero at " + point_str(location) +
                        " (sigma2 = " + std::to_string(cf.sigma2) + ")");
  if (!cg.simple)
    throw NotSimpleZero("g has a degenerate zero at " + point_str(location) +
                        " (sigma2 = " + std::to_string(cg.sigma2) + ")");
  return z;
}

}  // namespace

SimpleZeroCheck is_simple_zero(const JacobianR& j, double rank_tol) {
  const SingularValues2 sv = singular_values(j.entries);
  return {sv.s2 >= rank_tol, sv.s1, sv.s2};
}

ZeroPoint refine_zero(const Expr& f, const Expr& g, const Vec& seed,
                      double zero_tol, double rank_tol, int max_iter) {
  if (zero_tol <= 0 || rank_tol <= 0) throw std::invalid_argument("refine_zero: tolerances must be positive");
  if (f.dimension() != g.dimension() || static_cast<int>(seed.size()) != f.dimension())
    throw std::invalid_argument("refine_zero: dimension mismatch");
  for (double v : seed)
    if (!std::isfinite(v)) throw std::invalid_argument("refine_zero: non-finite seed");

  Vec x = seed;
  for (int iter = 0; iter < max_iter; ++iter) {
    const JacobianR jf = jacobian(f, x);
    if (std::abs(jf.value) <= zero_tol) return certify(f, g, x, zero_tol, rank_tol);

    // Minimal-norm step for the underdetermined 2-equation system:
    // delta = -J^T (J J^T)^{-1} F.
    const Mat2 gram = jf.entries.gram();
    const double scale = gram.trace();
    if (!(std::abs(gram.det()) > 1e-14 * scale * scale))
      throw NotSimpleZero("Jacobian of f lost rank 2 at iterate " + point_str(x));
    const Mat2 gram_inv = gram.inverse();
    const Complex y = gram_inv.apply(jf.value);
    for (int c = 0; c < jf.entries.cols(); ++c)
      x[static_cast<std::size_t>(c)] -=
          jf.entries(0, c) * y.real() + jf.entries(1, c) * y.imag();
    for (double v : x)
      if (!std::isfinite(v)) throw NoConvergence("iterates diverged from seed " + point_str(seed));
  }
  const double residual = std::abs(evaluate(f, x));
  if (residual <= zero_tol) return certify(f, g, x, zero_tol, rank_tol);
  throw NoConvergence("no zero within tolerance after " + std::to_string(max_iter) +
                      " iterations from seed " + point_str(seed) +
                      " (residual " + std::to_string(residual) + ")");
}

ZeroPoint nearest_zero(const Expr& f, const Expr& g, const Vec& x,
                       double zero_tol, double rank_tol) {
  return refine_zero(f, g, x, zero_tol, rank_tol, kMaxNewtonIter);
}

}  // namespace qlt
