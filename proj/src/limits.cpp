#include "qlt/limits.hpp"

#include <cmath>
#include <stdexcept>

#include "qlt/error.hpp"

namespace qlt {

std::vector<double> default_limit_samples(double t0) {
  std::vector<double> s;
  for (int k = 3; k <= 12; ++k) s.push_back(t0 + std::ldexp(1.0, -k));
  return s;
}

PathLimit path_limit_formula(const Expr& f, const Expr& g, const PathSpec& path,
                             double zero_tol, double rank_tol, double transversal_tol) {
  if (path.dimension() != f.dimension() || f.dimension() != g.dimension())
    throw std::invalid_argument("path_limit_formula: dimension mismatch");

  const Vec& a = path.origin;
  const JacobianR jf = jacobian(f, a);
  const JacobianR jg = jacobian(g, a);
  if (std::abs(jf.value) > zero_tol || std::abs(jg.value) > zero_tol)
    throw DomainError("path origin is not on the common zero set", "limits");

  PathLimit lim;
  lim.g_prime = jg.entries.apply(path.velocity);
  if (std::abs(lim.g_prime) < transversal_tol)
    throw NotTransversal("|Dg gamma'(t0)| = " + std::to_string(std::abs(lim.g_prime)) +
                         " below tolerance; the path is tangent to the zero set");

  lim.ratio = derivative_ratio(jf, jg, kRatioTol, rank_tol);
  lim.value = lim.ratio.A.apply(lim.g_prime) / lim.g_prime;
  return lim;
}

EmpiricalLimit path_limit_empirical(const Expr& f, const Expr& g, const PathSpec& path,
                                    std::span<const double> samples) {
  if (path.dimension() != f.dimension() || f.dimension() != g.dimension())
    throw std::invalid_argument("path_limit_empirical: dimension mismatch");
  if (samples.size() < 4)
    throw std::invalid_argument("path_limit_empirical: need at least 4 samples");
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (samples[k] <= path.t0)
      throw std::invalid_argument("path_limit_empirical: samples must stay above t0");
    if (k > 0 && samples[k] >= samples[k - 1])
      throw std::invalid_argument("path_limit_empirical: samples must decrease strictly");
  }

  EmpiricalLimit lim;
  lim.table.reserve(samples.size());
  for (double t : samples) {
    const Vec p = path_point(path, t);
    const Complex gv = evaluate(g, p);
    if (gv == Complex{0, 0})
      throw SampleOnZeroSet("g vanishes at sample t = " + std::to_string(t));
    const Complex q = evaluate(f, p) / gv;
    if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
      throw SampleOnZeroSet("quotient is non-finite at sample t = " + std::to_string(t));
    lim.table.push_back({t, q});
  }

  // Affine least-squares fit q ~ intercept + slope * (t - t0) over the last
  // four (smallest-t) samples; the intercept is the reported limit.
  const std::size_t m = lim.table.size();
  double s1 = 0, st = 0, stt = 0;
  Complex sq{0, 0}, stq{0, 0};
  for (std::size_t k = m - 4; k < m; ++k) {
    const double dt = lim.table[k].t - path.t0;
    s1 += 1;
    st += dt;
    stt += dt * dt;
    sq += lim.table[k].quotient;
    stq += dt * lim.table[k].quotient;
  }
  const double det = s1 * stt - st * st;
  lim.value = (stt * sq - st * stq) / det;
  return lim;
}

}  // namespace qlt
