#include "qlt/ratio.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qlt/error.hpp"

namespace qlt {

Classification classify_scaled_rotation(const Mat2& a, double tol) {
  Classification c;
  const double scale = std::max(a.frobenius(), kNormFloor);
  c.defect = std::max(std::abs(a.m00 - a.m11), std::abs(a.m01 + a.m10)) / scale;
  c.lambda = {(a.m00 + a.m11) / 2, (a.m10 - a.m01) / 2};
  c.complex_linear =
      c.defect <= tol && a.det() > 0 && std::abs(c.lambda) > kNormFloor;

  // Cross-check against the singular-value characterization. A scaled
  // rotation has equal singular values and positive determinant; the gap
  // sigma1 - sigma2 is bounded by sqrt(2) * defect * ||A||_F, so a
  // disagreement here means a broken invariant, not a borderline input.
  if (c.complex_linear) {
    const SingularValues2 sv = singular_values(a);
    const bool svd_agrees =
        (sv.s1 - sv.s2) <= std::sqrt(2.0) * tol * scale && a.det() > 0;
    if (!svd_agrees)
      throw std::logic_error("classify_scaled_rotation: characterizations disagree");
  }
  return c;
}

DerivativeRatio derivative_ratio(const JacobianR& jf, const JacobianR& jg,
                                 double ratio_tol, double rank_tol,
                                 double classify_tol) {
  if (jf.entries.cols() != jg.entries.cols())
    throw std::invalid_argument("derivative_ratio: dimension mismatch");
  if (jf.base != jg.base)
    throw std::invalid_argument("derivative_ratio: Jacobians taken at different points");

  const SimpleZeroCheck cg = is_simple_zero(jg, rank_tol);
  if (!cg.simple)
    throw RankDeficient("Jg is rank-deficient (sigma2 = " + std::to_string(cg.sigma2) + ")");

  // Least-squares solve of A Jg = Jf against the rows of Jg:
  // A = (Jf Jg^T) (Jg Jg^T)^{-1}.
  const Mat2 gram_inv = jg.entries.gram().inverse();
  DerivativeRatio r;
  r.A = jf.entries.outer(jg.entries) * gram_inv;
  r.residual = (jf.entries - r.A * jg.entries).frobenius();
  r.sigma = singular_values(r.A);
  r.det = r.A.det();

  if (r.residual > ratio_tol * (1.0 + jf.entries.frobenius()))
    throw InconsistentKernels(
        "Jf is not expressible through Jg: residual " + std::to_string(r.residual) +
        " (the pair does not share tangent data at this point)");

  r.classification = classify_scaled_rotation(r.A, classify_tol);
  return r;
}

}  // namespace qlt
