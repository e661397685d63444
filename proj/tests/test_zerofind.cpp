#include <doctest.h>

#include <cmath>
#include <random>

#include "qlt/error.hpp"
#include "qlt/fixtures.hpp"
#include "qlt/zerofind.hpp"

using namespace qlt;

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

Mat2xN mat2xn(std::initializer_list<double> row0, std::initializer_list<double> row1) {
  Mat2xN m(static_cast<int>(row0.size()));
  int c = 0;
  for (double v : row0) m(0, c++) = v;
  c = 0;
  for (double v : row1) m(1, c++) = v;
  return m;
}

JacobianR jac_of(Mat2xN entries) {
  JacobianR j;
  j.base.assign(static_cast<std::size_t>(entries.cols()), 0.0);
  j.entries = std::move(entries);
  return j;
}

}  // namespace

TEST_CASE("is_simple_zero: rank diagnostics from the Gram matrix") {
  const SimpleZeroCheck id = is_simple_zero(jac_of(mat2xn({1, 0}, {0, 1})));
  CHECK(id.simple);
  CHECK(id.sigma1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(id.sigma2 == doctest::Approx(1.0).epsilon(1e-14));

  const SimpleZeroCheck rank1 = is_simple_zero(jac_of(mat2xn({1, 1}, {0, 0})));
  CHECK_FALSE(rank1.simple);
  CHECK(rank1.sigma2 == doctest::Approx(0.0).epsilon(1e-14));

  // Gram matrix [[1,1],[1,2]] has eigenvalues (3 +- sqrt 5)/2.
  const SimpleZeroCheck e3 = is_simple_zero(jac_of(mat2xn({1, 0}, {1, 1})));
  CHECK(e3.simple);
  CHECK(e3.sigma2 == doctest::Approx(std::sqrt((3.0 - std::sqrt(5.0)) / 2.0)).epsilon(1e-12));
}

TEST_CASE("refine_zero: unique common zero of the linear pair") {
  const FixturePair& e1 = fixture("E1");
  const ZeroPoint z = refine_zero(e1.f, e1.g, Vec{0.1, -0.05});
  CHECK(norm(z.location) <= 1e-10);
  CHECK(z.residual_f <= 1e-10);
  CHECK(z.residual_g <= 1e-10);
  CHECK(z.sigma2_f >= kRankTol);
  CHECK(z.sigma2_g >= kRankTol);
}

TEST_CASE("refine_zero: zero set along the z-axis") {
  const Expr f = parse("(x + i*y) * (1 + z^2)", kXYZ);
  const Expr g = parse("x + i*y", kXYZ);
  const ZeroPoint z = refine_zero(f, g, Vec{0.05, -0.02, 0.7});
  CHECK(std::abs(z.location[0]) <= 1e-10);
  CHECK(std::abs(z.location[1]) <= 1e-10);
  CHECK(std::abs(z.location[2] - 0.7) <= 0.2);
}

TEST_CASE("refine_zero: common-zero certificate") {
  const Expr f = parse("x + i*y", kXY);
  const ZeroPoint common = refine_zero(f, parse("x - i*y + x^2", kXY), Vec{0.1, 0.1});
  CHECK(norm(common.location) <= 1e-10);
  CHECK_THROWS_AS(refine_zero(f, parse("x + i*y - 1", kXY), Vec{0.1, 0.1}), NotCommonZero);
}

TEST_CASE("refine_zero: degenerate and non-convergent cases") {
  // exp(x) + i y has no zero; the iteration walks off toward x = -inf and
  // ends at a rank-deficient pseudo-zero.
  const Expr runaway = parse("exp(x) + i*y", kXY);
  CHECK_THROWS_AS(refine_zero(runaway, runaway, Vec{0.0, 0.5}), NotSimpleZero);

  // A triple zero converges too slowly for a 5-step budget.
  const Expr cubic = parse("(x + i*y)^3", kXY);
  CHECK_THROWS_AS(refine_zero(cubic, cubic, Vec{1.0, 1.0}, kZeroTol, kRankTol, 5),
                  NoConvergence);
}

TEST_CASE("nearest_zero: foot point on the zero set") {
  const FixturePair& e1 = fixture("E1");
  const ZeroPoint z0 = nearest_zero(e1.f, e1.g, Vec{0.03, -0.04});
  CHECK(norm(z0.location) <= 1e-10);

  const Expr f = parse("(x + i*y) * (1 + z^2)", kXYZ);
  const Expr g = parse("x + i*y", kXYZ);
  const ZeroPoint z = nearest_zero(f, g, Vec{1e-3, -2e-3, 0.5});
  CHECK(std::abs(z.location[0]) <= 1e-10);
  CHECK(std::abs(z.location[1]) <= 1e-10);
  CHECK(std::abs(z.location[2] - 0.5) <= 1e-4);
}

TEST_CASE("nearest_zero: fixed point on the zero set") {
  const FixturePair& e1 = fixture("E1");
  const ZeroPoint z = nearest_zero(e1.f, e1.g, Vec{0.0, 0.0});
  CHECK(z.location == Vec{0.0, 0.0});
}

TEST_CASE("property: exact projection for an affine pair") {
  const Expr f = parse("x + i*y", kXYZ);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 25; ++k) {
    const Vec x{u(rng), u(rng), u(rng)};
    const ZeroPoint z = nearest_zero(f, f, x);
    CHECK(std::abs(z.location[0]) <= 1e-9);
    CHECK(std::abs(z.location[1]) <= 1e-9);
    CHECK(std::abs(z.location[2] - x[2]) <= 1e-9);
  }
}

TEST_CASE("property: refinement is deterministic") {
  const FixturePair& op1 = fixture("OP1");
  const ZeroPoint a = refine_zero(op1.f, op1.g, Vec{0.02, -0.03});
  const ZeroPoint b = refine_zero(op1.f, op1.g, Vec{0.02, -0.03});
  CHECK(a.location == b.location);
  CHECK(a.residual_f == b.residual_f);
}
