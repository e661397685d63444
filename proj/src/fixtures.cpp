#include "qlt/fixtures.hpp"

#include "qlt/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace qlt {

namespace {

Complex line_limit_e1(double c) { return (Complex{1 + c, c}) / (Complex{1, c}); }
Complex line_limit_e2(double c) { return (Complex{1, -c}) / (Complex{1, c}); }

std::vector<FixturePair> build_catalog() {
  const std::vector<std::string> xy{"x", "y"};
  const std::vector<std::string> xyz{"x", "y", "z"};
  std::vector<FixturePair> cat;

  {
    FixturePair p;
    p.name = "E1";
    p.f = parse("x + y + i*y", xy);
    p.g = parse("x + i*y", xy);
    p.known_zeros = {{0.0, 0.0}};
    p.expected.complex_linear = false;
    for (double c : {0.0, 0.5, -0.5, 1.0, 2.0})
      p.expected_limits.push_back(
          {{"t", format_double(c) + "*t"}, line_limit_e1(c)});
    p.notes =
        "Quotient is constant along every line through the origin with a "
        "line-dependent value (1+c+ic)/(1+ic); no continuous extension.";
    cat.push_back(std::move(p));
  }
  {
    FixturePair p;
    p.name = "E2";
    p.f = parse("x - i*y", xy);
    p.g = parse("x + i*y", xy);
    p.known_zeros = {{0.0, 0.0}};
    p.expected.complex_linear = false;
    for (double c : {0.0, 1.0})
      p.expected_limits.push_back(
          {{"t", format_double(c) + "*t"}, line_limit_e2(c)});
    p.notes =
        "Constant along lines with value (1-ic)/(1+ic); the derivative ratio "
        "has determinant -1, so the singular values agree but the "
        "orientation is wrong.";
    cat.push_back(std::move(p));
  }
  {
    FixturePair p;
    p.name = "E3";
    p.f = parse("x + x^2 + i*x + i*y", xy);
    p.g = parse("x + i*x + i*y", xy);
    p.known_zeros = {{0.0, 0.0}};
    p.expected.complex_linear = true;
    p.expected.lambda = parse("1", xy);
    p.expected_limits = {{{"t", "0*t"}, {1, 0}},
                         {{"t", "t"}, {1, 0}},
                         {{"0*t", "t"}, {1, 0}}};
    p.window = 0.5;
    p.notes =
        "Continuous quotient with value 1 at the origin, but not "
        "differentiable there. f has a second zero at (-1, 1) that g does "
        "not share, so the pair is probed inside |(x,y)| < 0.5.";
    cat.push_back(std::move(p));
  }
  {
    FixturePair p;
    p.name = "OP1";
    p.f = parse("(x + i*y) * exp(i*(x^2 + y^2))", xy);
    p.g = parse("x + i*y", xy);
    p.known_zeros = {{0.0, 0.0}};
    p.expected.complex_linear = true;
    p.expected.lambda = parse("1", xy);
    p.expected_limits = {{{"t", "0*t"}, {1, 0}}, {{"t", "t"}, {1, 0}}};
    p.notes = "Smooth quotient exp(i(x^2+y^2)); equals 1 on the zero set.";
    cat.push_back(std::move(p));
  }
  {
    FixturePair p;
    p.name = "OP2";
    p.f = parse("(x + i*y) * (1 + x - i*y)", xy);
    p.g = parse("x + i*y", xy);
    p.known_zeros = {{0.0, 0.0}};
    p.expected.complex_linear = true;
    p.expected.lambda = parse("1", xy);
    p.expected_limits = {{{"t", "0*t"}, {1, 0}}};
    p.window = 0.5;
    p.notes =
        "Smooth quotient 1 + x - i*y near the origin; restricted to "
        "|(x,y)| < 0.5 where that factor cannot vanish.";
    cat.push_back(std::move(p));
  }
  {
    FixturePair p;
    p.name = "SELF";
    p.f = parse("x + i*y", xy);
    p.g = parse("x + i*y", xy);
    p.known_zeros = {{0.0, 0.0}};
    p.expected.complex_linear = true;
    p.expected.lambda = parse("1", xy);
    p.expected_limits = {{{"t", "t"}, {1, 0}}};
    p.notes = "f/f = 1 away from the zero set; extension is identically 1.";
    cat.push_back(std::move(p));
  }
  {
    FixturePair p;
    p.name = "D3";
    p.f = parse("(x + i*y) * (1 + z^2)", xyz);
    p.g = parse("x + i*y", xyz);
    p.dimension = 3;
    p.known_zeros = {{0.0, 0.0, 0.0}, {0.0, 0.0, 0.5}, {0.0, 0.0, 1.0}};
    p.expected.complex_linear = true;
    p.expected.lambda = parse("1 + z^2", xyz);
    p.expected_limits = {{{"t", "0*t", "0*t"}, {1, 0}}};
    p.notes =
        "Zero set is the z-axis; the extension value 1 + z^2 varies along "
        "it.";
    cat.push_back(std::move(p));
  }
  return cat;
}

}  // namespace

const std::vector<FixturePair>& catalog() {
  static const std::vector<FixturePair> cat = build_catalog();
  return cat;
}

const FixturePair* find_fixture(std::string_view name) {
  for (const FixturePair& p : catalog())
    if (p.name == name) return &p;
  return nullptr;
}

const FixturePair& fixture(std::string_view name) {
  const FixturePair* p = find_fixture(name);
  if (!p) throw std::out_of_range("unknown fixture '" + std::string(name) + "'");
  return *p;
}

double bump_sum(const Vec& point, int truncation) {
  if (point.size() != 3) throw std::invalid_argument("bump_sum: point must be in R^3");
  if (truncation < 1) throw std::invalid_argument("bump_sum: truncation must be >= 1");
  double sum = 0;
  for (int n = 0; n <= truncation; ++n) {
    const double r = std::ldexp(1.0, -n);
    const double cx = r;
    const double cz = std::ldexp(1.0, 1) * std::sqrt(r);  // 2^(1 - n/2)
    const double dx = point[0] - cx;
    const double dy = point[1];
    const double dz = point[2] - cz;
    const double rho2 = (dx * dx + dy * dy + dz * dz) / (r * r);
    if (rho2 < 1.0) sum += std::exp(1.0 - 1.0 / (1.0 - rho2));
  }
  return sum;
}

}  // namespace qlt
