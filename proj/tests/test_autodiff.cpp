#include <doctest.h>

#include <cmath>
#include <random>

#include "qlt/autodiff.hpp"
#include "qlt/error.hpp"
#include "qlt/fixtures.hpp"
#include "qlt/grid.hpp"

using namespace qlt;

namespace {

const std::vector<std::string> kXY{"x", "y"};

double entry_diff(const Mat2xN& a, const Mat2xN& b) { return (a - b).frobenius(); }

Mat2xN mat2xn(std::initializer_list<double> row0, std::initializer_list<double> row1) {
  Mat2xN m(static_cast<int>(row0.size()));
  int c = 0;
  for (double v : row0) m(0, c++) = v;
  c = 0;
  for (double v : row1) m(1, c++) = v;
  return m;
}

PathSpec line(double c) {
  return make_path({parse("t", {"t"}), parse(format_double(c) + "*t", {"t"})});
}

}  // namespace

TEST_CASE("jacobian: linear pairs have coefficient matrices") {
  const JacobianR jf = jacobian(parse("x + y + i*y", kXY), Vec{0.0, 0.0});
  CHECK(entry_diff(jf.entries, mat2xn({1, 1}, {0, 1})) == 0.0);
  CHECK(jf.value == Complex{0, 0});

  const JacobianR jg = jacobian(parse("x + i*y", kXY), Vec{0.0, 0.0});
  CHECK(entry_diff(jg.entries, mat2xn({1, 0}, {0, 1})) == 0.0);
}

TEST_CASE("jacobian: product rule at the common zero") {
  const Expr f = parse("(x + i*y) * exp(i*(x^2 + y^2))", kXY);
  const JacobianR j = jacobian(f, Vec{0.0, 0.0});
  CHECK(entry_diff(j.entries, mat2xn({1, 0}, {0, 1})) < 1e-15);

  const JacobianR fd = fd_jacobian(f, Vec{0.0, 0.0});
  CHECK(entry_diff(j.entries, fd.entries) < 1e-9);
}

TEST_CASE("fd_jacobian: hand-differentiated fixtures") {
  const JacobianR j2 = fd_jacobian(parse("x - i*y", kXY), Vec{0.0, 0.0});
  CHECK(entry_diff(j2.entries, mat2xn({1, 0}, {0, -1})) < 1e-8);

  // Re f = x + x^2, Im f = x + y.
  const JacobianR j3 = fd_jacobian(parse("x + x^2 + i*x + i*y", kXY), Vec{0.0, 0.0});
  CHECK(entry_diff(j3.entries, mat2xn({1, 0}, {1, 1})) < 1e-8);
}

TEST_CASE("property: forward mode matches the symbolic partials") {
  std::mt19937 rng(53);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (const FixturePair& p : catalog()) {
    std::vector<Expr> partials;
    for (int j = 0; j < p.dimension; ++j) partials.push_back(partial(p.f, j));
    for (int k = 0; k < 20; ++k) {
      Vec pt(static_cast<std::size_t>(p.dimension));
      for (double& v : pt) v = u(rng) * p.window;
      const JacobianR ad = jacobian(p.f, pt);
      for (int j = 0; j < p.dimension; ++j) {
        const Complex sym = evaluate(partials[static_cast<std::size_t>(j)], pt);
        const Complex fwd{ad.entries(0, j), ad.entries(1, j)};
        CHECK(std::abs(fwd - sym) <= 1e-10 * (1.0 + std::abs(sym)));
      }
    }
  }
}

TEST_CASE("property: forward mode matches central differences") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  for (const FixturePair& p : catalog()) {
    for (const Expr* e : {&p.f, &p.g}) {
      for (int k = 0; k < 50; ++k) {
        Vec pt(static_cast<std::size_t>(p.dimension));
        for (double& v : pt) v = u(rng) * p.window;
        const JacobianR ad = jacobian(*e, pt);
        const JacobianR fd = fd_jacobian(*e, pt);
        CHECK(entry_diff(ad.entries, fd.entries) <= 1e-6 * (1.0 + ad.entries.frobenius()));
      }
    }
  }
}

TEST_CASE("taylor_jet: first-order coefficients along a line") {
  const PathSpec diag = line(1.0);
  const TaylorJet jg = taylor_jet(parse("x + i*y", kXY), diag, 1, 0.0);
  CHECK(jg.coefficient(0) == Complex{0, 0});
  CHECK(std::abs(jg.coefficient(1) - Complex{1, 1}) < 1e-15);

  const TaylorJet jf = taylor_jet(parse("x + y + i*y", kXY), diag, 1, 0.0);
  CHECK(std::abs(jf.coefficient(1) - Complex{2, 1}) < 1e-15);
}

TEST_CASE("taylor_jet: exponential series") {
  const PathSpec axis = make_path({parse("t", {"t"}), parse("0*t", {"t"})});
  const TaylorJet j = taylor_jet(parse("exp(x)", kXY), axis, 3, 0.0);
  CHECK(std::abs(j.coefficient(0) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(j.coefficient(1) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(j.coefficient(2) - Complex{0.5, 0}) < 1e-15);
  CHECK(std::abs(j.coefficient(3) - Complex{1.0 / 6, 0}) < 1e-15);
}

TEST_CASE("taylor_jet: chain-rule consistency with the Jacobian") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  const Expr e = parse("(x + i*y) * exp(i*(x^2 + y^2)) + sin(x)*cos(y)", kXY);
  for (int k = 0; k < 20; ++k) {
    const double c = u(rng);
    const double t = u(rng);
    const PathSpec path = line(c);
    const TaylorJet jet = taylor_jet(e, path, 1, t);
    const Vec pt = path_point(path, t);
    const JacobianR jac = jacobian(e, pt);
    const Complex dir = jac.entries.apply(Vec{1.0, c});
    CHECK(std::abs(jet.coefficient(1) - dir) <= 1e-10 * (1.0 + std::abs(dir)));
    CHECK(std::abs(jet.coefficient(0) - evaluate(e, pt)) < 1e-14);
  }
}

TEST_CASE("taylor_jet: trig and log recurrences against 1-D closed forms") {
  const PathSpec self = make_path({parse("t", {"t"})});

  const TaylorJet js = taylor_jet(parse("sin(t)", {"t"}), self, 5, 0.0);
  CHECK(std::abs(js.coefficient(1) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(js.coefficient(3) - Complex{-1.0 / 6, 0}) < 1e-15);
  CHECK(std::abs(js.coefficient(5) - Complex{1.0 / 120, 0}) < 1e-15);

  const TaylorJet jl = taylor_jet(parse("log(1 + t)", {"t"}), self, 4, 0.0);
  CHECK(std::abs(jl.coefficient(1) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(jl.coefficient(2) - Complex{-0.5, 0}) < 1e-15);
  CHECK(std::abs(jl.coefficient(3) - Complex{1.0 / 3, 0}) < 1e-15);
  CHECK(std::abs(jl.coefficient(4) - Complex{-0.25, 0}) < 1e-15);
}

TEST_CASE("property: jet arithmetic distributes") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int k = 0; k < 50; ++k) {
    std::vector<Complex> c1(6), c2(6), c3(6);
    for (int j = 0; j < 6; ++j) {
      c1[static_cast<std::size_t>(j)] = {u(rng), u(rng)};
      c2[static_cast<std::size_t>(j)] = {u(rng), u(rng)};
      c3[static_cast<std::size_t>(j)] = {u(rng), u(rng)};
    }
    const TaylorJet a(c1, 0.0), b(c2, 0.0), c(c3, 0.0);
    const TaylorJet lhs = (a + b) * c;
    const TaylorJet rhs = a * c + b * c;
    for (int j = 0; j <= lhs.order(); ++j)
      CHECK(std::abs(lhs.coefficient(j) - rhs.coefficient(j)) <= 1e-12);
  }
}

TEST_CASE("taylor_jet: order cap") {
  const PathSpec diag = line(1.0);
  CHECK_THROWS_AS(taylor_jet(parse("x + i*y", kXY), diag, 17, 0.0), OrderTooLarge);
  CHECK_NOTHROW(taylor_jet(parse("x + i*y", kXY), diag, 16, 0.0));
  CHECK_NOTHROW(taylor_jet(parse("x + i*y", kXY), diag, 17, 0.0, 32));
}

TEST_CASE("jets of different shapes do not mix") {
  const TaylorJet a = TaylorJet::constant({1, 0}, 3, 0.0);
  const TaylorJet b = TaylorJet::constant({1, 0}, 4, 0.0);
  const TaylorJet c = TaylorJet::constant({1, 0}, 3, 0.5);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * c, std::invalid_argument);
}

TEST_CASE("taylor_jet: rejects complex-valued path components") {
  std::vector<Expr> comps{parse("t", {"t"}), parse("i*t", {"t"})};
  CHECK_THROWS_AS(make_path(std::move(comps)), DomainError);
}
