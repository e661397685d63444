#include "qlt/path.hpp"

#include <cmath>
#include <stdexcept>

#include "qlt/autodiff.hpp"
#include "qlt/error.hpp"

namespace qlt {

namespace {

double require_real(Complex v, const char* what) {
  if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
    throw DomainError(std::string(what) + " is not real-valued", "limits");
  if (!std::isfinite(v.real())) throw DomainError(std::string(what) + " is non-finite", "limits");
  return v.real();
}

}  // namespace

PathSpec make_path(std::vector<Expr> components, double t0) {
  if (components.empty()) throw std::invalid_argument("make_path: no components");
  for (const Expr& c : components)
    if (c.empty() || c.dimension() != 1)
      throw std::invalid_argument("make_path: components must be expressions of one variable");

  PathSpec path;
  path.components = std::move(components);
  path.t0 = t0;
  path.origin.resize(path.components.size());
  path.velocity.resize(path.components.size());

  // First-order jets of each component via the identity path in t.
  for (std::size_t j = 0; j < path.components.size(); ++j) {
    PathSpec one;
    one.components = {Expr::variable(0, path.components[j].variables())};
    one.t0 = t0;
    const TaylorJet jet = taylor_jet(path.components[j], one, 1, t0);
    path.origin[j] = require_real(jet.coefficient(0), "path component");
    path.velocity[j] = require_real(jet.coefficient(1), "path velocity");
  }
  if (norm(path.velocity) == 0.0)
    throw NotTransversal("path velocity vanishes at t0");
  return path;
}

Vec path_point(const PathSpec& path, double t) {
  Vec p(path.components.size());
  const Vec arg{t};
  for (std::size_t j = 0; j < path.components.size(); ++j)
    p[j] = require_real(evaluate(path.components[j], arg), "path component");
  return p;
}

}  // namespace qlt
