#include "qlt/autodiff.hpp"

#include <cmath>
#include <stdexcept>

#include "qlt/error.hpp"

namespace qlt {

namespace {

using Kind = Expr::Kind;
using Func = Expr::Func;

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

void check_finite(Complex v, const char* what, const char* module) {
  if (!finite(v)) throw DomainError(std::string(what) + " produced a non-finite value", module);
}

// ---------------------------------------------------------------------------
// Value carrying a dense gradient with respect to the n real variables.

struct GradVal {
  Complex v;
  std::vector<Complex> d;  // d[j] = partial derivative with respect to x_j
};

GradVal grad_eval(const Expr::Node* n, std::span<const double> point) {
  const std::size_t dim = point.size();
  switch (n->kind) {
    case Kind::Variable: {
      GradVal g{Complex{point[static_cast<std::size_t>(n->var_index)], 0},
                std::vector<Complex>(dim, Complex{0, 0})};
      g.d[static_cast<std::size_t>(n->var_index)] = {1, 0};
      return g;
    }
    case Kind::Literal:
      return {n->literal, std::vector<Complex>(dim, Complex{0, 0})};
    case Kind::Negate: {
      GradVal a = grad_eval(n->lhs.get(), point);
      a.v = -a.v;
      for (auto& dj : a.d) dj = -dj;
      return a;
    }
    case Kind::Add: {
      GradVal a = grad_eval(n->lhs.get(), point);
      const GradVal b = grad_eval(n->rhs.get(), point);
      a.v += b.v;
      for (std::size_t j = 0; j < dim; ++j) a.d[j] += b.d[j];
      return a;
    }
    case Kind::Sub: {
      GradVal a = grad_eval(n->lhs.get(), point);
      const GradVal b = grad_eval(n->rhs.get(), point);
      a.v -= b.v;
      for (std::size_t j = 0; j < dim; ++j) a.d[j] -= b.d[j];
      return a;
    }
    case Kind::Mul: {
      const GradVal a = grad_eval(n->lhs.get(), point);
      const GradVal b = grad_eval(n->rhs.get(), point);
      GradVal r{a.v * b.v, std::vector<Complex>(dim)};
      check_finite(r.v, "multiplication", "autodiff");
      for (std::size_t j = 0; j < dim; ++j) r.d[j] = a.d[j] * b.v + a.v * b.d[j];
      return r;
    }
    case Kind::Div: {
      const GradVal a = grad_eval(n->lhs.get(), point);
      const GradVal b = grad_eval(n->rhs.get(), point);
      GradVal r{a.v / b.v, std::vector<Complex>(dim)};
      check_finite(r.v, "division", "autodiff");
      for (std::size_t j = 0; j < dim; ++j) r.d[j] = (a.d[j] - r.v * b.d[j]) / b.v;
      return r;
    }
    case Kind::Pow: {
      const GradVal a = grad_eval(n->lhs.get(), point);
      const int k = n->exponent;
      if (k < 0 && a.v == Complex{0, 0})
        throw DomainError("zero raised to a negative power", "autodiff");
      // v = a^k, dv = k a^(k-1) da
      Complex vk1{1, 0};  // a^(k-1)
      const int m = std::abs(k) - 1;
      for (int i = 0; i < m; ++i) vk1 *= a.v;
      if (k < 0) vk1 = Complex{1, 0} / (vk1 * a.v * a.v);
      GradVal r{vk1 * a.v, std::vector<Complex>(dim)};
      check_finite(r.v, "integer power", "autodiff");
      const Complex factor = static_cast<double>(k) * vk1;
      for (std::size_t j = 0; j < dim; ++j) r.d[j] = factor * a.d[j];
      return r;
    }
    case Kind::Call: {
      const GradVal a = grad_eval(n->lhs.get(), point);
      Complex v, dfactor;
      switch (n->func) {
        case Func::Exp: v = std::exp(a.v); dfactor = v; break;
        case Func::Sin: v = std::sin(a.v); dfactor = std::cos(a.v); break;
        case Func::Cos: v = std::cos(a.v); dfactor = -std::sin(a.v); break;
        case Func::Log:
          if (a.v == Complex{0, 0}) throw DomainError("log of zero", "autodiff");
          v = std::log(a.v);
          dfactor = Complex{1, 0} / a.v;
          break;
      }
      check_finite(v, "function call", "autodiff");
      GradVal r{v, std::vector<Complex>(dim)};
      for (std::size_t j = 0; j < dim; ++j) r.d[j] = dfactor * a.d[j];
      return r;
    }
  }
  throw std::logic_error("autodiff: corrupt node");
}

// ---------------------------------------------------------------------------
// Jet evaluation of an expression tree, leaves substituted from `leaves`.

TaylorJet jet_eval(const Expr::Node* n, std::span<const TaylorJet> leaves, int order, double t0) {
  switch (n->kind) {
    case Kind::Variable:
      return leaves[static_cast<std::size_t>(n->var_index)];
    case Kind::Literal:
      return TaylorJet::constant(n->literal, order, t0);
    case Kind::Negate:
      return -jet_eval(n->lhs.get(), leaves, order, t0);
    case Kind::Add:
      return jet_eval(n->lhs.get(), leaves, order, t0) + jet_eval(n->rhs.get(), leaves, order, t0);
    case Kind::Sub:
      return jet_eval(n->lhs.get(), leaves, order, t0) - jet_eval(n->rhs.get(), leaves, order, t0);
    case Kind::Mul:
      return jet_eval(n->lhs.get(), leaves, order, t0) * jet_eval(n->rhs.get(), leaves, order, t0);
    case Kind::Div:
      return jet_eval(n->lhs.get(), leaves, order, t0) / jet_eval(n->rhs.get(), leaves, order, t0);
    case Kind::Pow:
      return pow(jet_eval(n->lhs.get(), leaves, order, t0), n->exponent);
    case Kind::Call: {
      const TaylorJet a = jet_eval(n->lhs.get(), leaves, order, t0);
      switch (n->func) {
        case Func::Exp: return exp(a);
        case Func::Sin: return sin(a);
        case Func::Cos: return cos(a);
        case Func::Log: return log(a);
      }
      break;
    }
  }
  throw std::logic_error("autodiff: corrupt node");
}

void require_compatible(const TaylorJet& a, const TaylorJet& b) {
  if (a.order() != b.order() || a.expansion_point() != b.expansion_point())
    throw std::invalid_argument("TaylorJet: mixed orders or expansion points");
}

double factorial(int j) {
  double f = 1;
  for (int i = 2; i <= j; ++i) f *= i;
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// TaylorJet

TaylorJet::TaylorJet(std::vector<Complex> coefficients, double t0)
    : c_(std::move(coefficients)), t0_(t0) {
  if (c_.empty()) throw std::invalid_argument("TaylorJet: empty coefficient list");
  for (Complex v : c_)
    if (!finite(v)) throw DomainError("jet coefficient is non-finite", "autodiff");
}

TaylorJet TaylorJet::constant(Complex value, int order, double t0) {
  TaylorJet j;
  j.c_.assign(static_cast<std::size_t>(order) + 1, Complex{0, 0});
  j.c_[0] = value;
  j.t0_ = t0;
  return j;
}

TaylorJet TaylorJet::parameter(double t0, int order) {
  TaylorJet j = constant(Complex{t0, 0}, order, t0);
  if (order >= 1) j.c_[1] = {1, 0};
  return j;
}

Complex TaylorJet::derivative(int j) const {
  return factorial(j) * c_[static_cast<std::size_t>(j)];
}

TaylorJet TaylorJet::operator-() const {
  TaylorJet r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

TaylorJet operator+(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  TaylorJet r = a;
  for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] += b.c_[j];
  return r;
}

TaylorJet operator-(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  TaylorJet r = a;
  for (std::size_t j = 0; j < r.c_.size(); ++j) r.c_[j] -= b.c_[j];
  return r;
}

TaylorJet operator*(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  const std::size_t m = a.c_.size();
  TaylorJet r = TaylorJet::constant({0, 0}, static_cast<int>(m) - 1, a.t0_);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; i + j < m; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  for (Complex v : r.c_) check_finite(v, "jet multiplication", "autodiff");
  return r;
}

TaylorJet operator/(const TaylorJet& a, const TaylorJet& b) {
  require_compatible(a, b);
  if (b.c_[0] == Complex{0, 0})
    throw DomainError("jet division by a jet with vanishing value", "autodiff");
  const std::size_t m = a.c_.size();
  TaylorJet r = TaylorJet::constant({0, 0}, static_cast<int>(m) - 1, a.t0_);
  for (std::size_t k = 0; k < m; ++k) {
    Complex s = a.c_[k];
    for (std::size_t j = 1; j <= k; ++j) s -= b.c_[j] * r.c_[k - j];
    r.c_[k] = s / b.c_[0];
    check_finite(r.c_[k], "jet division", "autodiff");
  }
  return r;
}

// exp via b' = a' b:  b_k = (1/k) sum_{j=1..k} j a_j b_{k-j}
TaylorJet exp(const TaylorJet& a) {
  const std::size_t m = a.c_.size();
  TaylorJet r = TaylorJet::constant({0, 0}, static_cast<int>(m) - 1, a.t0_);
  r.c_[0] = std::exp(a.c_[0]);
  check_finite(r.c_[0], "jet exp", "autodiff");
  for (std::size_t k = 1; k < m; ++k) {
    Complex s{0, 0};
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a.c_[j] * r.c_[k - j];
    r.c_[k] = s / static_cast<double>(k);
  }
  return r;
}

namespace {

// sin and cos propagate jointly: s' = a' c, c' = -a' s.
void sincos_jets(const TaylorJet& a, TaylorJet& s, TaylorJet& c) {
  const auto coeffs = a.coefficients();
  const std::size_t m = coeffs.size();
  std::vector<Complex> sc(m), cc(m);
  sc[0] = std::sin(coeffs[0]);
  cc[0] = std::cos(coeffs[0]);
  check_finite(sc[0], "jet sin", "autodiff");
  check_finite(cc[0], "jet cos", "autodiff");
  for (std::size_t k = 1; k < m; ++k) {
    Complex ss{0, 0}, cs{0, 0};
    for (std::size_t j = 1; j <= k; ++j) {
      ss += static_cast<double>(j) * coeffs[j] * cc[k - j];
      cs += static_cast<double>(j) * coeffs[j] * sc[k - j];
    }
    sc[k] = ss / static_cast<double>(k);
    cc[k] = -cs / static_cast<double>(k);
  }
  s = TaylorJet(std::move(sc), a.expansion_point());
  c = TaylorJet(std::move(cc), a.expansion_point());
}

}  // namespace

TaylorJet sin(const TaylorJet& a) {
  TaylorJet s, c;
  sincos_jets(a, s, c);
  return s;
}

TaylorJet cos(const TaylorJet& a) {
  TaylorJet s, c;
  sincos_jets(a, s, c);
  return c;
}

// log via a b' = a':  k b_k a_0 = k a_k - sum_{j=1..k-1} j b_j a_{k-j}
TaylorJet log(const TaylorJet& a) {
  if (a.c_[0] == Complex{0, 0}) throw DomainError("jet log of zero", "autodiff");
  const std::size_t m = a.c_.size();
  TaylorJet r = TaylorJet::constant({0, 0}, static_cast<int>(m) - 1, a.t0_);
  r.c_[0] = std::log(a.c_[0]);
  check_finite(r.c_[0], "jet log", "autodiff");
  for (std::size_t k = 1; k < m; ++k) {
    Complex s = static_cast<double>(k) * a.c_[k];
    for (std::size_t j = 1; j < k; ++j) s -= static_cast<double>(j) * r.c_[j] * a.c_[k - j];
    r.c_[k] = s / (static_cast<double>(k) * a.c_[0]);
    check_finite(r.c_[k], "jet log", "autodiff");
  }
  return r;
}

TaylorJet pow(const TaylorJet& a, int exponent) {
  if (exponent == 0) return TaylorJet::constant({1, 0}, a.order(), a.expansion_point());
  if (exponent < 0)
    return TaylorJet::constant({1, 0}, a.order(), a.expansion_point()) / pow(a, -exponent);
  TaylorJet acc = TaylorJet::constant({1, 0}, a.order(), a.expansion_point());
  TaylorJet b = a;
  int e = exponent;
  while (e > 0) {
    if (e & 1) acc = acc * b;
    if (e >>= 1) b = b * b;
  }
  return acc;
}

// ---------------------------------------------------------------------------

JacobianR jacobian(const Expr& e, std::span<const double> point) {
  if (e.empty()) throw std::invalid_argument("jacobian: empty expression");
  if (static_cast<int>(point.size()) != e.dimension())
    throw std::invalid_argument("jacobian: point dimension mismatch");
  for (double v : point)
    if (!std::isfinite(v)) throw std::invalid_argument("jacobian: non-finite point");

  const GradVal g = grad_eval(e.root(), point);
  JacobianR jac;
  jac.base.assign(point.begin(), point.end());
  jac.value = g.v;
  jac.entries = Mat2xN(e.dimension());
  for (int j = 0; j < e.dimension(); ++j) {
    jac.entries(0, j) = g.d[static_cast<std::size_t>(j)].real();
    jac.entries(1, j) = g.d[static_cast<std::size_t>(j)].imag();
  }
  if (!jac.entries.finite()) throw DomainError("Jacobian has non-finite entries", "autodiff");
  return jac;
}

TaylorJet taylor_jet(const Expr& e, const PathSpec& path, int order, double t, int max_order) {
  if (order < 1) throw std::invalid_argument("taylor_jet: order must be >= 1");
  if (order > max_order) throw OrderTooLarge(order, max_order);
  if (path.dimension() != e.dimension())
    throw std::invalid_argument("taylor_jet: path dimension mismatch");

  const TaylorJet t_jet = TaylorJet::parameter(t, order);
  std::vector<TaylorJet> component_jets;
  component_jets.reserve(path.components.size());
  for (const Expr& comp : path.components) {
    TaylorJet cj = jet_eval(comp.root(), std::span<const TaylorJet>(&t_jet, 1), order, t);
    // Path components must stay real; real inputs keep exactly-zero
    // imaginary parts through the recurrences, so this only trips on
    // genuinely complex components.
    std::vector<Complex> real_coeffs(cj.coefficients().begin(), cj.coefficients().end());
    for (auto& v : real_coeffs) {
      if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
        throw DomainError("path component is not real-valued", "autodiff");
      v = {v.real(), 0};
    }
    component_jets.emplace_back(std::move(real_coeffs), t);
  }
  return jet_eval(e.root(), component_jets, order, t);
}

JacobianR fd_jacobian(const Expr& e, std::span<const double> point, double step) {
  if (step <= 0) throw std::invalid_argument("fd_jacobian: step must be positive");
  const int n = e.dimension();
  JacobianR jac;
  jac.base.assign(point.begin(), point.end());
  jac.value = evaluate(e, point);
  jac.entries = Mat2xN(n);
  Vec p(point.begin(), point.end());
  for (int j = 0; j < n; ++j) {
    const double saved = p[static_cast<std::size_t>(j)];
    p[static_cast<std::size_t>(j)] = saved + step;
    const Complex hi = evaluate(e, p);
    p[static_cast<std::size_t>(j)] = saved - step;
    const Complex lo = evaluate(e, p);
    p[static_cast<std::size_t>(j)] = saved;
    const Complex d = (hi - lo) / (2 * step);
    jac.entries(0, j) = d.real();
    jac.entries(1, j) = d.imag();
  }
  return jac;
}

}  // namespace qlt
