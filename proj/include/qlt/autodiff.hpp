#pragma once

#include <span>
#include <vector>

#include "qlt/expr.hpp"
#include "qlt/path.hpp"

namespace qlt {

inline constexpr int kMaxJetOrder = 16;
inline constexpr double kFdStep = 1e-5;

// Real 2xn Jacobian of a complex-valued expression at `base`:
// row 0 = gradient of the real part, row 1 = gradient of the imaginary part.
struct JacobianR {
  Mat2xN entries;
  Vec base;
  Complex value{0, 0};
};

// Truncated Taylor expansion of a complex-valued function of one real
// parameter around t0: coefficient j equals (1/j!) d^j/dt^j. Arithmetic is
// degree-truncated polynomial arithmetic; mixing jets with different orders
// or expansion points throws std::invalid_argument.
class TaylorJet {
 public:
  TaylorJet() = default;
  TaylorJet(std::vector<Complex> coefficients, double t0);

  static TaylorJet constant(Complex value, int order, double t0);
  // Jet of the parameter itself: (t0, 1, 0, ..., 0).
  static TaylorJet parameter(double t0, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double expansion_point() const { return t0_; }
  Complex coefficient(int j) const { return c_[static_cast<std::size_t>(j)]; }
  // j! * c_j
  Complex derivative(int j) const;
  std::span<const Complex> coefficients() const { return c_; }

  TaylorJet operator-() const;
  friend TaylorJet operator+(const TaylorJet& a, const TaylorJet& b);
  friend TaylorJet operator-(const TaylorJet& a, const TaylorJet& b);
  friend TaylorJet operator*(const TaylorJet& a, const TaylorJet& b);
  friend TaylorJet operator/(const TaylorJet& a, const TaylorJet& b);

  friend TaylorJet exp(const TaylorJet& a);
  friend TaylorJet sin(const TaylorJet& a);
  friend TaylorJet cos(const TaylorJet& a);
  friend TaylorJet log(const TaylorJet& a);
  friend TaylorJet pow(const TaylorJet& a, int exponent);

 private:
  std::vector<Complex> c_;
  double t0_ = 0.0;
};

// Forward-mode Jacobian; matches the symbolic partials to rounding.
JacobianR jacobian(const Expr& e, std::span<const double> point);

// Jet of e(gamma(t)) of degree `order` around parameter value t; throws
// OrderTooLarge above `max_order`.
TaylorJet taylor_jet(const Expr& e, const PathSpec& path, int order, double t,
                     int max_order = kMaxJetOrder);

// Central-difference Jacobian; the independent oracle for `jacobian`.
JacobianR fd_jacobian(const Expr& e, std::span<const double> point, double step = kFdStep);

}  // namespace qlt
