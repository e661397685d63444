#include "qlt/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace qlt {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

Vec sub(std::span<const double> a, std::span<const double> b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

double Mat2::frobenius() const {
  return std::sqrt(m00 * m00 + m01 * m01 + m10 * m10 + m11 * m11);
}

Mat2 Mat2::inverse() const {
  const double d = det();
  const double scale = frobenius();
  if (!(std::abs(d) > 1e-14 * scale * scale) || d == 0.0)
    throw std::invalid_argument("Mat2::inverse: singular matrix");
  return {m11 / d, -m01 / d, -m10 / d, m00 / d};
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
          m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

Mat2 Mat2::operator-(const Mat2& o) const {
  return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11};
}

SingularValues2 singular_values(const Mat2& a) {
  // Closed form: split into rotation-like and reflection-like parts.
  const double e = (a.m00 + a.m11) / 2;
  const double f = (a.m00 - a.m11) / 2;
  const double g = (a.m10 + a.m01) / 2;
  const double h = (a.m10 - a.m01) / 2;
  const double q = std::hypot(e, h);
  const double r = std::hypot(f, g);
  return {q + r, std::abs(q - r)};
}

Complex Mat2xN::apply(std::span<const double> v) const {
  double re = 0, im = 0;
  for (int c = 0; c < n_; ++c) {
    re += (*this)(0, c) * v[c];
    im += (*this)(1, c) * v[c];
  }
  return {re, im};
}

Mat2 Mat2xN::gram() const { return outer(*this); }

Mat2 Mat2xN::outer(const Mat2xN& other) const {
  Mat2 m;
  for (int c = 0; c < n_; ++c) {
    m.m00 += (*this)(0, c) * other(0, c);
    m.m01 += (*this)(0, c) * other(1, c);
    m.m10 += (*this)(1, c) * other(0, c);
    m.m11 += (*this)(1, c) * other(1, c);
  }
  return m;
}

double Mat2xN::frobenius() const {
  double s = 0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

bool Mat2xN::finite() const {
  for (double v : a_)
    if (!std::isfinite(v)) return false;
  return true;
}

Mat2xN operator*(const Mat2& a, const Mat2xN& j) {
  Mat2xN r(j.cols());
  for (int c = 0; c < j.cols(); ++c) {
    r(0, c) = a.m00 * j(0, c) + a.m01 * j(1, c);
    r(1, c) = a.m10 * j(0, c) + a.m11 * j(1, c);
  }
  return r;
}

Mat2xN operator-(const Mat2xN& a, const Mat2xN& b) {
  Mat2xN r(a.cols());
  for (int c = 0; c < a.cols(); ++c) {
    r(0, c) = a(0, c) - b(0, c);
    r(1, c) = a(1, c) - b(1, c);
  }
  return r;
}

Mat2xN operator+(const Mat2xN& a, const Mat2xN& b) {
  Mat2xN r(a.cols());
  for (int c = 0; c < a.cols(); ++c) {
    r(0, c) = a(0, c) + b(0, c);
    r(1, c) = a(1, c) + b(1, c);
  }
  return r;
}

Mat2xN operator*(double s, const Mat2xN& j) {
  Mat2xN r(j.cols());
  for (int c = 0; c < j.cols(); ++c) {
    r(0, c) = s * j(0, c);
    r(1, c) = s * j(1, c);
  }
  return r;
}

SingularValues2 singular_values(const Mat2xN& j) {
  const Mat2 g = j.gram();
  // Eigenvalues of the symmetric matrix [[p, q], [q, r]].
  const double mean = (g.m00 + g.m11) / 2;
  const double disc = std::hypot((g.m00 - g.m11) / 2, g.m01);
  const double l1 = mean + disc;
  const double l2 = std::max(mean - disc, 0.0);
  return {std::sqrt(l1), std::sqrt(l2)};
}

}  // namespace qlt
