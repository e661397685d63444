#pragma once

#include <complex>
#include <span>
#include <vector>

namespace qlt {

using Complex = std::complex<double>;
using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);
Vec sub(std::span<const double> a, std::span<const double> b);

// 2x2 real matrix, row-major.
struct Mat2 {
  double m00 = 0, m01 = 0, m10 = 0, m11 = 0;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  // [[u, -v], [v, u]], acting on R^2 as multiplication by u + iv.
  static Mat2 scaled_rotation(Complex lambda) {
    return {lambda.real(), -lambda.imag(), lambda.imag(), lambda.real()};
  }

  double det() const { return m00 * m11 - m01 * m10; }
  double frobenius() const;
  double trace() const { return m00 + m11; }
  Mat2 transpose() const { return {m00, m10, m01, m11}; }
  // Throws std::invalid_argument on a numerically singular matrix.
  Mat2 inverse() const;
  Mat2 operator*(const Mat2& o) const;
  Mat2 operator-(const Mat2& o) const;
  // Action on C identified with R^2.
  Complex apply(Complex z) const {
    return {m00 * z.real() + m01 * z.imag(), m10 * z.real() + m11 * z.imag()};
  }
};

struct SingularValues2 {
  double s1 = 0, s2 = 0;  // s1 >= s2 >= 0
};

SingularValues2 singular_values(const Mat2& a);

// 2xn real matrix; in this library the rows are the gradients of the real and
// imaginary parts of a complex-valued function.
class Mat2xN {
 public:
  Mat2xN() = default;
  explicit Mat2xN(int cols) : n_(cols), a_(2 * static_cast<std::size_t>(cols), 0.0) {}

  int cols() const { return n_; }
  double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  // (row0 . v) + i (row1 . v)
  Complex apply(std::span<const double> v) const;
  // J J^T
  Mat2 gram() const;
  // J other^T
  Mat2 outer(const Mat2xN& other) const;
  double frobenius() const;
  bool finite() const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

Mat2xN operator*(const Mat2& a, const Mat2xN& j);
Mat2xN operator-(const Mat2xN& a, const Mat2xN& b);
Mat2xN operator+(const Mat2xN& a, const Mat2xN& b);
Mat2xN operator*(double s, const Mat2xN& j);

// Singular values via the eigenvalues of the 2x2 Gram matrix J J^T.
SingularValues2 singular_values(const Mat2xN& j);

}  // namespace qlt
