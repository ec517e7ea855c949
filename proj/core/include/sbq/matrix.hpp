#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "sbq/number.hpp"

namespace sbq {

/// Dense 8x8 real matrix, row-major. Just enough linear algebra for the
/// matrix representations of the algebra and the reference solver.
class Mat8 {
 public:
  constexpr Mat8() noexcept : m_{} {}

  static Mat8 identity() {
    Mat8 a;
    for (std::size_t i = 0; i < 8; ++i) a(i, i) = 1.0;
    return a;
  }

  double& operator()(std::size_t r, std::size_t c) { return m_[r * 8 + c]; }
  double operator()(std::size_t r, std::size_t c) const { return m_[r * 8 + c]; }

  Mat8 transposed() const {
    Mat8 t;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t c = 0; c < 8; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Matrix times coefficient vector.
  Number apply(const Number& v) const {
    Number::Coeffs z{};
    for (std::size_t r = 0; r < 8; ++r) {
      double s = 0.0;
      for (std::size_t c = 0; c < 8; ++c) s += (*this)(r, c) * v[c];
      z[r] = s;
    }
    return Number(z);
  }

  friend Mat8 operator*(const Mat8& a, const Mat8& b) {
    Mat8 z;
    for (std::size_t r = 0; r < 8; ++r)
      for (std::size_t k = 0; k < 8; ++k) {
        const double ark = a(r, k);
        if (ark == 0.0) continue;
        for (std::size_t c = 0; c < 8; ++c) z(r, c) += ark * b(k, c);
      }
    return z;
  }

  friend Mat8 operator+(const Mat8& a, const Mat8& b) {
    Mat8 z;
    for (std::size_t i = 0; i < 64; ++i) z.m_[i] = a.m_[i] + b.m_[i];
    return z;
  }
  friend Mat8 operator-(const Mat8& a, const Mat8& b) {
    Mat8 z;
    for (std::size_t i = 0; i < 64; ++i) z.m_[i] = a.m_[i] - b.m_[i];
    return z;
  }
  friend Mat8 operator*(const Mat8& a, double s) {
    Mat8 z;
    for (std::size_t i = 0; i < 64; ++i) z.m_[i] = a.m_[i] * s;
    return z;
  }
  friend Mat8 operator*(double s, const Mat8& a) { return a * s; }

  friend bool operator==(const Mat8&, const Mat8&) = default;

 private:
  std::array<double, 64> m_;
};

double max_abs_diff(const Mat8& a, const Mat8& b);

/// Left-multiplication matrix M_X: for all y, (x * y) coefficients equal
/// M_X applied to y's coefficient vector. Column 0 is x's own coefficient
/// vector. Transcribed independently of the structure-constants table, so
/// the two encodings cross-check each other.
Mat8 left_matrix(const Number& x);

/// Right-multiplication matrix P_Y: for all x, (x * y) coefficients equal
/// P_Y applied to x's coefficient vector.
Mat8 right_matrix(const Number& y);

/// The signed exchange matrix J: involutory (J*J = I); J applied to a
/// coefficient vector is the flipped conjugate, [x7, -x6, ..., -x1, x0].
const Mat8& exchange_matrix() noexcept;

/// Solve a*q = rhs by Gaussian elimination with partial pivoting.
/// Returns nullopt when a pivot degenerates (singular matrix).
std::optional<Number> solve(const Mat8& a, const Number& rhs);

/// Determinant via the same pivoted elimination.
double determinant(const Mat8& a);

}  // namespace sbq
