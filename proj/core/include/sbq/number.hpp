#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace sbq {

/// Componentwise absolute tolerance for unit-scale comparisons.
inline constexpr double default_abs_tol = 1e-12;
/// Relative tolerance for randomized property checks.
inline constexpr double default_rel_tol = 1e-10;
/// Relative tolerance for chained operations (products mixed with inverses).
inline constexpr double chained_rel_tol = 1e-9;

/**
 * Element of the eight-dimensional split-biquaternion algebra.
 *
 * A value is c[0] + c[1]e1 + ... + c[6]e6 + c[7]e7 with basis e0 = 1.
 * Indices 1..6 are the imaginary dimensions (e_i^2 = -1); indices 0 and 7
 * are the non-imaginary ones (e7^2 = +1, e7 is central). Values are
 * immutable after construction and every constructor rejects non-finite
 * coefficients, so all downstream operations work on finite inputs only.
 */
class Number {
 public:
  using Coeffs = std::array<double, 8>;

  constexpr Number() noexcept : c_{} {}

  Number(double c0, double c1, double c2, double c3,
         double c4, double c5, double c6, double c7)
      : c_{c0, c1, c2, c3, c4, c5, c6, c7} {
    require_finite();
  }

  explicit Number(const Coeffs& c) : c_(c) { require_finite(); }

  static constexpr Number zero() noexcept { return Number(); }
  static Number one() { return unit(0); }

  /// Basis element e_i for i in 0..7.
  static Number unit(std::size_t i) {
    if (i > 7) throw std::out_of_range("sbq::Number::unit: index out of range");
    Number n;
    n.c_[i] = 1.0;
    return n;
  }

  double operator[](std::size_t i) const { return c_[i]; }
  const Coeffs& coeffs() const noexcept { return c_; }

  friend Number operator+(const Number& x, const Number& y) {
    Coeffs z;
    for (std::size_t i = 0; i < 8; ++i) z[i] = x.c_[i] + y.c_[i];
    return Number(z);
  }
  friend Number operator-(const Number& x, const Number& y) {
    Coeffs z;
    for (std::size_t i = 0; i < 8; ++i) z[i] = x.c_[i] - y.c_[i];
    return Number(z);
  }
  friend Number operator-(const Number& x) {
    Coeffs z;
    for (std::size_t i = 0; i < 8; ++i) z[i] = -x.c_[i];
    return Number(z);
  }
  friend Number operator*(const Number& x, double s) {
    Coeffs z;
    for (std::size_t i = 0; i < 8; ++i) z[i] = x.c_[i] * s;
    return Number(z);
  }
  friend Number operator*(double s, const Number& x) { return x * s; }
  friend Number operator/(const Number& x, double s) { return x * (1.0 / s); }

  Number& operator+=(const Number& y) { return *this = *this + y; }
  Number& operator-=(const Number& y) { return *this = *this - y; }
  Number& operator*=(double s) { return *this = *this * s; }

  /// Exact componentwise equality. Tolerant comparison is almost_equal().
  friend bool operator==(const Number& x, const Number& y) = default;

 private:
  void require_finite() const {
    for (double v : c_)
      if (!std::isfinite(v))
        throw std::invalid_argument("sbq::Number: non-finite coefficient");
  }

  Coeffs c_;
};

/// Algebra product per the multiplication table (defined in cayley.cpp).
Number operator*(const Number& x, const Number& y);

/// Conjugate ("reverse"): negates the six imaginary coefficients,
/// fixes c[0] and c[7]. An involution: conj(conj(x)) == x.
inline Number conj(const Number& x) {
  const auto& c = x.coeffs();
  return Number(c[0], -c[1], -c[2], -c[3], -c[4], -c[5], -c[6], c[7]);
}

/// True iff the non-imaginary coefficients c[0], c[7] are (near) zero.
inline bool is_pure(const Number& x, double tol = default_abs_tol) {
  return std::abs(x[0]) <= tol && std::abs(x[7]) <= tol;
}

/// True iff only the central coefficients c[0], c[7] are (possibly) nonzero.
/// Central elements commute with everything.
inline bool is_central(const Number& x, double tol = default_abs_tol) {
  for (std::size_t i = 1; i < 7; ++i)
    if (std::abs(x[i]) > tol) return false;
  return true;
}

/// Sum of squared coefficients (squared Euclidean length of the
/// coefficient vector).
inline double abs2(const Number& x) {
  double s = 0.0;
  for (double v : x.coeffs()) s += v * v;
  return s;
}

/// Largest coefficient magnitude.
inline double max_abs(const Number& x) {
  double m = 0.0;
  for (double v : x.coeffs()) m = std::max(m, std::abs(v));
  return m;
}

inline double max_abs_diff(const Number& x, const Number& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < 8; ++i)
    m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

/// Componentwise comparison with mixed absolute/relative tolerance:
/// |x_i - y_i| <= abs_tol + rel_tol * max(|x|, |y|).
inline bool almost_equal(const Number& x, const Number& y,
                         double rel_tol = default_rel_tol,
                         double abs_tol = default_abs_tol) {
  const double scale = std::max(max_abs(x), max_abs(y));
  return max_abs_diff(x, y) <= abs_tol + rel_tol * scale;
}

}  // namespace sbq
