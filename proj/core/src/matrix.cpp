#include "sbq/matrix.hpp"

#include <cmath>

namespace sbq {

double max_abs_diff(const Mat8& a, const Mat8& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
  return m;
}

Mat8 left_matrix(const Number& x) {
  const auto& X = x.coeffs();
  const double rows[8][8] = {
      {+X[0], -X[1], -X[2], -X[3], -X[4], -X[5], -X[6], +X[7]},
      {+X[1], +X[0], -X[3], +X[2], +X[5], -X[4], -X[7], -X[6]},
      {+X[2], +X[3], +X[0], -X[1], -X[6], -X[7], +X[4], -X[5]},
      {+X[3], -X[2], +X[1], +X[0], -X[7], +X[6], -X[5], -X[4]},
      {+X[4], -X[5], +X[6], -X[7], +X[0], +X[1], -X[2], -X[3]},
      {+X[5], +X[4], -X[7], -X[6], -X[1], +X[0], +X[3], -X[2]},
      {+X[6], -X[7], -X[4], +X[5], +X[2], -X[3], +X[0], -X[1]},
      {+X[7], +X[6], +X[5], +X[4], +X[3], +X[2], +X[1], +X[0]},
  };
  Mat8 m;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) m(r, c) = rows[r][c];
  return m;
}

Mat8 right_matrix(const Number& y) {
  const auto& Y = y.coeffs();
  const double rows[8][8] = {
      {+Y[0], -Y[1], -Y[2], -Y[3], -Y[4], -Y[5], -Y[6], +Y[7]},
      {+Y[1], +Y[0], +Y[3], -Y[2], -Y[5], +Y[4], -Y[7], -Y[6]},
      {+Y[2], -Y[3], +Y[0], +Y[1], +Y[6], -Y[7], -Y[4], -Y[5]},
      {+Y[3], +Y[2], -Y[1], +Y[0], -Y[7], -Y[6], +Y[5], -Y[4]},
      {+Y[4], +Y[5], -Y[6], -Y[7], +Y[0], -Y[1], +Y[2], -Y[3]},
      {+Y[5], -Y[4], -Y[7], +Y[6], +Y[1], +Y[0], -Y[3], -Y[2]},
      {+Y[6], -Y[7], +Y[4], -Y[5], -Y[2], +Y[3], +Y[0], -Y[1]},
      {+Y[7], +Y[6], +Y[5], +Y[4], +Y[3], +Y[2], +Y[1], +Y[0]},
  };
  Mat8 m;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) m(r, c) = rows[r][c];
  return m;
}

const Mat8& exchange_matrix() noexcept {
  static const Mat8 j = [] {
    Mat8 m;
    m(0, 7) = 1.0;
    m(7, 0) = 1.0;
    for (std::size_t r = 1; r < 7; ++r) m(r, 7 - r) = -1.0;
    return m;
  }();
  return j;
}

namespace {

// In-place LU with partial pivoting. Returns the permutation sign, or 0
// when a pivot column is exactly empty (rank-deficient to working scale).
int pivoted_lu(Mat8& a, std::array<std::size_t, 8>& perm, double pivot_floor) {
  int sign = 1;
  for (std::size_t i = 0; i < 8; ++i) perm[i] = i;
  for (std::size_t k = 0; k < 8; ++k) {
    std::size_t p = k;
    double best = std::abs(a(k, k));
    for (std::size_t r = k + 1; r < 8; ++r) {
      const double v = std::abs(a(r, k));
      if (v > best) {
        best = v;
        p = r;
      }
    }
    if (best <= pivot_floor) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < 8; ++c) std::swap(a(k, c), a(p, c));
      std::swap(perm[k], perm[p]);
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < 8; ++r) {
      const double f = a(r, k) / a(k, k);
      a(r, k) = f;
      for (std::size_t c = k + 1; c < 8; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return sign;
}

double matrix_scale(const Mat8& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) m = std::max(m, std::abs(a(r, c)));
  return m;
}

}  // namespace

std::optional<Number> solve(const Mat8& a, const Number& rhs) {
  Mat8 lu = a;
  std::array<std::size_t, 8> perm;
  const double floor = 1e-14 * matrix_scale(a);
  if (pivoted_lu(lu, perm, floor) == 0) return std::nullopt;

  std::array<double, 8> y;
  for (std::size_t r = 0; r < 8; ++r) {
    double s = rhs[perm[r]];
    for (std::size_t c = 0; c < r; ++c) s -= lu(r, c) * y[c];
    y[r] = s;
  }
  Number::Coeffs x;
  for (std::size_t ri = 8; ri-- > 0;) {
    double s = y[ri];
    for (std::size_t c = ri + 1; c < 8; ++c) s -= lu(ri, c) * x[c];
    x[ri] = s / lu(ri, ri);
  }
  return Number(x);
}

double determinant(const Mat8& a) {
  Mat8 lu = a;
  std::array<std::size_t, 8> perm;
  const int sign = pivoted_lu(lu, perm, 0.0);
  if (sign == 0) return 0.0;
  double d = static_cast<double>(sign);
  for (std::size_t i = 0; i < 8; ++i) d *= lu(i, i);
  return d;
}

}  // namespace sbq
