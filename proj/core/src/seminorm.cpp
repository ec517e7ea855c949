#include "sbq/seminorm.hpp"

#include <cmath>

namespace sbq {

GramScalars gram_scalars(const Number& x) {
  const auto& c = x.coeffs();
  double a = 0.0;
  for (double v : c) a += v * v;
  const double b =
      -2.0 * (c[1] * c[6] + c[2] * c[5] + c[3] * c[4]) + 2.0 * c[0] * c[7];
  return {a, b};
}

double gram_b_six_term(const Number& x) {
  const auto& c = x.coeffs();
  double s = 0.0;
  for (std::size_t i = 1; i <= 6; ++i) s += c[i] * c[7 - i];
  return -s + 2.0 * c[0] * c[7];
}

double seminorm_sq(const Number& x, SeminormSign sign) {
  const auto [a, b] = gram_scalars(x);
  const double v = a + lambda_of(sign) * b;
  return v < 0.0 ? 0.0 : v;  // a >= |b| analytically; rounding residue only
}

SeminormPair seminorm_pair(const Number& x) {
  return {std::sqrt(seminorm_sq(x, SeminormSign::plus)),
          std::sqrt(seminorm_sq(x, SeminormSign::minus))};
}

}  // namespace sbq
