#pragma once

#include "sbq/number.hpp"

namespace sbq {

/// The two scalars behind the algebra's bilinear structure:
///   a = sum of squared coefficients (Euclidean, a >= 0, a = 0 iff x = 0)
///   b = x . (J x) where J is the exchange matrix
/// Analytically a >= |b| for every element.
struct GramScalars {
  double a;
  double b;
};

GramScalars gram_scalars(const Number& x);

/// The unfolded six-term form of b, -sum_{i=1..6} x_i x_{7-i} + 2 x_0 x_7.
/// Agrees with gram_scalars().b (which folds the symmetric pairs); the
/// verification suite checks the agreement rather than assuming it.
double gram_b_six_term(const Number& x);

/// Selects which of the two seminorms: lambda = +1 or lambda = -1.
enum class SeminormSign { plus, minus };

constexpr double lambda_of(SeminormSign s) noexcept {
  return s == SeminormSign::plus ? 1.0 : -1.0;
}

/// Squared seminorm a + lambda*b. Nonnegative analytically; tiny negative
/// rounding residue (possible only for seminorm-zero inputs) is clamped.
double seminorm_sq(const Number& x, SeminormSign sign);

/// Both seminorm values, sqrt(a+b) and sqrt(a-b). These vanish together
/// only at x = 0; a single zero marks a zero divisor.
struct SeminormPair {
  double plus;
  double minus;

  double min_value() const noexcept { return plus < minus ? plus : minus; }
  double max_value() const noexcept { return plus > minus ? plus : minus; }
};

SeminormPair seminorm_pair(const Number& x);

}  // namespace sbq
