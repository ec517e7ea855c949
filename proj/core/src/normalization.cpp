#include "sbq/normalization.hpp"

#include <cmath>
#include <cstdio>

namespace sbq {

namespace {

std::string describe(NormalizationError::Reason reason, const SeminormPair& s) {
  if (reason == NormalizationError::Reason::zero_input)
    return "cannot normalize the zero element";
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "central factor is singular: one seminorm of the input is "
                "zero (seminorms: +1 -> %.6g, -1 -> %.6g)",
                s.plus, s.minus);
  return buf;
}

}  // namespace

NormalizationError::NormalizationError(Reason reason, SeminormPair seminorms)
    : std::domain_error(describe(reason, seminorms)),
      reason_(reason),
      seminorms_(seminorms) {}

CentralFactor central_factor(const Number& x) {
  const double scale = max_abs(x);
  if (scale == 0.0)
    throw NormalizationError(NormalizationError::Reason::zero_input,
                             seminorm_pair(x));
  const Number y = x / scale;
  const auto [a, b] = gram_scalars(y);
  if (a * a - b * b <= singular_epsilon * a * a)
    throw NormalizationError(NormalizationError::Reason::singular_factor,
                             seminorm_pair(x));

  // positive-root branch of 4 B'^2 - 4 a B' + b^2 = 0
  const double b_sq = (a + std::sqrt(a * a - b * b)) / 2.0;
  const double c7 = std::sqrt(b_sq);  // > 0 since b_sq >= a/2 > 0
  const double c0 = b / (2.0 * c7);

  if (std::abs(c0 * c0 + c7 * c7 - a) > 1e-9 * a ||
      std::abs(2.0 * c0 * c7 - b) > 1e-9 * a)
    throw std::logic_error("central_factor: defining equations violated");

  return {c0 * scale, c7 * scale};
}

Number normalize(const Number& x) {
  const CentralFactor d = central_factor(x);
  return x * inverse(d.as_number());
}

Number normalize_pure(const Number& x) {
  if (!is_pure(x))
    throw std::invalid_argument(
        "normalize_pure: input has nonzero e0/e7 components");
  return normalize(x);
}

Number involute(const Number& x, const Number& u) {
  return (u * x) * inverse(u);
}

std::array<Number, 8> conjugate_basis(const Number& u) {
  const Number ui = inverse(u);
  std::array<Number, 8> basis;
  for (std::size_t i = 0; i < 8; ++i)
    basis[i] = (u * Number::unit(i)) * ui;
  return basis;
}

}  // namespace sbq
