#pragma once

#include <array>
#include <stdexcept>

#include "sbq/inversion.hpp"
#include "sbq/number.hpp"
#include "sbq/seminorm.hpp"

namespace sbq {

/// Central factor X_d = c0 + c7*e7 with X_d * X_d = x * conj(x).
/// Sign convention: c7 is the positive root, c0 = b / (2*c7); when b = 0
/// this makes X_d = sqrt(a)*e7. Either sign of the root would do, the
/// convention just keeps results deterministic.
struct CentralFactor {
  double c0;
  double c7;

  Number as_number() const { return Number(c0, 0, 0, 0, 0, 0, 0, c7); }
};

/// Thrown by the normalization operations. SingularFactor means the central
/// factor exists but is itself a zero divisor (exactly when a = |b|, i.e.
/// one seminorm of x is zero), so it cannot be inverted.
class NormalizationError : public std::domain_error {
 public:
  enum class Reason { zero_input, singular_factor };

  NormalizationError(Reason reason, SeminormPair seminorms);

  Reason reason() const noexcept { return reason_; }
  const SeminormPair& seminorms() const noexcept { return seminorms_; }

 private:
  Reason reason_;
  SeminormPair seminorms_;
};

/// Solves c0^2 + c7^2 = a, 2*c0*c7 = b for the central factor of x.
/// Both equations are re-checked after the solve; a violation would mean a
/// broken build and raises std::logic_error.
CentralFactor central_factor(const Number& x);

/// x_n = x * central_factor(x)^-1. Satisfies x_n * conj(x_n) = 1,
/// inverse(x_n) = conj(x_n), and both seminorms of x_n are 1. Left and
/// right products with the central inverse agree (the factor is central).
Number normalize(const Number& x);

/// normalize() restricted to pure inputs (zero e0/e7 components): the result
/// stays pure and squares to -1. Throws std::invalid_argument when the
/// input is not pure.
Number normalize_pure(const Number& x);

/// Conjugation u * x * u^-1. For a unit pure u (u*u = -1) this equals
/// -u*x*u and is an involution. Invariant under scaling of u and under
/// invertible central factors of u.
Number involute(const Number& x, const Number& u);

/// The image of the standard basis under conjugation by u:
/// { involute(e_i, u) : i = 0..7 }. The images satisfy the algebra's rules:
/// e0 and e7 are fixed, each imaginary image squares to -1 and has both
/// seminorms 1, and the ordered product of the six imaginary images is e7
/// (so the product of all seven non-identity images is 1).
std::array<Number, 8> conjugate_basis(const Number& u);

}  // namespace sbq
