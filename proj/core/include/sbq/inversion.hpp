#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "sbq/number.hpp"
#include "sbq/seminorm.hpp"

namespace sbq {

/// Relative singularity threshold: x is treated as non-invertible when
/// a^2 - b^2 <= singular_epsilon * a^2 (equivalently, one seminorm is zero
/// to within sqrt(singular_epsilon) of the Euclidean scale).
inline constexpr double singular_epsilon = 1e-10;

/// Thrown when an operation needs an inverse and (at least) one seminorm of
/// the offending value is zero. Carries which seminorm vanished plus both
/// seminorm values for diagnostics.
class SingularError : public std::domain_error {
 public:
  enum class Kind { plus, minus, both };

  SingularError(Kind kind, SeminormPair seminorms);

  Kind kind() const noexcept { return kind_; }
  const SeminormPair& seminorms() const noexcept { return seminorms_; }

 private:
  Kind kind_;
  SeminormPair seminorms_;
};

/// True iff inverse(x) would throw.
bool is_singular(const Number& x);

/// conj(x) / seminorm_sq(x, sign): the quotient that inverts complex numbers,
/// quaternions and octonions. Here it is NOT a true inverse unless b = 0;
/// x * result equals (a + b e7) / (a + lambda b). It does satisfy
/// ||x|| * ||result|| = 1 for the chosen seminorm, and the verification
/// suite demonstrates both facts.
Number naive_conjugate_quotient(const Number& x, SeminormSign sign);

/// The true two-sided inverse: x * inverse(x) = inverse(x) * x = 1.
/// Closed form (a I - b J) conj(x) / (a^2 - b^2), which is algebraically the
/// solve of M_X q = e0; inverse_solve() keeps that reference route available
/// and the test suites check the two against each other.
Number inverse(const Number& x);

/// Reference route for the inverse: Gaussian elimination with partial
/// pivoting on M_X q = e0.
Number inverse_solve(const Number& x);

/// q with x * q = rhs (left division x \ rhs), via a pivoted solve
/// against M_X.
Number solve_right(const Number& x, const Number& rhs);

/// The four distinct eigenvalues of M_X (each has multiplicity two):
///   (x0 + x7) +- i sqrt((x1-x6)^2 + (x2-x5)^2 + (x3-x4)^2)
///   (x0 - x7) +- i sqrt((x1+x6)^2 + (x2+x5)^2 + (x3+x4)^2)
/// Magnitudes are exactly the two seminorms.
struct EigenValues {
  // order: plus-family value, its conjugate, minus-family value, its conjugate
  std::array<std::complex<double>, 4> values;
};

EigenValues eigen_values(const Number& x);

/// |eigenvalue| per family; identical to seminorm_pair(x) (same arithmetic).
struct EigenMagnitudes {
  double mag_plus;
  double mag_minus;
};

EigenMagnitudes eigen_magnitudes(const Number& x);

/// Integer power by repeated squaring; x^0 = 1 for every x, negative
/// exponents invert first (throws SingularError when x is singular).
Number power(const Number& x, long long n);

/// True iff inverse(x*y) == inverse(y)*inverse(x) within tolerance.
/// Throws SingularError when either input is singular.
bool inverse_antihom_check(const Number& x, const Number& y,
                           double rel_tol = chained_rel_tol);

}  // namespace sbq
