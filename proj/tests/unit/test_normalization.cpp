#include <doctest.h>

#include <cmath>

#include "sbq/normalization.hpp"
#include "support/test_rng.hpp"

using sbq::CentralFactor;
using sbq::NormalizationError;
using sbq::Number;
using sbq::SingularError;

namespace {
Number e(std::size_t i) { return Number::unit(i); }
}  // namespace

TEST_CASE("central factor: fixed examples") {
  const CentralFactor d1 = sbq::central_factor(2.0 * Number::one());
  CHECK(d1.c0 == doctest::Approx(0.0));
  CHECK(d1.c7 == doctest::Approx(2.0));

  const CentralFactor d2 = sbq::central_factor(e(1));
  CHECK(d2.c0 == doctest::Approx(0.0));
  CHECK(d2.c7 == doctest::Approx(1.0));

  CHECK_THROWS_AS(sbq::central_factor(Number::one() - e(7)),
                  NormalizationError);
  CHECK_THROWS_AS(sbq::central_factor(Number::zero()), NormalizationError);
  try {
    sbq::central_factor(Number::zero());
    FAIL("expected NormalizationError");
  } catch (const NormalizationError& err) {
    CHECK(err.reason() == NormalizationError::Reason::zero_input);
  }
  try {
    sbq::central_factor(Number::one() + e(7));
    FAIL("expected NormalizationError");
  } catch (const NormalizationError& err) {
    CHECK(err.reason() == NormalizationError::Reason::singular_factor);
  }
}

TEST_CASE("central factor: defining equations and squared identity") {
  sbq::testing::Rng rng(60);
  for (int t = 0; t < 2000; ++t) {
    const Number x = rng.invertible();
    const auto [a, b] = sbq::gram_scalars(x);
    const CentralFactor d = sbq::central_factor(x);
    CHECK(d.c0 * d.c0 + d.c7 * d.c7 == doctest::Approx(a).epsilon(1e-9));
    CHECK(2.0 * d.c0 * d.c7 == doctest::Approx(b).epsilon(1e-9));
    const Number xd = d.as_number();
    CHECK(sbq::is_central(xd));
    CHECK(sbq::almost_equal(xd * xd, x * conj(x), 1e-9));
  }
}

TEST_CASE("normalize: fixed examples") {
  CHECK(sbq::almost_equal(sbq::normalize(2.0 * Number::one()), e(7)));
  CHECK(sbq::almost_equal(sbq::normalize(e(1)), -e(6)));
  CHECK_THROWS_AS(sbq::normalize(Number::one() + e(7)), NormalizationError);
}

TEST_CASE("normalize: postconditions on random input") {
  sbq::testing::Rng rng(61);
  for (int t = 0; t < 1000; ++t) {
    const Number x = rng.invertible();
    const Number xn = sbq::normalize(x);
    CHECK(sbq::max_abs_diff(xn * conj(xn), Number::one()) < 1e-9);
    CHECK(sbq::almost_equal(sbq::inverse(xn), conj(xn), 1e-9));
    const auto p = sbq::seminorm_pair(xn);
    CHECK(p.plus == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(p.minus == doctest::Approx(1.0).epsilon(1e-9));
    // the central factor commutes, so left and right normalization agree
    const Number di = sbq::inverse(sbq::central_factor(x).as_number());
    CHECK(sbq::almost_equal(x * di, di * x, 1e-9));
  }
}

TEST_CASE("normalize_pure: fixed examples") {
  const Number n1 = sbq::normalize_pure(3.0 * e(2));
  CHECK(sbq::almost_equal(n1, -e(5)));
  CHECK(sbq::almost_equal(n1 * n1, -Number::one()));

  const Number n2 = sbq::normalize_pure(e(1) + e(2));
  CHECK(sbq::is_pure(n2));
  CHECK(sbq::max_abs_diff(n2 * n2, -Number::one()) < 1e-10);

  CHECK_THROWS_AS(sbq::normalize_pure(e(1) + e(6)), NormalizationError);
  CHECK_THROWS_AS(sbq::normalize_pure(Number::one() + e(1)),
                  std::invalid_argument);
}

TEST_CASE("normalize_pure: random pure inputs stay pure and square to -1") {
  sbq::testing::Rng rng(62);
  int done = 0;
  while (done < 1000) {
    const Number raw = rng.pure();
    const auto p = sbq::seminorm_pair(raw);
    if (p.min_value() < 0.1 * p.max_value()) continue;
    const Number n = sbq::normalize_pure(raw);
    CHECK(sbq::is_pure(n, 1e-10));
    CHECK(sbq::max_abs_diff(n * n, -Number::one()) < 1e-9);
    ++done;
  }
}

TEST_CASE("involute: fixed examples") {
  sbq::testing::Rng rng(63);
  const Number x = rng.number();
  CHECK(sbq::involute(x, Number::one()) == x);
  CHECK(sbq::almost_equal(sbq::involute(e(1), e(2)), -e(1)));
  CHECK_THROWS_AS(sbq::involute(x, Number::one() - e(7)), SingularError);
}

TEST_CASE("involute: unit pure round-trip") {
  sbq::testing::Rng rng(64);
  for (int t = 0; t < 500; ++t) {
    const Number x = rng.number();
    Number raw = rng.pure();
    while (sbq::is_singular(raw)) raw = rng.pure();
    const Number u = sbq::normalize_pure(raw);
    CHECK(sbq::almost_equal(sbq::involute(sbq::involute(x, u), u), x, 1e-9));
  }
}

TEST_CASE("basis-conjugate sum of a pure element vanishes") {
  // the sum projects onto 8*x0 + 8*x7*e7, which is zero for pure input
  Number sum = Number::zero();
  for (std::size_t i = 0; i < 8; ++i) sum += sbq::involute(e(1), e(i));
  CHECK(sbq::max_abs_diff(sum, Number::zero()) < 1e-12);
}

TEST_CASE("conjugate_basis(1) is the standard basis") {
  const auto basis = sbq::conjugate_basis(Number::one());
  for (std::size_t i = 0; i < 8; ++i) CHECK(basis[i] == e(i));
}

TEST_CASE("conjugate_basis: algebraic rules of the image") {
  sbq::testing::Rng rng(65);
  for (int t = 0; t < 100; ++t) {
    const Number u = rng.invertible();
    const auto basis = sbq::conjugate_basis(u);
    CHECK(sbq::almost_equal(basis[0], Number::one(), 1e-9));
    CHECK(sbq::almost_equal(basis[7], e(7), 1e-9));
    for (std::size_t i = 1; i <= 6; ++i) {
      CHECK(sbq::max_abs_diff(basis[i] * basis[i], -Number::one()) < 1e-8);
      const auto p = sbq::seminorm_pair(basis[i]);
      CHECK(p.plus == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(p.minus == doctest::Approx(1.0).epsilon(1e-8));
    }
    // conjugation is an automorphism fixing the center, so the ordered
    // product of the six imaginary images is e7 (e1e2e3e4e5e6 = e7), and
    // including the e7 image closes to 1
    Number prod = basis[1];
    for (std::size_t i = 2; i <= 6; ++i) prod = prod * basis[i];
    CHECK(sbq::max_abs_diff(prod, e(7)) < 1e-8);
    CHECK(sbq::max_abs_diff(prod * basis[7], Number::one()) < 1e-8);
  }
}

TEST_CASE("conjugate_basis reconstructs the conjugated element") {
  sbq::testing::Rng rng(66);
  for (int t = 0; t < 200; ++t) {
    const Number x = rng.number();
    const Number u = rng.invertible();
    const auto basis = sbq::conjugate_basis(u);
    Number rebuilt = Number::zero();
    for (std::size_t i = 0; i < 8; ++i) rebuilt += x[i] * basis[i];
    CHECK(sbq::almost_equal(rebuilt, sbq::involute(x, u), 1e-8));
  }
}
