#include "sbq/inversion.hpp"

#include <cmath>
#include <cstdio>

#include "sbq/matrix.hpp"

namespace sbq {

namespace {

std::string describe(SingularError::Kind kind, const SeminormPair& s) {
  const char* which = kind == SingularError::Kind::plus    ? "lambda=+1"
                      : kind == SingularError::Kind::minus ? "lambda=-1"
                                                           : "both";
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "singular input: the %s seminorm is zero "
                "(seminorms: +1 -> %.6g, -1 -> %.6g)",
                which, s.plus, s.minus);
  return buf;
}

// Scale-normalized gram scalars plus singularity classification.
struct InverseContext {
  double scale;     // max |coefficient|
  GramScalars g;    // of x / scale
  bool singular;
  SingularError::Kind kind;
};

InverseContext classify(const Number& x) {
  InverseContext ctx{};
  ctx.scale = max_abs(x);
  if (ctx.scale == 0.0) {
    ctx.singular = true;
    ctx.kind = SingularError::Kind::both;
    return ctx;
  }
  ctx.g = gram_scalars(x / ctx.scale);
  const double sp = ctx.g.a + ctx.g.b;
  const double sm = ctx.g.a - ctx.g.b;
  ctx.singular = sp * sm <= singular_epsilon * ctx.g.a * ctx.g.a;
  ctx.kind = sp <= sm ? SingularError::Kind::plus : SingularError::Kind::minus;
  return ctx;
}

[[noreturn]] void throw_singular(const Number& x, SingularError::Kind kind) {
  throw SingularError(kind, seminorm_pair(x));
}

Number flipped(const Number& x) {
  return Number(x[7], x[6], x[5], x[4], x[3], x[2], x[1], x[0]);
}

}  // namespace

SingularError::SingularError(Kind kind, SeminormPair seminorms)
    : std::domain_error(describe(kind, seminorms)),
      kind_(kind),
      seminorms_(seminorms) {}

bool is_singular(const Number& x) { return classify(x).singular; }

Number naive_conjugate_quotient(const Number& x, SeminormSign sign) {
  const double scale = max_abs(x);
  if (scale == 0.0) throw_singular(x, SingularError::Kind::both);
  const Number y = x / scale;
  const auto [a, b] = gram_scalars(y);
  const double denom = a + lambda_of(sign) * b;
  if (denom <= singular_epsilon * a) {
    throw_singular(x, sign == SeminormSign::plus ? SingularError::Kind::plus
                                                 : SingularError::Kind::minus);
  }
  return (conj(y) / denom) / scale;
}

Number inverse(const Number& x) {
  const InverseContext ctx = classify(x);
  if (ctx.singular) throw_singular(x, ctx.kind);
  const Number y = x / ctx.scale;
  const auto [a, b] = ctx.g;
  // (a I - b J) conj(y) / (a^2 - b^2); J applied to conj(y) is the plain
  // coefficient flip of y. Dividing by the scale separately keeps extreme
  // magnitudes from overflowing the combined denominator.
  const Number num = a * conj(y) - b * flipped(y);
  return (num / (a * a - b * b)) / ctx.scale;
}

Number inverse_solve(const Number& x) {
  const InverseContext ctx = classify(x);
  if (ctx.singular) throw_singular(x, ctx.kind);
  auto q = solve(left_matrix(x), Number::one());
  if (!q) throw_singular(x, ctx.kind);  // unreachable for non-singular input
  return *q;
}

Number solve_right(const Number& x, const Number& rhs) {
  const InverseContext ctx = classify(x);
  if (ctx.singular) throw_singular(x, ctx.kind);
  auto q = solve(left_matrix(x), rhs);
  if (!q) throw_singular(x, ctx.kind);
  return *q;
}

EigenValues eigen_values(const Number& x) {
  const auto& c = x.coeffs();
  const double sp = (c[1] - c[6]) * (c[1] - c[6]) +
                    (c[2] - c[5]) * (c[2] - c[5]) +
                    (c[3] - c[4]) * (c[3] - c[4]);
  const double sm = (c[1] + c[6]) * (c[1] + c[6]) +
                    (c[2] + c[5]) * (c[2] + c[5]) +
                    (c[3] + c[4]) * (c[3] + c[4]);
  const std::complex<double> lp(c[0] + c[7], std::sqrt(sp));
  const std::complex<double> lm(c[0] - c[7], std::sqrt(sm));
  return {{lp, std::conj(lp), lm, std::conj(lm)}};
}

EigenMagnitudes eigen_magnitudes(const Number& x) {
  const SeminormPair p = seminorm_pair(x);
  return {p.plus, p.minus};
}

namespace {

Number pow_by_squaring(Number base, unsigned long long k) {
  Number acc = Number::one();
  while (k != 0) {
    if (k & 1ULL) acc = acc * base;
    k >>= 1;
    if (k != 0) base = base * base;
  }
  return acc;
}

}  // namespace

Number power(const Number& x, long long n) {
  if (n < 0)
    return pow_by_squaring(inverse(x),
                           0ULL - static_cast<unsigned long long>(n));
  return pow_by_squaring(x, static_cast<unsigned long long>(n));
}

bool inverse_antihom_check(const Number& x, const Number& y, double rel_tol) {
  const Number lhs = inverse(x * y);
  const Number rhs = inverse(y) * inverse(x);
  return almost_equal(lhs, rhs, rel_tol);
}

}  // namespace sbq
