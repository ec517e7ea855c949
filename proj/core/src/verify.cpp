#include "sbq/verify.hpp"

#include <cmath>
#include <cstdio>
#include <future>

#include "rng.hpp"
#include "sbq/inversion.hpp"
#include "sbq/matrix.hpp"
#include "sbq/normalization.hpp"
#include "sbq/seminorm.hpp"

namespace sbq::verify {

namespace {

using verify_detail::TrialRng;

// relative residual with the configured absolute floor: diff / max(scale,
// floor), so near-zero scales degrade to an absolute comparison
double rel_residual(const Number& got, const Number& want, double scale,
                    double floor) {
  return max_abs_diff(got, want) / std::max(scale, floor);
}

struct Recorder {
  explicit Recorder(const TrialConfig& c, const char* name) : cfg(c) {
    rep.check = name;
  }

  void residual(double r, const char* what,
                std::initializer_list<Number> inputs) {
    if (std::isnan(r)) r = INFINITY;
    if (r > rep.worst_residual) rep.worst_residual = r;
    if (!(r <= cfg.rel_tol)) {
      ++rep.failures;
      char buf[64];
      std::snprintf(buf, sizeof buf, "residual %.3e", r);
      capture(what, buf, inputs);
    }
  }

  void require(bool ok, const char* what, const std::string& got,
               std::initializer_list<Number> inputs) {
    if (!ok) {
      ++rep.failures;
      capture(what, got, inputs);
    }
  }

  void capture(const char* what, const std::string& got,
               std::initializer_list<Number> inputs) {
    if (rep.example) return;
    FailureExample ex;
    ex.inputs.assign(inputs.begin(), inputs.end());
    ex.expected = what;
    ex.got = got;
    rep.example = std::move(ex);
  }

  const TrialConfig& cfg;
  CheckReport rep;
};

template <typename Body>
CheckReport run_check(const TrialConfig& cfg, const char* name,
                      std::uint64_t seed, Body&& body) {
  Recorder rec(cfg, name);
  TrialRng rng(seed);
  for (long t = 0; t < cfg.trials; ++t) {
    try {
      body(rec, rng, t);
    } catch (const std::exception& e) {
      rec.require(false, "trial completes without raising", e.what(), {});
    }
    ++rec.rep.trials_run;
  }
  return rec.rep;
}

// Everything that multiplies goes through the injected table so that
// mutation testing can corrupt it; matrix/gram code stays canonical by
// construction (it is the independent transcription the products are
// checked against).
struct Ctx {
  const TrialConfig& cfg;
  const CayleyTable& table;
};

Number tmul(const Ctx& c, const Number& a, const Number& b) {
  return mul(a, b, c.table);
}

Number tinvolute(const Ctx& c, const Number& x, const Number& u) {
  return tmul(c, tmul(c, u, x), inverse(u));
}

Number tnormalize(const Ctx& c, const Number& x) {
  return tmul(c, x, inverse(central_factor(x).as_number()));
}

Number random_invertible(TrialRng& rng, double min_ratio = 0.1) {
  for (;;) {
    const Number x = rng.normal_number();
    const SeminormPair p = seminorm_pair(x);
    if (p.min_value() >= min_ratio * p.max_value()) return x;
  }
}

Number random_unit_pure(TrialRng& rng) {
  for (;;) {
    auto c = rng.normal_number().coeffs();
    c[0] = c[7] = 0.0;
    const Number x{c};
    const SeminormPair p = seminorm_pair(x);
    if (p.min_value() >= 0.1 * p.max_value()) return normalize(x);
  }
}

Number random_central_invertible(TrialRng& rng) {
  for (;;) {
    const Number x(rng.normal(), 0, 0, 0, 0, 0, 0, rng.normal());
    const SeminormPair p = seminorm_pair(x);
    if (p.min_value() >= 0.1 * p.max_value()) return x;
  }
}

struct ZeroDivisor {
  Number value;
  SingularError::Kind kind;
};

// Random singular elements per the zero-seminorm conditions: central seeds
// s(1 -+ e7) and pure seeds s(e_i +- e_{7-i}), optionally conjugated by a
// random well-conditioned invertible element (conjugation preserves both
// seminorms, so the classification survives).
ZeroDivisor random_zero_divisor(const Ctx& ctx, TrialRng& rng) {
  const double s = rng.uniform(0.5, 2.0) * (rng.below(2) ? 1.0 : -1.0);
  Number seed;
  SingularError::Kind kind;
  switch (rng.below(4)) {
    case 0:
      seed = s * (Number::one() - Number::unit(7));
      kind = SingularError::Kind::plus;
      break;
    case 1:
      seed = s * (Number::one() + Number::unit(7));
      kind = SingularError::Kind::minus;
      break;
    case 2: {
      const std::size_t i = 1 + rng.below(3);
      seed = s * (Number::unit(i) + Number::unit(7 - i));
      kind = SingularError::Kind::plus;
      break;
    }
    default: {
      const std::size_t i = 1 + rng.below(3);
      seed = s * (Number::unit(i) - Number::unit(7 - i));
      kind = SingularError::Kind::minus;
      break;
    }
  }
  if (rng.below(2)) seed = tinvolute(ctx, seed, random_invertible(rng));
  return {seed, kind};
}

const char* kind_name(SingularError::Kind k) {
  switch (k) {
    case SingularError::Kind::plus:
      return "plus";
    case SingularError::Kind::minus:
      return "minus";
    default:
      return "both";
  }
}

// ---------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------

CheckReport gram_structure_impl(const TrialConfig& cfg, std::uint64_t seed) {
  return run_check(cfg, "gram_structure", seed,
                   [](Recorder& rec, TrialRng& rng, long t) {
    auto gram_residual = [](const Number& x) {
      const auto [a, b] = gram_scalars(x);
      const Mat8 want = a * Mat8::identity() + b * exchange_matrix();
      const Mat8 m = left_matrix(x);
      const Mat8 p = right_matrix(x);
      const double r1 = max_abs_diff(m.transposed() * m, want);
      const double r2 = max_abs_diff(p.transposed() * p, want);
      return std::max(r1, r2) / a;
    };
    if (t == 0) {
      rec.residual(gram_residual(Number::one()),
                   "Gram of e0 is the identity", {Number::one()});
      const Number w = Number::one() + Number::unit(7);
      rec.residual(gram_residual(w), "Gram of 1+e7 is 2I + 2J", {w});
    }
    const Number x = rng.normal_number();
    rec.residual(gram_residual(x), "M^T M = P^T P = a I + b J", {x});
  });
}

CheckReport j_commutation_impl(const TrialConfig& cfg, std::uint64_t seed) {
  return run_check(cfg, "j_commutation", seed,
                   [](Recorder& rec, TrialRng& rng, long t) {
    const Mat8& j = exchange_matrix();
    if (t == 0) {
      rec.require(j * j == Mat8::identity(), "J J = I exactly",
                  "J*J differs from the identity", {});
    }
    const Number x = rng.normal_number();
    const Mat8 m = left_matrix(x);
    const double a = gram_scalars(x).a;
    const double r =
        max_abs_diff(m.transposed() * j * m, j * (m.transposed() * m)) / a;
    rec.residual(r, "M^T J M = J M^T M", {x});
  });
}

CheckReport composition_impl(const Ctx& ctx, std::uint64_t seed) {
  return run_check(ctx.cfg, "composition", seed,
                   [&ctx](Recorder& rec, TrialRng& rng, long t) {
    if (t == 0) {
      const Number zd = Number::one() - Number::unit(7);
      rec.residual(seminorm_sq(tmul(ctx, zd, rng.normal_number()),
                               SeminormSign::plus) /
                       4.0,
                   "zero divisor kills the plus seminorm of any product",
                   {zd});
      const Number e1 = Number::unit(1);
      rec.residual(std::abs(seminorm_sq(tmul(ctx, e1, e1),
                                        SeminormSign::plus) - 1.0),
                   "||e1*e1||^2 = 1", {e1});
    }
    const Number x = rng.normal_number();
    const Number y = rng.normal_number();
    const Number z = tmul(ctx, x, y);
    const auto gx = gram_scalars(x);
    const auto gy = gram_scalars(y);
    const double scale = gx.a * gy.a;
    for (SeminormSign sign : {SeminormSign::plus, SeminormSign::minus}) {
      const double lhs = seminorm_sq(z, sign);
      const double rhs = seminorm_sq(x, sign) * seminorm_sq(y, sign);
      rec.residual(std::abs(lhs - rhs) / scale,
                   "||x y||^2 = ||x||^2 ||y||^2", {x, y});
    }
    // the two vector identities the composition proof reduces to
    const Mat8 m = left_matrix(x);
    const Mat8& j = exchange_matrix();
    const Number jy = j.apply(y);
    const double yscale = gx.a * std::max(max_abs(y), ctx.cfg.abs_tol);
    const Number lhs1 = (m.transposed() * m).apply(y);
    const Number rhs1 = y * gx.a + jy * gx.b;
    rec.residual(max_abs_diff(lhs1, rhs1) / yscale,
                 "M^T M y = y a + (J y) b", {x, y});
    const Number lhs2 = (m.transposed() * j * m).apply(y);
    const Number rhs2 = y * gx.b + jy * gx.a;
    rec.residual(max_abs_diff(lhs2, rhs2) / yscale,
                 "M^T J M y = y b + (J y) a", {x, y});
  });
}

CheckReport conjugate_rules_impl(const Ctx& ctx, std::uint64_t seed) {
  return run_check(ctx.cfg, "conjugate_rules", seed,
                   [&ctx](Recorder& rec, TrialRng& rng, long t) {
    if (t == 0) {
      rec.require(conj(Number::unit(1)) == -Number::unit(1),
                  "conj(e1) = -e1", "differs", {});
      rec.require(conj(Number::one()) == Number::one(), "conj(1) = 1",
                  "differs", {});
      rec.require(conj(Number::unit(7)) == Number::unit(7), "conj(e7) = e7",
                  "differs", {});
    }
    const Number x = rng.normal_number();
    const Number y = rng.normal_number();
    const double scale = std::sqrt(abs2(x) * abs2(y));
    rec.residual(
        rel_residual(conj(tmul(ctx, x, y)), tmul(ctx, conj(y), conj(x)),
                     scale, ctx.cfg.abs_tol),
        "conj(x y) = conj(y) conj(x)", {x, y});

    const Number p = tmul(ctx, x, conj(x));
    const auto [a, b] = gram_scalars(x);
    double imag = 0.0;
    for (std::size_t i = 1; i < 7; ++i) imag = std::max(imag, std::abs(p[i]));
    rec.residual(imag / a, "x conj(x) has zero imaginary parts", {x});
    rec.residual(std::abs(p[0] - a) / a, "e0 part of x conj(x) is a", {x});
    rec.residual(std::abs(p[7] - b) / a, "e7 part of x conj(x) is b", {x});
    rec.residual(rel_residual(p, tmul(ctx, conj(x), x), a, ctx.cfg.abs_tol),
                 "x conj(x) = conj(x) x", {x});
  });
}

CheckReport inverse_suite_impl(const Ctx& ctx, std::uint64_t seed) {
  return run_check(ctx.cfg, "inverse_suite", seed,
                   [&ctx](Recorder& rec, TrialRng& rng, long t) {
    const Number one = Number::one();
    if (t == 0) {
      const Number zd = one - Number::unit(7);
      try {
        inverse(zd);
        rec.require(false, "inverse(1-e7) raises SingularError", "no error",
                    {zd});
      } catch (const SingularError& e) {
        rec.require(e.kind() == SingularError::Kind::plus,
                    "inverse(1-e7) classified as plus-singular",
                    kind_name(e.kind()), {zd});
      }
      try {
        solve_right(one + Number::unit(7), rng.normal_number());
        rec.require(false, "solve_right(1+e7, .) raises SingularError",
                    "no error", {});
      } catch (const SingularError& e) {
        rec.require(e.kind() == SingularError::Kind::minus,
                    "solve_right(1+e7, .) classified as minus-singular",
                    kind_name(e.kind()), {});
      }
      rec.residual(max_abs_diff(inverse(one), one), "inverse(1) = 1", {one});
      rec.residual(max_abs_diff(inverse(Number::unit(7)), Number::unit(7)),
                   "inverse(e7) = e7", {});
    }

    const Number x = random_invertible(rng);
    const Number xi = inverse(x);
    rec.residual(max_abs_diff(tmul(ctx, x, xi), one),
                 "x * inverse(x) = 1", {x});
    rec.residual(max_abs_diff(tmul(ctx, xi, x), one),
                 "inverse(x) * x = 1", {x});
    rec.residual(rel_residual(xi, inverse_solve(x), max_abs(xi),
                              ctx.cfg.abs_tol),
                 "closed-form inverse matches the pivoted solve", {x});

    const Number y = random_invertible(rng);
    const Number lhs = inverse(tmul(ctx, x, y));
    rec.residual(
        rel_residual(lhs, tmul(ctx, inverse(y), inverse(x)), max_abs(lhs),
                     ctx.cfg.abs_tol),
        "inverse(x y) = inverse(y) inverse(x)", {x, y});
    rec.residual(
        rel_residual(solve_right(x, tmul(ctx, x, y)), y, max_abs(y),
                     ctx.cfg.abs_tol),
        "solve_right(x, x*y) = y", {x, y});

    // the conjugate quotient: not an inverse (x * q = (a + b e7)/(a + l b)),
    // but seminorm-correct (||x|| * ||q|| = 1 for the chosen seminorm)
    const auto [a, b] = gram_scalars(x);
    for (SeminormSign sign : {SeminormSign::plus, SeminormSign::minus}) {
      const Number q = naive_conjugate_quotient(x, sign);
      const double denom = a + lambda_of(sign) * b;
      const Number want = Number(a, 0, 0, 0, 0, 0, 0, b) / denom;
      rec.residual(rel_residual(tmul(ctx, x, q), want, 1.0, ctx.cfg.abs_tol),
                   "x * conjugate_quotient(x) = (a + b e7)/(a + l b)", {x});
      const double sn = std::sqrt(seminorm_sq(x, sign)) *
                        std::sqrt(seminorm_sq(q, sign));
      rec.residual(std::abs(sn - 1.0),
                   "||x|| ||conjugate_quotient(x)|| = 1", {x});
    }

    const ZeroDivisor zd = random_zero_divisor(ctx, rng);
    try {
      inverse(zd.value);
      rec.require(false, "zero divisor raises SingularError", "no error",
                  {zd.value});
    } catch (const SingularError& e) {
      rec.require(e.kind() == zd.kind,
                  "zero divisor classified by its vanished seminorm",
                  kind_name(e.kind()), {zd.value});
    }
  });
}

CheckReport involution_suite_impl(const Ctx& ctx, std::uint64_t seed) {
  return run_check(ctx.cfg, "involution_suite", seed,
                   [&ctx](Recorder& rec, TrialRng& rng, long) {
    const Number x = rng.normal_number();
    const Number u = random_invertible(rng);
    const Number v = random_invertible(rng);
    const Number up = random_unit_pure(rng);
    const double xs = std::max(max_abs(x), ctx.cfg.abs_tol);

    auto inv_res = [&](const Number& got, const Number& want,
                       const char* what, std::initializer_list<Number> in) {
      const double scale =
          std::max({max_abs(got), max_abs(want), ctx.cfg.abs_tol});
      rec.residual(max_abs_diff(got, want) / scale, what, in);
    };

    // unit pure conjugation and its involution property
    inv_res(tinvolute(ctx, x, up), -tmul(ctx, tmul(ctx, up, x), up),
            "u x u^-1 = -u x u for unit pure u", {x, up});
    rec.residual(
        max_abs_diff(tinvolute(ctx, tinvolute(ctx, x, up), up), x) / xs,
        "conjugation by unit pure u is an involution", {x, up});

    // scaling and central-factor invariance of the conjugator
    const double s = rng.uniform(0.5, 2.0) * (rng.below(2) ? 1.0 : -1.0);
    const Number base = tinvolute(ctx, x, u);
    inv_res(tinvolute(ctx, x, s * u), base,
            "conjugation is scale-invariant in u", {x, u});
    const Number c = random_central_invertible(rng);
    inv_res(tinvolute(ctx, x, tmul(ctx, c, u)), base,
            "central left factor of u drops out", {x, u, c});
    inv_res(tinvolute(ctx, x, tmul(ctx, u, c)), base,
            "central right factor of u drops out", {x, u, c});
    inv_res(tinvolute(ctx, x, tnormalize(ctx, u)), base,
            "conjugating by u and by normalize(u) agree", {x, u});

    // multiplicativity and the quotient-free product forms
    inv_res(tinvolute(ctx, tmul(ctx, x, v), u),
            tmul(ctx, tinvolute(ctx, x, u), tinvolute(ctx, v, u)),
            "(x y)^u = x^u y^u", {x, v, u});
    inv_res(tmul(ctx, u, v), tmul(ctx, tinvolute(ctx, v, u), u),
            "x y = y^x x", {u, v});
    inv_res(tmul(ctx, u, v), tmul(ctx, v, tinvolute(ctx, u, conj(v))),
            "x y = y x^(conj y)", {u, v});
    inv_res(tinvolute(ctx, x, tmul(ctx, u, v)),
            tinvolute(ctx, tinvolute(ctx, x, v), u),
            "x^(y z) = (x^z)^y", {x, u, v});

    // conjugate compatibility: the two provable identities
    inv_res(tinvolute(ctx, conj(x), u), conj(tinvolute(ctx, x, u)),
            "conj(x)^u = conj(x^u)", {x, u});
    inv_res(tinvolute(ctx, x, conj(u)), tinvolute(ctx, x, inverse(u)),
            "x^(conj u) = x^(u^-1)", {x, u});

    // basis-unit conjugations
    for (std::size_t i = 0; i < 4; ++i) {
      inv_res(tinvolute(ctx, x, Number::unit(i)),
              tinvolute(ctx, x, Number::unit(7 - i)),
              "x^(e_i) = x^(e_{7-i})", {x});
    }
    Number sum = Number::zero();
    for (std::size_t i = 0; i < 8; ++i)
      sum += tinvolute(ctx, x, Number::unit(i));
    rec.residual(
        max_abs_diff(sum, Number(8 * x[0], 0, 0, 0, 0, 0, 0, 8 * x[7])) / xs,
        "sum of the eight basis conjugates is 8 x0 + 8 x7 e7", {x});
    Number alt = -tinvolute(ctx, x, Number::unit(0));
    for (std::size_t i = 1; i < 7; ++i)
      alt += tinvolute(ctx, x, Number::unit(i));
    alt -= tinvolute(ctx, x, Number::unit(7));
    rec.residual(max_abs_diff(conj(alt), 4.0 * x) / xs,
                 "conj of the alternating basis-conjugate sum is 4 x", {x});

    // e0/e7 conjugate-map forms are involutions
    const Number e7 = Number::unit(7);
    rec.residual(
        max_abs_diff(tmul(ctx, tmul(ctx, e7, x), conj(e7)), x) / xs,
        "e7 x conj(e7) = x", {x});
    const Number sx = -tmul(ctx, tmul(ctx, e7, x), e7);
    rec.residual(max_abs_diff(-tmul(ctx, tmul(ctx, e7, sx), e7), x) / xs,
                 "x -> -e7 x e7 applied twice is the identity", {x});

    // a generic Euclidean-unit central element is NOT an involution under
    // w x conj(w): the round trip must miss by a wide margin
    const Number w = (3.0 * Number::one() + 4.0 * e7) / 5.0;
    const Number wx = tmul(ctx, tmul(ctx, w, x), conj(w));
    const Number wwx = tmul(ctx, tmul(ctx, w, wx), conj(w));
    rec.require(max_abs_diff(wwx, x) / xs > 0.1,
                "central unit (3+4e7)/5 fails the involution round-trip",
                "round-trip residual <= 0.1", {x});
  });
}

CheckReport b_expression_impl(const TrialConfig& cfg, std::uint64_t seed) {
  return run_check(cfg, "b_expression_agreement", seed,
                   [](Recorder& rec, TrialRng& rng, long t) {
    auto agree = [&rec](const Number& x, const char* what) {
      const auto [a, b] = gram_scalars(x);
      rec.residual(std::abs(b - gram_b_six_term(x)) / std::max(a, rec.cfg.abs_tol),
                   what, {x});
    };
    if (t == 0) {
      const Number w = Number::unit(1) + Number::unit(6);
      agree(w, "both forms give b = -2 for e1+e6");
      rec.require(gram_scalars(w).b == -2.0, "b(e1+e6) = -2 exactly",
                  "differs", {w});
      agree(Number::one(), "both forms give b = 0 for e0");
    }
    agree(rng.normal_number(), "folded and six-term forms of b agree");
  });
}

std::uint64_t check_seed(const TrialConfig& cfg, std::size_t index) {
  return verify_detail::subseed(cfg.seed, index);
}

Ctx make_ctx(const TrialConfig& cfg, const CayleyTable& table) {
  return Ctx{cfg, table};
}

}  // namespace

CheckReport check_gram_structure(const TrialConfig& cfg) {
  return gram_structure_impl(cfg, check_seed(cfg, 0));
}
CheckReport check_j_commutation(const TrialConfig& cfg) {
  return j_commutation_impl(cfg, check_seed(cfg, 1));
}
CheckReport check_composition(const TrialConfig& cfg) {
  return composition_impl(make_ctx(cfg, cayley_table()), check_seed(cfg, 2));
}
CheckReport check_conjugate_rules(const TrialConfig& cfg) {
  return conjugate_rules_impl(make_ctx(cfg, cayley_table()),
                              check_seed(cfg, 3));
}
CheckReport check_inverse_suite(const TrialConfig& cfg) {
  return inverse_suite_impl(make_ctx(cfg, cayley_table()), check_seed(cfg, 4));
}
CheckReport check_involution_suite(const TrialConfig& cfg) {
  return involution_suite_impl(make_ctx(cfg, cayley_table()),
                               check_seed(cfg, 5));
}
CheckReport check_b_expression_agreement(const TrialConfig& cfg) {
  return b_expression_impl(cfg, check_seed(cfg, 6));
}

std::vector<CheckReport> run_suite(const TrialConfig& cfg,
                                   const CayleyTable& table) {
  const Ctx ctx = make_ctx(cfg, table);
  std::array<std::future<CheckReport>, 7> futures = {
      std::async(std::launch::async,
                 [&] { return gram_structure_impl(cfg, check_seed(cfg, 0)); }),
      std::async(std::launch::async,
                 [&] { return j_commutation_impl(cfg, check_seed(cfg, 1)); }),
      std::async(std::launch::async,
                 [&] { return composition_impl(ctx, check_seed(cfg, 2)); }),
      std::async(std::launch::async,
                 [&] { return conjugate_rules_impl(ctx, check_seed(cfg, 3)); }),
      std::async(std::launch::async,
                 [&] { return inverse_suite_impl(ctx, check_seed(cfg, 4)); }),
      std::async(
          std::launch::async,
          [&] { return involution_suite_impl(ctx, check_seed(cfg, 5)); }),
      std::async(std::launch::async,
                 [&] { return b_expression_impl(cfg, check_seed(cfg, 6)); }),
  };
  std::vector<CheckReport> reports;
  reports.reserve(futures.size());
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

std::vector<CheckReport> run_suite(const TrialConfig& cfg) {
  return run_suite(cfg, cayley_table());
}

bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

}  // namespace sbq::verify
