#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sbq/cayley.hpp"
#include "sbq/number.hpp"

namespace sbq::verify {

/// Configuration for one randomized verification run. The same config
/// always produces the same reports, bit for bit.
struct TrialConfig {
  std::uint64_t seed = 42;
  long trials = 10000;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
};

/// First failing trial of a check, kept for diagnostics.
struct FailureExample {
  std::vector<Number> inputs;
  std::string expected;
  std::string got;
};

struct CheckReport {
  std::string check;
  long trials_run = 0;
  long failures = 0;
  double worst_residual = 0.0;
  std::optional<FailureExample> example;

  bool passed() const noexcept { return failures == 0; }
};

/// M_X^T M_X = P_X^T P_X = a I + b J, entrywise.
CheckReport check_gram_structure(const TrialConfig& cfg);
/// M_X^T J M_X = J M_X^T M_X, and J J = I.
CheckReport check_j_commutation(const TrialConfig& cfg);
/// ||x*y||^2 = ||x||^2 ||y||^2 for both seminorms, plus the two vector
/// identities the proof decomposes into.
CheckReport check_composition(const TrialConfig& cfg);
/// conj(x*y) = conj(y)*conj(x); x*conj(x) is central with e0 part a and
/// e7 part b, and commutes with conj(x)*x.
CheckReport check_conjugate_rules(const TrialConfig& cfg);
/// Two-sided inverse round-trips, closed form vs. pivoted solve, the
/// inverse anti-homomorphism, the naive conjugate quotient facts, and
/// zero-divisor rejection with seminorm classification.
CheckReport check_inverse_suite(const TrialConfig& cfg);
/// The conjugation-involution identity family, including the exact
/// basis-sum constants and the central-unit non-involution witness.
CheckReport check_involution_suite(const TrialConfig& cfg);
/// The folded and unfolded expressions for b agree.
CheckReport check_b_expression_agreement(const TrialConfig& cfg);

/// All checks, each on its own sub-seed derived from cfg.seed; checks run
/// concurrently and reports come back in a fixed order.
std::vector<CheckReport> run_suite(const TrialConfig& cfg);

/// Same suite but multiplying through an explicit structure-constants
/// table. Intended for mutation testing: any single corrupted table entry
/// must make at least one check fail.
std::vector<CheckReport> run_suite(const TrialConfig& cfg,
                                   const CayleyTable& table);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace sbq::verify
