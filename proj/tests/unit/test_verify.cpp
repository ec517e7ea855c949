#include <doctest.h>

#include "sbq/verify.hpp"

using sbq::verify::CheckReport;
using sbq::verify::TrialConfig;

namespace {

TrialConfig small_cfg() {
  TrialConfig cfg;
  cfg.trials = 500;
  return cfg;
}

}  // namespace

TEST_CASE("suite passes on the canonical table") {
  const auto reports = sbq::verify::run_suite(small_cfg());
  REQUIRE(reports.size() == 7);
  for (const auto& r : reports) {
    INFO(r.check, ": ", r.example ? r.example->expected : "");
    CHECK(r.failures == 0);
    CHECK(r.trials_run == 500);
  }
  CHECK(sbq::verify::all_passed(reports));
}

TEST_CASE("expected check names, in order") {
  const auto reports = sbq::verify::run_suite(TrialConfig{42, 1, 1e-9, 1e-12});
  const char* names[] = {"gram_structure",   "j_commutation",
                         "composition",      "conjugate_rules",
                         "inverse_suite",    "involution_suite",
                         "b_expression_agreement"};
  REQUIRE(reports.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(reports[i].check == names[i]);
}

TEST_CASE("identical config gives identical reports, bit for bit") {
  const auto a = sbq::verify::run_suite(small_cfg());
  const auto b = sbq::verify::run_suite(small_cfg());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].check == b[i].check);
    CHECK(a[i].trials_run == b[i].trials_run);
    CHECK(a[i].failures == b[i].failures);
    CHECK(a[i].worst_residual == b[i].worst_residual);
  }
  // standalone checks reproduce the suite entries
  CHECK(sbq::verify::check_composition(small_cfg()).worst_residual ==
        a[2].worst_residual);
  CHECK(sbq::verify::check_involution_suite(small_cfg()).worst_residual ==
        a[5].worst_residual);
}

TEST_CASE("different seeds draw different inputs") {
  TrialConfig c1 = small_cfg();
  TrialConfig c2 = small_cfg();
  c2.seed = 43;
  CHECK(sbq::verify::check_composition(c1).worst_residual !=
        sbq::verify::check_composition(c2).worst_residual);
}

TEST_CASE("zero trials: empty reports, suite passes") {
  TrialConfig cfg;
  cfg.trials = 0;
  const auto reports = sbq::verify::run_suite(cfg);
  REQUIRE(reports.size() == 7);
  for (const auto& r : reports) {
    CHECK(r.trials_run == 0);
    CHECK(r.failures == 0);
  }
  CHECK(sbq::verify::all_passed(reports));
}

TEST_CASE("a corrupted structure constant is caught quickly") {
  sbq::CayleyTable bad = sbq::cayley_table();
  bad.sign[1][2] = -bad.sign[1][2];
  TrialConfig cfg;
  cfg.trials = 1000;
  const auto reports = sbq::verify::run_suite(cfg, bad);
  CHECK_FALSE(sbq::verify::all_passed(reports));
  long failures = 0;
  for (const auto& r : reports) failures += r.failures;
  CHECK(failures > 0);
  // the failing check keeps a usable example
  for (const auto& r : reports)
    if (!r.passed()) REQUIRE(r.example.has_value());
}

TEST_CASE("a corrupted diagonal entry is caught too") {
  sbq::CayleyTable bad = sbq::cayley_table();
  bad.sign[7][7] = -1;
  TrialConfig cfg;
  cfg.trials = 1000;
  CHECK_FALSE(sbq::verify::all_passed(sbq::verify::run_suite(cfg, bad)));
}
