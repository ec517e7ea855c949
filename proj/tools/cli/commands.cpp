#include "commands.hpp"

#include <charconv>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "format.hpp"
#include "sbq/cayley.hpp"
#include "sbq/inversion.hpp"
#include "sbq/normalization.hpp"
#include "sbq/number.hpp"
#include "sbq/seminorm.hpp"
#include "sbq/verify.hpp"

namespace sbq::cli {

namespace {

using nlohmann::json;

json number_json(const Number& x) {
  json a = json::array();
  for (std::size_t i = 0; i < 8; ++i) a.push_back(x[i]);
  return a;
}

json seminorms_json(const SeminormPair& p) {
  return json::array({p.plus, p.minus});
}

const char* singular_kind_name(SingularError::Kind k) {
  switch (k) {
    case SingularError::Kind::plus:
      return "singular_plus";
    case SingularError::Kind::minus:
      return "singular_minus";
    default:
      return "singular_both";
  }
}

const char* normalization_reason_name(NormalizationError::Reason r) {
  return r == NormalizationError::Reason::zero_input ? "zero_input"
                                                     : "singular_factor";
}

struct Options {
  bool as_json = false;
  int precision = 12;
};

// one record per invocation; "result" is either the 8 coefficients or an
// {"error", "seminorms"} object
void emit(const Options& opt, json record, const Number& result) {
  if (opt.as_json) {
    record["result"] = number_json(result);
    std::cout << record.dump() << "\n";
  } else {
    std::cout << format_number(result, opt.precision) << "\n";
  }
}

int emit_math_error(const Options& opt, json record, const char* kind,
                    const SeminormPair& seminorms, const std::string& what) {
  if (opt.as_json) {
    record["result"] = json{{"error", kind},
                            {"seminorms", seminorms_json(seminorms)}};
    std::cout << record.dump() << "\n";
  }
  std::cerr << "error: " << what << "\n";
  return 1;
}

long long parse_integer(const std::string& text) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(0, "malformed integer '" + text + "'");
  return value;
}

void print_verify_report(const std::vector<verify::CheckReport>& reports,
                         const verify::TrialConfig& cfg) {
  for (const auto& r : reports) {
    std::printf("%-4s %-24s trials=%ld failures=%ld worst=%.3e\n",
                r.passed() ? "ok" : "FAIL", r.check.c_str(), r.trials_run,
                r.failures, r.worst_residual);
    if (!r.passed() && r.example) {
      std::printf("     expected: %s\n", r.example->expected.c_str());
      std::printf("     got:      %s\n", r.example->got.c_str());
      for (const Number& in : r.example->inputs)
        std::printf("     input:    %s\n", format_number(in, 17).c_str());
    }
  }
  const bool ok = verify::all_passed(reports);
  std::printf("%s (seed=%llu, trials=%ld, rel_tol=%g)\n",
              ok ? "all checks passed" : "verification FAILED",
              static_cast<unsigned long long>(cfg.seed), cfg.trials,
              cfg.rel_tol);
}

json verify_json(const std::vector<verify::CheckReport>& reports,
                 const verify::TrialConfig& cfg) {
  json checks = json::array();
  for (const auto& r : reports) {
    json c{{"check", r.check},
           {"trials", r.trials_run},
           {"failures", r.failures},
           {"worst_residual", r.worst_residual}};
    if (r.example) {
      json inputs = json::array();
      for (const Number& in : r.example->inputs) inputs.push_back(number_json(in));
      c["example"] = json{{"inputs", inputs},
                          {"expected", r.example->expected},
                          {"got", r.example->got}};
    } else {
      c["example"] = nullptr;
    }
    checks.push_back(std::move(c));
  }
  return json{{"op", "verify"},
              {"seed", cfg.seed},
              {"trials", cfg.trials},
              {"rel_tol", cfg.rel_tol},
              {"abs_tol", cfg.abs_tol},
              {"passed", verify::all_passed(reports)},
              {"checks", std::move(checks)}};
}

}  // namespace

std::string table_text() {
  const CayleyTable& t = cayley_table();
  auto cell = [](int sign, unsigned idx) {
    std::string s = sign < 0 ? "-" : "";
    if (idx == 0)
      s += "1";
    else
      s += "e" + std::to_string(idx);
    return s;
  };
  std::string out = "*";
  for (int j = 0; j < 8; ++j) out += "\te" + std::to_string(j);
  out += "\n";
  for (int i = 0; i < 8; ++i) {
    out += "e" + std::to_string(i);
    for (int j = 0; j < 8; ++j)
      out += "\t" + cell(t.sign[i][j], t.index[i][j]);
    out += "\n";
  }
  return out;
}

int run(int argc, const char* const* argv) {
  CLI::App app{"split-biquaternion algebra calculator"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "emit one JSON record on stdout");
  app.add_option("--precision", opt.precision,
                 "significant digits for human-readable output")
      ->default_val(12);

  struct {
    std::string x, y, u, n;
    bool left = false;
    verify::TrialConfig cfg;
  } args;

  auto* c_mul = app.add_subcommand("mul", "product X*Y");
  c_mul->add_option("X", args.x)->required();
  c_mul->add_option("Y", args.y)->required();
  auto* c_add = app.add_subcommand("add", "sum X+Y");
  c_add->add_option("X", args.x)->required();
  c_add->add_option("Y", args.y)->required();
  auto* c_conj = app.add_subcommand("conj", "conjugate of X");
  c_conj->add_option("X", args.x)->required();
  auto* c_inv = app.add_subcommand("inv", "two-sided inverse of X");
  c_inv->add_option("X", args.x)->required();
  auto* c_div = app.add_subcommand("div", "right division X*Y^-1");
  c_div->add_option("X", args.x)->required();
  c_div->add_option("Y", args.y)->required();
  c_div->add_flag("--left", args.left, "left division Y^-1*X instead");
  auto* c_pow = app.add_subcommand("power", "integer power X^n");
  c_pow->add_option("X", args.x)->required();
  c_pow->add_option("n", args.n)->required();
  auto* c_norm =
      app.add_subcommand("norm", "both seminorms and the scalars a, b of X");
  c_norm->add_option("X", args.x)->required();
  auto* c_nrm = app.add_subcommand(
      "normalize", "central factor X_d and normalized X_n = X*X_d^-1");
  c_nrm->add_option("X", args.x)->required();
  auto* c_invo = app.add_subcommand("involute", "conjugation U*X*U^-1");
  c_invo->add_option("X", args.x)->required();
  c_invo->add_option("U", args.u)->required();
  auto* c_basis =
      app.add_subcommand("basis", "the basis conjugated by U, e_i -> U*e_i*U^-1");
  c_basis->add_option("U", args.u)->required();
  auto* c_table = app.add_subcommand("table", "print the multiplication table");
  auto* c_verify =
      app.add_subcommand("verify", "run the randomized verification suite");
  c_verify->add_option("--seed", args.cfg.seed, "RNG seed")->default_val(42);
  c_verify->add_option("--trials", args.cfg.trials, "trials per check")
      ->default_val(10000);
  c_verify->add_option("--tol", args.cfg.rel_tol, "relative tolerance")
      ->default_val(1e-9);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json record;
  try {
    if (c_table->parsed()) {
      if (opt.as_json) {
        const CayleyTable& t = cayley_table();
        json sign = json::array(), index = json::array();
        for (int i = 0; i < 8; ++i) {
          json srow = json::array(), irow = json::array();
          for (int j = 0; j < 8; ++j) {
            srow.push_back(static_cast<int>(t.sign[i][j]));
            irow.push_back(static_cast<int>(t.index[i][j]));
          }
          sign.push_back(std::move(srow));
          index.push_back(std::move(irow));
        }
        std::cout << json{{"op", "table"}, {"sign", sign}, {"index", index}}
                         .dump()
                  << "\n";
      } else {
        std::cout << table_text();
      }
      return 0;
    }

    if (c_verify->parsed()) {
      const auto reports = verify::run_suite(args.cfg);
      if (opt.as_json)
        std::cout << verify_json(reports, args.cfg).dump() << "\n";
      else
        print_verify_report(reports, args.cfg);
      return verify::all_passed(reports) ? 0 : 1;
    }

    if (c_mul->parsed() || c_add->parsed() || c_div->parsed()) {
      const Number x = parse_number(args.x);
      const Number y = parse_number(args.y);
      const char* op = c_mul->parsed() ? "mul" : c_add->parsed() ? "add" : "div";
      record = json{{"op", op},
                    {"inputs", json::array({number_json(x), number_json(y)})}};
      if (c_div->parsed()) record["direction"] = args.left ? "left" : "right";
      try {
        Number r = c_mul->parsed()  ? x * y
                   : c_add->parsed() ? x + y
                   : args.left       ? inverse(y) * x
                                     : x * inverse(y);
        emit(opt, record, r);
        return 0;
      } catch (const SingularError& e) {
        return emit_math_error(opt, record, singular_kind_name(e.kind()),
                               e.seminorms(), e.what());
      }
    }

    if (c_conj->parsed()) {
      const Number x = parse_number(args.x);
      record = json{{"op", "conj"}, {"inputs", json::array({number_json(x)})}};
      emit(opt, record, conj(x));
      return 0;
    }

    if (c_inv->parsed()) {
      const Number x = parse_number(args.x);
      record = json{{"op", "inv"}, {"inputs", json::array({number_json(x)})}};
      try {
        emit(opt, record, inverse(x));
        return 0;
      } catch (const SingularError& e) {
        return emit_math_error(opt, record, singular_kind_name(e.kind()),
                               e.seminorms(), e.what());
      }
    }

    if (c_pow->parsed()) {
      const Number x = parse_number(args.x);
      const long long n = parse_integer(args.n);
      record = json{{"op", "power"},
                    {"inputs", json::array({number_json(x)})},
                    {"n", n}};
      try {
        emit(opt, record, power(x, n));
        return 0;
      } catch (const SingularError& e) {
        return emit_math_error(opt, record, singular_kind_name(e.kind()),
                               e.seminorms(), e.what());
      }
    }

    if (c_norm->parsed()) {
      const Number x = parse_number(args.x);
      const auto [a, b] = gram_scalars(x);
      const SeminormPair p = seminorm_pair(x);
      if (opt.as_json) {
        std::cout << json{{"op", "norm"},
                          {"inputs", json::array({number_json(x)})},
                          {"seminorms", seminorms_json(p)},
                          {"gram", json{{"a", a}, {"b", b}}}}
                         .dump()
                  << "\n";
      } else {
        char buf[64];
        auto line = [&](const char* label, double v) {
          std::snprintf(buf, sizeof buf, "%.*g", opt.precision, v);
          std::cout << label << buf << "\n";
        };
        line("seminorm(lambda=+1) = ", p.plus);
        line("seminorm(lambda=-1) = ", p.minus);
        line("a = ", a);
        line("b = ", b);
      }
      return 0;
    }

    if (c_nrm->parsed()) {
      const Number x = parse_number(args.x);
      record = json{{"op", "normalize"},
                    {"inputs", json::array({number_json(x)})}};
      try {
        const CentralFactor d = central_factor(x);
        const Number xn = normalize(x);
        if (opt.as_json) {
          record["x_d"] = number_json(d.as_number());
          record["result"] = number_json(xn);
          std::cout << record.dump() << "\n";
        } else {
          std::cout << "X_d = " << format_number(d.as_number(), opt.precision)
                    << "\n";
          std::cout << "X_n = " << format_number(xn, opt.precision) << "\n";
        }
        return 0;
      } catch (const NormalizationError& e) {
        return emit_math_error(opt, record,
                               normalization_reason_name(e.reason()),
                               e.seminorms(), e.what());
      }
    }

    if (c_invo->parsed() || c_basis->parsed()) {
      const Number u = parse_number(args.u);
      try {
        if (c_invo->parsed()) {
          const Number x = parse_number(args.x);
          record = json{
              {"op", "involute"},
              {"inputs", json::array({number_json(x), number_json(u)})}};
          emit(opt, record, involute(x, u));
          return 0;
        }
        record =
            json{{"op", "basis"}, {"inputs", json::array({number_json(u)})}};
        const auto basis = conjugate_basis(u);
        if (opt.as_json) {
          json arr = json::array();
          for (const Number& e : basis) arr.push_back(number_json(e));
          record["result"] = std::move(arr);
          std::cout << record.dump() << "\n";
        } else {
          for (std::size_t i = 0; i < 8; ++i)
            std::cout << "e" << i << "^U = "
                      << format_number(basis[i], opt.precision) << "\n";
        }
        return 0;
      } catch (const SingularError& e) {
        return emit_math_error(opt, record, singular_kind_name(e.kind()),
                               e.seminorms(), e.what());
      }
    }

    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace sbq::cli
