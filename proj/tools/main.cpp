// boolfun: command-line driver for the Boolean-function toolkit.
//
// Subcommands:
//   analyze  influence profile + inequality reports for one function
//   sweep    one metric across a dimension range
//   verify   identity/inequality/gaussian batteries (exit 1 on failure)
//   search   randomized greedy search for large inequality ratios
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 capacity exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "boolfun/cube.hpp"
#include "boolfun/errors.hpp"
#include "boolfun/inequalities.hpp"
#include "boolfun/serialize.hpp"
#include "boolfun/spectrum.hpp"
#include "boolfun/verify.hpp"
#include "boolfun/zoo.hpp"

namespace {

using boolfun::json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

boolfun::BooleanFunction load_function(const std::string& table_path,
                                       const std::string& family, int n,
                                       std::uint64_t seed) {
  if (!table_path.empty()) {
    return boolfun::read_truth_table_file(table_path);
  }
  if (n <= 0) {
    throw CLI::ValidationError("--n is required with --family");
  }
  return boolfun::zoo::make_family(boolfun::zoo::parse_family_spec(family), n,
                                   seed);
}

int cmd_analyze(const std::string& table_path, const std::string& family,
                int n, double s0, std::uint64_t seed,
                const std::string& out_path, const std::string& format) {
  const boolfun::BooleanFunction f =
      load_function(table_path, family, n, seed);
  const boolfun::RealCubeFunction fr = f.to_real();

  std::vector<boolfun::InequalityReport> reports;
  reports.push_back(boolfun::poincare_report(fr));
  reports.push_back(boolfun::talagrand1_report(fr));
  reports.push_back(boolfun::talagrand2_report(fr, s0));
  if (f.n() >= 2) reports.push_back(boolfun::kkl_report(f));

  if (format == "csv") {
    std::string text = boolfun::csv_header() + "\n";
    for (const auto& r : reports) text += boolfun::csv_row(r) + "\n";
    emit(text, out_path);
    return 0;
  }

  json bundle;
  bundle["input"] = {{"family", table_path.empty() ? family : ""},
                     {"table", table_path},
                     {"n", f.n()},
                     {"s0", s0}};
  bundle["influence"] = boolfun::profile_json(boolfun::influence_profile(f));
  json report_array = json::array();
  for (const auto& r : reports) report_array.push_back(boolfun::report_json(r));
  bundle["reports"] = report_array;
  if (f.n() >= 2) {
    bundle["alternative"] = boolfun::alternative_json(
        boolfun::corollary_alternative_report(f, s0));
  }
  bundle["variance_representation"] = boolfun::variance_representation_json(
      boolfun::variance_representation_check(fr));
  bundle["tail_identity"] =
      boolfun::tail_identity_json(boolfun::tail_identity_check(fr, 0.5));
  emit(bundle.dump(2), out_path);
  return 0;
}

boolfun::InequalityReport tribes_trend_row(const std::string& metric, int n) {
  const boolfun::zoo::TribesParams params =
      boolfun::zoo::tribes_auto_params(n);
  boolfun::InequalityReport r;
  r.name = metric;
  r.n = n;
  const double log2_n = std::log2(static_cast<double>(n));
  r.params["k"] = params.k;
  r.params["m"] = static_cast<double>(params.m);
  r.params["mean"] = params.mean;
  if (metric == "tribes-influence") {
    r.lhs = params.influence;
    r.rhs = log2_n / n;
  } else {  // tribes-pair: coordinates in distinct blocks
    r.lhs = boolfun::zoo::tribes_pair_distinct_blocks_closed_form(params.k,
                                                                  params.m);
    r.rhs = (log2_n / n) * (log2_n / n);
  }
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : 0.0;
  r.degenerate = !(r.rhs > 0.0);
  return r;
}

int cmd_sweep(const std::string& family, const std::string& metric, int n_min,
              int n_max, double s0, std::uint64_t seed,
              const std::string& out_path, const std::string& format) {
  if (n_min < 1 || n_max < n_min) {
    throw CLI::ValidationError("need 1 <= n-min <= n-max");
  }
  const bool closed_form =
      metric == "tribes-influence" || metric == "tribes-pair";
  std::vector<boolfun::InequalityReport> rows;
  if (closed_form) {
    // Closed forms stay cheap at huge n; double the dimension each step.
    for (std::int64_t n = n_min; n <= n_max; n *= 2) {
      rows.push_back(tribes_trend_row(metric, static_cast<int>(n)));
    }
  } else {
    const boolfun::InequalityId id = boolfun::parse_inequality_id(metric);
    const boolfun::zoo::FamilySpec spec =
        boolfun::zoo::parse_family_spec(family);
    const int step = spec.name == "majority" ? 2 : 1;
    int start = n_min;
    if (spec.name == "majority" && start % 2 == 0) ++start;
    for (int n = start; n <= n_max; n += step) {
      const boolfun::BooleanFunction f =
          boolfun::zoo::make_family(spec, n, seed);
      switch (id) {
        case boolfun::InequalityId::poincare:
          rows.push_back(boolfun::poincare_report(f.to_real()));
          break;
        case boolfun::InequalityId::talagrand1:
          rows.push_back(boolfun::talagrand1_report(f.to_real()));
          break;
        case boolfun::InequalityId::talagrand2:
          rows.push_back(boolfun::talagrand2_report(f.to_real(), s0));
          break;
        case boolfun::InequalityId::kkl:
          rows.push_back(boolfun::kkl_report(f));
          break;
      }
    }
  }

  if (format == "csv") {
    std::string text = boolfun::csv_header() + "\n";
    for (const auto& r : rows) text += boolfun::csv_row(r) + "\n";
    emit(text, out_path);
  } else {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(boolfun::report_json(r));
    emit(json{{"metric", metric}, {"rows", arr}}.dump(2), out_path);
  }
  return 0;
}

int cmd_verify(const std::string& suite, int n_max, std::uint64_t seed,
               double s0, bool inject_fault, int random_tables,
               const std::string& out_path, const std::string& format) {
  boolfun::VerifyOptions opts;
  opts.n_max = n_max;
  opts.seed = seed;
  opts.s0 = s0;
  opts.inject_fault = inject_fault;
  opts.random_tables = random_tables;
  const std::vector<boolfun::VerifySummary> summaries =
      boolfun::verify_suites(suite, opts);

  bool all_passed = true;
  std::ostringstream text;
  json suites = json::array();
  for (const auto& s : summaries) {
    json checks = json::array();
    for (const auto& c : s.checks) {
      all_passed = all_passed && c.passed;
      text << "[" << s.suite << "] " << c.name << ": "
           << (c.passed ? "PASS" : "FAIL") << " (worst "
           << boolfun::format_double(c.worst) << " vs threshold "
           << boolfun::format_double(c.threshold) << ")\n";
      if (!c.passed) {
        text << "  at: " << c.detail << "\n  reproduce: " << c.repro << "\n";
      }
      checks.push_back({{"name", c.name},
                        {"passed", c.passed},
                        {"worst", c.worst},
                        {"threshold", c.threshold},
                        {"detail", c.detail},
                        {"repro", c.repro}});
    }
    text << "[" << s.suite << "] " << s.passed() << "/" << s.checks.size()
         << " checks passed\n";
    suites.push_back({{"suite", s.suite},
                      {"passed", s.passed()},
                      {"failed", s.failed()},
                      {"checks", checks}});
  }
  text << (all_passed ? "ALL SUITES PASSED" : "VERIFICATION FAILED") << "\n";

  if (format == "json") {
    emit(json{{"all_passed", all_passed}, {"suites", suites}}.dump(2),
         out_path);
  } else {
    emit(text.str(), out_path);
  }
  return all_passed ? 0 : 1;
}

int cmd_search(int n, const std::string& metric, int budget,
               std::uint64_t seed, double s0, const std::string& out_path,
               const std::string& witness_path) {
  const boolfun::SearchResult result = boolfun::constant_search(
      n, boolfun::parse_inequality_id(metric), budget, seed, s0);
  if (!witness_path.empty()) {
    std::ofstream out(witness_path, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + witness_path);
    }
    boolfun::write_truth_table(out, result.best);
  }
  emit(boolfun::search_json(result).dump(2), out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean-function analysis toolkit"};
  app.require_subcommand(1);

  std::string family = "tribes-auto";
  std::string table_path;
  std::string metric = "talagrand1";
  std::string out_path;
  std::string witness_path;
  std::string format = "json";
  std::string suite = "all";
  int n = 0, n_min = 4, n_max = 10;
  int budget = 10000;
  int random_tables = 10000;
  std::uint64_t seed = 42;
  double s0 = boolfun::kDefaultS0;
  bool inject_fault = false;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--s0", s0,
                    "second-order noise parameter, in (0, 1/128)")
        ->capture_default_str();
    sub->add_option("--seed", seed, "deterministic seed")
        ->capture_default_str();
    sub->add_option("--out", out_path, "write output to this file");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->set_config("--config", "",
                    "config file with key=value lines; flags override it");
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "analyze a single Boolean function");
  analyze->add_option("--family", family,
                      "family spec, e.g. tribes:k=2,m=3 or parity:S=0x5");
  analyze->add_option("--table", table_path, "truth table file");
  analyze->add_option("--n", n, "dimension for --family");
  add_common(analyze);

  CLI::App* sweep =
      app.add_subcommand("sweep", "evaluate a metric across dimensions");
  sweep->add_option("--family", family, "family spec")
      ->capture_default_str();
  sweep->add_option("--metric", metric,
                    "poincare|talagrand1|talagrand2|kkl|tribes-influence|"
                    "tribes-pair")
      ->capture_default_str();
  sweep->add_option("--n-min", n_min, "smallest dimension")
      ->capture_default_str();
  sweep->add_option("--n-max", n_max, "largest dimension")
      ->capture_default_str();
  add_common(sweep);

  CLI::App* verify =
      app.add_subcommand("verify", "run verification batteries");
  verify->add_option("suite", suite,
                     "identities|inequalities|gaussian|all")
      ->capture_default_str();
  verify->add_option("--n-max", n_max, "largest dimension")
      ->capture_default_str();
  verify->add_option("--random-tables", random_tables,
                     "random tables per dimension in the random battery")
      ->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault,
                   "corrupt one input table; the battery must then fail");
  add_common(verify);

  CLI::App* search = app.add_subcommand(
      "search", "randomized greedy search for extreme ratios");
  search->add_option("--n", n, "dimension (at most 12)")->required();
  search->add_option("--metric", metric, "inequality to maximize")
      ->capture_default_str();
  search->add_option("--budget", budget, "ratio evaluations allowed")
      ->capture_default_str();
  search->add_option("--witness", witness_path,
                     "write the best truth table to this file");
  add_common(search);

  try {
    app.parse(argc, argv);
    if (analyze->parsed()) {
      return cmd_analyze(table_path, family, n, s0, seed, out_path, format);
    }
    if (sweep->parsed()) {
      return cmd_sweep(family, metric, n_min, n_max, s0, seed, out_path,
                       format);
    }
    if (verify->parsed()) {
      return cmd_verify(suite, n_max, seed, s0, inject_fault, random_tables,
                        out_path, format);
    }
    if (search->parsed()) {
      return cmd_search(n, metric, budget, seed, s0, out_path, witness_path);
    }
  } catch (const CLI::ParseError& e) {
    // --help lands here with a zero exit code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const boolfun::capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return 3;
  } catch (const boolfun::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
