#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "boolfun/verify.hpp"

using namespace boolfun;

namespace {

VerifyOptions quick_options() {
  VerifyOptions opts;
  opts.n_max = 6;
  opts.random_tables = 60;  // keep unit-test runtime low
  return opts;
}

}  // namespace

TEST_CASE("all three suites pass at reduced scale") {
  auto opts = quick_options();
  for (const auto* suite : {"identities", "inequalities", "gaussian"}) {
    auto results = verify_suites(suite, opts);
    REQUIRE(results.size() == 1);
    CHECK(results[0].suite == suite);
    CHECK(results[0].all_passed());
    CHECK(results[0].failed() == 0);
    CHECK(results[0].passed() ==
          static_cast<int>(results[0].checks.size()));
    for (const auto& check : results[0].checks) {
      CHECK(!check.name.empty());
      CHECK(!check.repro.empty());
      CHECK(check.repro.find("boolfun verify") == 0);
      if (check.passed) CHECK(check.worst <= check.threshold);
    }
  }
}

TEST_CASE("suite selection: 'all' concatenates, unknown ids throw") {
  auto opts = quick_options();
  auto all = verify_suites("all", opts);
  REQUIRE(all.size() == 3);
  CHECK(all[0].suite == "identities");
  CHECK(all[1].suite == "inequalities");
  CHECK(all[2].suite == "gaussian");
  CHECK_THROWS_AS(verify_suites("nosuch", opts), std::invalid_argument);
}

TEST_CASE("fault injection is detected by the inequality battery") {
  auto opts = quick_options();
  opts.inject_fault = true;
  auto results = verify_suites("inequalities", opts);
  REQUIRE(results.size() == 1);
  CHECK(results[0].failed() >= 1);
  bool found = false;
  for (const auto& check : results[0].checks) {
    if (check.name == "dictator_poincare_exact") {
      CHECK(!check.passed);
      CHECK(check.worst > check.threshold);
      CHECK(check.repro.find("--inject-fault") != std::string::npos);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("verification is deterministic for a fixed seed") {
  auto opts = quick_options();
  auto a = verify_suites("inequalities", opts);
  auto b = verify_suites("inequalities", opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t s = 0; s < a.size(); ++s) {
    REQUIRE(a[s].checks.size() == b[s].checks.size());
    for (std::size_t c = 0; c < a[s].checks.size(); ++c) {
      CHECK(a[s].checks[c].name == b[s].checks[c].name);
      CHECK(a[s].checks[c].worst == b[s].checks[c].worst);
      CHECK(a[s].checks[c].detail == b[s].checks[c].detail);
    }
  }
}
