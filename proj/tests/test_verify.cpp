#include <gtest/gtest.h>

#include "oracles.hpp"
#include "skewfq/error.hpp"
#include "skewfq/parse.hpp"
#include "skewfq/verify.hpp"

using namespace skewfq;

TEST(Verify, EverySuitePasses) {
  const auto report = run_verify();
  ASSERT_EQ(report.suites.size(), verify_suite_names().size());
  for (const auto& s : report.suites) {
    EXPECT_TRUE(s.passed()) << s.name << ": " << (s.failures.empty() ? "" : s.failures.front());
    EXPECT_GT(s.cases, 0U) << s.name;
  }
  EXPECT_TRUE(report.passed());
}

TEST(Verify, DeterministicForAFixedSeed) {
  for (const auto& name : {"product-formula", "gordon-motzkin", "round-trip"}) {
    const auto a = run_suite(name, 99);
    const auto b = run_suite(name, 99);
    EXPECT_EQ(a.cases, b.cases);
    EXPECT_EQ(a.violations, b.violations);
    EXPECT_EQ(a.failures, b.failures);
    EXPECT_TRUE(a.passed());
  }
}

TEST(Verify, UnknownSuiteIsRejected) {
  try {
    (void)run_suite("no-such-suite");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidArgument);
  }
}

TEST(Verify, BruteForceFactorizationMatchesOracle) {
  const FrobeniusTwist tw{make_field(2, 2), 1};
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& f : oracle::all_with_degree(tw, d)) EXPECT_EQ(brute_force_factorization(f), oracle::brute_factor(f));
  }
}
