#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skewfq/plt.hpp"

namespace skewfq {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  /// First few failing cases, in the order they were met.
  std::vector<std::string> failures;

  bool passed() const { return cases > 0 && violations == 0; }
};

struct VerifyReport {
  std::uint64_t seed;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

/// Names of all suites, in run order.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite; InvalidArgument for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed = kDefaultSeed);

/// Every suite in order. Output depends only on the seed.
VerifyReport run_verify(std::uint64_t seed = kDefaultSeed);

/// Complete factorization of a monic f by trying every monic right divisor,
/// lowest degree first and, within a degree, smallest coefficient indices
/// from the constant term upward. Exponential; meant for tiny fields.
std::vector<FieldSkew> brute_force_factorization(const FieldSkew& f);

}  // namespace skewfq
