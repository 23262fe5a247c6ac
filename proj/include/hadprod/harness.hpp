#ifndef HADPROD_HARNESS_HPP
#define HADPROD_HARNESS_HPP

#include "hadprod/random.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace hadprod {

/// Property suites that run the preservation theorems on seeded random
/// instances. `reeve` is the one suite that asserts a counterexample.
enum class Suite {
  wagner,
  ulc_preservation,
  gamma_preservation,
  symdec_nonneg,
  symdec_gamma,
  symdec_interlacing,
  no_internal_zeros,
  gamma_implies_ulc,
  mixed_logconcave,
  reeve,
  cross_route,
  round_trips,
};

std::string suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);
const std::vector<Suite>& all_suites();

struct SuiteReport {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// True when a violation is the expected outcome (the counterexample suite).
  bool expect_violation = false;
  /// A failure here is a violated theorem or identity, i.e. an implementation
  /// bug; only the first few are kept.
  std::vector<std::string> messages;

  bool passed() const { return failures == 0; }
};

/// Runs one suite. `k_max` applies only to the reeve suite.
SuiteReport run_suite(Suite suite, const TrialConfig& cfg, std::size_t k_max = 8);

/// Result of searching for a counterexample to log-concavity preservation.
struct ScanReport {
  std::size_t pairs = 0;
  /// Human-readable description of each counterexample found.
  std::vector<std::string> finds;
};

/// Random pairs of log-concave numerators without internal zeros; any pair
/// whose Hadamard product loses the property is recorded.
ScanReport scan_logconcave_pairs(const TrialConfig& cfg);

} // namespace hadprod

#endif
