#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qent::verify {

struct CriterionOutcome {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 42;
  /// Worker threads for every criterion except the single-threaded timing run.
  std::uint32_t workers = 1;
  /// Sample count of the Monte Carlo criteria.
  std::uint64_t samples = 1000000;
};

/// Runs every acceptance criterion in order, printing one PASS/FAIL line per
/// criterion to `log` as it completes.
std::vector<CriterionOutcome> run_acceptance(const AcceptanceOptions& options, std::ostream& log);

bool all_passed(const std::vector<CriterionOutcome>& outcomes);

}  // namespace qent::verify
