#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qv {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
};

struct SelfCheckReport {
  std::uint64_t seed = 0;
  long long samples = 0;
  std::vector<CriterionResult> criteria;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_json() const;
};

/**
 * Runs the eight acceptance criteria. samples = 0 runs the full sample
 * counts; a positive value caps each randomized count for quick runs.
 * Deterministic for a fixed (seed, samples) pair.
 */
SelfCheckReport run_acceptance(std::uint64_t seed, long long samples);

}  // namespace qv
