#pragma once

// The eleven reproduction checks, each a single pass/fail with a detail log.

#include <string>
#include <vector>

#include "ellcover/cover_enum.hpp"

namespace ellcover {

inline constexpr int kCriteriaCount = 11;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::vector<std::string> detail;

  // "criterion 3 PASS (1.2 s / 120 s): <title>"
  std::string summary() const;
};

// Throws InvalidInput for an id outside 1..kCriteriaCount.
CriterionResult run_criterion(int id, const EnumerateOptions& opts = {});

}  // namespace ellcover
