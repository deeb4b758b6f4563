#pragma once

#include <functional>
#include <string>
#include <vector>

namespace stacksort {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
  double budget = 0;  // seconds; a criterion over budget fails
};

/// Runs the acceptance suite in order, reporting each result as it finishes.
std::vector<CriterionResult> run_acceptance(unsigned jobs,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// Formats one result as "PASS [id] name (1.23s / 10s): detail".
std::string format_result(const CriterionResult& r);

}  // namespace stacksort
