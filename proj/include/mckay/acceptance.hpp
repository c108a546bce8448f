#pragma once

// End-to-end acceptance checks, one result per criterion.

#include <string>
#include <vector>

namespace mckay {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // summary on success, first failures otherwise
};

std::vector<CriterionResult> run_acceptance();

/// One line per criterion: "PASS 1 character tables: ..." or "FAIL ...".
std::string format_acceptance(const std::vector<CriterionResult>& results);

}  // namespace mckay
