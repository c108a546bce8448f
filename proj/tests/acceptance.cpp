#include <algorithm>
#include <iostream>

#include "mckay/acceptance.hpp"

int main() {
  auto results = mckay::run_acceptance();
  std::cout << mckay::format_acceptance(results);
  bool ok = std::all_of(results.begin(), results.end(), [](const mckay::CriterionResult& r) { return r.passed; });
  return ok ? 0 : 1;
}
