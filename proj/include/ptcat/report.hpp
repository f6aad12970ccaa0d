#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ptcat {

/// One failed check: which rule, at which tuple, and the exact mismatch.
struct Violation {
  std::string check;
  std::string location;
  std::string detail;
};

struct Report {
  std::string suite;
  std::size_t checks_run = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  void add(std::string check, std::string location, std::string detail) {
    violations.push_back({std::move(check), std::move(location), std::move(detail)});
  }

  /// Concatenate another report into this one.
  void absorb(const Report& other) {
    checks_run += other.checks_run;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace ptcat
