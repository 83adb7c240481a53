#ifndef SHEAFSEM_REPORT_HPP
#define SHEAFSEM_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace sheafsem {

// Outcome of a law-checking suite. Violations are report content, not
// exceptions; an empty list means every checked case passed.
struct LawReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }

  void absorb(const LawReport& other) {
    checked += other.checked;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace sheafsem

#endif
