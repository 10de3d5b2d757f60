#pragma once

#include <string>
#include <vector>

namespace qg {

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Human-readable summary, e.g. "30 words".
  std::string detail;
  /// Offending input on failure.
  std::string witness;
};

/// Outcome of a verification harness. Failures are content, not exceptions.
struct Report {
  std::string title;
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;
  void add(std::string name, bool passed, std::string detail = {}, std::string witness = {});
  std::string to_text() const;
};

}  // namespace qg
