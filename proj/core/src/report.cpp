#include "qg/report.hpp"

namespace qg {

bool Report::passed() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::add(std::string name, bool passed, std::string detail, std::string witness) {
  checks.push_back(CheckResult{std::move(name), passed, std::move(detail), std::move(witness)});
}

std::string Report::to_text() const {
  std::string s;
  if (!title.empty()) s += title + "\n";
  for (const auto& c : checks) {
    s += c.passed ? "PASS " : "FAIL ";
    s += c.name;
    if (!c.detail.empty()) s += "  (" + c.detail + ")";
    s += "\n";
    if (!c.passed && !c.witness.empty()) s += "     witness: " + c.witness + "\n";
  }
  s += passed() ? "all checks passed\n" : "check failed: " + first_failure()->name + "\n";
  return s;
}

}  // namespace qg
