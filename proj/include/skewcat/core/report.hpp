#pragma once

// Check results shared by every verifier. A Report is an ordered list of
// named checks; a check that finds violations lists each offending instance.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewcat {

// A verifier cannot run on this input at all (non-separable action, no
// root of unity, wrong field); dependent checks are reported as skipped.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Status { pass, fail, inconclusive, skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string detail;
  std::vector<std::string> violations;
  std::size_t violation_count = 0;
};

// Cap on recorded violations per check; the count is still exact.
inline constexpr std::size_t kMaxRecordedViolations = 64;

class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check>& checks() { return checks_; }

  Check& add(std::string name, Status status = Status::pass, std::string detail = {}) {
    checks_.push_back(Check{std::move(name), status, std::move(detail), {}});
    return checks_.back();
  }

  // Records a violation against the named check, creating it if needed.
  void violate(const std::string& name, std::string what) {
    Check& c = find_or_add(name);
    c.status = Status::fail;
    ++c.violation_count;
    if (c.violations.size() < kMaxRecordedViolations) c.violations.push_back(std::move(what));
  }

  // Ensures the named check exists (as pass unless already failed).
  Check& ensure(const std::string& name) { return find_or_add(name); }

  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks_) {
      Check copy = c;
      if (!prefix.empty()) copy.name = prefix + c.name;
      checks_.push_back(std::move(copy));
    }
  }

  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::pass; });
  }
  bool any(Status s) const {
    return std::any_of(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; });
  }
  const Check* get(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }
  Status status_of(const std::string& name) const {
    const Check* c = get(name);
    return c ? c->status : Status::skipped;
  }

  // Worst status: fail > inconclusive > skipped > pass.
  Status overall() const {
    if (any(Status::fail)) return Status::fail;
    if (any(Status::inconclusive)) return Status::inconclusive;
    if (any(Status::skipped)) return Status::skipped;
    return Status::pass;
  }

 private:
  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < checks_.size(); ++i)
      if (checks_[i].name == name) return i;
    return checks_.size();
  }
  Check& find_or_add(const std::string& name) {
    std::size_t i = index_of(name);
    if (i == checks_.size()) {
      checks_.push_back(Check{name, Status::pass, {}, {}});
    }
    return checks_[i];
  }

  std::string subject_;
  std::vector<Check> checks_;
};

}  // namespace skewcat
