#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace relkit {

// One law verdict. `witnesses` is empty exactly when `ok` is true; each
// witness is a printable tuple or element implicated in the failure.
struct Check {
  std::string law;
  bool ok = false;
  std::vector<std::string> witnesses;
};

class Report {
 public:
  // Witnesses are sorted, deduplicated and truncated to 64 entries so
  // reports stay bounded and byte deterministic.
  void add(std::string law, bool ok, std::vector<std::string> witnesses = {}) {
    if (ok) witnesses.clear();
    std::sort(witnesses.begin(), witnesses.end());
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    if (witnesses.size() > 64) witnesses.resize(64);
    checks_.push_back(Check{std::move(law), ok, std::move(witnesses)});
  }

  // The law holds exactly when no witnesses were collected. Evaluating
  // emptiness here keeps it sequenced before the move.
  void add_witnessed(std::string law, std::vector<std::string> witnesses) {
    const bool ok = witnesses.empty();
    add(std::move(law), ok, std::move(witnesses));
  }

  void merge(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool verdict() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const Check& c) { return c.ok; });
  }

  const Check* find(std::string_view law) const {
    for (const auto& c : checks_)
      if (c.law == law) return &c;
    return nullptr;
  }

  bool passed(std::string_view law) const {
    const Check* c = find(law);
    return c != nullptr && c->ok;
  }

  const std::vector<Check>& checks() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

// Enumeration budget for operations whose cost is a product of carrier
// sizes. The limit bounds the largest tuple universe an operation may
// materialize or sweep.
struct Budget {
  std::uint64_t limit = 1'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& op, std::uint64_t required, std::uint64_t limit)
      : std::runtime_error(op + ": required " + std::to_string(required) +
                           " exceeds budget " + std::to_string(limit)),
        op_(op), required_(required), limit_(limit) {}
  const std::string& op() const { return op_; }
  std::uint64_t required() const { return required_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::string op_;
  std::uint64_t required_;
  std::uint64_t limit_;
};

inline void charge(const Budget& budget, std::uint64_t required, const char* op) {
  if (required > budget.limit) throw BudgetExceeded(op, required, budget.limit);
}

// Raised when an operation's stated precondition fails; carries the
// report of the precondition check when one was produced.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg, Report report = {})
      : std::runtime_error(msg), report_(std::move(report)) {}
  const Report& report() const { return report_; }

 private:
  Report report_;
};

}  // namespace relkit
