#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stratsys {

struct Violation {
  std::string axiom;
  // 1-based positions (j, i) of the offending pair, when the axiom is about a pair.
  std::optional<int> j;
  std::optional<int> i;
  // Offending computed quantity (usually a Hom or Ext dimension).
  std::optional<long long> value;
  std::string message;
};

/// Outcome of a verification: passes iff no violation was recorded.
class CheckReport {
 public:
  CheckReport() = default;
  explicit CheckReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  bool passed() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void fail(Violation v) { violations_.push_back(std::move(v)); }
  void fail(std::string axiom, std::string message) {
    violations_.push_back(Violation{std::move(axiom), std::nullopt, std::nullopt, std::nullopt,
                                    std::move(message)});
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  void merge(const CheckReport& other);

  /// First violated axiom name, or empty when passed.
  std::string first_failure() const { return passed() ? std::string() : violations_.front().axiom; }

 private:
  std::string subject_;
  std::vector<Violation> violations_;
  std::vector<std::string> notes_;
};

}  // namespace stratsys
