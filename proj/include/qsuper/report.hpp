#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qsuper {

struct Failure {
  std::string input;
  std::string lhs;
  std::string rhs;
};

/// Outcome of a verification suite. Only the first few failures are kept.
/// Which version of a stated formula to check: as written, or as amended
/// where the written version does not hold.
enum class Reading { Printed, Corrected };

struct Report {
  std::string name;
  std::size_t checked = 0;
  std::vector<Failure> failures;
  std::size_t failure_count = 0;
  std::vector<std::string> notes;

  static constexpr std::size_t kMaxKept = 8;

  bool ok() const { return failure_count == 0; }

  void pass() { ++checked; }
  void fail(std::string input, std::string lhs, std::string rhs) {
    ++checked;
    ++failure_count;
    if (failures.size() < kMaxKept) failures.push_back({std::move(input), std::move(lhs), std::move(rhs)});
  }
  /// Record one comparison.
  template <class T, class Show>
  bool expect_eq(const std::string& input, const T& lhs, const T& rhs, Show show) {
    if (lhs == rhs) {
      pass();
      return true;
    }
    fail(input, show(lhs), show(rhs));
    return false;
  }
  void note(std::string s) { notes.push_back(std::move(s)); }

  void merge(const Report& o) {
    checked += o.checked;
    failure_count += o.failure_count;
    for (auto& f : o.failures)
      if (failures.size() < kMaxKept) failures.push_back(f);
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
};

}  // namespace qsuper
