#pragma once

#include <string>
#include <vector>

namespace foldlie {

struct Failure {
  std::string operation;
  std::string input;
  std::string expected;
  std::string got;
};

/// Outcome of a batch of exact checks.
struct Report {
  std::string check;
  int cases_run = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  /// Counts one case and records a failure when cond is false.
  void expect(bool cond, const std::string& operation, const std::string& input, const std::string& expected = "true",
              const std::string& got = "false") {
    ++cases_run;
    if (!cond) failures.push_back({operation, input, expected, got});
  }
  void merge(const Report& other) {
    cases_run += other.cases_run;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace foldlie
