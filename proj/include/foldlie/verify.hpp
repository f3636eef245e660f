#pragma once

#include <string>
#include <vector>

#include "foldlie/report.hpp"

namespace foldlie {

struct SuiteResult {
  std::string suite;
  int samples = 0;
  unsigned long seed = 0;
  std::vector<Report> reports;

  int cases_run() const;
  std::vector<Failure> failures() const;
  bool ok() const { return failures().empty(); }
};

/// rootsys, weyl, liealg, slodowy, appendix, cameral, dims, all.
const std::vector<std::string>& suite_names();

/// Deterministic given (name, samples, seed). Throws std::invalid_argument for an unknown suite.
SuiteResult run_suite(const std::string& name, int samples, unsigned long seed);

}  // namespace foldlie
