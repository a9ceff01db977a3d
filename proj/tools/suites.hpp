#pragma once

#include <cstddef>
#include <string>
#include <vector>

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first failing case
};

const std::vector<std::string>& suite_names();
/// Runs one suite ("all" runs every suite) for sizes up to max_n, max_k.
std::vector<SuiteResult> run_suites(const std::string& suite, std::size_t max_n, std::size_t max_k);
