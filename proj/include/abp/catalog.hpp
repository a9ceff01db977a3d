#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "abp/abp.hpp"

namespace abp {

/// Construction families reachable by name. n and k follow each builder's
/// own meaning; matrix families read k as rows and n as columns.
const std::vector<std::string>& family_names();
Abp build_family(const std::string& name, std::size_t n, std::size_t k, Field field = Field::rationals());

struct BenchRow {
  std::string family;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  double seconds = 0;  // best of the repeats
  double per_node() const { return nodes ? seconds / static_cast<double>(nodes) : 0; }
};

/// Times build_family, repeating until at least min_total seconds were spent
/// (and at least `repeats` times), keeping the fastest run.
BenchRow bench_family(const std::string& name, std::size_t n, std::size_t k, int repeats = 3,
                      double min_total = 0.02);

}  // namespace abp
