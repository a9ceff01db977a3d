#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "abp/abp.hpp"
#include "abp/applications.hpp"

namespace abp {

/// Small random rational a/b with |a| <= max_abs, 1 <= b <= max_den.
Scalar random_rational(std::mt19937_64& rng, int max_abs = 5, int max_den = 3);
std::vector<Scalar> random_point(std::mt19937_64& rng, std::size_t n);

/// Homogeneous single-source/single-sink noncommutative ABP with `degree` edge
/// layers, inner layers of 1..max_width nodes and random sparse labels with
/// small integer coefficients.
Abp random_homogeneous_abp(std::mt19937_64& rng, std::size_t nvars, std::size_t degree, std::size_t max_width);

/// Each of the n(n-1) possible arcs (no loops) present with probability p.
apps::Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p);

}  // namespace abp
