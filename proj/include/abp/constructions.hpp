#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "abp/abp.hpp"

namespace abp::construct {

/// Subset of {0, ..., 63} as a bitmask.
using Subset = std::uint64_t;

/// (-1)^{#elements of s larger than j}: the parity of inserting j into the
/// sorted list s.
int insertion_sign(Subset s, unsigned j);

/// Product of insertion signs along the chain T_i = {sigma(0..i)}. sigma is a
/// 0-based permutation.
int sign_of_insertion_chain(std::span<const std::size_t> sigma);

/// Subsets of {0..n-1} of the given size, increasing as integers.
std::vector<Subset> subsets_of_size(unsigned n, unsigned size);
/// "{1,3}" with 1-based elements.
std::string subset_label(Subset s);

/// Multi-output ABP whose sink S (|S| = h) computes the symmetrization of
/// prod_{j in S} y_j. Layer l has one node per l-subset of [n].
Abp half_products(std::size_t n, std::size_t h, Field field = Field::rationals());

/// half_products followed by n superset-sum layers of scalar edges; sink S
/// (|S| <= h) computes the sum of m*_A over all h-sets A containing S. Sinks
/// are ordered by size, then as integers.
Abp superset_sums(std::size_t n, std::size_t h, Field field = Field::rationals());

/// Symmetrized elementary symmetric polynomial: every multilinear degree-k
/// word over y_1..y_n with coefficient 1. Built by inclusion-exclusion over
/// common subsets, joining superset_sums(n, ceil(k/2)) to the mirror of
/// superset_sums(n, floor(k/2)).
Abp s_star(std::size_t n, std::size_t k, Field field = Field::rationals());

/// Noncommutative rectangular permanent of a k x n matrix (variables
/// row-major), by position-wise renaming of s_star(n, k).
Abp rper_nc(std::size_t k, std::size_t n, Field field = Field::rationals());

/// Noncommutative k x k determinant on the subset lattice of [k]; exactly 2^k
/// nodes.
Abp ncdet(std::size_t k, Field field = Field::rationals());

/// alpha_i = i for i = 1..n, in the given field.
std::vector<Scalar> default_alphas(std::size_t n, Field field);

/// 2^k-node ABP with the same support as s_star(n, k): the coefficient of a
/// word is a Vandermonde determinant in the alphas of its letters.
Abp weak_s_star(std::size_t n, std::size_t k, std::span<const Scalar> alphas);
Abp weak_s_star(std::size_t n, std::size_t k, Field field = Field::rationals());

/// Hadamard square of weak_s_star: strictly positive on multilinear words
/// over an ordered field.
Abp positive_weak(std::size_t n, std::size_t k, Field field = Field::rationals());

/// Commutative S_{n,k} on a (k+1) x (n+1) grid: node (d, i) means d variables
/// chosen, the last one z_i. Homogeneous.
Abp snk_classic(std::size_t n, std::size_t k, Field field = Field::rationals());

/// Noncommutative version of snk_classic: increasing words only.
Abp snc(std::size_t n, std::size_t k, Field field = Field::rationals());

/// Commutative rectangular determinant over x_{j,i} (k x n, row-major), built
/// by filtering the subset-lattice ABP with snc and setting z = 1.
Abp rdet(std::size_t k, std::size_t n, Field field = Field::rationals());

/// Noncommutative rectangular determinant, rows multiplied in order: subset
/// lattice over used columns, C(n, <=k) nodes.
Abp rdet_nc(std::size_t k, std::size_t n, Field field = Field::rationals());

}  // namespace abp::construct
