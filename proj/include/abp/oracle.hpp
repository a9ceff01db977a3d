#pragma once

// Brute-force expansions of every polynomial family the ABP constructions
// are meant to compute. These enumerate the defining sums directly and share no
// code with the ABP builders.

#include <cstddef>
#include <span>

#include "abp/poly.hpp"

namespace abp::oracle {

/// Sum of all multilinear degree-k words over y_1..y_n, each coefficient 1.
NCPoly s_star(std::size_t n, std::size_t k, Field field = Field::rationals());

/// Sum over injections [k] -> [n] of y_{1,s(1)} ... y_{k,s(k)}.
NCPoly rper(std::size_t k, std::size_t n, bool commutative, Field field = Field::rationals());

/// Noncommutative k x k determinant, rows multiplied in order.
NCPoly det(std::size_t k, Field field = Field::rationals());

/// Commutative rectangular (Cullis) determinant: sum of the k x k minors.
NCPoly rdet(std::size_t k, std::size_t n, Field field = Field::rationals());

/// Noncommutative rectangular determinant with rows multiplied in order and
/// the sign of the column pattern of each injection.
NCPoly rdet_nc(std::size_t k, std::size_t n, Field field = Field::rationals());

/// Sum over increasing index sequences z_{i1} ... z_{ik}.
NCPoly s_nc(std::size_t n, std::size_t k, Field field = Field::rationals());

/// (-1)^{inversions of seq}.
int pattern_sign(std::span<const std::size_t> seq);

}  // namespace abp::oracle
