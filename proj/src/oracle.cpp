#include "abp/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace abp::oracle {

namespace {

// n!/(n-k)!, saturating at guard+1.
std::size_t falling(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= (n - i);
    if (r > kMaxTerms) return kMaxTerms + 1;
  }
  return r;
}

// Calls visit(seq) for every injection [k] -> [n] as a 0-based sequence.
template <class Visit>
void for_each_injection(std::size_t k, std::size_t n, Visit&& visit) {
  std::vector<std::size_t> seq;
  std::vector<bool> used(n, false);
  auto rec = [&](auto& self) -> void {
    if (seq.size() == k) {
      visit(seq);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = true;
      seq.push_back(c);
      self(self);
      seq.pop_back();
      used[c] = false;
    }
  };
  rec(rec);
}

void check_shape(std::size_t k, std::size_t n) {
  if (k > n) throw DomainError("need k <= n");
  if (falling(n, k) > kMaxTerms) throw GuardExceeded("brute-force expansion exceeds term guard");
}

}  // namespace

int pattern_sign(std::span<const std::size_t> seq) {
  std::size_t inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
  }
  return inv % 2 ? -1 : 1;
}

NCPoly s_star(std::size_t n, std::size_t k, Field field) {
  if (k < 1) throw DomainError("need k >= 1");
  check_shape(k, n);
  NCPoly p(field, n);
  for_each_injection(k, n, [&](const std::vector<std::size_t>& seq) {
    p.add_term(Word(seq.begin(), seq.end()), field.one());
  });
  return p;
}

NCPoly rper(std::size_t k, std::size_t n, bool commutative, Field field) {
  check_shape(k, n);
  RectMatrixVars grid(std::max<std::size_t>(k, 1), n);
  NCPoly p(field, k * n, commutative);
  for_each_injection(k, n, [&](const std::vector<std::size_t>& seq) {
    Word w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = grid.id(i + 1, seq[i] + 1);
    p.add_term(std::move(w), field.one());
  });
  return p;
}

NCPoly det(std::size_t k, Field field) {
  check_shape(k, k);
  RectMatrixVars grid(std::max<std::size_t>(k, 1), std::max<std::size_t>(k, 1));
  NCPoly p(field, k * k);
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    Word w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = grid.id(i + 1, sigma[i] + 1);
    p.add_term(std::move(w), field.from_int(pattern_sign(sigma)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return p;
}

NCPoly rdet_nc(std::size_t k, std::size_t n, Field field) {
  check_shape(k, n);
  RectMatrixVars grid(std::max<std::size_t>(k, 1), n);
  NCPoly p(field, k * n);
  for_each_injection(k, n, [&](const std::vector<std::size_t>& seq) {
    Word w(k);
    for (std::size_t i = 0; i < k; ++i) w[i] = grid.id(i + 1, seq[i] + 1);
    p.add_term(std::move(w), field.from_int(pattern_sign(seq)));
  });
  return p;
}

NCPoly rdet(std::size_t k, std::size_t n, Field field) {
  check_shape(k, n);
  // Expand each k x k minor separately: choose columns, then run over S_k.
  RectMatrixVars grid(std::max<std::size_t>(k, 1), n);
  NCPoly p(field, k * n, true);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (pick[c]) cols.push_back(c);
    }
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      Word w(k);
      for (std::size_t i = 0; i < k; ++i) w[i] = grid.id(i + 1, cols[sigma[i]] + 1);
      p.add_term(std::move(w), field.from_int(pattern_sign(sigma)));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return p;
}

NCPoly s_nc(std::size_t n, std::size_t k, Field field) {
  check_shape(k, n);
  NCPoly p(field, n);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    Word w;
    for (std::size_t c = 0; c < n; ++c) {
      if (pick[c]) w.push_back(static_cast<Var>(c));
    }
    p.add_term(std::move(w), field.one());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return p;
}

}  // namespace abp::oracle
