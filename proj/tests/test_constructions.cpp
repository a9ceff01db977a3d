#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "abp/constructions.hpp"
#include "oracles.hpp"

using namespace abp;
using namespace abp::construct;

namespace {

const Field Q = Field::rationals();

NCPoly sym_product(std::size_t n, Subset s) {
  NCPoly p(Q, n);
  Word w;
  for (unsigned j = 0; j < n; ++j) {
    if ((s >> j) & 1) w.push_back(j);
  }
  p.add_term(w, Q.one());
  return symmetrize(p);
}

}  // namespace

TEST_CASE("insertion signs") {
  CHECK(insertion_sign(0b0110, 0) == 1);
  CHECK(insertion_sign(0b0110, 1) == -1);
  CHECK(insertion_sign(0b0111, 3) == 1);
  const std::vector<std::size_t> id{0, 1}, swap{1, 0};
  CHECK(sign_of_insertion_chain(id) == 1);
  CHECK(sign_of_insertion_chain(swap) == -1);
  for (std::size_t k = 1; k <= 6; ++k) {
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      CHECK(sign_of_insertion_chain(sigma) == ref::inversion_sign(sigma));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

TEST_CASE("subset enumeration") {
  CHECK(subsets_of_size(4, 2) == std::vector<Subset>{0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  CHECK(subsets_of_size(3, 0) == std::vector<Subset>{0});
  CHECK(subset_label(0b101) == "{1,3}");
}

TEST_CASE("half products") {
  const Abp b = half_products(3, 1);
  const auto outs = expand_sinks(b, 0);
  REQUIRE(outs.size() == 3);
  for (unsigned j = 0; j < 3; ++j) CHECK(outs[j] == sym_product(3, Subset{1} << j));
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t h = 0; h <= n; ++h) {
      const Abp bh = half_products(n, h);
      CHECK(bh.node_count() == ref::binom_tail(n, h));
      const auto sinks = subsets_of_size(static_cast<unsigned>(n), static_cast<unsigned>(h));
      const auto polys = expand_sinks(bh, 0);
      REQUIRE(polys.size() == sinks.size());
      for (std::size_t i = 0; i < sinks.size(); ++i) CHECK(polys[i] == sym_product(n, sinks[i]));
    }
  }
}

TEST_CASE("superset sums") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t h = 0; h <= n; ++h) {
      const Abp b = superset_sums(n, h);
      CHECK(b.num_layers() == n + h + 1);
      for (std::size_t l = 0; l < b.num_layers(); ++l) CHECK(b.layer_size(l) <= ref::binom_tail(n, h));
      const auto polys = expand_sinks(b, 0);
      std::vector<Subset> sinks;
      for (unsigned s = 0; s <= h; ++s) {
        for (Subset x : subsets_of_size(static_cast<unsigned>(n), s)) sinks.push_back(x);
      }
      REQUIRE(polys.size() == sinks.size());
      for (std::size_t i = 0; i < sinks.size(); ++i) {
        NCPoly want(Q, n);
        for (Subset a : subsets_of_size(static_cast<unsigned>(n), static_cast<unsigned>(h))) {
          if ((a & sinks[i]) == sinks[i]) want = want + sym_product(n, a);
        }
        CHECK(polys[i] == want);
      }
    }
  }
}

TEST_CASE("symmetrized elementary polynomial") {
  NCPoly two(Q, 2);
  two.add_term({0, 1}, Q.one());
  two.add_term({1, 0}, Q.one());
  CHECK(expand(s_star(2, 2)) == two);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 5); ++k) {
      const Abp b = s_star(n, k);
      CHECK(expand(b) == ref::s_star(n, k));
      const std::size_t h = (k + 1) / 2;
      CHECK(b.node_count() <= 2 * (n + h + 2) * ref::binom_tail(n, h));
      CHECK(is_pruned(b));
    }
  }
  CHECK_THROWS_AS(s_star(3, 4), DomainError);
  CHECK_THROWS_AS(s_star(3, 0), DomainError);
}

TEST_CASE("s_star over a prime field") {
  const Field f = Field::prime(3);
  CHECK(expand(s_star(4, 3, f)) == ref::s_star(4, 3, f));
}

TEST_CASE("noncommutative rectangular permanent") {
  NCPoly one_row(Q, 2);
  one_row.add_term({0}, Q.one());
  one_row.add_term({1}, Q.one());
  CHECK(expand(rper_nc(1, 2)) == one_row);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4); ++k) {
      const Abp b = rper_nc(k, n);
      CHECK(expand(b) == ref::row_ordered(k, n, false));
      CHECK(b.node_count() <= 2 * s_star(n, k).node_count());
    }
  }
}

TEST_CASE("noncommutative determinant") {
  NCPoly d2(Q, 4);
  d2.add_term({0, 3}, Q.one());
  d2.add_term({1, 2}, -Q.one());
  CHECK(expand(ncdet(2)) == d2);
  for (std::size_t k = 1; k <= 5; ++k) {
    const Abp b = ncdet(k);
    CHECK(b.node_count() == (std::size_t{1} << k));
    CHECK(b.num_layers() == k + 1);
    for (std::size_t l = 0; l <= k; ++l) CHECK(b.layer_size(l) == ref::binom(k, l));
    CHECK(expand(b) == ref::row_ordered(k, k, true));
  }
  CHECK(expand(ncdet(4)).size() == 24);
}

TEST_CASE("weakly equivalent polynomial") {
  const NCPoly w = expand(weak_s_star(2, 2));
  CHECK(w.coeff({0, 1}) == Q.from_int(2));
  CHECK(w.coeff({1, 0}) == Q.from_int(-2));
  CHECK(w.coeff({0, 0}).is_zero());
  CHECK(weak_s_star(5, 3).node_count() == 8);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
      const NCPoly p = expand(weak_s_star(n, k));
      ref::for_each_word(n, k, [&](const Word& word) { CHECK(p.coeff(word).is_zero() != ref::multilinear(word)); });
    }
  }
  const std::vector<Scalar> dup{Q.one(), Q.one()};
  CHECK_THROWS_AS(weak_s_star(2, 1, dup), DomainError);
  const std::vector<Scalar> zero{Q.zero(), Q.one()};
  CHECK_THROWS_AS(weak_s_star(2, 1, zero), DomainError);
}

TEST_CASE("positively weakly equivalent polynomial") {
  const NCPoly p = expand(positive_weak(2, 2));
  CHECK(p.coeff({0, 1}) == Q.from_int(4));
  CHECK(p.coeff({0, 0}).is_zero());
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
      const Abp b = positive_weak(n, k);
      CHECK(b.node_count() <= (std::size_t{1} << (2 * k)));
      const NCPoly e = expand(b);
      CHECK(e.size() == ref::s_star(n, k).size());
      for (const auto& [word, c] : e.terms()) {
        CHECK(ref::multilinear(word));
        CHECK(c.as_rational().sign() > 0);
      }
    }
  }
}

TEST_CASE("elementary symmetric polynomial ABPs") {
  CHECK(eval_scalar(snk_classic(3, 2), std::vector<Scalar>(3, Q.one())) == Q.from_int(3));
  NCPoly want(Q, 3);
  want.add_term({0, 1}, Q.one());
  want.add_term({0, 2}, Q.one());
  want.add_term({1, 2}, Q.one());
  CHECK(expand(snc(3, 2)) == want);
  NCPoly all(Q, 4);
  all.add_term({0, 1, 2, 3}, Q.one());
  CHECK(expand(snc(4, 4)) == all);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Abp c = snk_classic(n, k);
      CHECK(c.is_homogeneous());
      CHECK(c.node_count() <= (k + 1) * (n + 1));
      NCPoly inc(Q, n);
      ref::for_each_injection(k, n, [&](const std::vector<std::size_t>& s) {
        if (std::is_sorted(s.begin(), s.end())) inc.add_term(Word(s.begin(), s.end()), Q.one());
      });
      CHECK(expand(snc(n, k)) == inc);
    }
  }
}

TEST_CASE("rectangular determinant") {
  NCPoly row(Q, 2, true);
  row.add_term({0}, Q.one());
  row.add_term({1}, Q.one());
  CHECK(expand(rdet(1, 2)) == row);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = k; n <= 6; ++n) {
      const Abp b = rdet(k, n);
      CHECK(b.commutative());
      CHECK(expand(b) == commutative_image(ref::row_ordered(k, n, true)));
    }
  }
  CHECK(expand(rdet(3, 3)) == commutative_image(ref::row_ordered(3, 3, true)));
}

TEST_CASE("row-ordered rectangular determinant") {
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = k; n <= 6; ++n) {
      const Abp b = rdet_nc(k, n);
      CHECK(expand(b) == ref::row_ordered(k, n, true));
      CHECK(b.node_count() <= ref::binom_tail(n, k));
    }
  }
}
