#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abp/abp.hpp"
#include "abp/constructions.hpp"
#include "abp/random.hpp"
#include "oracles.hpp"

using namespace abp;

namespace {

const Field Q = Field::rationals();

LinForm lin(std::initializer_list<std::pair<Var, long long>> terms) {
  LinForm l;
  for (auto [v, c] : terms) l.add(v, Q.from_int(c));
  return l;
}

// One path per label: a chain.
Abp chain(std::size_t nvars, std::vector<LinForm> labels) {
  Abp b(Q, nvars, std::vector<std::size_t>(labels.size() + 1, 1));
  for (std::size_t e = 0; e < labels.size(); ++e) b.add_edge(e, 0, 0, labels[e]);
  return b;
}

}  // namespace

TEST_CASE("linear forms") {
  LinForm l = lin({{2, 3}, {0, 1}});
  CHECK(l.terms().front().first == 0);
  CHECK(l.is_homogeneous());
  l.add(0, Q.from_int(-1));
  CHECK(l.terms().size() == 1);
  l.add_constant(Q.from_int(4));
  CHECK_FALSE(l.is_homogeneous());
  CHECK(l.to_string() == "3*y_{3} + 4");
  CHECK(LinForm::constant_term(Q.one()).is_scalar());
  CHECK(LinForm().is_zero());
  const std::vector<Scalar> pt{Q.from_int(1), Q.from_int(1), Q.from_int(2)};
  CHECK(l.eval(pt, Q) == Q.from_int(10));
}

TEST_CASE("expansion of small ABPs") {
  CHECK(expand(chain(2, {lin({{0, 1}, {1, 1}})})) == ref::s_star(2, 1));
  NCPoly y1y2(Q, 2);
  y1y2.add_term({0, 1}, Q.one());
  CHECK(expand(chain(2, {lin({{0, 1}}), lin({{1, 1}})})) == y1y2);
  // two parallel paths
  Abp b(Q, 2, {1, 2, 1});
  b.add_edge(0, 0, 0, lin({{0, 1}}));
  b.add_edge(0, 0, 1, lin({{1, 1}}));
  b.add_edge(1, 0, 0, lin({{1, 1}}));
  b.add_edge(1, 1, 0, lin({{0, 1}}));
  CHECK(expand(b) == ref::s_star(2, 2));
  CHECK(eval_scalar(b, std::vector<Scalar>{Q.from_int(2), Q.from_int(3)}) == Q.from_int(12));
}

TEST_CASE("edge validation") {
  Abp b(Q, 2, {1, 2, 1});
  CHECK_THROWS_AS(b.add_edge(2, 0, 0, lin({{0, 1}})), DomainError);
  CHECK_THROWS_AS(b.add_edge(0, 1, 0, lin({{0, 1}})), DomainError);
  CHECK_THROWS_AS(b.add_edge(0, 0, 2, lin({{0, 1}})), DomainError);
  CHECK_THROWS_AS(b.add_edge(0, 0, 0, lin({{5, 1}})), DomainError);
  LinForm fp;
  fp.add(0, Field::prime(5).one());
  CHECK_THROWS_AS(b.add_edge(0, 0, 0, fp), DomainError);
  CHECK_THROWS_AS(b.set_sources({3}), DomainError);
}

TEST_CASE("empty path product is one") {
  Abp b(Q, 1, {1});
  CHECK(eval_scalar(b, std::vector<Scalar>{Q.from_int(7)}) == Q.one());
  CHECK(expand(b) == NCPoly::constant(Q, 1, Q.one()));
}

TEST_CASE("evaluation agrees with expansion") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const Abp b = random_homogeneous_abp(rng, 3, 1 + t % 4, 3);
    const auto pt = random_point(rng, 3);
    CHECK(eval_scalar(b, pt) == substitute(expand(b), pt));
  }
  const Abp s = construct::s_star(5, 3);
  CHECK(eval_scalar(s, std::vector<Scalar>(5, Q.one())) == Q.from_int(60));
}

TEST_CASE("algebra evaluation on 1x1 matrices") {
  std::mt19937_64 rng(4);
  const Abp b = random_homogeneous_abp(rng, 3, 3, 3);
  const auto pt = random_point(rng, 3);
  std::vector<Matrix> mats;
  for (const auto& x : pt) {
    Matrix m(Q, 1, 1);
    m(0, 0) = x;
    mats.push_back(m);
  }
  CHECK(eval_algebra<Matrix>(b, mats)(0, 0) == eval_scalar(b, pt));
}

TEST_CASE("algebra evaluation keeps the path order") {
  // y1 y2 at noncommuting matrices
  Matrix a(Q, 2, 2), c(Q, 2, 2);
  a(0, 1) = Q.one();
  c(1, 0) = Q.one();
  const Abp b = chain(2, {lin({{0, 1}}), lin({{1, 1}})});
  const Matrix v = eval_algebra<Matrix>(b, std::vector<Matrix>{a, c});
  CHECK(v == a * c);
  CHECK_FALSE(v == c * a);
}

TEST_CASE("transition matrices") {
  const Abp one = chain(1, {lin({{0, 1}})});
  const TransitionMatrices tm = transition_matrices(one);
  Matrix want(Q, 2, 2);
  want(0, 1) = Q.one();
  CHECK(tm.dense(0) == want);
  CHECK(tm.source_index() == 0);
  CHECK(tm.sink_index() == 1);

  Abp empty(Q, 2, {1, 1});
  const TransitionMatrices tz = transition_matrices(empty);
  CHECK(tz.dense(0) == Matrix(Q, 2, 2));
  CHECK(tz.dense(1) == Matrix(Q, 2, 2));

  Abp affine = chain(1, {lin({{0, 1}})});
  affine.mutable_edges(0).front().label.add_constant(Q.one());
  CHECK_THROWS_AS(transition_matrices(affine), DomainError);
}

TEST_CASE("evaluation through transition matrices") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const std::size_t d = 1 + t % 4;
    const Abp f = random_homogeneous_abp(rng, 3, d, 3);
    const Abp g = random_homogeneous_abp(rng, 3, d, 3);
    const auto pt = random_point(rng, 3);
    const Scalar want = substitute(hadamard(expand(f), expand(g)), pt);
    const TransitionMatrices tm = transition_matrices(g);
    CHECK(eval_through_transitions(f, tm, pt) == want);
    // the same through dense matrices a_i M_i
    std::vector<Matrix> mats;
    for (Var v = 0; v < 3; ++v) mats.push_back(pt[v] * tm.dense(v));
    CHECK(eval_algebra<Matrix>(f, mats)(tm.source_index(), tm.sink_index()) == want);
  }
}

TEST_CASE("hadamard product of ABPs") {
  const Abp e = chain(2, {lin({{0, 1}, {1, 1}})});
  CHECK(expand(hadamard_abp(e, e)) == expand(e));
  const Abp d = construct::ncdet(2);
  const NCPoly sq = expand(hadamard_abp(d, d));
  CHECK(sq == hadamard(expand(d), expand(d)));
  for (const auto& [w, c] : sq.terms()) CHECK(c == Q.one());
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const std::size_t deg = 1 + t % 4;
    const Abp a = random_homogeneous_abp(rng, 3, deg, 3);
    const Abp b = random_homogeneous_abp(rng, 3, deg, 3);
    const Abp h = hadamard_abp(a, b);
    CHECK(expand(h) == hadamard(expand(a), expand(b)));
    REQUIRE(h.num_layers() == a.num_layers());
    for (std::size_t l = 0; l < h.num_layers(); ++l) CHECK(h.layer_size(l) == a.layer_size(l) * b.layer_size(l));
  }
  CHECK_THROWS_AS(hadamard_abp(chain(1, {lin({{0, 1}})}), chain(1, {lin({{0, 1}}), lin({{0, 1}})})), DomainError);
}

TEST_CASE("hadamard product with scalar layers") {
  // s_star carries scalar layers; its Hadamard square is itself.
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      const Abp s = construct::s_star(n, k);
      CHECK(expand(hadamard_abp(s, s)) == ref::s_star(n, k));
    }
  }
}

TEST_CASE("mirror join") {
  Abp two(Q, 2, {1, 2});
  two.add_edge(0, 0, 0, lin({{0, 1}}));
  two.add_edge(0, 0, 1, lin({{1, 1}}));
  two.set_sinks({0, 1});
  const std::vector<Scalar> plus{Q.one(), Q.one()};
  const std::vector<Scalar> signs{Q.one(), -Q.one()};
  NCPoly want(Q, 2);
  want.add_term({0, 0}, Q.one());
  want.add_term({1, 1}, -Q.one());
  CHECK(expand(reverse_mirror(two, signs)) == want);
  const Abp m = reverse_mirror(two, plus);
  CHECK(m.is_homogeneous());
  CHECK(m.node_count() <= 2 * two.node_count() + 1);

  const Abp single = with_sinks(two, {0});
  NCPoly y1y1(Q, 2);
  y1y1.add_term({0, 0}, Q.one());
  CHECK(expand(reverse_mirror(single, std::vector<Scalar>{Q.one()})) == y1y1);
}

TEST_CASE("mirror of a multi-output ABP reverses every output") {
  const Abp b1 = construct::half_products(4, 2);
  const auto outs = expand_sinks(b1, 0);
  for (std::size_t i = 0; i < outs.size(); ++i) {
    std::vector<Scalar> links(outs.size(), Q.zero());
    links[i] = Q.one();
    CHECK(expand(reverse_mirror(b1, links)) == outs[i] * reverse(outs[i]));
  }
}

TEST_CASE("noncommutative lift") {
  const Abp c = construct::snk_classic(4, 2);
  CHECK(c.commutative());
  const NCPoly lifted = expand(nc_lift(c));
  for (const auto& [w, coef] : lifted.terms()) CHECK(std::is_sorted(w.begin(), w.end()));
  CHECK(commutative_image(lifted) == expand(c));
  const Abp e = chain(2, {lin({{0, 1}, {1, 2}})});
  CHECK(expand(nc_lift(e)) == expand(e));
}

TEST_CASE("normalize prunes dead nodes") {
  Abp b(Q, 2, {1, 3, 1});
  b.add_edge(0, 0, 0, lin({{0, 1}}));
  b.add_edge(0, 0, 1, lin({{1, 1}}));  // dead end
  b.add_edge(1, 0, 0, lin({{1, 1}}));
  b.add_edge(1, 2, 0, lin({{1, 1}}));  // unreachable
  b.add_edge(1, 0, 0, lin({{0, 1}}));  // parallel edge
  CHECK_FALSE(is_pruned(b));
  const Abp n = normalize(b);
  CHECK(is_pruned(n));
  CHECK(n.layer_size(1) == 1);
  CHECK(n.edge_count() == 2);
  CHECK(expand(n) == expand(b));
}

TEST_CASE("relabeling by position") {
  const Abp s = construct::s_star(3, 2);
  CHECK(expand(set_multilinearize(s, 3)) == ref::row_ordered(2, 3, false));
}

TEST_CASE("expansion guard") {
  const Abp s = construct::s_star(8, 6);
  CHECK_THROWS_AS(expand(s, 1000), GuardExceeded);
  CHECK_THROWS_AS(expand_sinks(construct::half_products(8, 6), 0, 1000), GuardExceeded);
  CHECK_NOTHROW(expand(construct::s_star(4, 2), 1000));
}
