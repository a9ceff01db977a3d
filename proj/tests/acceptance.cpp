// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "abp/algebra.hpp"
#include "abp/applications.hpp"
#include "abp/catalog.hpp"
#include "abp/constructions.hpp"
#include "abp/oracle.hpp"
#include "abp/random.hpp"
#include "oracles.hpp"

using namespace abp;

namespace {

// Time limits in seconds and the explicitness gate.
constexpr double kLimitSStar = 30.0;
constexpr double kLimitDet = 10.0;
constexpr double kLimitRdet = 60.0;
constexpr double kTimePerNodeFactor = 10.0;
// Bench rows below this many nodes are dominated by fixed overhead.
constexpr std::size_t kBenchMinNodes = 20;

const Field Q = Field::rationals();

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string nk(std::size_t n, std::size_t k) { return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")"; }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

Outcome c1_s_star() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t cases = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4); ++k) {
      ++cases;
      if (!(expand(construct::s_star(n, k)) == ref::s_star(n, k))) o.fail("expansion differs at " + nk(n, k));
    }
  }
  const double s = seconds_since(t0);
  if (s >= kLimitSStar) o.fail("took " + fmt(s) + " s");
  if (o.pass) o.detail = std::to_string(cases) + " (n,k) pairs exact, " + fmt(s) + " s";
  return o;
}

Outcome c2_size() {
  Outcome o;
  double worst = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 4); ++k) {
      const std::size_t h = (k + 1) / 2;
      const std::size_t bound = 2 * (n + h + 2) * ref::binom_tail(n, h);
      const std::size_t nodes = construct::s_star(n, k).node_count();
      worst = std::max(worst, static_cast<double>(nodes) / static_cast<double>(bound));
      if (nodes > bound) o.fail(std::to_string(nodes) + " nodes > " + std::to_string(bound) + " at " + nk(n, k));
    }
  }
  if (o.pass) o.detail = "largest nodes/bound ratio " + fmt(worst);
  return o;
}

Outcome c3_ncdet() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t k = 1; k <= 5; ++k) {
    const Abp b = construct::ncdet(k);
    if (b.node_count() != (std::size_t{1} << k)) o.fail("k=" + std::to_string(k) + " has " + std::to_string(b.node_count()) + " nodes");
    if (!(expand(b) == ref::row_ordered(k, k, true))) o.fail("expansion differs at k=" + std::to_string(k));
  }
  const double s = seconds_since(t0);
  if (s >= kLimitDet) o.fail("took " + fmt(s) + " s");
  if (o.pass) o.detail = "k=1..5, 2^k nodes, exact, " + fmt(s) + " s";
  return o;
}

Outcome c4_sign() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t k = 1; k <= 7; ++k) {
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      ++cases;
      if (construct::sign_of_insertion_chain(sigma) != ref::inversion_sign(sigma)) o.fail("mismatch for k=" + std::to_string(k));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  if (o.pass) o.detail = std::to_string(cases) + " permutations (5040 for k=7)";
  return o;
}

Outcome c5_weak() {
  Outcome o;
  std::size_t words = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    std::uint64_t p = n + 1;
    while (!is_prime(p)) ++p;
    for (Field f : {Q, Field::prime(p)}) {
      std::vector<Scalar> alpha;
      for (std::size_t i = 1; i <= n; ++i) alpha.push_back(f.from_int(static_cast<long long>(i)));
      for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
        const NCPoly w = expand(construct::weak_s_star(n, k, alpha));
        ref::for_each_word(n, k, [&](const Word& word) {
          ++words;
          const Scalar c = w.coeff(word);
          if (c.is_zero() == ref::multilinear(word)) o.fail("support wrong at " + nk(n, k) + " over " + f.name());
          if (c.is_zero()) return;
          // V[q][j] = alpha_{w_q}^{j+1}
          Matrix v(f, k, k);
          for (std::size_t q = 0; q < k; ++q) {
            Scalar pw = alpha[word[q]];
            for (std::size_t j = 0; j < k; ++j) {
              v(q, j) = pw;
              pw *= alpha[word[q]];
            }
          }
          if (!(c == ref::leibniz_det(v))) o.fail("coefficient is not the Vandermonde determinant at " + nk(n, k));
        });
      }
    }
  }
  if (o.pass) o.detail = std::to_string(words) + " words over Q and F_p";
  return o;
}

Outcome c6_rdet() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  std::size_t trials = 0;
  for (std::size_t k = 1; k <= 4; ++k) {
    for (std::size_t n = k; n <= 7; ++n) {
      const Abp b = construct::rdet(k, n);
      for (int t = 0; t < 20; ++t) {
        ++trials;
        const auto x = random_point(rng, k * n);
        RectScalarMatrix a(Q, k, n);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < n; ++j) a(i, j) = x[i * n + j];
        }
        const Scalar brute = ref::cullis_det(x, k, n);
        if (!(eval_scalar(b, x) == brute)) o.fail("ABP value differs at " + nk(n, k));
        if (!(rdet_dp(a) == brute)) o.fail("sweep value differs at " + nk(n, k));
      }
    }
  }
  const double s = seconds_since(t0);
  if (s >= kLimitRdet) o.fail("took " + fmt(s) + " s");
  if (o.pass) o.detail = std::to_string(trials) + " random matrices, " + fmt(s) + " s";
  return o;
}

Outcome c7_hadamard() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const std::size_t degree = 1 + t % 3;  // at most 4 layers
    const Abp a = random_homogeneous_abp(rng, 3, degree, 3);
    const Abp b = random_homogeneous_abp(rng, 3, degree, 3);
    const Abp h = hadamard_abp(a, b);
    if (!(expand(h) == hadamard(expand(a), expand(b)))) o.fail("expansion differs in trial " + std::to_string(t));
    for (std::size_t l = 0; l < a.num_layers(); ++l) {
      if (h.num_layers() != a.num_layers() || h.layer_size(l) != a.layer_size(l) * b.layer_size(l)) {
        o.fail("layer sizes differ in trial " + std::to_string(t));
        break;
      }
    }
  }
  if (o.pass) o.detail = "100 random pairs";
  return o;
}

Outcome c8_transitions() {
  Outcome o;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 50; ++t) {
    const std::size_t degree = 1 + t % 3;
    const Abp f = random_homogeneous_abp(rng, 3, degree, 3);
    const Abp g = random_homogeneous_abp(rng, 3, degree, 3);
    const auto x = random_point(rng, 3);
    const Scalar want = substitute(hadamard(expand(f), expand(g)), x);
    const TransitionMatrices tm = transition_matrices(g);
    std::vector<Matrix> mats;
    for (Var v = 0; v < 3; ++v) mats.push_back(x[v] * tm.dense(v));
    const Matrix value = eval_algebra<Matrix>(f, mats);
    if (!(value(tm.source_index(), tm.sink_index()) == want)) o.fail("dense entry differs in trial " + std::to_string(t));
    if (!(eval_through_transitions(f, tm, x) == want)) o.fail("sparse route differs in trial " + std::to_string(t));
  }
  if (o.pass) o.detail = "50 random triples, dense and sparse";
  return o;
}

// Simple k-vertex paths by brute force over vertex sequences.
std::uint64_t brute_paths(const apps::Digraph& g, std::size_t k) {
  std::uint64_t c = 0;
  ref::for_each_injection(k, g.size(), [&](const std::vector<std::size_t>& s) {
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (!g.has_edge(s[i], s[i + 1])) return;
    }
    ++c;
  });
  return c;
}

Outcome c9_paths() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::vector<apps::Digraph> graphs;
  for (int i = 0; i < 30; ++i) graphs.push_back(random_digraph(rng, 3 + i % 5, 0.25 + 0.05 * (i % 6)));
  apps::Digraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(2, 0);
  graphs.push_back(tri);
  graphs.push_back(apps::Digraph::complete(3));
  graphs.push_back(apps::Digraph::complete(7));
  graphs.push_back(apps::Digraph::path(7));
  graphs.push_back(apps::Digraph::cycle(6));
  graphs.push_back(apps::Digraph::complete_bipartite(3, 4));
  std::size_t cases = 0;
  for (const auto& g : graphs) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(g.size(), 4); ++k) {
      ++cases;
      const std::uint64_t truth = brute_paths(g, k);
      const std::string at = nk(g.size(), k);
      if (apps::enumerate_k_paths(g, k) != truth) o.fail("enumeration differs at " + at);
      if (apps::count_k_paths_direct(g, k) != truth) o.fail("direct route differs at " + at);
      if (apps::count_k_paths_via_rdet(g, k) != truth) o.fail("rdet route differs at " + at);
      if (apps::count_k_paths_via_transitions(g, k) != truth) o.fail("transition route differs at " + at);
    }
  }
  if (o.pass) o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(cases) + " (graph,k) cases";
  return o;
}

Outcome c10_algebra() {
  Outcome o;
  std::mt19937_64 rng(10);
  std::size_t cases = 0;
  for (std::size_t r = 1; r <= 3; ++r) {
    const auto mr = matrix_algebra(r);
    for (std::size_t k = 1; k <= 3; ++k) {
      for (std::size_t n = k; n <= 5; ++n) {
        std::vector<Matrix> grid;
        std::vector<AlgebraElement> el;
        for (std::size_t i = 0; i < k * n; ++i) {
          Matrix m(Q, r, r);
          for (std::size_t a = 0; a < r; ++a) {
            for (std::size_t b = 0; b < r; ++b) m(a, b) = random_rational(rng, 3, 2);
          }
          grid.push_back(m);
          el.push_back(to_algebra_element(mr, m));
        }
        for (bool signed_sum : {false, true}) {
          ++cases;
          if (!(to_matrix(rper_algebra(el, k, n, signed_sum)) == ref::matrix_injection_sum(grid, k, n, signed_sum))) {
            o.fail(std::string(signed_sum ? "rdet" : "rper") + " differs at r=" + std::to_string(r) + " " + nk(n, k));
          }
        }
      }
    }
  }
  // Timing smoke: r = 1 -> 2 at fixed n, recorded only.
  std::string timing;
  for (std::size_t k = 1; k <= 3; ++k) {
    double t[2];
    for (std::size_t r = 1; r <= 2; ++r) {
      const auto mr = matrix_algebra(r);
      std::vector<AlgebraElement> el;
      for (std::size_t i = 0; i < k * 5; ++i) {
        std::vector<Scalar> c;
        for (std::size_t d = 0; d < r * r; ++d) c.push_back(random_rational(rng, 3, 1));
        el.emplace_back(mr, c);
      }
      const auto t0 = std::chrono::steady_clock::now();
      int reps = 0;
      do {
        (void)rper_algebra(el, k, 5, false);
        ++reps;
      } while (seconds_since(t0) < 0.02);
      t[r - 1] = seconds_since(t0) / reps;
    }
    timing += " k=" + std::to_string(k) + ":x" + fmt(t[1] / t[0]);
  }
  if (o.pass) o.detail = std::to_string(cases) + " cases; time ratio r=2 vs r=1 (n=5)" + timing;
  return o;
}

Outcome c11_explicitness() {
  Outcome o;
  struct Grid {
    std::string family;
    std::vector<std::pair<std::size_t, std::size_t>> nk;
  };
  std::vector<Grid> grids;
  auto nk_grid = [](std::size_t n_lo, std::size_t n_hi, std::size_t k_lo, std::size_t k_hi) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
      for (std::size_t k = k_lo; k <= std::min(n, k_hi); ++k) out.emplace_back(n, k);
    }
    return out;
  };
  grids.push_back({"s-star", nk_grid(4, 9, 2, 5)});
  grids.push_back({"rper-nc", nk_grid(4, 8, 2, 4)});
  grids.push_back({"rdet", nk_grid(4, 8, 2, 5)});
  grids.push_back({"weak-s-star", nk_grid(4, 8, 3, 7)});
  std::vector<std::pair<std::size_t, std::size_t>> det;
  for (std::size_t k = 5; k <= 10; ++k) det.emplace_back(k, k);
  grids.push_back({"ncdet", det});
  std::string summary;
  for (const auto& g : grids) {
    double lo = 0, hi = 0;
    for (auto [n, k] : g.nk) {
      const BenchRow row = bench_family(g.family, n, k, 3, 0.02);
      if (row.nodes < kBenchMinNodes) continue;
      const double p = row.per_node();
      lo = lo == 0 ? p : std::min(lo, p);
      hi = std::max(hi, p);
    }
    const double ratio = lo > 0 ? hi / lo : 0;
    summary += " " + g.family + ":" + fmt(ratio);
    if (lo == 0) o.fail(g.family + " has no rows to compare");
    if (ratio > kTimePerNodeFactor) o.fail(g.family + " time per node varies by x" + fmt(ratio));
  }
  o.detail = "max/min time per node" + summary + (o.pass ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"s-star expansion equals brute force", c1_s_star},
      {"s-star node count within the size bound", c2_size},
      {"determinant ABP has 2^k nodes and is exact", c3_ncdet},
      {"insertion-sign chains equal permutation parity", c4_sign},
      {"weakly equivalent ABP support and Vandermonde coefficients", c5_weak},
      {"rectangular determinant: ABP, sweep and brute force agree", c6_rdet},
      {"Hadamard product of random ABPs", c7_hadamard},
      {"evaluation through transition matrices", c8_transitions},
      {"k-path counts: direct, rdet pipeline, enumeration", c9_paths},
      {"algebra-valued rper/rdet over M_r(Q)", c10_algebra},
      {"construction time per node stays bounded", c11_explicitness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%2zu] %s  %s: %s\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
