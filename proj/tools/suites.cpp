#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

#include "abp/algebra.hpp"
#include "abp/applications.hpp"
#include "abp/constructions.hpp"
#include "abp/oracle.hpp"
#include "abp/random.hpp"

using namespace abp;

namespace {

struct Ctx {
  std::size_t max_n;
  std::size_t max_k;
  SuiteResult& r;
  void check(bool ok, const std::string& what) {
    ++r.cases;
    if (!ok && r.passed) {
      r.passed = false;
      r.detail = what;
    }
  }
};

std::string nk(std::size_t n, std::size_t k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }

void sstar(Ctx& c) {
  for (std::size_t n = 1; n <= c.max_n; ++n) {
    for (std::size_t k = 1; k <= std::min(n, c.max_k); ++k) {
      c.check(expand(construct::s_star(n, k)) == oracle::s_star(n, k), "s-star " + nk(n, k));
      c.check(expand(construct::rper_nc(k, n)) == oracle::rper(k, n, false), "rper-nc " + nk(n, k));
    }
  }
}

void ncdet(Ctx& c) {
  for (std::size_t k = 1; k <= c.max_k; ++k) {
    const Abp b = construct::ncdet(k);
    c.check(b.node_count() == (std::size_t{1} << k), "ncdet size k=" + std::to_string(k));
    c.check(expand(b) == oracle::det(k), "ncdet k=" + std::to_string(k));
  }
}

void sign(Ctx& c) {
  for (std::size_t k = 1; k <= std::max<std::size_t>(c.max_k, 1); ++k) {
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      c.check(construct::sign_of_insertion_chain(sigma) == oracle::pattern_sign(sigma), "sign k=" + std::to_string(k));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t p = n + 1;
  while (!is_prime(p)) ++p;
  return p;
}

// det of V[q][j] = alpha_{w_q}^{j+1}, by Leibniz.
Scalar vandermonde(const Word& w, const std::vector<Scalar>& alphas, Field f) {
  const std::size_t k = w.size();
  std::vector<std::size_t> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  Scalar total = f.zero();
  do {
    Scalar term = oracle::pattern_sign(sigma) > 0 ? f.one() : -f.one();
    for (std::size_t q = 0; q < k; ++q) {
      for (std::size_t e = 0; e <= sigma[q]; ++e) term *= alphas[w[q]];
    }
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

void weak(Ctx& c) {
  for (std::size_t n = 1; n <= c.max_n; ++n) {
    for (std::size_t k = 1; k <= std::min(n, c.max_k); ++k) {
      for (Field f : {Field::rationals(), Field::prime(next_prime(n))}) {
        const NCPoly w = expand(construct::weak_s_star(n, k, f));
        const NCPoly s = oracle::s_star(n, k, f);
        bool same = w.size() == s.size();
        for (const auto& [word, _] : s.terms()) {
          same = same && w.coeff(word) == vandermonde(word, construct::default_alphas(n, f), f);
        }
        c.check(same, "weak coefficients " + nk(n, k) + " " + f.name());
        const NCPoly p = expand(construct::positive_weak(n, k, f));
        bool pos = p.size() == s.size();
        for (const auto& [word, coef] : p.terms()) {
          pos = pos && !s.coeff(word).is_zero() && (!f.is_rational() || coef.as_rational().value() > 0);
        }
        c.check(pos, "positive weak " + nk(n, k) + " " + f.name());
      }
    }
  }
}

void rdet(Ctx& c) {
  std::mt19937_64 rng(11);
  for (std::size_t k = 1; k <= c.max_k; ++k) {
    for (std::size_t n = k; n <= c.max_n; ++n) {
      c.check(expand(construct::rdet(k, n)) == oracle::rdet(k, n), "rdet " + nk(n, k));
      c.check(expand(construct::rdet_nc(k, n)) == oracle::rdet_nc(k, n), "rdet-nc " + nk(n, k));
      const auto point = random_point(rng, k * n);
      RectScalarMatrix a(Field::rationals(), k, n);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = point[i * n + j];
      }
      c.check(rdet_dp(a) == substitute(oracle::rdet(k, n), point), "rdet_dp " + nk(n, k));
      c.check(rper_dp(a) == substitute(oracle::rper(k, n, true), point), "rper_dp " + nk(n, k));
    }
  }
}

void hadamard_suite(Ctx& c) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 1 + t % 4;
    const Abp a = random_homogeneous_abp(rng, 3, d, 3);
    const Abp b = random_homogeneous_abp(rng, 3, d, 3);
    const Abp h = hadamard_abp(a, b);
    bool sizes = h.num_layers() == a.num_layers();
    for (std::size_t l = 0; sizes && l < h.num_layers(); ++l) sizes = h.layer_size(l) == a.layer_size(l) * b.layer_size(l);
    c.check(sizes, "hadamard layer sizes, trial " + std::to_string(t));
    c.check(expand(h) == hadamard(expand(a), expand(b)), "hadamard expansion, trial " + std::to_string(t));
    const auto point = random_point(rng, 3);
    c.check(eval_through_transitions(a, transition_matrices(b), point) ==
                substitute(hadamard(expand(a), expand(b)), point),
            "transition evaluation, trial " + std::to_string(t));
  }
}

void paths(Ctx& c) {
  std::mt19937_64 rng(3);
  std::vector<apps::Digraph> graphs;
  for (std::size_t n = 2; n <= c.max_n; ++n) {
    graphs.push_back(apps::Digraph::path(n));
    graphs.push_back(apps::Digraph::cycle(n));
    graphs.push_back(apps::Digraph::complete(n));
    graphs.push_back(random_digraph(rng, n, 0.4));
  }
  for (const auto& g : graphs) {
    for (std::size_t k = 1; k <= std::min(g.size(), c.max_k); ++k) {
      const auto truth = apps::enumerate_k_paths(g, k);
      const std::string what = "paths " + nk(g.size(), k);
      c.check(apps::count_k_paths_direct(g, k) == truth, what + " direct");
      c.check(apps::count_k_paths_via_rdet(g, k) == truth, what + " rdet");
      c.check(apps::count_k_paths_via_transitions(g, k) == truth, what + " transitions");
    }
  }
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t r) {
  Matrix m(Field::rationals(), r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m(i, j) = random_rational(rng, 3, 1);
  }
  return m;
}

void algebra(Ctx& c) {
  std::mt19937_64 rng(5);
  for (std::size_t r = 1; r <= 2; ++r) {
    const auto mr = matrix_algebra(r);
    for (std::size_t k = 1; k <= std::min<std::size_t>(c.max_k, 3); ++k) {
      for (std::size_t n = k; n <= std::min<std::size_t>(c.max_n, 4); ++n) {
        std::vector<Matrix> grid;
        std::vector<AlgebraElement> elems;
        for (std::size_t i = 0; i < k * n; ++i) {
          grid.push_back(random_matrix(rng, r));
          elems.push_back(to_algebra_element(mr, grid.back()));
        }
        for (bool signed_sum : {false, true}) {
          // injection sum with ordered products
          Matrix want = Matrix(Field::rationals(), r, r);
          std::vector<std::size_t> cols(n);
          std::iota(cols.begin(), cols.end(), 0);
          std::vector<std::size_t> pick;
          std::vector<bool> used(n, false);
          auto rec = [&](auto& self) -> void {
            if (pick.size() == k) {
              Matrix p = Matrix::identity(Field::rationals(), r);
              for (std::size_t i = 0; i < k; ++i) p = p * grid[i * n + pick[i]];
              if (signed_sum && oracle::pattern_sign(pick) < 0) p = Field::rationals().from_int(-1) * p;
              want = want + p;
              return;
            }
            for (std::size_t j = 0; j < n; ++j) {
              if (used[j]) continue;
              used[j] = true;
              pick.push_back(j);
              self(self);
              pick.pop_back();
              used[j] = false;
            }
          };
          rec(rec);
          c.check(to_matrix(rper_algebra(elems, k, n, signed_sum)) == want,
                  std::string(signed_sum ? "rdet" : "rper") + " over M_" + std::to_string(r) + " " + nk(n, k));
        }
      }
    }
  }
}

const std::map<std::string, std::function<void(Ctx&)>>& suites() {
  static const std::map<std::string, std::function<void(Ctx&)>> s = {
      {"sstar", sstar}, {"ncdet", ncdet},   {"sign", sign},   {"weak", weak},
      {"rdet", rdet},   {"hadamard", hadamard_suite}, {"paths", paths}, {"algebra", algebra},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> run_suites(const std::string& suite, std::size_t max_n, std::size_t max_k) {
  std::vector<std::string> which;
  if (suite == "all") {
    which = suite_names();
  } else if (suites().contains(suite)) {
    which.push_back(suite);
  } else {
    throw DomainError("unknown suite: " + suite);
  }
  std::vector<SuiteResult> out;
  for (const auto& name : which) {
    SuiteResult r;
    r.name = name;
    Ctx c{max_n, max_k, r};
    try {
      suites().at(name)(c);
    } catch (const GuardExceeded&) {
      throw;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    out.push_back(r);
  }
  return out;
}
