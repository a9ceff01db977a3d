#include "abp/applications.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "abp/constructions.hpp"

namespace abp::apps {

Digraph::Digraph(std::size_t n) : n_(n) {}

void Digraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
  edges_.insert({u, v});
}

Digraph Digraph::path(std::size_t n) {
  Digraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Digraph Digraph::cycle(std::size_t n) {
  Digraph g(n);
  for (std::size_t i = 0; i < n && n > 1; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Digraph Digraph::complete(std::size_t n) {
  Digraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) g.add_edge(u, v);
    }
  }
  return g;
}

Digraph Digraph::complete_bipartite(std::size_t a, std::size_t b) {
  Digraph g(a + b);
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Digraph parse_edge_list(std::istream& in, std::size_t min_n) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::size_t n = min_n;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    std::string extra;
    if (!(ls >> v) || (ls >> extra)) throw DomainError("line " + std::to_string(lineno) + ": expected \"u v\"");
    if (u < 1 || v < 1) throw DomainError("line " + std::to_string(lineno) + ": vertices are numbered from 1");
    arcs.emplace_back(u - 1, v - 1);
    n = std::max({n, static_cast<std::size_t>(u), static_cast<std::size_t>(v)});
  }
  Digraph g(n);
  for (auto [u, v] : arcs) g.add_edge(u, v);
  return g;
}

Digraph load_edge_list(const std::string& path, std::size_t min_n) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return parse_edge_list(in, min_n);
}

Abp graph_poly_abp(const Digraph& g, std::size_t k) {
  const std::size_t n = g.size();
  if (k < 1) throw DomainError("need k >= 1");
  if (n < 1) throw DomainError("graph has no vertices");
  std::vector<std::size_t> sizes{1};
  for (std::size_t q = 1; q < k; ++q) sizes.push_back(n);
  sizes.push_back(1);
  Abp b(Field::rationals(), n, sizes);
  const Scalar one = Field::rationals().one();
  if (k == 1) {
    LinForm all;
    for (std::size_t v = 0; v < n; ++v) all.add(static_cast<Var>(v), one);
    b.add_edge(0, 0, 0, all);
    return b;
  }
  // source -> v emits a predecessor u of v
  std::vector<LinForm> into(n);
  for (auto [u, v] : g.edges()) into[v].add(static_cast<Var>(u), one);
  for (std::size_t v = 0; v < n; ++v) {
    if (!into[v].is_zero()) b.add_edge(0, 0, static_cast<NodeId>(v), into[v]);
  }
  for (std::size_t q = 1; q + 1 < k; ++q) {
    for (auto [u, v] : g.edges()) {
      b.add_edge(q, static_cast<NodeId>(u), static_cast<NodeId>(v), LinForm::variable(static_cast<Var>(u), one));
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    b.add_edge(k - 1, static_cast<NodeId>(u), 0, LinForm::variable(static_cast<Var>(u), one));
  }
  return normalize(b);
}

Abp split_graph_abp(const Digraph& g, std::size_t k) {
  const Abp c = graph_poly_abp(g, k);
  const std::size_t n = g.size();
  const RectMatrixVars grid(2 * k, 2 * n);
  std::vector<std::size_t> sizes;
  for (std::size_t l = 0; l < c.num_layers(); ++l) {
    sizes.push_back(c.layer_size(l));
    if (l + 1 < c.num_layers()) sizes.push_back(n);
  }
  Abp b(c.field(), grid.size(), sizes);
  // Mid node j of split layer i stands for "just emitted z_j". Every edge
  // that emits z_j leaves the node j (or the source), so the targets reachable
  // after z_j do not depend on where it was emitted.
  const Scalar one = c.field().one();
  for (std::size_t e = 0; e < c.num_edge_layers(); ++e) {
    const std::size_t i = e + 1;
    std::map<std::pair<NodeId, Var>, std::set<NodeId>> targets;
    std::map<std::pair<Var, NodeId>, Scalar> second;
    for (const Edge& edge : c.edges(e)) {
      if (edge.label.constant()) throw DomainError("graph ABP label has a constant");
      for (const auto& [v, coef] : edge.label.terms()) {
        targets[{edge.from, v}].insert(edge.to);
        auto [it, fresh] = second.try_emplace({v, edge.to}, coef);
        if (!fresh && it->second != coef) throw DomainError("graph ABP is not split-compatible");
      }
    }
    std::map<Var, std::set<NodeId>> after;
    for (const auto& [key, to] : targets) {
      auto [it, fresh] = after.try_emplace(key.second, to);
      if (!fresh && it->second != to) throw DomainError("graph ABP is not split-compatible");
    }
    for (const auto& [key, to] : targets) {
      const auto [from, v] = key;
      b.add_edge(2 * e, from, v, LinForm::variable(grid.id(2 * i - 1, v + 1), one));
    }
    for (const auto& [key, coef] : second) {
      b.add_edge(2 * e + 1, key.first, key.second, LinForm::variable(grid.id(2 * i, n + key.first + 1), coef));
    }
  }
  return normalize(b);
}

Abp tau_substitute(const Abp& b, std::size_t n) {
  const RectMatrixVars grid(b.nvars() / (2 * n), 2 * n);
  if (grid.size() != b.nvars()) throw DomainError("ABP variables do not form a 2k x 2n grid");
  Abp out(b.field(), n, b.layer_sizes(), b.commutative());
  out.set_sources(b.sources());
  out.set_sinks(b.sinks());
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    for (const Edge& edge : b.edges(e)) {
      LinForm label;
      if (edge.label.constant()) label.add_constant(*edge.label.constant());
      for (const auto& [v, c] : edge.label.terms()) {
        if (grid.row_of(v) % 2 == 1) {
          const std::size_t col = grid.col_of(v);
          if (col > n) throw DomainError("odd-row variable outside the first n columns");
          label.add(static_cast<Var>(col - 1), c);
        } else {
          label.add_constant(c);
        }
      }
      out.add_edge(e, edge.from, edge.to, label);
    }
  }
  return out;
}

Abp filter_abp(std::size_t k, std::size_t n) {
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  const RectMatrixVars grid(2 * k, 2 * n);
  std::vector<std::size_t> sizes{1};
  for (std::size_t i = 0; i < k; ++i) {
    sizes.push_back(n);
    sizes.push_back(1);
  }
  const Field f = Field::rationals();
  Abp b(f, grid.size(), sizes);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b.add_edge(2 * i, 0, static_cast<NodeId>(j), LinForm::variable(grid.id(2 * i + 1, j + 1), f.one()));
      b.add_edge(2 * i + 1, static_cast<NodeId>(j), 0, LinForm::variable(grid.id(2 * i + 2, n + j + 1), f.one()));
    }
  }
  return b;
}

std::vector<std::vector<std::size_t>> doubled_injections(std::size_t k, std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> g;
  std::vector<bool> used(n, false);
  auto rec = [&](auto& self) -> void {
    if (g.size() == k) {
      std::vector<std::size_t> f;
      for (std::size_t x : g) {
        f.push_back(x);
        f.push_back(n + x);
      }
      out.push_back(std::move(f));
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      g.push_back(j);
      self(self);
      g.pop_back();
      used[j] = false;
    }
  };
  rec(rec);
  return out;
}

int doubled_sign(std::size_t k) { return (k * (k - 1) / 2) % 2 ? -1 : 1; }

std::uint64_t enumerate_k_paths(const Digraph& g, std::size_t k) {
  const std::size_t n = g.size();
  if (k < 1) throw DomainError("need k >= 1");
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [u, v] : g.edges()) {
    if (u != v) out[u].push_back(v);
  }
  std::vector<bool> on_path(n, false);
  std::uint64_t count = 0;
  std::uint64_t steps = 0;
  auto dfs = [&](auto& self, std::size_t u, std::size_t len) -> void {
    if (++steps > kMaxDfsSteps) throw GuardExceeded("path enumeration exceeds the step guard");
    if (len == k) {
      ++count;
      return;
    }
    on_path[u] = true;
    for (std::size_t v : out[u]) {
      if (!on_path[v]) self(self, v, len + 1);
    }
    on_path[u] = false;
  };
  for (std::size_t u = 0; u < n; ++u) dfs(dfs, u, 1);
  return count;
}

namespace {

std::uint64_t to_count(const Scalar& s, int sign) {
  const Rational r = s.as_rational();
  mpq_class q = r.value() * sign;
  if (q.get_den() != 1 || q < 0) throw std::logic_error("path count is not a nonnegative integer: " + s.to_string());
  return q.get_num().get_ui();
}

std::vector<Scalar> ones(std::size_t n) { return std::vector<Scalar>(n, Field::rationals().one()); }

}  // namespace

std::uint64_t count_k_paths_direct(const Digraph& g, std::size_t k) {
  const std::size_t n = g.size();
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  const Abp h = hadamard_abp(construct::s_star(n, k), graph_poly_abp(g, k));
  return to_count(eval_scalar(h, ones(n)), 1);
}

std::uint64_t count_k_paths_via_rdet(const Digraph& g, std::size_t k) {
  const std::size_t n = g.size();
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  const Abp fc = normalize(hadamard_abp(filter_abp(k, n), split_graph_abp(g, k)));
  const Abp h = hadamard_abp(construct::rdet_nc(2 * k, 2 * n), fc);
  return to_count(eval_scalar(h, ones(h.nvars())), doubled_sign(k));
}

std::uint64_t count_k_paths_via_transitions(const Digraph& g, std::size_t k) {
  const std::size_t n = g.size();
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  const Abp fc = normalize(hadamard_abp(filter_abp(k, n), split_graph_abp(g, k)));
  const TransitionMatrices tm = transition_matrices(fc);
  const Abp r = construct::rdet_nc(2 * k, 2 * n);
  return to_count(eval_through_transitions(r, tm, ones(r.nvars())), doubled_sign(k));
}

}  // namespace abp::apps
