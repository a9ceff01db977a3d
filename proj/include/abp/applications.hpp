#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "abp/abp.hpp"

namespace abp::apps {

/// Directed graph on vertices 0..n-1.
class Digraph {
 public:
  explicit Digraph(std::size_t n);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const { return edges_.contains({u, v}); }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  static Digraph path(std::size_t n);
  static Digraph cycle(std::size_t n);
  static Digraph complete(std::size_t n);
  /// Arcs from every vertex of the first part to every vertex of the second.
  static Digraph complete_bipartite(std::size_t a, std::size_t b);

 private:
  std::size_t n_;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

/// Edge list, one "u v" pair per line, vertices numbered from 1; '#' starts a
/// comment. The vertex count is the largest id seen (or min_n if larger).
Digraph parse_edge_list(std::istream& in, std::size_t min_n = 0);
Digraph load_edge_list(const std::string& path, std::size_t min_n = 0);

/// Graph polynomial over z_1..z_n: sum over k-walks of z_{i1} ... z_{ik}.
/// k edge layers; an inner node is the next vertex of the walk.
Abp graph_poly_abp(const Digraph& g, std::size_t k);

/// graph_poly_abp with every z_j edge of layer i split into y_{2i-1,j}
/// followed by y_{2i,n+j}, over the 2k x 2n grid.
Abp split_graph_abp(const Digraph& g, std::size_t k);

/// Maps y_{i,j} to z_j on odd rows and to 1 on even rows of a 2k x 2n grid
/// (the even layers become scalar layers).
Abp tau_substitute(const Abp& b, std::size_t n);

/// Product of y_{2i-1,j} y_{2i,n+j} sums over i = 1..k: among injective words
/// exactly the doubled injections have coefficient 1.
Abp filter_abp(std::size_t k, std::size_t n);

/// The doubled injections f_g (f(2i-1) = g(i), f(2i) = n + g(i)), 0-based.
std::vector<std::vector<std::size_t>> doubled_injections(std::size_t k, std::size_t n);
/// (-1)^{k(k-1)/2}.
int doubled_sign(std::size_t k);

/// Simple k-vertex paths as ordered sequences, by DFS.
std::uint64_t enumerate_k_paths(const Digraph& g, std::size_t k);
/// Upper bound on DFS steps for enumerate_k_paths.
inline constexpr std::uint64_t kMaxDfsSteps = 100'000'000;

/// S*_{n,k} o C_G at all-ones.
std::uint64_t count_k_paths_direct(const Digraph& g, std::size_t k);
/// rdet o F o C'_G at all-ones, all three as ABPs joined by Hadamard
/// products, divided by (-1)^{k(k-1)/2}.
std::uint64_t count_k_paths_via_rdet(const Digraph& g, std::size_t k);
/// Same quantity, with F o C'_G turned into transition matrices and rdet
/// evaluated on them.
std::uint64_t count_k_paths_via_transitions(const Digraph& g, std::size_t k);

}  // namespace abp::apps
