#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "abp/matrix.hpp"
#include "abp/poly.hpp"
#include "abp/scalar.hpp"

namespace abp {

using NodeId = std::uint32_t;

/// Edge label: sum_i c_i * var_i plus an optional constant. A label without
/// a constant is homogeneous; a label without variables is a pure scalar.
class LinForm {
 public:
  LinForm() = default;

  static LinForm variable(Var v, const Scalar& c);
  static LinForm constant_term(const Scalar& c);

  void add(Var v, const Scalar& c);
  void add_constant(const Scalar& c);
  void add(const LinForm& other);

  /// Sorted by variable, zero coefficients never stored.
  const std::vector<std::pair<Var, Scalar>>& terms() const { return terms_; }
  const std::optional<Scalar>& constant() const { return constant_; }

  bool is_homogeneous() const { return !constant_.has_value(); }
  bool is_scalar() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty() && !constant_; }

  std::optional<Scalar> coeff(Var v) const;
  LinForm scaled(const Scalar& c) const;
  Scalar eval(std::span<const Scalar> point, Field field) const;

  std::string to_string(const VarNamer& namer = plain_namer()) const;

  friend bool operator==(const LinForm& a, const LinForm& b) = default;

 private:
  std::vector<std::pair<Var, Scalar>> terms_;
  std::optional<Scalar> constant_;
};

struct Edge {
  NodeId from = 0;
  NodeId to = 0;
  LinForm label;
};

/// How the edges of one edge layer are labeled.
enum class LayerKind {
  Linear,  // every label homogeneous (an empty layer counts as linear)
  Scalar,  // every label a pure constant
  Mixed,   // anything else
};

/// Layered algebraic branching program. Nodes are identified per layer by an
/// index in [0, layer_size); edge layer e joins node layer e to e+1. The
/// polynomial for a (source, sink) pair is the sum over paths of the ordered
/// product of edge labels.
///
/// Layers of pure scalar edges (the re-wiring layers of a zeta transform, for
/// instance) are allowed next to homogeneous layers; such an ABP is called
/// graded, and its degree is the number of linear layers.
class Abp {
 public:
  Abp() = default;
  Abp(Field field, std::size_t nvars, std::vector<std::size_t> layer_sizes, bool commutative = false);

  Field field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  bool commutative() const { return commutative_; }
  void set_commutative(bool c) { commutative_ = c; }
  void set_nvars(std::size_t n) { nvars_ = n; }

  std::size_t num_layers() const { return layer_sizes_.size(); }
  std::size_t num_edge_layers() const { return edges_.size(); }
  std::size_t layer_size(std::size_t layer) const { return layer_sizes_.at(layer); }
  const std::vector<std::size_t>& layer_sizes() const { return layer_sizes_; }
  std::size_t node_count() const;
  std::size_t edge_count() const;

  void add_edge(std::size_t edge_layer, NodeId from, NodeId to, LinForm label);
  const std::vector<Edge>& edges(std::size_t edge_layer) const { return edges_.at(edge_layer); }
  std::vector<Edge>& mutable_edges(std::size_t edge_layer) { return edges_.at(edge_layer); }

  const std::vector<NodeId>& sources() const { return sources_; }
  const std::vector<NodeId>& sinks() const { return sinks_; }
  void set_sources(std::vector<NodeId> s);
  void set_sinks(std::vector<NodeId> s);

  /// Optional per-node labels (subset bitmasks and the like).
  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(std::size_t layer, NodeId node) const;
  void set_label(std::size_t layer, NodeId node, std::string text);

  LayerKind layer_kind(std::size_t edge_layer) const;
  bool is_homogeneous() const;
  bool is_graded() const;
  /// Number of linear layers; requires a graded ABP.
  std::size_t degree() const;

 private:
  Field field_ = Field::rationals();
  std::size_t nvars_ = 0;
  bool commutative_ = false;
  std::vector<std::size_t> layer_sizes_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<NodeId> sources_;
  std::vector<NodeId> sinks_;
  std::vector<std::vector<std::string>> labels_;
};

// ------------------------------------------------------------- expansion

/// Polynomial computed between one source and one sink. Commutative ABPs
/// expand to commutative polynomials. Throws GuardExceeded once the term
/// products needed for one layer exceed max_terms.
NCPoly expand(const Abp& b, NodeId source, NodeId sink, std::size_t max_terms = kMaxTerms);
/// Single-source, single-sink convenience.
NCPoly expand(const Abp& b, std::size_t max_terms = kMaxTerms);
/// One polynomial per sink (in sink order) from the given source.
std::vector<NCPoly> expand_sinks(const Abp& b, NodeId source, std::size_t max_terms = kMaxTerms);

// ------------------------------------------------------------ evaluation

Scalar eval_scalar(const Abp& b, std::span<const Scalar> point, NodeId source, NodeId sink);
Scalar eval_scalar(const Abp& b, std::span<const Scalar> point);

/// Anything with +, *, scalar multiplication and zero/one of matching shape.
template <class E>
concept AlgebraValue = requires(const E& a, const E& b, const Scalar& s) {
  { a + b } -> std::convertible_to<E>;
  { a * b } -> std::convertible_to<E>;
  { s * a } -> std::convertible_to<E>;
  { a.zero_like() } -> std::convertible_to<E>;
  { a.one_like() } -> std::convertible_to<E>;
};

/// Evaluates the ABP with every variable replaced by an algebra element,
/// multiplying edge values left to right along each path.
template <AlgebraValue E>
E eval_algebra(const Abp& b, std::span<const E> point, NodeId source, NodeId sink) {
  if (point.empty()) throw DomainError("algebra evaluation needs at least one assigned element");
  const E zero = point.front().zero_like();
  const E one = point.front().one_like();
  std::vector<std::optional<E>> cur(b.layer_size(0));
  cur.at(source) = one;
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    std::vector<std::optional<E>> next(b.layer_size(e + 1));
    for (const Edge& edge : b.edges(e)) {
      if (!cur[edge.from]) continue;
      E weight = zero;
      if (edge.label.constant()) weight = *edge.label.constant() * one;
      for (const auto& [v, c] : edge.label.terms()) {
        if (v >= point.size()) throw DomainError("missing assignment for variable " + std::to_string(v));
        weight = weight + c * point[v];
      }
      E contribution = *cur[edge.from] * weight;
      next[edge.to] = next[edge.to] ? *next[edge.to] + contribution : contribution;
    }
    cur = std::move(next);
  }
  return cur.at(sink) ? *cur.at(sink) : zero;
}

template <AlgebraValue E>
E eval_algebra(const Abp& b, std::span<const E> point) {
  if (b.sources().size() != 1 || b.sinks().size() != 1) throw DomainError("ABP is not single-source/single-sink");
  return eval_algebra(b, point, b.sources()[0], b.sinks()[0]);
}

// ---------------------------------------------------- transition matrices

/// One s x s matrix per variable, s the total node count, nodes indexed
/// globally layer by layer: M_i[u][v] = coefficient of var i on edge (u, v).
class TransitionMatrices {
 public:
  TransitionMatrices(Field field, std::size_t dim, std::size_t nvars, std::size_t source, std::size_t sink);

  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }
  std::size_t nvars() const { return rows_.size(); }
  std::size_t source_index() const { return source_; }
  std::size_t sink_index() const { return sink_; }

  void add(Var v, std::size_t row, std::size_t col, const Scalar& c);
  /// Nonzero entries of row `row` of M_v as (column, value).
  const std::vector<std::pair<std::size_t, Scalar>>& row(Var v, std::size_t row) const;
  Matrix dense(Var v) const;

 private:
  Field field_;
  std::size_t dim_;
  std::size_t source_;
  std::size_t sink_;
  std::vector<std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>>> rows_;
};

/// Requires a homogeneous single-source/single-sink ABP.
TransitionMatrices transition_matrices(const Abp& b);

/// (f o g)(a) for f given by an ABP and g given by its transition matrices:
/// the (source, sink) entry of f(a_1 M_1, ..., a_n M_n). Propagates sparse row
/// vectors instead of forming the matrices.
Scalar eval_through_transitions(const Abp& f, const TransitionMatrices& g, std::span<const Scalar> point);

// ------------------------------------------------------- transformations

/// left followed by the mirror image of right, with sink i of left linked to
/// sink i of right: computes sum_i f_i * links[i] * g_i^R. The scalar links
/// are multiplied into the first mirror edges. right must have one source.
Abp mirror_join(const Abp& left, const Abp& right, std::span<const Scalar> links);
/// mirror_join(b, b, links): sum_i f_i * links[i] * f_i^R.
Abp reverse_mirror(const Abp& b, std::span<const Scalar> links);

/// Product construction computing the Hadamard product of two graded,
/// noncommutative ABPs of equal degree. On linear layers nodes are pairs; a
/// scalar layer of one side advances that side while the other stays put.
Abp hadamard_abp(const Abp& a, const Abp& b);

/// Same graph, noncommuting variables in layer order.
Abp nc_lift(const Abp& b);

/// Rewrites each linear edge label by mapping (position, var) to a new
/// variable, where position counts linear layers from 1.
Abp relabel_vars(const Abp& b, std::size_t new_nvars, const std::function<Var(std::size_t, Var)>& map);

/// y_i at position j becomes y_{j,i} in a degree x n grid.
Abp set_multilinearize(const Abp& b, std::size_t n);

/// Keeps only the given sinks (by node index in the last layer).
Abp with_sinks(const Abp& b, std::vector<NodeId> sinks);

/// Merges parallel edges, drops zero labels and removes nodes that lie on no
/// source-to-sink path. Sources and sinks are always kept.
Abp normalize(const Abp& b);
/// True when normalize would not remove anything.
bool is_pruned(const Abp& b);

}  // namespace abp
