#include "abp/abp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace abp {

// ----------------------------------------------------------------- LinForm

LinForm LinForm::variable(Var v, const Scalar& c) {
  LinForm l;
  l.add(v, c);
  return l;
}

LinForm LinForm::constant_term(const Scalar& c) {
  LinForm l;
  l.add_constant(c);
  return l;
}

void LinForm::add(Var v, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const auto& t, Var x) { return t.first < x; });
  if (it != terms_.end() && it->first == v) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {v, c});
  }
}

void LinForm::add_constant(const Scalar& c) {
  if (constant_) {
    *constant_ += c;
    if (constant_->is_zero()) constant_.reset();
  } else if (!c.is_zero()) {
    constant_ = c;
  }
}

void LinForm::add(const LinForm& other) {
  for (const auto& [v, c] : other.terms_) add(v, c);
  if (other.constant_) add_constant(*other.constant_);
}

std::optional<Scalar> LinForm::coeff(Var v) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                             [](const auto& t, Var x) { return t.first < x; });
  if (it != terms_.end() && it->first == v) return it->second;
  return std::nullopt;
}

LinForm LinForm::scaled(const Scalar& c) const {
  LinForm r;
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [v, x] : terms_) r.terms_.emplace_back(v, x * c);
  if (constant_) r.constant_ = *constant_ * c;
  return r;
}

Scalar LinForm::eval(std::span<const Scalar> point, Field field) const {
  Scalar s = constant_ ? *constant_ : field.zero();
  for (const auto& [v, c] : terms_) {
    if (v >= point.size()) throw DomainError("missing assignment for variable " + std::to_string(v));
    s += c * point[v];
  }
  return s;
}

std::string LinForm::to_string(const VarNamer& namer) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.is_one()) {
      os << namer(v);
    } else {
      os << c << "*" << namer(v);
    }
  }
  if (constant_) {
    if (!first) os << " + ";
    first = false;
    os << *constant_;
  }
  if (first) os << "0";
  return os.str();
}

// --------------------------------------------------------------------- Abp

Abp::Abp(Field field, std::size_t nvars, std::vector<std::size_t> layer_sizes, bool commutative)
    : field_(field), nvars_(nvars), commutative_(commutative), layer_sizes_(std::move(layer_sizes)) {
  if (layer_sizes_.empty()) throw DomainError("an ABP needs at least one layer");
  edges_.resize(layer_sizes_.size() - 1);
  if (layer_sizes_.front() == 1) sources_ = {0};
  if (layer_sizes_.back() == 1) sinks_ = {0};
}

std::size_t Abp::node_count() const { return std::accumulate(layer_sizes_.begin(), layer_sizes_.end(), std::size_t{0}); }

std::size_t Abp::edge_count() const {
  std::size_t total = 0;
  for (const auto& layer : edges_) total += layer.size();
  return total;
}

void Abp::add_edge(std::size_t edge_layer, NodeId from, NodeId to, LinForm label) {
  if (edge_layer >= edges_.size()) throw DomainError("edge layer out of range");
  if (from >= layer_sizes_[edge_layer] || to >= layer_sizes_[edge_layer + 1]) {
    throw DomainError("edge endpoint out of range");
  }
  for (const auto& [v, c] : label.terms()) {
    if (v >= nvars_) throw DomainError("edge label uses variable " + std::to_string(v) + " >= nvars");
    if (!(c.field() == field_)) throw DomainError("edge coefficient from a different field");
  }
  edges_[edge_layer].push_back({from, to, std::move(label)});
}

void Abp::set_sources(std::vector<NodeId> s) {
  for (NodeId v : s) {
    if (v >= layer_sizes_.front()) throw DomainError("source out of range");
  }
  sources_ = std::move(s);
}

void Abp::set_sinks(std::vector<NodeId> s) {
  for (NodeId v : s) {
    if (v >= layer_sizes_.back()) throw DomainError("sink out of range");
  }
  sinks_ = std::move(s);
}

const std::string& Abp::label(std::size_t layer, NodeId node) const {
  static const std::string empty;
  if (labels_.empty()) return empty;
  return labels_.at(layer).at(node);
}

void Abp::set_label(std::size_t layer, NodeId node, std::string text) {
  if (labels_.empty()) {
    labels_.resize(layer_sizes_.size());
    for (std::size_t l = 0; l < layer_sizes_.size(); ++l) labels_[l].resize(layer_sizes_[l]);
  }
  labels_.at(layer).at(node) = std::move(text);
}

LayerKind Abp::layer_kind(std::size_t edge_layer) const {
  bool all_linear = true;
  bool all_scalar = true;
  for (const Edge& e : edges_.at(edge_layer)) {
    all_linear = all_linear && e.label.is_homogeneous();
    all_scalar = all_scalar && e.label.is_scalar();
  }
  if (all_linear) return LayerKind::Linear;
  if (all_scalar) return LayerKind::Scalar;
  return LayerKind::Mixed;
}

bool Abp::is_homogeneous() const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (layer_kind(e) != LayerKind::Linear) return false;
  }
  return true;
}

bool Abp::is_graded() const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (layer_kind(e) == LayerKind::Mixed) return false;
  }
  return true;
}

std::size_t Abp::degree() const {
  std::size_t d = 0;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    switch (layer_kind(e)) {
      case LayerKind::Linear: ++d; break;
      case LayerKind::Scalar: break;
      case LayerKind::Mixed: throw DomainError("ABP has a layer mixing scalar and linear labels");
    }
  }
  return d;
}

// --------------------------------------------------------------- expansion

namespace {

NCPoly times_label(const NCPoly& p, const LinForm& l, std::size_t nvars, bool commutative) {
  NCPoly r(p.field(), nvars, commutative);
  for (const auto& [w, c] : p.terms()) {
    for (const auto& [v, a] : l.terms()) {
      Word x = w;
      x.push_back(v);
      r.add_term(std::move(x), c * a);
    }
    if (l.constant()) r.add_term(w, c * *l.constant());
  }
  return r;
}

std::vector<NCPoly> expand_layers(const Abp& b, NodeId source, std::size_t max_terms) {
  if (source >= b.layer_size(0)) throw DomainError("source out of range");
  std::vector<NCPoly> cur(b.layer_size(0), NCPoly(b.field(), b.nvars(), b.commutative()));
  cur[source] = NCPoly::constant(b.field(), b.nvars(), b.field().one(), b.commutative());
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    std::vector<NCPoly> next(b.layer_size(e + 1), NCPoly(b.field(), b.nvars(), b.commutative()));
    std::size_t total = 0;
    for (const Edge& edge : b.edges(e)) {
      if (cur[edge.from].is_zero()) continue;
      total += cur[edge.from].size() * (edge.label.terms().size() + 1);
      if (total > max_terms) throw GuardExceeded("ABP expansion exceeds term guard");
      next[edge.to] = next[edge.to] + times_label(cur[edge.from], edge.label, b.nvars(), b.commutative());
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

NCPoly expand(const Abp& b, NodeId source, NodeId sink, std::size_t max_terms) {
  auto last = expand_layers(b, source, max_terms);
  if (sink >= last.size()) throw DomainError("sink out of range");
  return last[sink];
}

NCPoly expand(const Abp& b, std::size_t max_terms) {
  if (b.sources().size() != 1 || b.sinks().size() != 1) throw DomainError("ABP is not single-source/single-sink");
  return expand(b, b.sources()[0], b.sinks()[0], max_terms);
}

std::vector<NCPoly> expand_sinks(const Abp& b, NodeId source, std::size_t max_terms) {
  auto last = expand_layers(b, source, max_terms);
  std::vector<NCPoly> out;
  out.reserve(b.sinks().size());
  for (NodeId s : b.sinks()) out.push_back(last.at(s));
  return out;
}

// -------------------------------------------------------------- evaluation

Scalar eval_scalar(const Abp& b, std::span<const Scalar> point, NodeId source, NodeId sink) {
  const Field f = b.field();
  std::vector<Scalar> cur(b.layer_size(0), f.zero());
  cur.at(source) = f.one();
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    std::vector<Scalar> next(b.layer_size(e + 1), f.zero());
    for (const Edge& edge : b.edges(e)) {
      if (cur[edge.from].is_zero()) continue;
      next[edge.to] += cur[edge.from] * edge.label.eval(point, f);
    }
    cur = std::move(next);
  }
  return cur.at(sink);
}

Scalar eval_scalar(const Abp& b, std::span<const Scalar> point) {
  if (b.sources().size() != 1 || b.sinks().size() != 1) throw DomainError("ABP is not single-source/single-sink");
  return eval_scalar(b, point, b.sources()[0], b.sinks()[0]);
}

// ----------------------------------------------------- transition matrices

TransitionMatrices::TransitionMatrices(Field field, std::size_t dim, std::size_t nvars, std::size_t source,
                                       std::size_t sink)
    : field_(field), dim_(dim), source_(source), sink_(sink), rows_(nvars) {}

void TransitionMatrices::add(Var v, std::size_t row, std::size_t col, const Scalar& c) {
  if (v >= rows_.size() || row >= dim_ || col >= dim_) throw DomainError("transition entry out of range");
  auto& entries = rows_[v][row];
  for (auto& [j, x] : entries) {
    if (j == col) {
      x += c;
      return;
    }
  }
  entries.emplace_back(col, c);
}

const std::vector<std::pair<std::size_t, Scalar>>& TransitionMatrices::row(Var v, std::size_t row) const {
  static const std::vector<std::pair<std::size_t, Scalar>> empty;
  auto it = rows_.at(v).find(row);
  return it == rows_[v].end() ? empty : it->second;
}

Matrix TransitionMatrices::dense(Var v) const {
  Matrix m(field_, dim_, dim_);
  for (const auto& [i, entries] : rows_.at(v)) {
    for (const auto& [j, x] : entries) m(i, j) = x;
  }
  return m;
}

TransitionMatrices transition_matrices(const Abp& b) {
  if (b.sources().size() != 1 || b.sinks().size() != 1) throw DomainError("ABP is not single-source/single-sink");
  std::vector<std::size_t> offset(b.num_layers() + 1, 0);
  for (std::size_t l = 0; l < b.num_layers(); ++l) offset[l + 1] = offset[l] + b.layer_size(l);
  TransitionMatrices tm(b.field(), b.node_count(), b.nvars(), offset[0] + b.sources()[0],
                        offset[b.num_layers() - 1] + b.sinks()[0]);
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    for (const Edge& edge : b.edges(e)) {
      if (!edge.label.is_homogeneous()) throw DomainError("transition matrices need a homogeneous ABP");
      for (const auto& [v, c] : edge.label.terms()) tm.add(v, offset[e] + edge.from, offset[e + 1] + edge.to, c);
    }
  }
  return tm;
}

Scalar eval_through_transitions(const Abp& f, const TransitionMatrices& g, std::span<const Scalar> point) {
  if (f.sources().size() != 1 || f.sinks().size() != 1) throw DomainError("ABP is not single-source/single-sink");
  if (!(f.field() == g.field())) throw DomainError("ABP and transition matrices over different fields");
  using RowVec = std::map<std::size_t, Scalar>;
  auto axpy = [](RowVec& dst, const RowVec& src, const Scalar& c) {
    for (const auto& [i, x] : src) {
      auto [it, fresh] = dst.try_emplace(i, x * c);
      if (!fresh) it->second += x * c;
    }
  };
  std::vector<RowVec> cur(f.layer_size(0));
  cur.at(f.sources()[0])[g.source_index()] = f.field().one();
  for (std::size_t e = 0; e < f.num_edge_layers(); ++e) {
    std::vector<RowVec> next(f.layer_size(e + 1));
    for (const Edge& edge : f.edges(e)) {
      const RowVec& src = cur[edge.from];
      if (src.empty()) continue;
      RowVec& dst = next[edge.to];
      if (edge.label.constant()) axpy(dst, src, *edge.label.constant());
      for (const auto& [v, c] : edge.label.terms()) {
        if (v >= point.size()) throw DomainError("missing assignment for variable " + std::to_string(v));
        if (v >= g.nvars()) continue;
        const Scalar weight = c * point[v];
        if (weight.is_zero()) continue;
        for (const auto& [i, x] : src) {
          for (const auto& [j, m] : g.row(v, i)) {
            auto [it, fresh] = dst.try_emplace(j, x * weight * m);
            if (!fresh) it->second += x * weight * m;
          }
        }
      }
    }
    for (auto& vec : next) std::erase_if(vec, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  const RowVec& out = cur.at(f.sinks()[0]);
  auto it = out.find(g.sink_index());
  return it == out.end() ? f.field().zero() : it->second;
}

// --------------------------------------------------------- transformations

namespace {

void check_compatible(const Abp& a, const Abp& b) {
  if (!(a.field() == b.field())) throw DomainError("ABPs over different fields");
  if (a.commutative() != b.commutative()) throw DomainError("mixing commutative and noncommutative ABPs");
}

}  // namespace

Abp mirror_join(const Abp& left, const Abp& right, std::span<const Scalar> links) {
  check_compatible(left, right);
  if (right.sources().size() != 1) throw DomainError("mirrored ABP must have a single source");
  if (left.sinks().size() != right.sinks().size() || links.size() != left.sinks().size()) {
    throw DomainError("sink counts of the two halves and the link count must agree");
  }
  const std::size_t l1 = left.num_edge_layers();
  const std::size_t l2 = right.num_edge_layers();
  const std::size_t nvars = std::max(left.nvars(), right.nvars());

  std::vector<std::size_t> sizes = left.layer_sizes();
  if (l2 == 0) {
    sizes.push_back(1);
  } else {
    for (std::size_t t = l2; t-- > 0;) sizes.push_back(right.layer_size(t));
  }
  Abp out(left.field(), nvars, sizes, left.commutative());
  out.set_sources(left.sources());

  for (std::size_t e = 0; e < l1; ++e) {
    for (const Edge& edge : left.edges(e)) out.add_edge(e, edge.from, edge.to, edge.label);
  }
  if (l2 == 0) {
    for (std::size_t i = 0; i < links.size(); ++i) {
      if (right.sinks()[i] != right.sources()[0]) continue;
      out.add_edge(l1, left.sinks()[i], 0, LinForm::constant_term(links[i]));
    }
    out.set_sinks({0});
  } else {
    // Link layer: the last edge layer of right, reversed and scaled.
    std::vector<std::optional<std::size_t>> link_of(right.layer_size(l2));
    for (std::size_t i = 0; i < right.sinks().size(); ++i) link_of[right.sinks()[i]] = i;
    for (const Edge& edge : right.edges(l2 - 1)) {
      if (!link_of[edge.to]) continue;
      std::size_t i = *link_of[edge.to];
      if (links[i].is_zero()) continue;
      out.add_edge(l1, left.sinks()[i], edge.from, edge.label.scaled(links[i]));
    }
    for (std::size_t m = l2 - 1; m-- > 0;) {
      std::size_t e = l1 + l2 - 1 - m;
      for (const Edge& edge : right.edges(m)) out.add_edge(e, edge.to, edge.from, edge.label);
    }
    out.set_sinks({right.sources()[0]});
  }

  if (left.has_labels()) {
    for (std::size_t l = 0; l < left.num_layers(); ++l) {
      for (NodeId v = 0; v < left.layer_size(l); ++v) out.set_label(l, v, left.label(l, v));
    }
  }
  if (right.has_labels() && l2 > 0) {
    for (std::size_t t = 0; t < l2; ++t) {
      for (NodeId v = 0; v < right.layer_size(t); ++v) out.set_label(l1 + l2 - t, v, right.label(t, v) + "'");
    }
  }
  return out;
}

Abp reverse_mirror(const Abp& b, std::span<const Scalar> links) { return mirror_join(b, b, links); }

Abp hadamard_abp(const Abp& a, const Abp& b) {
  check_compatible(a, b);
  if (a.commutative()) throw DomainError("Hadamard product of ABPs needs noncommutative ABPs");
  if (a.nvars() != b.nvars()) throw DomainError("Hadamard product needs a common variable set");
  if (!a.is_graded() || !b.is_graded()) throw DomainError("Hadamard product needs homogeneous (graded) ABPs");
  if (a.degree() != b.degree()) throw DomainError("Hadamard product needs equal degrees");

  enum class Step { A, B, Both };
  std::vector<std::pair<Step, std::pair<std::size_t, std::size_t>>> steps;
  std::vector<std::size_t> sizes{a.layer_size(0) * b.layer_size(0)};
  std::vector<std::pair<std::size_t, std::size_t>> widths{{a.layer_size(0), b.layer_size(0)}};
  for (std::size_t ia = 0, ib = 0; ia < a.num_edge_layers() || ib < b.num_edge_layers();) {
    if (ia < a.num_edge_layers() && a.layer_kind(ia) == LayerKind::Scalar) {
      steps.push_back({Step::A, {ia, ib}});
      ++ia;
    } else if (ib < b.num_edge_layers() && b.layer_kind(ib) == LayerKind::Scalar) {
      steps.push_back({Step::B, {ia, ib}});
      ++ib;
    } else {
      steps.push_back({Step::Both, {ia, ib}});
      ++ia;
      ++ib;
    }
    widths.push_back({a.layer_size(ia), b.layer_size(ib)});
    sizes.push_back(widths.back().first * widths.back().second);
  }

  Abp out(a.field(), a.nvars(), sizes, false);
  auto pair_id = [&](std::size_t layer, std::size_t u, std::size_t v) {
    return static_cast<NodeId>(u * widths[layer].second + v);
  };

  for (std::size_t s = 0; s < steps.size(); ++s) {
    const auto [kind, at] = steps[s];
    const auto [ia, ib] = at;
    switch (kind) {
      case Step::A:
        for (const Edge& e : a.edges(ia)) {
          for (std::size_t v = 0; v < widths[s].second; ++v) {
            out.add_edge(s, pair_id(s, e.from, v), pair_id(s + 1, e.to, v), e.label);
          }
        }
        break;
      case Step::B:
        for (const Edge& e : b.edges(ib)) {
          for (std::size_t u = 0; u < widths[s].first; ++u) {
            out.add_edge(s, pair_id(s, u, e.from), pair_id(s + 1, u, e.to), e.label);
          }
        }
        break;
      case Step::Both: {
        std::unordered_map<Var, std::vector<std::pair<const Edge*, Scalar>>> by_var;
        for (const Edge& e : b.edges(ib)) {
          for (const auto& [v, c] : e.label.terms()) by_var[v].emplace_back(&e, c);
        }
        std::map<std::pair<NodeId, NodeId>, LinForm> merged;
        for (const Edge& e1 : a.edges(ia)) {
          for (const auto& [v, c1] : e1.label.terms()) {
            auto it = by_var.find(v);
            if (it == by_var.end()) continue;
            for (const auto& [e2, c2] : it->second) {
              merged[{pair_id(s, e1.from, e2->from), pair_id(s + 1, e1.to, e2->to)}].add(v, c1 * c2);
            }
          }
        }
        for (auto& [ends, label] : merged) {
          if (!label.is_zero()) out.add_edge(s, ends.first, ends.second, std::move(label));
        }
        break;
      }
    }
  }

  std::vector<NodeId> sources;
  for (NodeId u : a.sources()) {
    for (NodeId v : b.sources()) sources.push_back(pair_id(0, u, v));
  }
  std::vector<NodeId> sinks;
  for (NodeId u : a.sinks()) {
    for (NodeId v : b.sinks()) sinks.push_back(pair_id(steps.size(), u, v));
  }
  out.set_sources(std::move(sources));
  out.set_sinks(std::move(sinks));
  return out;
}

Abp nc_lift(const Abp& b) {
  Abp out = b;
  out.set_commutative(false);
  return out;
}

Abp relabel_vars(const Abp& b, std::size_t new_nvars, const std::function<Var(std::size_t, Var)>& map) {
  if (!b.is_graded()) throw DomainError("relabeling by position needs a graded ABP");
  Abp out(b.field(), new_nvars, b.layer_sizes(), b.commutative());
  out.set_sources(b.sources());
  out.set_sinks(b.sinks());
  std::size_t position = 0;
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    bool linear = b.layer_kind(e) == LayerKind::Linear;
    if (linear) ++position;
    for (const Edge& edge : b.edges(e)) {
      if (!linear) {
        out.add_edge(e, edge.from, edge.to, edge.label);
        continue;
      }
      LinForm l;
      for (const auto& [v, c] : edge.label.terms()) l.add(map(position, v), c);
      out.add_edge(e, edge.from, edge.to, std::move(l));
    }
  }
  if (b.has_labels()) {
    for (std::size_t l = 0; l < b.num_layers(); ++l) {
      for (NodeId v = 0; v < b.layer_size(l); ++v) out.set_label(l, v, b.label(l, v));
    }
  }
  return out;
}

Abp set_multilinearize(const Abp& b, std::size_t n) {
  const std::size_t k = b.degree();
  if (k == 0 || n == 0) throw DomainError("set-multilinearization needs positive degree and width");
  RectMatrixVars grid(k, n);
  return relabel_vars(b, grid.size(), [&](std::size_t pos, Var v) {
    if (v >= n) throw DomainError("variable exceeds grid columns");
    return grid.id(pos, v + 1);
  });
}

Abp with_sinks(const Abp& b, std::vector<NodeId> sinks) {
  Abp out = b;
  out.set_sinks(std::move(sinks));
  return out;
}

namespace {

struct Liveness {
  std::vector<std::vector<bool>> keep;
  std::vector<std::vector<Edge>> merged;  // parallel edges merged, zero labels dropped
};

Liveness liveness(const Abp& b) {
  Liveness out;
  const std::size_t layers = b.num_layers();
  out.merged.resize(b.num_edge_layers());
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    std::map<std::pair<NodeId, NodeId>, LinForm> m;
    for (const Edge& edge : b.edges(e)) m[{edge.from, edge.to}].add(edge.label);
    for (auto& [ends, label] : m) {
      if (!label.is_zero()) out.merged[e].push_back({ends.first, ends.second, std::move(label)});
    }
  }
  std::vector<std::vector<bool>> fwd(layers), bwd(layers);
  for (std::size_t l = 0; l < layers; ++l) {
    fwd[l].assign(b.layer_size(l), false);
    bwd[l].assign(b.layer_size(l), false);
  }
  for (NodeId s : b.sources()) fwd[0][s] = true;
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    for (const Edge& edge : out.merged[e]) {
      if (fwd[e][edge.from]) fwd[e + 1][edge.to] = true;
    }
  }
  for (NodeId s : b.sinks()) bwd[layers - 1][s] = true;
  for (std::size_t e = b.num_edge_layers(); e-- > 0;) {
    for (const Edge& edge : out.merged[e]) {
      if (bwd[e + 1][edge.to]) bwd[e][edge.from] = true;
    }
  }
  out.keep.resize(layers);
  for (std::size_t l = 0; l < layers; ++l) {
    out.keep[l].resize(b.layer_size(l));
    for (std::size_t v = 0; v < b.layer_size(l); ++v) out.keep[l][v] = fwd[l][v] && bwd[l][v];
  }
  for (NodeId s : b.sources()) out.keep[0][s] = true;
  for (NodeId s : b.sinks()) out.keep[layers - 1][s] = true;
  return out;
}

}  // namespace

Abp normalize(const Abp& b) {
  Liveness live = liveness(b);
  const std::size_t layers = b.num_layers();
  std::vector<std::vector<NodeId>> remap(layers);
  std::vector<std::size_t> sizes(layers, 0);
  for (std::size_t l = 0; l < layers; ++l) {
    remap[l].assign(b.layer_size(l), 0);
    for (std::size_t v = 0; v < b.layer_size(l); ++v) {
      if (live.keep[l][v]) remap[l][v] = static_cast<NodeId>(sizes[l]++);
    }
  }
  Abp out(b.field(), b.nvars(), sizes, b.commutative());
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    for (Edge& edge : live.merged[e]) {
      if (live.keep[e][edge.from] && live.keep[e + 1][edge.to]) {
        out.add_edge(e, remap[e][edge.from], remap[e + 1][edge.to], std::move(edge.label));
      }
    }
  }
  std::vector<NodeId> sources, sinks;
  for (NodeId s : b.sources()) sources.push_back(remap[0][s]);
  for (NodeId s : b.sinks()) sinks.push_back(remap[layers - 1][s]);
  out.set_sources(std::move(sources));
  out.set_sinks(std::move(sinks));
  if (b.has_labels()) {
    for (std::size_t l = 0; l < layers; ++l) {
      for (NodeId v = 0; v < b.layer_size(l); ++v) {
        if (live.keep[l][v]) out.set_label(l, remap[l][v], b.label(l, v));
      }
    }
  }
  return out;
}

bool is_pruned(const Abp& b) {
  Liveness live = liveness(b);
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    if (live.merged[e].size() != b.edges(e).size()) return false;
  }
  for (const auto& layer : live.keep) {
    if (std::find(layer.begin(), layer.end(), false) != layer.end()) return false;
  }
  return true;
}

}  // namespace abp
