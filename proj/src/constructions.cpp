#include "abp/constructions.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace abp::construct {

namespace {

constexpr std::size_t kMaxGround = 63;

void check_ground(std::size_t n) {
  if (n > kMaxGround) throw DomainError("ground set larger than 63 elements");
}

// Subsets of [n] with |S| <= h ordered by size, then as integers, and the
// inverse index.
struct SubsetFamily {
  std::vector<Subset> members;
  std::unordered_map<Subset, NodeId> index;

  void add(Subset s) {
    index.emplace(s, static_cast<NodeId>(members.size()));
    members.push_back(s);
  }
  NodeId at(Subset s) const { return index.at(s); }
};

SubsetFamily family_of_size(unsigned n, unsigned size) {
  SubsetFamily f;
  for (Subset s : subsets_of_size(n, size)) f.add(s);
  return f;
}

SubsetFamily family_up_to(unsigned n, unsigned h) {
  SubsetFamily f;
  for (unsigned l = 0; l <= h; ++l) {
    for (Subset s : subsets_of_size(n, l)) f.add(s);
  }
  return f;
}

void label_layer(Abp& b, std::size_t layer, const SubsetFamily& f) {
  for (NodeId v = 0; v < f.members.size(); ++v) b.set_label(layer, v, subset_label(f.members[v]));
}

Scalar sign_scalar(Field field, int s) { return field.from_int(s); }

}  // namespace

int insertion_sign(Subset s, unsigned j) {
  Subset larger = j >= 63 ? 0 : s >> (j + 1);
  return std::popcount(larger) % 2 ? -1 : 1;
}

int sign_of_insertion_chain(std::span<const std::size_t> sigma) {
  Subset chain = 0;
  int sign = 1;
  for (std::size_t x : sigma) {
    if (x >= kMaxGround || (chain >> x) & 1) throw DomainError("not a permutation");
    sign *= insertion_sign(chain, static_cast<unsigned>(x));
    chain |= Subset{1} << x;
  }
  return sign;
}

std::vector<Subset> subsets_of_size(unsigned n, unsigned size) {
  check_ground(n);
  std::vector<Subset> out;
  if (size > n) return out;
  if (size == 0) return {0};
  const Subset limit = Subset{1} << n;
  for (Subset s = (Subset{1} << size) - 1; s < limit;) {
    out.push_back(s);
    // Gosper: next integer with the same popcount.
    Subset c = s & (~s + 1);
    Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

std::string subset_label(Subset s) {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < 64; ++i) {
    if (!((s >> i) & 1)) continue;
    if (!first) out += ",";
    first = false;
    out += std::to_string(i + 1);
  }
  return out + "}";
}

Abp half_products(std::size_t n, std::size_t h, Field field) {
  check_ground(n);
  if (h > n) throw DomainError("need h <= n");
  std::vector<SubsetFamily> layers;
  std::vector<std::size_t> sizes;
  for (unsigned l = 0; l <= h; ++l) {
    layers.push_back(family_of_size(static_cast<unsigned>(n), l));
    sizes.push_back(layers.back().members.size());
  }
  Abp b(field, n, sizes);
  for (std::size_t l = 0; l <= h; ++l) label_layer(b, l, layers[l]);
  // m*_S = sum_{j in S} m*_{S \ j} * y_j
  for (std::size_t l = 0; l < h; ++l) {
    for (NodeId v = 0; v < layers[l + 1].members.size(); ++v) {
      Subset s = layers[l + 1].members[v];
      for (unsigned j = 0; j < n; ++j) {
        if ((s >> j) & 1) b.add_edge(l, layers[l].at(s & ~(Subset{1} << j)), v, LinForm::variable(j, field.one()));
      }
    }
  }
  std::vector<NodeId> sinks(sizes.back());
  for (NodeId v = 0; v < sinks.size(); ++v) sinks[v] = v;
  b.set_sinks(std::move(sinks));
  return b;
}

Abp superset_sums(std::size_t n, std::size_t h, Field field) {
  Abp first = half_products(n, h, field);
  const SubsetFamily top = family_of_size(static_cast<unsigned>(n), static_cast<unsigned>(h));
  const SubsetFamily all = family_up_to(static_cast<unsigned>(n), static_cast<unsigned>(h));

  std::vector<std::size_t> sizes = first.layer_sizes();
  for (std::size_t t = 0; t < n; ++t) sizes.push_back(all.members.size());
  Abp b(field, n, sizes);
  for (std::size_t e = 0; e < first.num_edge_layers(); ++e) {
    for (const Edge& edge : first.edges(e)) b.add_edge(e, edge.from, edge.to, edge.label);
  }
  for (std::size_t l = 0; l < first.num_layers(); ++l) {
    for (NodeId v = 0; v < first.layer_size(l); ++v) b.set_label(l, v, first.label(l, v));
  }

  // Step t handles element i = n - t (0-based), sweeping from n down to 1:
  // value_{i-1}(S) = value_i(S) + value_i(S + i) when i is not in S.
  const Scalar one = field.one();
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t e = h + t;
    const unsigned i = static_cast<unsigned>(n - 1 - t);
    const SubsetFamily& from = t == 0 ? top : all;
    for (NodeId u = 0; u < from.members.size(); ++u) {
      Subset p = from.members[u];
      b.add_edge(e, u, all.at(p), LinForm::constant_term(one));
      if ((p >> i) & 1) b.add_edge(e, u, all.at(p & ~(Subset{1} << i)), LinForm::constant_term(one));
    }
    label_layer(b, e + 1, all);
  }
  std::vector<NodeId> sinks(all.members.size());
  for (NodeId v = 0; v < sinks.size(); ++v) sinks[v] = v;
  b.set_sinks(std::move(sinks));
  return b;
}

Abp s_star(std::size_t n, std::size_t k, Field field) {
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  const std::size_t lo = k / 2;
  const std::size_t hi = k - lo;
  Abp right = superset_sums(n, lo, field);
  Abp left = superset_sums(n, hi, field);
  // Common subsets S have |S| <= lo; they are the first sinks of left, in
  // the same order as the sinks of right.
  const std::size_t common = right.sinks().size();
  left = with_sinks(left, std::vector<NodeId>(left.sinks().begin(), left.sinks().begin() + static_cast<long>(common)));
  const SubsetFamily all = family_up_to(static_cast<unsigned>(n), static_cast<unsigned>(lo));
  std::vector<Scalar> links;
  links.reserve(common);
  for (Subset s : all.members) links.push_back(sign_scalar(field, std::popcount(s) % 2 ? -1 : 1));
  return normalize(mirror_join(left, right, links));
}

Abp rper_nc(std::size_t k, std::size_t n, Field field) { return set_multilinearize(s_star(n, k, field), n); }

Abp ncdet(std::size_t k, Field field) {
  if (k < 1) throw DomainError("need k >= 1");
  check_ground(k);
  const unsigned kk = static_cast<unsigned>(k);
  std::vector<SubsetFamily> layers;
  std::vector<std::size_t> sizes;
  for (unsigned l = 0; l <= kk; ++l) {
    layers.push_back(family_of_size(kk, l));
    sizes.push_back(layers.back().members.size());
  }
  Abp b(field, k * k, sizes);
  for (std::size_t l = 0; l <= k; ++l) label_layer(b, l, layers[l]);
  for (std::size_t l = 0; l < k; ++l) {
    for (NodeId u = 0; u < layers[l].members.size(); ++u) {
      Subset s = layers[l].members[u];
      for (unsigned j = 0; j < kk; ++j) {
        if ((s >> j) & 1) continue;
        Var v = static_cast<Var>(l * k + j);  // y_{l+1, j+1}
        b.add_edge(l, u, layers[l + 1].at(s | (Subset{1} << j)),
                   LinForm::variable(v, sign_scalar(field, insertion_sign(s, j))));
      }
    }
  }
  return b;
}

std::vector<Scalar> default_alphas(std::size_t n, Field field) {
  if (!field.is_rational() && field.modulus() <= n) {
    throw DomainError("need a prime p > n for n distinct nonzero alphas");
  }
  std::vector<Scalar> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(field.from_int(static_cast<long long>(i)));
  return out;
}

Abp weak_s_star(std::size_t n, std::size_t k, std::span<const Scalar> alphas) {
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  check_ground(k);
  if (alphas.size() != n) throw DomainError("need exactly n alphas");
  const Field field = alphas.front().field();
  for (std::size_t a = 0; a < n; ++a) {
    if (alphas[a].is_zero()) throw DomainError("alphas must be nonzero");
    for (std::size_t b = a + 1; b < n; ++b) {
      if (alphas[a] == alphas[b]) throw DomainError("alphas must be pairwise distinct");
    }
  }
  // power[j][i] = alpha_i^{j+1}
  std::vector<std::vector<Scalar>> power(k, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Scalar p = alphas[i];
    for (std::size_t j = 0; j < k; ++j) {
      power[j][i] = p;
      p *= alphas[i];
    }
  }
  const unsigned kk = static_cast<unsigned>(k);
  std::vector<SubsetFamily> layers;
  std::vector<std::size_t> sizes;
  for (unsigned l = 0; l <= kk; ++l) {
    layers.push_back(family_of_size(kk, l));
    sizes.push_back(layers.back().members.size());
  }
  Abp b(field, n, sizes);
  for (std::size_t l = 0; l <= k; ++l) label_layer(b, l, layers[l]);
  for (std::size_t l = 0; l < k; ++l) {
    for (NodeId u = 0; u < layers[l].members.size(); ++u) {
      Subset s = layers[l].members[u];
      for (unsigned j = 0; j < kk; ++j) {
        if ((s >> j) & 1) continue;
        const Scalar sign = sign_scalar(field, insertion_sign(s, j));
        LinForm label;
        for (std::size_t i = 0; i < n; ++i) label.add(static_cast<Var>(i), sign * power[j][i]);
        b.add_edge(l, u, layers[l + 1].at(s | (Subset{1} << j)), std::move(label));
      }
    }
  }
  return b;
}

Abp weak_s_star(std::size_t n, std::size_t k, Field field) {
  auto alphas = default_alphas(n, field);
  return weak_s_star(n, k, alphas);
}

Abp positive_weak(std::size_t n, std::size_t k, Field field) {
  Abp g = weak_s_star(n, k, field);
  return hadamard_abp(g, g);
}

Abp snk_classic(std::size_t n, std::size_t k, Field field) {
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  // Layer d in 1..k-1 holds i in [d, n-k+d], stored at index i - d.
  std::vector<std::size_t> sizes{1};
  for (std::size_t d = 1; d < k; ++d) sizes.push_back(n - k + 1);
  sizes.push_back(1);
  Abp b(field, n, sizes, true);
  auto first_index = [&](std::size_t d) { return d; };
  auto last_index = [&](std::size_t d) { return d == 0 ? 0 : n - k + d; };
  b.set_label(0, 0, "0");
  for (std::size_t d = 1; d < k; ++d) {
    for (std::size_t i = first_index(d); i <= last_index(d); ++i) b.set_label(d, static_cast<NodeId>(i - d), std::to_string(i));
  }
  b.set_label(k, 0, "sink");
  for (std::size_t d = 0; d + 1 < k; ++d) {
    for (std::size_t i = first_index(d); i <= last_index(d); ++i) {
      for (std::size_t next = std::max(i + 1, d + 1); next <= last_index(d + 1); ++next) {
        b.add_edge(d, static_cast<NodeId>(i - d), static_cast<NodeId>(next - d - 1),
                   LinForm::variable(static_cast<Var>(next - 1), field.one()));
      }
    }
  }
  const std::size_t d = k - 1;
  for (std::size_t i = first_index(d); i <= last_index(d); ++i) {
    LinForm label;
    for (std::size_t next = i + 1; next <= n; ++next) label.add(static_cast<Var>(next - 1), field.one());
    b.add_edge(d, static_cast<NodeId>(i - d), 0, std::move(label));
  }
  return b;
}

Abp snc(std::size_t n, std::size_t k, Field field) { return nc_lift(snk_classic(n, k, field)); }

namespace {

// Edge label of the z-lattice for inserting row j with sign s: the
// coefficient of z_i is the commuting weight s * x_{j,i}, kept symbolically as
// a linear form over the x variables.
std::vector<std::pair<Var, LinForm>> weighted_row_label(std::size_t n, unsigned j, const Scalar& s) {
  std::vector<std::pair<Var, LinForm>> label;
  label.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    label.emplace_back(static_cast<Var>(i), LinForm::variable(static_cast<Var>(j * n + i), s));
  }
  return label;
}

}  // namespace

Abp rdet(std::size_t k, std::size_t n, Field field) {
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  check_ground(k);
  const Abp filter = snc(n, k, field);
  const unsigned kk = static_cast<unsigned>(k);
  std::vector<SubsetFamily> lattice;
  std::vector<std::size_t> sizes;
  for (unsigned l = 0; l <= kk; ++l) {
    lattice.push_back(family_of_size(kk, l));
    sizes.push_back(lattice.back().members.size() * filter.layer_size(l));
  }
  Abp b(field, k * n, sizes, true);
  auto pair_id = [&](std::size_t l, NodeId s, NodeId u) {
    return static_cast<NodeId>(s * filter.layer_size(l) + u);
  };
  // Hadamard product over z with the increasing-word filter, then z := 1:
  // the z_i coefficients multiply and the weights become the edge label.
  for (std::size_t l = 0; l < k; ++l) {
    for (NodeId s = 0; s < lattice[l].members.size(); ++s) {
      Subset set = lattice[l].members[s];
      for (unsigned j = 0; j < kk; ++j) {
        if ((set >> j) & 1) continue;
        const NodeId t = lattice[l + 1].at(set | (Subset{1} << j));
        const auto weighted = weighted_row_label(n, j, sign_scalar(field, insertion_sign(set, j)));
        for (const Edge& fe : filter.edges(l)) {
          LinForm label;
          for (const auto& [z, c] : fe.label.terms()) label.add(weighted[z].second.scaled(c));
          if (!label.is_zero()) b.add_edge(l, pair_id(l, s, fe.from), pair_id(l + 1, t, fe.to), std::move(label));
        }
      }
    }
  }
  b.set_sources({pair_id(0, 0, filter.sources()[0])});
  b.set_sinks({pair_id(k, 0, filter.sinks()[0])});
  return normalize(b);
}

Abp rdet_nc(std::size_t k, std::size_t n, Field field) {
  if (k < 1 || k > n) throw DomainError("need 1 <= k <= n");
  check_ground(n);
  const unsigned nn = static_cast<unsigned>(n);
  std::vector<SubsetFamily> layers;
  std::vector<std::size_t> sizes;
  for (unsigned r = 0; r < k; ++r) {
    layers.push_back(family_of_size(nn, r));
    sizes.push_back(layers.back().members.size());
  }
  sizes.push_back(1);
  Abp b(field, k * n, sizes);
  for (std::size_t r = 0; r < k; ++r) label_layer(b, r, layers[r]);
  for (std::size_t r = 0; r < k; ++r) {
    for (NodeId u = 0; u < layers[r].members.size(); ++u) {
      Subset used = layers[r].members[u];
      for (unsigned c = 0; c < nn; ++c) {
        if ((used >> c) & 1) continue;
        const Var v = static_cast<Var>(r * n + c);  // y_{r+1, c+1}
        const Scalar sign = sign_scalar(field, insertion_sign(used, c));
        NodeId to = r + 1 == k ? 0 : layers[r + 1].at(used | (Subset{1} << c));
        b.add_edge(r, u, to, LinForm::variable(v, sign));
      }
    }
  }
  return normalize(b);
}

}  // namespace abp::construct
