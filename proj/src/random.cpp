#include "abp/random.hpp"

namespace abp {

Scalar random_rational(std::mt19937_64& rng, int max_abs, int max_den) {
  std::uniform_int_distribution<int> num(-max_abs, max_abs);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

std::vector<Scalar> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Scalar> p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng));
  return p;
}

Abp random_homogeneous_abp(std::mt19937_64& rng, std::size_t nvars, std::size_t degree, std::size_t max_width) {
  std::uniform_int_distribution<std::size_t> width(1, max_width);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::bernoulli_distribution keep(0.6);
  std::vector<std::size_t> sizes{1};
  for (std::size_t l = 1; l < degree; ++l) sizes.push_back(width(rng));
  sizes.push_back(1);
  const Field f = Field::rationals();
  Abp b(f, nvars, sizes);
  for (std::size_t e = 0; e < degree; ++e) {
    for (std::size_t u = 0; u < sizes[e]; ++u) {
      for (std::size_t v = 0; v < sizes[e + 1]; ++v) {
        if (!keep(rng)) continue;
        LinForm label;
        for (std::size_t x = 0; x < nvars; ++x) {
          if (keep(rng)) label.add(static_cast<Var>(x), f.from_int(coef(rng)));
        }
        if (!label.is_zero()) b.add_edge(e, static_cast<NodeId>(u), static_cast<NodeId>(v), label);
      }
    }
  }
  return b;
}

apps::Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double p) {
  apps::Digraph g(n);
  std::bernoulli_distribution arc(p);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v && arc(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

}  // namespace abp
