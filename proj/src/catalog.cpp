#include "abp/catalog.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "abp/applications.hpp"
#include "abp/constructions.hpp"

namespace abp {

namespace {

using Builder = std::function<Abp(std::size_t, std::size_t, Field)>;

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> r = {
      {"s-star", [](std::size_t n, std::size_t k, Field f) { return construct::s_star(n, k, f); }},
      {"rper-nc", [](std::size_t n, std::size_t k, Field f) { return construct::rper_nc(k, n, f); }},
      {"ncdet", [](std::size_t, std::size_t k, Field f) { return construct::ncdet(k, f); }},
      {"weak-s-star", [](std::size_t n, std::size_t k, Field f) { return construct::weak_s_star(n, k, f); }},
      {"positive-weak", [](std::size_t n, std::size_t k, Field f) { return construct::positive_weak(n, k, f); }},
      {"snk-classic", [](std::size_t n, std::size_t k, Field f) { return construct::snk_classic(n, k, f); }},
      {"snc", [](std::size_t n, std::size_t k, Field f) { return construct::snc(n, k, f); }},
      {"rdet", [](std::size_t n, std::size_t k, Field f) { return construct::rdet(k, n, f); }},
      {"rdet-nc", [](std::size_t n, std::size_t k, Field f) { return construct::rdet_nc(k, n, f); }},
      {"b1", [](std::size_t n, std::size_t k, Field f) { return construct::half_products(n, k, f); }},
      {"b2", [](std::size_t n, std::size_t k, Field f) { return construct::superset_sums(n, k, f); }},
      {"filter",
       [](std::size_t n, std::size_t k, Field f) {
         if (!f.is_rational()) throw DomainError("filter is built over the rationals only");
         return apps::filter_abp(k, n);
       }},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

Abp build_family(const std::string& name, std::size_t n, std::size_t k, Field field) {
  auto it = registry().find(name);
  if (it == registry().end()) throw DomainError("unknown family: " + name);
  return it->second(n, k, field);
}

BenchRow bench_family(const std::string& name, std::size_t n, std::size_t k, int repeats, double min_total) {
  using clock = std::chrono::steady_clock;
  BenchRow row{name, n, k};
  double total = 0;
  double best = -1;
  for (int i = 0; i < repeats || total < min_total; ++i) {
    const auto t0 = clock::now();
    const Abp b = build_family(name, n, k);
    const double s = std::chrono::duration<double>(clock::now() - t0).count();
    total += s;
    if (best < 0 || s < best) best = s;
    row.nodes = b.node_count();
    row.edges = b.edge_count();
  }
  row.seconds = best;
  return row;
}

}  // namespace abp
