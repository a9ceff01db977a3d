#include "abp/abp_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace abp {

namespace {

std::vector<Edge> sorted_edges(const std::vector<Edge>& edges) {
  std::vector<Edge> out = edges;
  std::stable_sort(out.begin(), out.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  return out;
}

}  // namespace

nlohmann::ordered_json to_json(const Abp& b) {
  nlohmann::ordered_json j;
  j["field"] = b.field().name();
  j["nvars"] = b.nvars();
  j["commutative"] = b.commutative();
  j["layers"] = b.layer_sizes();
  j["sources"] = b.sources();
  j["sinks"] = b.sinks();
  auto edges = nlohmann::ordered_json::array();
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    for (const Edge& edge : sorted_edges(b.edges(e))) {
      nlohmann::ordered_json je;
      je["layer"] = e;
      je["from"] = edge.from;
      je["to"] = edge.to;
      auto terms = nlohmann::ordered_json::array();
      for (const auto& [v, c] : edge.label.terms()) terms.push_back({{"var", v}, {"coef", c.value_string()}});
      je["terms"] = std::move(terms);
      if (edge.label.constant()) {
        je["const"] = edge.label.constant()->value_string();
      } else {
        je["const"] = nullptr;
      }
      edges.push_back(std::move(je));
    }
  }
  j["edges"] = std::move(edges);
  if (b.has_labels()) {
    auto labels = nlohmann::ordered_json::array();
    for (std::size_t l = 0; l < b.num_layers(); ++l) {
      auto layer = nlohmann::ordered_json::array();
      for (NodeId v = 0; v < b.layer_size(l); ++v) layer.push_back(b.label(l, v));
      labels.push_back(std::move(layer));
    }
    j["labels"] = std::move(labels);
  }
  return j;
}

Abp abp_from_json(const nlohmann::json& j) {
  try {
    Field field = Field::parse(j.at("field").get<std::string>());
    Abp b(field, j.at("nvars").get<std::size_t>(), j.at("layers").get<std::vector<std::size_t>>(),
          j.value("commutative", false));
    if (j.contains("sources")) b.set_sources(j.at("sources").get<std::vector<NodeId>>());
    if (j.contains("sinks")) b.set_sinks(j.at("sinks").get<std::vector<NodeId>>());
    for (const auto& je : j.at("edges")) {
      LinForm label;
      for (const auto& t : je.at("terms")) {
        label.add(t.at("var").get<Var>(), field.parse_scalar(t.at("coef").get<std::string>()));
      }
      if (je.contains("const") && !je.at("const").is_null()) {
        label.add_constant(field.parse_scalar(je.at("const").get<std::string>()));
      }
      b.add_edge(je.at("layer").get<std::size_t>(), je.at("from").get<NodeId>(), je.at("to").get<NodeId>(),
                 std::move(label));
    }
    if (j.contains("labels")) {
      const auto& labels = j.at("labels");
      for (std::size_t l = 0; l < labels.size() && l < b.num_layers(); ++l) {
        for (std::size_t v = 0; v < labels[l].size() && v < b.layer_size(l); ++v) {
          b.set_label(l, static_cast<NodeId>(v), labels[l][v].get<std::string>());
        }
      }
    }
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed ABP JSON: ") + e.what());
  }
}

std::string to_dot(const Abp& b, const VarNamer& namer) {
  std::ostringstream os;
  os << "digraph abp {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  for (std::size_t l = 0; l < b.num_layers(); ++l) {
    os << "  { rank=same;";
    for (NodeId v = 0; v < b.layer_size(l); ++v) {
      os << " \"n" << l << "_" << v << "\"";
      std::string text = b.has_labels() && !b.label(l, v).empty() ? b.label(l, v) : std::to_string(v);
      os << " [label=\"" << text << "\"];";
    }
    os << " }\n";
  }
  for (std::size_t e = 0; e < b.num_edge_layers(); ++e) {
    for (const Edge& edge : sorted_edges(b.edges(e))) {
      os << "  \"n" << e << "_" << edge.from << "\" -> \"n" << e + 1 << "_" << edge.to << "\" [label=\""
         << edge.label.to_string(namer) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

Abp load_abp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("cannot parse " + path + ": " + e.what());
  }
  return abp_from_json(j);
}

void save_abp(const Abp& b, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write " + path);
  out << to_json(b).dump(1) << "\n";
}

}  // namespace abp
