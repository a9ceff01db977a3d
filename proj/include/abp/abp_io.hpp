#pragma once

#include <string>

#include <json.hpp>

#include "abp/abp.hpp"

namespace abp {

/// {field, nvars, commutative, layers, sources, sinks, edges:[{layer, from,
/// to, terms:[{var, coef}], const}], labels}. Edges are written in
/// (layer, from, to) order and coefficients as exact strings, so output bytes
/// are stable for a given ABP.
nlohmann::ordered_json to_json(const Abp& b);
Abp abp_from_json(const nlohmann::json& j);

std::string to_dot(const Abp& b, const VarNamer& namer = plain_namer());

Abp load_abp(const std::string& path);
void save_abp(const Abp& b, const std::string& path);

}  // namespace abp
