#pragma once

#include <string>

#include "json.hpp"
#include "orderforge/embedding.hpp"
#include "orderforge/poset.hpp"

namespace orderforge {

using nlohmann::json;
using nlohmann::ordered_json;

// poset file: {"elements":[...], "relations":[["x","y"],...]}
Poset poset_from_json(const json& j);
ordered_json poset_to_json(const Poset& p);

// embedding file: {"rotations":{"v":["u1","u2",...]}, "outer_face":["v1",...]}
// The graph is reconstructed from the rotations; vertex order follows the
// poset/graph passed in `order` when given, else the rotation key order.
Embedding embedding_from_json(const json& j, const std::vector<std::string>* order = nullptr);
ordered_json embedding_to_json(const Embedding& e);

// pair set file: {"pairs":[["a","b"],...]}
std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& j);
ordered_json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const ordered_json& j);

Poset load_poset_file(const std::string& path);
Embedding load_embedding_file(const std::string& path, const Poset* order_from = nullptr);

}  // namespace orderforge
