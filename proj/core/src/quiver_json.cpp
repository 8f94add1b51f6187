#include "qmod/quiver_json.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qmod {

using nlohmann::json;

QuiverFile parse_quiver_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed quiver JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error("quiver JSON must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer()) {
    throw Error("quiver JSON needs an integer \"vertices\" field");
  }
  const int k = doc["vertices"].get<int>();
  std::vector<Arrow> arrows;
  if (doc.contains("arrows")) {
    const json& list = doc["arrows"];
    if (!list.is_array()) throw Error("\"arrows\" must be an array");
    for (const json& a : list) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
          !a[1].is_number_integer()) {
        throw Error("each arrow must be a pair [source, target] of integers");
      }
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
  }
  QuiverFile out{Quiver(k, arrows), std::nullopt};
  if (doc.contains("dims")) {
    const json& d = doc["dims"];
    if (!d.is_array()) throw Error("\"dims\" must be an array");
    std::vector<int> coords;
    for (const json& x : d) {
      if (!x.is_number_integer()) throw Error("\"dims\" entries must be integers");
      coords.push_back(x.get<int>());
    }
    check_same_size(static_cast<std::size_t>(k), coords.size(), "\"dims\"");
    out.dims = DimVector(std::move(coords));
  }
  return out;
}

QuiverFile read_quiver_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open quiver file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_quiver_json(buf.str());
}

std::string quiver_to_json(const Quiver& q, const std::optional<DimVector>& dims) {
  json arrows = json::array();
  for (const auto& [s, t] : q.arrows()) arrows.push_back({s, t});
  json doc = {{"vertices", q.num_vertices()}, {"arrows", std::move(arrows)}};
  if (dims) doc["dims"] = std::vector<int>(dims->coords().begin(), dims->coords().end());
  return doc.dump();
}

}  // namespace qmod
