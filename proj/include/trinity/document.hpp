#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include "trinity/trinity.hpp"

namespace trinity {

// On-disk graph: names, (violet, emerald) edges, counter-clockwise rotations
// by edge index, and the edge side facing the unbounded region (sides are
// taken walking from the violet end to the emerald end).
struct GraphDocument {
  int format_version = 1;
  std::vector<std::string> violet, emerald;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::vector<int>>> rotations;  // document order
  int outer_edge = 0;
  std::string outer_side = "right";

  bool operator==(const GraphDocument&) const = default;
};

namespace detail {

[[noreturn]] inline void bad_doc(const std::string& msg) { fail(ErrorKind::Parse, msg); }

inline std::vector<std::string> string_list(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) bad_doc(std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (auto& x : j[key]) {
    if (!x.is_string()) bad_doc(std::string("non-string entry in '") + key + "'");
    out.push_back(x.get<std::string>());
  }
  return out;
}

}  // namespace detail

inline GraphDocument parse_document(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    detail::bad_doc("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) detail::bad_doc("document is not an object");
  static const std::set<std::string> known = {"format_version", "violet", "emerald", "edges", "rotations", "outer_face"};
  for (auto& [k, v] : j.items())
    if (!known.count(k)) detail::bad_doc("unknown key '" + k + "'");
  GraphDocument d;
  if (!j.contains("format_version") || !j["format_version"].is_number_integer() || j["format_version"].get<int>() != 1)
    detail::bad_doc("format_version must be 1");
  d.violet = detail::string_list(j, "violet");
  d.emerald = detail::string_list(j, "emerald");
  if (!j.contains("edges") || !j["edges"].is_array()) detail::bad_doc("missing array 'edges'");
  for (auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      detail::bad_doc("edge entries must be [violet, emerald] name pairs");
    d.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  if (!j.contains("rotations") || !j["rotations"].is_object()) detail::bad_doc("missing object 'rotations'");
  for (auto& [name, rot] : j["rotations"].items()) {
    if (!rot.is_array()) detail::bad_doc("rotation of '" + name + "' is not an array");
    std::vector<int> r;
    for (auto& x : rot) {
      if (!x.is_number_integer()) detail::bad_doc("rotation of '" + name + "' has a non-integer entry");
      r.push_back(x.get<int>());
    }
    d.rotations.emplace_back(name, std::move(r));
  }
  if (!j.contains("outer_face") || !j["outer_face"].is_object()) detail::bad_doc("missing object 'outer_face'");
  const auto& of = j["outer_face"];
  if (!of.contains("edge") || !of["edge"].is_number_integer() || !of.contains("side") || !of["side"].is_string() ||
      of.size() != 2)
    detail::bad_doc("outer_face needs exactly 'edge' and 'side'");
  d.outer_edge = of["edge"].get<int>();
  d.outer_side = of["side"].get<std::string>();
  if (d.outer_side != "left" && d.outer_side != "right") detail::bad_doc("outer_face side must be 'left' or 'right'");
  return d;
}

inline std::string serialize_document(const GraphDocument& d) {
  auto q = [](const std::string& s) { return nlohmann::json(s).dump(); };
  auto names = [&](const std::vector<std::string>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + q(v[i]);
    return s + "]";
  };
  std::ostringstream os;
  os << "{\n  \"format_version\": " << d.format_version << ",\n";
  os << "  \"violet\": " << names(d.violet) << ",\n";
  os << "  \"emerald\": " << names(d.emerald) << ",\n";
  os << "  \"edges\": [\n";
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    os << "    [" << q(d.edges[i].first) << ", " << q(d.edges[i].second) << "]" << (i + 1 < d.edges.size() ? "," : "") << "\n";
  os << "  ],\n  \"rotations\": {\n";
  for (std::size_t i = 0; i < d.rotations.size(); ++i) {
    os << "    " << q(d.rotations[i].first) << ": [";
    for (std::size_t k = 0; k < d.rotations[i].second.size(); ++k) os << (k ? ", " : "") << d.rotations[i].second[k];
    os << "]" << (i + 1 < d.rotations.size() ? "," : "") << "\n";
  }
  os << "  },\n  \"outer_face\": {\"edge\": " << d.outer_edge << ", \"side\": " << q(d.outer_side) << "}\n}\n";
  return os.str();
}

struct LoadedGraph {
  PlanarMap map;
  Bipartition bip;  // class_a violet
  int outer_face = 0;
  std::vector<std::string> names;  // by map vertex id
};

// Structural validation; errors are reported with the Parse kind unless the
// rotation system itself fails (not-planar, disconnected).
inline LoadedGraph load_graph(const GraphDocument& d) {
  std::map<std::string, int> id;
  LoadedGraph g;
  for (auto& n : d.violet) {
    if (!id.emplace(n, static_cast<int>(g.names.size())).second) fail(ErrorKind::Parse, "duplicate vertex name '" + n + "'");
    g.names.push_back(n);
  }
  for (auto& n : d.emerald) {
    if (!id.emplace(n, static_cast<int>(g.names.size())).second) fail(ErrorKind::Parse, "duplicate vertex name '" + n + "'");
    g.names.push_back(n);
  }
  const int nv = static_cast<int>(d.violet.size());
  if (nv == 0 || d.emerald.empty()) fail(ErrorKind::Parse, "both colour classes must be non-empty");
  std::vector<std::pair<int, int>> edges;
  std::set<std::pair<std::string, std::string>> seen;
  for (auto& [a, b] : d.edges) {
    if (!seen.emplace(a, b).second) fail(ErrorKind::Parse, "parallel edge [" + a + ", " + b + "]; input graphs must be simple");
    auto ia = id.find(a), ib = id.find(b);
    if (ia == id.end() || ib == id.end()) fail(ErrorKind::Parse, "edge names unknown vertex");
    if (ia->second >= nv || ib->second < nv) fail(ErrorKind::NotBipartite, "edge [" + a + ", " + b + "] is not (violet, emerald)");
    edges.emplace_back(ia->second, ib->second);
  }
  if (edges.empty()) fail(ErrorKind::Parse, "graph has no edges");
  std::vector<std::vector<int>> rot(g.names.size());
  std::vector<bool> have(g.names.size(), false);
  for (auto& [n, r] : d.rotations) {
    auto it = id.find(n);
    if (it == id.end()) fail(ErrorKind::Parse, "rotation for unknown vertex '" + n + "'");
    if (have[it->second]) fail(ErrorKind::Parse, "duplicate rotation for '" + n + "'");
    have[it->second] = true;
    rot[it->second] = r;
  }
  for (std::size_t v = 0; v < have.size(); ++v)
    if (!have[v]) fail(ErrorKind::Parse, "no rotation for '" + g.names[v] + "'");
  try {
    g.map = PlanarMap::build(g.names.size(), edges, rot);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidArgument) fail(ErrorKind::Parse, e.what());
    throw;
  }
  std::vector<int> side(g.names.size(), 1);
  for (int v = 0; v < nv; ++v) side[v] = 0;
  g.bip = bipartition_from_sides(g.map, side);
  if (d.outer_edge < 0 || d.outer_edge >= static_cast<int>(edges.size())) fail(ErrorKind::Parse, "outer_face edge out of range");
  // dart 2k starts at the violet end; its right-hand face is face_of(2k)
  int dart = 2 * d.outer_edge;
  g.outer_face = d.outer_side == "right" ? g.map.face_of(dart) : g.map.face_of(dart + 1);
  return g;
}

inline Trinity load_trinity(const GraphDocument& d, std::optional<int> root = std::nullopt) {
  LoadedGraph g = load_graph(d);
  return build_trinity(g.map, g.bip, g.outer_face, root);
}

}  // namespace trinity
