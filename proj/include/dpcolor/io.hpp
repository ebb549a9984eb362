#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "json.hpp"

#include "dpcolor/configuration.hpp"
#include "dpcolor/dp_cover.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/plane_graph.hpp"

namespace dpcolor::io {

using nlohmann::json;

/// Parses JSON text; syntax errors report line and column.
inline json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParse, source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                       ": JSON syntax error");
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

template <typename T>
T get_field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::kParse, where + ": missing field \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kParse, where + ": field \"" + key + "\" has the wrong type");
  }
}

inline VertexId parse_vertex_key(const std::string& key, const std::string& where) {
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || v < 0) throw Error(ErrorCode::kParse, where + ": bad vertex id \"" + key + "\"");
  return v;
}

inline Edge parse_edge_key(const std::string& key, const std::string& where) {
  auto dash = key.find('-');
  if (dash == std::string::npos) throw Error(ErrorCode::kParse, where + ": bad edge key \"" + key + "\"");
  VertexId a = parse_vertex_key(key.substr(0, dash), where);
  VertexId b = parse_vertex_key(key.substr(dash + 1), where);
  if (a >= b) throw Error(ErrorCode::kParse, where + ": edge key \"" + key + "\" must be min-max");
  return Edge(a, b);
}

}  // namespace detail

// ---- graphs ---------------------------------------------------------------

inline PlaneGraph graph_from_json(const json& j, const std::string& where = "graph") {
  auto vertices = detail::get_field<std::vector<VertexId>>(j, "vertices", where);
  if (!j.contains("rotation") || !j.at("rotation").is_object()) {
    throw Error(ErrorCode::kParse, where + ": missing object field \"rotation\"");
  }
  PlaneGraph::Rotation rot;
  for (VertexId v : vertices) rot[v];
  for (const auto& [key, nbrs] : j.at("rotation").items()) {
    VertexId v = detail::parse_vertex_key(key, where);
    if (!rot.count(v)) throw Error(ErrorCode::kParse, where + ": rotation of unlisted vertex " + key);
    try {
      rot[v] = nbrs.get<std::vector<VertexId>>();
    } catch (const json::exception&) {
      throw Error(ErrorCode::kParse, where + ": rotation of " + key + " must be a list of vertex ids");
    }
  }
  std::optional<std::vector<VertexId>> outer;
  if (j.contains("outer") && !j.at("outer").is_null()) outer = detail::get_field<std::vector<VertexId>>(j, "outer", where);
  return PlaneGraph::from_rotation(std::move(rot), std::move(outer));
}

inline json graph_to_json(const PlaneGraph& g) {
  json j;
  j["vertices"] = g.vertices();
  json rot = json::object();
  for (const auto& [v, nbrs] : g.rotation()) rot[std::to_string(v)] = nbrs;
  j["rotation"] = rot;
  if (g.outer()) j["outer"] = *g.outer();
  return j;
}

inline PlaneGraph load_graph(const std::string& path) { return graph_from_json(parse_json(read_file(path), path), path); }

// ---- lists and matchings ----------------------------------------------------

struct MatchingFile {
  ListAssignment lists;
  MatchingAssignment matchings;
};

inline MatchingFile matching_from_json(const json& j, const std::string& where = "matching") {
  MatchingFile out;
  if (!j.contains("lists") || !j.at("lists").is_object()) {
    throw Error(ErrorCode::kParse, where + ": missing object field \"lists\"");
  }
  for (const auto& [key, colors] : j.at("lists").items()) {
    try {
      out.lists.set(detail::parse_vertex_key(key, where), colors.get<std::vector<Color>>());
    } catch (const json::exception&) {
      throw Error(ErrorCode::kParse, where + ": list of " + key + " must be a list of colors");
    }
  }
  if (j.contains("matchings")) {
    if (!j.at("matchings").is_object()) throw Error(ErrorCode::kParse, where + ": \"matchings\" must be an object");
    for (const auto& [key, pairs] : j.at("matchings").items()) {
      Edge e = detail::parse_edge_key(key, where);
      MatchingAssignment::Pairs ps;
      try {
        for (const auto& p : pairs) {
          auto two = p.get<std::vector<Color>>();
          if (two.size() != 2) throw Error(ErrorCode::kParse, where + ": pairs on " + key + " must have two colors");
          ps.emplace_back(two[0], two[1]);
        }
      } catch (const json::exception&) {
        throw Error(ErrorCode::kParse, where + ": pairs on " + key + " must be [cu, cv] lists");
      }
      out.matchings.set(e.u, e.v, std::move(ps));
    }
  }
  return out;
}

inline json matching_to_json(const ListAssignment& l, const MatchingAssignment& m) {
  json lists = json::object();
  for (const auto& [v, colors] : l.entries()) lists[std::to_string(v)] = colors;
  json matchings = json::object();
  for (const auto& [e, pairs] : m.entries()) {
    json ps = json::array();
    for (const auto& [a, b] : pairs) ps.push_back({a, b});
    matchings[edge_key(e)] = ps;
  }
  return json{{"lists", lists}, {"matchings", matchings}};
}

inline MatchingFile load_matching(const std::string& path) {
  return matching_from_json(parse_json(read_file(path), path), path);
}

inline json coloring_to_json(const PartialColoring& a) {
  json j = json::object();
  for (const auto& [v, c] : a) j[std::to_string(v)] = c;
  return j;
}

inline PartialColoring coloring_from_json(const json& j, const std::string& where = "coloring") {
  if (!j.is_object()) throw Error(ErrorCode::kParse, where + ": coloring must be an object");
  PartialColoring out;
  for (const auto& [key, c] : j.items()) {
    if (!c.is_number_integer()) throw Error(ErrorCode::kParse, where + ": color of " + key + " must be an integer");
    out[detail::parse_vertex_key(key, where)] = c.get<Color>();
  }
  return out;
}

// ---- configurations ---------------------------------------------------------

inline Configuration configuration_from_json(const json& j, const std::string& where = "configuration") {
  Configuration cfg;
  cfg.name = detail::get_field<std::string>(j, "name", where);
  if (j.contains("description")) cfg.description = detail::get_field<std::string>(j, "description", where);
  if (!j.contains("vertices") || !j.at("vertices").is_array()) {
    throw Error(ErrorCode::kParse, where + ": missing array field \"vertices\"");
  }
  for (const auto& vj : j.at("vertices")) {
    std::string label = detail::get_field<std::string>(vj, "id", where);
    cfg.names.push_back(label);
    VertexConstraint c;
    bool any = false;
    if (vj.contains("degree")) {
      c.degree = detail::get_field<int>(vj, "degree", where);
      c.exact = vj.value("exact", true);
      any = true;
    }
    if (vj.contains("internal")) {
      c.internal = detail::get_field<bool>(vj, "internal", where);
      any = true;
    }
    if (any) cfg.constraints[static_cast<VertexId>(cfg.names.size() - 1)] = c;
  }
  auto ids = [&](const std::vector<std::string>& labels) {
    try {
      return cfg.ids_of(labels);
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse, where + ": " + e.what());
    }
  };
  for (const auto& pair : detail::get_field<std::vector<std::vector<std::string>>>(j, "edges", where)) {
    if (pair.size() != 2) throw Error(ErrorCode::kParse, where + ": edges must be label pairs");
    auto e = ids(pair);
    cfg.edges.emplace_back(e[0], e[1]);
  }
  if (j.contains("boundary")) cfg.boundary = ids(detail::get_field<std::vector<std::string>>(j, "boundary", where));
  if (j.contains("order") && !j.at("order").is_null()) {
    cfg.order = ids(detail::get_field<std::vector<std::string>>(j, "order", where));
  }
  if (j.contains("faces")) {
    for (const auto& f : detail::get_field<std::vector<std::vector<std::string>>>(j, "faces", where)) {
      cfg.faces.push_back(ids(f));
    }
  }
  if (j.contains("outer") && !j.at("outer").is_null()) {
    cfg.outer = ids(detail::get_field<std::vector<std::string>>(j, "outer", where));
  }
  // for unconstrained vertices the pattern degree is the lower bound
  Graph h;
  try {
    h = cfg.pattern();
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, where + ": " + e.what());
  }
  for (VertexId v = 0; v < static_cast<VertexId>(cfg.size()); ++v) {
    if (!cfg.constraints.count(v) || !j.at("vertices")[static_cast<std::size_t>(v)].contains("degree")) {
      cfg.constraints[v].degree = h.degree(v);
    }
  }
  cfg.validate();
  return cfg;
}

inline json configuration_to_json(const Configuration& cfg) {
  json j;
  j["name"] = cfg.name;
  if (!cfg.description.empty()) j["description"] = cfg.description;
  json vs = json::array();
  for (VertexId v = 0; v < static_cast<VertexId>(cfg.size()); ++v) {
    json vj{{"id", cfg.label(v)}};
    auto it = cfg.constraints.find(v);
    if (it != cfg.constraints.end()) {
      vj["degree"] = it->second.degree;
      vj["exact"] = it->second.exact;
      vj["internal"] = it->second.internal;
    }
    vs.push_back(vj);
  }
  j["vertices"] = vs;
  auto labels = [&](const std::vector<VertexId>& ids) {
    std::vector<std::string> out;
    for (VertexId v : ids) out.push_back(cfg.label(v));
    return out;
  };
  json es = json::array();
  for (const Edge& e : cfg.edges) es.push_back({cfg.label(e.u), cfg.label(e.v)});
  j["edges"] = es;
  j["boundary"] = labels(cfg.boundary);
  if (cfg.order) j["order"] = labels(*cfg.order);
  if (!cfg.faces.empty()) {
    json fs = json::array();
    for (const auto& f : cfg.faces) fs.push_back(labels(f));
    j["faces"] = fs;
  }
  if (cfg.outer) j["outer"] = labels(*cfg.outer);
  return j;
}

inline Configuration load_configuration(const std::string& path) {
  return configuration_from_json(parse_json(read_file(path), path), path);
}

}  // namespace dpcolor::io
