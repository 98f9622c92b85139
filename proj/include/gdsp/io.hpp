#pragma once

// JSON instance, partition and code formats. Field reference:
// docs/formats.md.

#include "gdsp/linear_code.hpp"
#include "gdsp/superposition.hpp"

#include "json.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>

namespace gdsp {

using Json = nlohmann::ordered_json;

struct Instance {
  FileSpec spec;
  int num_vertices = 0;
  std::optional<ColoredGraph> graph;
  std::optional<HyperGraph> hypergraph;
  std::shared_ptr<PartitionTree> partition;
  std::map<int, int> color_map;  // file color id -> dense color, only when re-indexed
  std::string note;

  bool is_hypergraph() const { return hypergraph.has_value(); }
};

class FormatError : public Error {
 public:
  using Error::Error;
};

namespace detail::io {

inline const Json& field(const Json& j, const std::string& name, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw FormatError(where + ": missing field '" + name + "'");
  return *it;
}

inline int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw FormatError(where + ": expected an integer");
  return j.get<int>();
}

inline std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<std::vector<int>> nested_list(const Json& j, const std::string& where) {
  if (!j.is_array()) throw FormatError(where + ": expected an array");
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(int_list(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(origin + ": " + e.what());
  }
}

}  // namespace detail::io

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

inline std::shared_ptr<PartitionTree> partition_from_json(const Json& j, const std::string& where,
                                                          const std::map<int, int>& color_map) {
  using namespace detail::io;
  auto tree = std::make_shared<PartitionTree>();
  auto classes = nested_list(field(j, "color_classes", where), where + ".color_classes");
  if (!color_map.empty())
    for (auto& cls : classes)
      for (auto& c : cls) {
        auto it = color_map.find(c);
        if (it == color_map.end())
          throw FormatError(where + ".color_classes: color " + std::to_string(c) + " does not appear on any edge");
        c = it->second;
      }
  tree->partition.color_classes = std::move(classes);
  tree->partition.vertex_clusters = nested_list(field(j, "vertex_clusters", where), where + ".vertex_clusters");
  if (j.contains("children")) {
    const auto& ch = j["children"];
    if (!ch.is_array() || ch.size() != tree->partition.color_classes.size())
      throw FormatError(where + ".children: expected one entry (object or null) per color class");
    for (std::size_t i = 0; i < ch.size(); ++i)
      tree->children.push_back(ch[i].is_null() ? nullptr
                                               : partition_from_json(ch[i], where + ".children[" + std::to_string(i) + "]",
                                                                     color_map));
  }
  return tree;
}

inline Json partition_to_json(const PartitionTree& t) {
  Json j;
  j["color_classes"] = t.partition.color_classes;
  j["vertex_clusters"] = t.partition.vertex_clusters;
  if (!t.children.empty()) {
    Json ch = Json::array();
    for (const auto& c : t.children) ch.push_back(c ? partition_to_json(*c) : Json(nullptr));
    j["children"] = ch;
  }
  return j;
}

inline Instance instance_from_json(const Json& j, const std::string& origin = "instance") {
  using namespace detail::io;
  if (!j.is_object()) throw FormatError(origin + ": top level must be an object");
  Instance inst;
  inst.num_vertices = as_int(field(j, "num_vertices", origin), origin + ".num_vertices");
  if (inst.num_vertices < 0) throw FormatError(origin + ".num_vertices: must be >= 0");
  const bool has_edges = j.contains("edges"), has_hyper = j.contains("hyperedges");
  if (has_edges == has_hyper) throw FormatError(origin + ": exactly one of 'edges' or 'hyperedges' is required");
  inst.spec.num_files = j.contains("num_files") ? as_int(j["num_files"], origin + ".num_files") : 1;
  inst.spec.symbols_per_file = j.contains("symbols_per_file") ? as_int(j["symbols_per_file"], origin + ".symbols_per_file") : 1;
  inst.spec.field_order = j.contains("field_order") ? as_int(j["field_order"], origin + ".field_order") : 5;
  try {
    inst.spec.validate();
  } catch (const Error& e) {
    throw FormatError(origin + ": " + e.what());
  }
  if (j.contains("note")) {
    if (!j["note"].is_string()) throw FormatError(origin + ".note: expected a string");
    inst.note = j["note"].get<std::string>();
  }

  if (has_hyper) {
    if (inst.spec.num_files != 1) throw FormatError(origin + ": hyper-graph instances carry a single file");
    auto hs = nested_list(j["hyperedges"], origin + ".hyperedges");
    try {
      inst.hypergraph = HyperGraph(inst.num_vertices, std::move(hs));
    } catch (const Error& e) {
      throw FormatError(origin + ".hyperedges: " + e.what());
    }
  } else {
    const auto& arr = j["edges"];
    if (!arr.is_array()) throw FormatError(origin + ".edges: expected an array");
    std::vector<ColoredEdge> edges;
    std::set<int> colors;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string where = origin + ".edges[" + std::to_string(i) + "]";
      auto t = int_list(arr[i], where);
      if (t.size() != 3) throw FormatError(where + ": expected [i, j, color]");
      edges.push_back({t[0], t[1], t[2]});
      colors.insert(t[2]);
    }
    // Colors outside 1..N are re-indexed densely in sorted order.
    const bool dense = colors.empty() || (*colors.begin() >= 1 && *colors.rbegin() <= inst.spec.num_files);
    if (!dense) {
      if (static_cast<int>(colors.size()) > inst.spec.num_files)
        throw FormatError(origin + ".edges: " + std::to_string(colors.size()) + " distinct colors exceed num_files = " +
                          std::to_string(inst.spec.num_files));
      int next = 1;
      for (int c : colors) inst.color_map[c] = next++;
      for (auto& e : edges) e.color = inst.color_map[e.color];
    }
    ColoredGraph g(inst.num_vertices, std::move(edges));
    auto violations = validate_instance(g, inst.spec);
    if (!violations.empty()) throw FormatError(origin + ": " + violations.front().message);
    inst.graph = std::move(g);
  }
  if (j.contains("partition")) {
    if (inst.is_hypergraph()) throw FormatError(origin + ".partition: partitions apply to colored graphs only");
    inst.partition = partition_from_json(j["partition"], origin + ".partition", inst.color_map);
  }
  return inst;
}

inline Instance load_instance(const std::string& path) {
  return instance_from_json(detail::io::parse_text(read_file(path), path), path);
}

// Canonical form: dense colors, normalized edge endpoints.
inline Json instance_to_json(const Instance& inst) {
  Json j;
  j["num_vertices"] = inst.num_vertices;
  j["num_files"] = inst.spec.num_files;
  j["symbols_per_file"] = inst.spec.symbols_per_file;
  j["field_order"] = inst.spec.field_order;
  if (!inst.note.empty()) j["note"] = inst.note;
  if (inst.graph) {
    Json edges = Json::array();
    for (const auto& e : inst.graph->edges()) edges.push_back({e.a, e.b, e.color});
    j["edges"] = edges;
  } else if (inst.hypergraph) {
    j["hyperedges"] = inst.hypergraph->hyperedges();
  }
  if (inst.partition) j["partition"] = partition_to_json(*inst.partition);
  return j;
}

inline Json spec_to_json(const FileSpec& s) {
  Json j;
  j["num_files"] = s.num_files;
  j["symbols_per_file"] = s.symbols_per_file;
  j["field_order"] = s.field_order;
  return j;
}

inline Json code_to_json(const LinearCode& code) {
  Json j;
  j["spec"] = spec_to_json(code.spec());
  j["num_vertices"] = code.num_vertices();
  Json vs = Json::array();
  for (Vertex u = 1; u <= code.num_vertices(); ++u) {
    Json v;
    v["vertex"] = u;
    Json rows = Json::array();
    for (const auto& r : code.rows(u)) rows.push_back(r);
    v["rows"] = rows;
    vs.push_back(v);
  }
  j["vertices"] = vs;
  return j;
}

inline LinearCode code_from_json(const Json& j, const std::string& origin = "code") {
  using namespace detail::io;
  const auto& s = field(j, "spec", origin);
  FileSpec spec{as_int(field(s, "num_files", origin + ".spec"), origin + ".spec.num_files"),
                as_int(field(s, "symbols_per_file", origin + ".spec"), origin + ".spec.symbols_per_file"),
                as_int(field(s, "field_order", origin + ".spec"), origin + ".spec.field_order")};
  const int k = as_int(field(j, "num_vertices", origin), origin + ".num_vertices");
  const auto& vs = field(j, "vertices", origin);
  if (!vs.is_array() || static_cast<int>(vs.size()) != k)
    throw FormatError(origin + ".vertices: expected " + std::to_string(k) + " entries");
  std::vector<Matrix> rows(k);
  for (int u = 0; u < k; ++u) {
    const std::string where = origin + ".vertices[" + std::to_string(u) + "]";
    if (vs[u].contains("vertex") && as_int(vs[u]["vertex"], where + ".vertex") != u + 1)
      throw FormatError(where + ".vertex: expected " + std::to_string(u + 1));
    for (const auto& r : nested_list(field(vs[u], "rows", where), where + ".rows")) {
      Row row;
      for (int x : r) {
        if (x < 0) throw FormatError(where + ".rows: negative coefficient");
        row.push_back(static_cast<Element>(x));
      }
      rows[u].push_back(std::move(row));
    }
  }
  try {
    return LinearCode(spec, std::move(rows));
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    throw FormatError(origin + ": " + e.what());
  }
}

inline LinearCode load_code(const std::string& path) {
  return code_from_json(detail::io::parse_text(read_file(path), path), path);
}

inline std::shared_ptr<PartitionTree> load_partition(const std::string& path, const std::map<int, int>& color_map) {
  return partition_from_json(detail::io::parse_text(read_file(path), path), path, color_map);
}

// "1/2,1/2,1" -> allocation.
inline MemoryAllocation parse_allocation(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return MemoryAllocation(std::move(out));
}

inline Json rational_json(const Rational& r) {
  Json j;
  j["exact"] = to_string(r);
  j["decimal"] = to_decimal(r);
  return j;
}

inline Json rational_list_json(const std::vector<Rational>& xs) {
  Json j = Json::array();
  for (const auto& x : xs) j.push_back(to_string(x));
  return j;
}

}  // namespace gdsp
