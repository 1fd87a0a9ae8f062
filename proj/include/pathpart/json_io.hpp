// JSON schemas for groups, graphs, decorated graphs and handle specs.
//
//   group:     "Z2" | "S3" | ... | {"order": n, "table": [[..]], "labels": [..]}
//   graph:     {"vertices": [ids-or-names], "edges": [[u,v], ...]}
//              | {"adj": {"a": ["b", "c"], ...}}
//   decgraph:  {"graph": <graph>, "decorations": {"a": <group>, ...}}
//   handle:    {"type": "group", "group": <group>}
//              | {"type": "free-on-one"}
//              | {"type": "group-diagram", "nodes": [<group>...],
//                 "arrows": [{"src": i, "dst": j, "images": [..]}...]}
//              | {"type": "decorated-graph", ...decgraph fields}
//              | {"type": "path", "graph": <graph>}
//              | {"type": "corrupted-group", "group": <group>}
#ifndef PATHPART_JSON_IO_HPP
#define PATHPART_JSON_IO_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathpart/decpart.hpp"
#include "pathpart/fingroup.hpp"
#include "pathpart/graph.hpp"
#include "pathpart/partial.hpp"

namespace pathpart {

using json = nlohmann::json;

inline FinGroup group_from_json(const json& j) {
  if (j.is_string()) return make_builtin(j.get<std::string>());
  if (!j.is_object() || !j.contains("table"))
    throw std::invalid_argument("group json: expected builtin name or {table: ...}");
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return make_from_table(std::move(table), std::move(labels));
}

inline json group_to_json(const FinGroup& g) {
  json j;
  j["order"] = g.order();
  j["table"] = g.table();
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

struct NamedGraph {
  Graph graph;
  std::vector<std::string> labels;  // label of vertex i

  int vertex(const std::string& name) const {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end())
      throw std::invalid_argument("unknown vertex label: " + name);
    return static_cast<int>(it - labels.begin());
  }
};

// Arbitrary labels map to dense ids in sorted label order.
inline NamedGraph graph_from_json(const json& j) {
  auto label_of = [](const json& v) -> std::string {
    return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long long>());
  };
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> edge_labels;
  if (j.contains("adj")) {
    for (const auto& [name, nbrs] : j.at("adj").items()) {
      labels.push_back(name);
      for (const auto& other : nbrs) edge_labels.emplace_back(name, label_of(other));
    }
    for (const auto& [u, v] : edge_labels) {
      if (std::find(labels.begin(), labels.end(), v) == labels.end())
        labels.push_back(v);
      (void)u;
    }
  } else {
    for (const auto& v : j.at("vertices")) labels.push_back(label_of(v));
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph json: edge must be a pair");
      edge_labels.emplace_back(label_of(e[0]), label_of(e[1]));
    }
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto id_of = [&](const std::string& name) {
    auto it = std::lower_bound(labels.begin(), labels.end(), name);
    if (it == labels.end() || *it != name)
      throw std::invalid_argument("graph json: edge endpoint not a vertex: " + name);
    return static_cast<int>(it - labels.begin());
  };
  Graph g(static_cast<int>(labels.size()));
  for (const auto& [u, v] : edge_labels) {
    int a = id_of(u), b = id_of(v);
    if (!g.adjacent(a, b)) g.add_edge(a, b);
  }
  return NamedGraph{std::move(g), std::move(labels)};
}

inline json graph_to_json(const Graph& g,
                          const std::vector<std::string>& labels = {}) {
  auto name = [&](int v) -> json {
    if (v < static_cast<int>(labels.size())) return labels[v];
    return v;
  };
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.num_vertices(); ++v) j["vertices"].push_back(name(v));
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back(json::array({name(u), name(v)}));
  return j;
}

inline DecGraph decgraph_from_json(const json& j) {
  NamedGraph ng = graph_from_json(j.at("graph"));
  const json& decs = j.at("decorations");
  std::vector<FinGroup> dec;
  for (const std::string& label : ng.labels) {
    if (!decs.contains(label))
      throw std::invalid_argument("decorated graph json: no decoration for vertex " + label);
    dec.push_back(group_from_json(decs.at(label)));
  }
  return DecGraph(std::move(ng.graph), std::move(dec), std::move(ng.labels));
}

inline GroupDiagram diagram_from_json(const json& j) {
  GroupDiagram d;
  for (const auto& n : j.at("nodes")) d.nodes.push_back(group_from_json(n));
  if (j.contains("arrows"))
    for (const auto& a : j.at("arrows"))
      d.arrows.push_back({a.at("src").get<int>(), a.at("dst").get<int>(),
                          a.at("images").get<std::vector<int>>()});
  return d;
}

// Negative-control fixture: wraps a group handle and remaps the product of
// one ordered pair, which breaks P2 with a concrete counterexample.
class CorruptedGroupHandle : public GroupHandle {
 public:
  CorruptedGroupHandle(FinGroup g, long long x, long long y, long long wrong)
      : GroupHandle(std::move(g)), x_(x), y_(y), wrong_(wrong) {}

  Elem product(const ElemWord& w) const override {
    if (w.size() == 2 && w[0] == Elem{x_} && w[1] == Elem{y_})
      return Elem{wrong_};
    return GroupHandle::product(w);
  }

  std::string describe() const override {
    return GroupHandle::describe() + " (corrupted product)";
  }

 private:
  long long x_, y_, wrong_;
};

// Handle specs for the CLI. Returns the generic handle; `mg_out`, when given,
// also receives the MGHandle for word-based specs.
inline std::shared_ptr<PartialGroup> handle_from_json(
    const json& j, std::shared_ptr<MGHandle>* mg_out = nullptr) {
  std::string type = j.at("type").get<std::string>();
  if (type == "group") return from_group(group_from_json(j.at("group")));
  if (type == "free-on-one") return free_on_one();
  if (type == "group-diagram") return colimit_of_groups(diagram_from_json(j));
  if (type == "decorated-graph") {
    auto h = build(decgraph_from_json(j));
    if (mg_out) *mg_out = h;
    return h;
  }
  if (type == "path") {
    NamedGraph ng = graph_from_json(j.at("graph"));
    auto h = path_partial(std::move(ng.graph), std::move(ng.labels));
    if (mg_out) *mg_out = h;
    return h;
  }
  if (type == "corrupted-group") {
    FinGroup g = group_from_json(j.at("group"));
    if (g.order() < 3)
      throw std::invalid_argument("corrupted-group: needs order >= 3");
    long long x = j.value("x", 1), y = j.value("y", 2);
    long long right = g.mul(static_cast<int>(x), static_cast<int>(y));
    long long wrong = (right + 1) % g.order();
    return std::make_shared<CorruptedGroupHandle>(std::move(g), x, y, wrong);
  }
  throw std::invalid_argument("unknown handle type: " + type);
}

}  // namespace pathpart

#endif  // PATHPART_JSON_IO_HPP
