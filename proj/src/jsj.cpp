// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include "raagqi/jsj.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "json.hpp"

namespace raagqi {

std::string count_str(Count c) { return c == kInfinity ? "inf" : std::to_string(c); }

const char* to_string(NodeKind k) { return k == NodeKind::Cylinder ? "cylinder" : "rigid"; }

namespace {

bool in_some_cut_star(const Graph& g, const VertexSet& block, const VertexSet& cuts) {
  return std::any_of(cuts.begin(), cuts.end(), [&](int c) { return is_subset(block, star(g, c)); });
}

bool is_rigid_block(const Graph& g, const VertexSet& block, const VertexSet& cuts) {
  return set_intersection(block, cuts).size() >= 2 || !in_some_cut_star(g, block, cuts);
}

}  // namespace

GraphOfGroups build_jsj(const Graph& g) {
  if (!is_connected(g)) throw GraphError("build_jsj: graph is not connected");
  if (g.size() < 3) throw GraphError("build_jsj: need at least three vertices");
  GraphOfGroups gog;
  gog.source = g;
  auto cuts = cut_vertices(g);
  int full_star = -1;
  for (int v = 0; v < g.size() && full_star < 0; ++v)
    if (g.degree(v) == g.size() - 1) full_star = v;
  if (cuts.empty() || full_star >= 0) {
    gog.trivial = true;
    GogVertex only;
    only.subgraph = all_vertices(g);
    if (full_star >= 0 && contains(cuts, full_star)) {
      only.kind = NodeKind::Cylinder;
      only.cut_vertex = full_star;
    }
    gog.vertices.push_back(std::move(only));
    return gog;
  }

  auto blocks = maximal_biconnected_subgraphs(g);
  std::vector<VertexSet> rigid;
  for (const auto& b : blocks)
    if (is_rigid_block(g, b, cuts)) rigid.push_back(b);

  // Bipartite incidence: cylinder star(v) -- rigid B whenever v in B.
  int nc = static_cast<int>(cuts.size());
  int nr = static_cast<int>(rigid.size());
  std::vector<std::vector<int>> adj(nc + nr);  // nodes 0..nc-1 cylinders, nc.. rigid
  for (int r = 0; r < nr; ++r)
    for (int c = 0; c < nc; ++c)
      if (contains(rigid[r], cuts[c])) {
        adj[nc + r].push_back(c);
        adj[c].push_back(nc + r);
      }

  // Breadth-first order from the first rigid vertex keeps ids deterministic
  // and makes path-shaped trees read off in order.
  std::vector<int> id_of(nc + nr, -1);
  std::deque<int> queue{nr > 0 ? nc : 0};
  id_of[queue.front()] = 0;
  std::vector<int> order;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    order.push_back(x);
    for (int y : adj[x])
      if (id_of[y] < 0) {
        id_of[y] = static_cast<int>(order.size() + queue.size());
        queue.push_back(y);
      }
  }
  for (int x : order) {
    GogVertex gv;
    gv.id = id_of[x];
    if (x < nc) {
      gv.kind = NodeKind::Cylinder;
      gv.cut_vertex = cuts[x];
      gv.subgraph = star(g, cuts[x]);
    } else {
      gv.kind = NodeKind::Rigid;
      gv.subgraph = rigid[x - nc];
    }
    gog.vertices.push_back(std::move(gv));
  }
  for (int x : order) {
    if (x < nc) continue;
    for (int c : adj[x]) {
      if (id_of[c] < 0) continue;
      GogEdge e;
      e.id = static_cast<int>(gog.edges.size());
      e.cylinder = id_of[c];
      e.rigid = id_of[x];
      e.cut_vertex = cuts[c];
      e.subgraph = set_intersection(rigid[x - nc], star(g, cuts[c]));
      gog.vertices[e.cylinder].edges.push_back(e.id);
      gog.vertices[e.rigid].edges.push_back(e.id);
      gog.edges.push_back(std::move(e));
    }
  }
  for (auto& v : gog.vertices) std::sort(v.edges.begin(), v.edges.end());
  return gog;
}

CylinderBlocks cylinder_blocks(const Graph& g, int v) {
  auto cuts = cut_vertices(g);
  if (!contains(cuts, v)) throw GraphError("cylinder_blocks: '" + g.name(v) + "' is not a cut vertex");
  CylinderBlocks cb;
  cb.cut_vertex = v;
  auto lk = link(g, v);
  for (const auto& b : maximal_biconnected_subgraphs(g)) {
    if (!contains(b, v)) continue;
    auto piece = set_intersection(b, lk);
    if (is_rigid_block(g, b, cuts)) cb.peripheral.push_back({piece, b});
    else cb.non_peripheral.push_back(piece);
  }
  return cb;
}

Count edge_multiplicity(const GraphOfGroups& gog, int vertex_id, int edge_id) {
  const auto& e = gog.edges.at(edge_id);
  const auto& g = gog.source;
  const auto& rigid = gog.vertices.at(e.rigid).subgraph;
  if (vertex_id == e.cylinder) {
    auto lk = link(g, e.cut_vertex);
    return set_intersection(rigid, lk) == lk ? 1 : kInfinity;
  }
  if (vertex_id == e.rigid) return is_subset(rigid, star(g, e.cut_vertex)) ? 1 : kInfinity;
  throw GraphError("edge_multiplicity: edge not incident to vertex");
}

std::string export_dot(const GraphOfGroups& gog) {
  const auto& g = gog.source;
  std::string out = "graph gog {\n";
  for (const auto& v : gog.vertices) {
    std::string label = to_string(v.kind);
    if (v.kind == NodeKind::Cylinder) label += " star(" + g.name(v.cut_vertex) + ")";
    label += "\\n" + format_set(g, v.subgraph);
    out += "  v" + std::to_string(v.id) + " [label=\"" + label + "\"";
    out += v.kind == NodeKind::Cylinder ? ", shape=ellipse, style=filled, fillcolor=black, fontcolor=white"
                                        : ", shape=box";
    out += "];\n";
  }
  for (const auto& e : gog.edges)
    out += "  v" + std::to_string(e.cylinder) + " -- v" + std::to_string(e.rigid) + " [label=\"" +
           format_set(g, e.subgraph) + "\"];\n";
  return out + "}\n";
}

namespace {

nlohmann::json names_of(const Graph& g, const VertexSet& vs) {
  auto a = nlohmann::json::array();
  for (int v : vs) a.push_back(g.name(v));
  return a;
}

VertexSet indices_of(const Graph& g, const nlohmann::json& a) {
  VertexSet vs;
  for (const auto& x : a) vs.push_back(g.index(x.get<std::string>()));
  std::sort(vs.begin(), vs.end());
  return vs;
}

}  // namespace

std::string export_json(const GraphOfGroups& gog) {
  const auto& g = gog.source;
  nlohmann::json doc;
  doc["source"] = nlohmann::json::parse(serialize_graph(g, GraphFormat::Json));
  doc["trivial"] = gog.trivial;
  auto vs = nlohmann::json::array();
  for (const auto& v : gog.vertices) {
    nlohmann::json j;
    j["id"] = v.id;
    j["kind"] = to_string(v.kind);
    j["definingSubgraph"] = names_of(g, v.subgraph);
    j["cutVertex"] = v.cut_vertex >= 0 ? nlohmann::json(g.name(v.cut_vertex)) : nlohmann::json(nullptr);
    j["edges"] = v.edges;
    vs.push_back(j);
  }
  doc["vertices"] = vs;
  auto es = nlohmann::json::array();
  for (const auto& e : gog.edges) {
    nlohmann::json j;
    j["id"] = e.id;
    j["cylinder"] = e.cylinder;
    j["rigid"] = e.rigid;
    j["cutVertex"] = g.name(e.cut_vertex);
    j["definingSubgraph"] = names_of(g, e.subgraph);
    j["multiplicityAtCylinder"] = count_str(edge_multiplicity(gog, e.cylinder, e.id));
    j["multiplicityAtRigid"] = count_str(edge_multiplicity(gog, e.rigid, e.id));
    es.push_back(j);
  }
  doc["edges"] = es;
  return doc.dump(2) + "\n";
}

GraphOfGroups import_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  GraphOfGroups gog;
  gog.source = parse_graph(doc["source"].dump(), GraphFormat::Json);
  const auto& g = gog.source;
  gog.trivial = doc["trivial"].get<bool>();
  for (const auto& j : doc["vertices"]) {
    GogVertex v;
    v.id = j["id"].get<int>();
    v.kind = j["kind"].get<std::string>() == "cylinder" ? NodeKind::Cylinder : NodeKind::Rigid;
    v.subgraph = indices_of(g, j["definingSubgraph"]);
    if (!j["cutVertex"].is_null()) v.cut_vertex = g.index(j["cutVertex"].get<std::string>());
    v.edges = j["edges"].get<std::vector<int>>();
    gog.vertices.push_back(std::move(v));
  }
  for (const auto& j : doc["edges"]) {
    GogEdge e;
    e.id = j["id"].get<int>();
    e.cylinder = j["cylinder"].get<int>();
    e.rigid = j["rigid"].get<int>();
    e.cut_vertex = g.index(j["cutVertex"].get<std::string>());
    e.subgraph = indices_of(g, j["definingSubgraph"]);
    gog.edges.push_back(std::move(e));
  }
  return gog;
}

}  // namespace raagqi
