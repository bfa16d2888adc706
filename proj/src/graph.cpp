// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include "raagqi/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"

namespace raagqi {

Graph::Graph(int n) {
  grow(n);
  for (int i = 0; i < n; ++i) {
    names_.push_back(std::to_string(i));
    lookup_.emplace(names_.back(), i);
  }
}

Graph::Graph(std::vector<std::string> names) {
  grow(static_cast<int>(names.size()));
  for (auto& nm : names) {
    if (lookup_.count(nm)) throw GraphError("duplicate vertex '" + nm + "'");
    lookup_.emplace(nm, static_cast<int>(names_.size()));
    names_.push_back(std::move(nm));
  }
}

void Graph::grow(int n) {
  if (n <= stride_) {
    nbrs_.resize(std::max<std::size_t>(nbrs_.size(), n));
    return;
  }
  int ns = std::max(n, stride_ * 2);
  std::vector<char> fresh(static_cast<std::size_t>(ns) * ns, 0);
  for (int i = 0; i < stride_; ++i)
    for (int j = 0; j < stride_; ++j) fresh[i * ns + j] = adj_[i * stride_ + j];
  adj_.swap(fresh);
  stride_ = ns;
  nbrs_.resize(n);
}

int Graph::add_vertex(std::string name) {
  if (lookup_.count(name)) throw GraphError("duplicate vertex '" + name + "'");
  int id = size();
  grow(id + 1);
  lookup_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= size() || v >= size()) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("self-loop at vertex '" + names_[u] + "'");
  if (adjacent(u, v))
    throw GraphError("duplicate edge " + names_[u] + " " + names_[v]);
  adj_[u * stride_ + v] = adj_[v * stride_ + u] = 1;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++edges_;
}

void Graph::add_edge(std::string_view u, std::string_view v) { add_edge(index(u), index(v)); }

std::optional<int> Graph::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int Graph::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw GraphError("unknown vertex '" + std::string(name) + "'");
  return *i;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int u = 0; u < size(); ++u)
    for (int v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string Graph::key() const {
  std::string k;
  for (const auto& n : names_) {
    k += std::to_string(n.size());
    k += ':';
    k += n;
  }
  k += '|';
  for (auto [u, v] : edges()) {
    k += std::to_string(u);
    k += '-';
    k += std::to_string(v);
    k += ',';
  }
  return k;
}

VertexSet all_vertices(const Graph& g) {
  VertexSet s(g.size());
  for (int i = 0; i < g.size(); ++i) s[i] = i;
  return s;
}

VertexSet link(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) throw GraphError("vertex not in graph");
  return g.neighbours(v);
}

VertexSet star(const Graph& g, int v) {
  VertexSet s = link(g, v);
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  return s;
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  std::vector<char> seen(g.size(), 0);
  for (int r : removed) seen[r] = 1;
  std::vector<VertexSet> comps;
  for (int s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int w : g.neighbours(u))
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<VertexSet> connected_components(const Graph& g) { return components_without(g, {}); }

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Graph induced_subgraph(const Graph& g, const VertexSet& vs) {
  std::vector<std::string> names;
  names.reserve(vs.size());
  for (int v : vs) names.push_back(g.name(v));
  Graph h(std::move(names));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph complement(const Graph& g) {
  Graph h(g.names());
  for (int u = 0; u < g.size(); ++u)
    for (int v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.size(); ++s) {
    std::vector<int> dist(g.size(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbours(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    for (int d : dist) {
      if (d < 0) return -1;
      best = std::max(best, d);
    }
  }
  return best;
}

bool is_clique(const Graph& g, const VertexSet& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_clique(const Graph& g) { return g.edge_count() * 2 == g.size() * (g.size() - 1); }

namespace {

// Tarjan low-link over a connected graph; fills cut flags and the blocks.
struct LowLink {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<char> cut;
  std::vector<std::pair<int, int>> stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  explicit LowLink(const Graph& graph)
      : g(graph), disc(graph.size(), -1), low(graph.size(), 0), cut(graph.size(), 0) {}

  void run(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    for (int w : g.neighbours(u)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        ++children;
        run(w, u);
        low[u] = std::min(low[u], low[w]);
        if ((parent < 0 && children > 1) || (parent >= 0 && low[w] >= disc[u])) cut[u] = 1;
        if (low[w] >= disc[u]) pop_block(u, w);
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  }

  void pop_block(int u, int w) {
    std::set<int> b;
    while (!stack.empty()) {
      auto e = stack.back();
      stack.pop_back();
      b.insert(e.first);
      b.insert(e.second);
      if (e == std::make_pair(u, w)) break;
    }
    blocks.emplace_back(b.begin(), b.end());
  }
};

}  // namespace

VertexSet cut_vertices(const Graph& g) {
  if (g.size() == 0 || !is_connected(g)) throw GraphError("cut_vertices: graph is not connected");
  LowLink ll(g);
  ll.run(0, -1);
  VertexSet out;
  for (int v = 0; v < g.size(); ++v)
    if (ll.cut[v]) out.push_back(v);
  return out;
}

std::vector<VertexSet> maximal_biconnected_subgraphs(const Graph& g) {
  if (g.size() < 2) throw GraphError("blocks: need at least two vertices");
  if (!is_connected(g)) throw GraphError("blocks: graph is not connected");
  LowLink ll(g);
  ll.run(0, -1);
  auto blocks = std::move(ll.blocks);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

JoinDecomposition join_decomposition(const Graph& g) {
  JoinDecomposition jd;
  auto comps = connected_components(complement(g));
  for (auto& c : comps) {
    if (c.size() == 1)
      jd.clique.push_back(c[0]);
    else
      jd.factors.push_back(std::move(c));
  }
  std::sort(jd.clique.begin(), jd.clique.end());
  std::sort(jd.factors.begin(), jd.factors.end());
  jd.clique_rank = static_cast<int>(jd.clique.size());
  return jd;
}

std::pair<int, std::vector<Graph>> join_factors(const Graph& g) {
  auto jd = join_decomposition(g);
  std::vector<Graph> fs;
  for (const auto& f : jd.factors) fs.push_back(induced_subgraph(g, f));
  return {jd.clique_rank, std::move(fs)};
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

std::string format_set(const Graph& g, const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += g.name(vs[i]);
  }
  return out + "}";
}

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::optional<Graph> g;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (!g) {
      int n = -1;
      auto [p, ec] = std::from_chars(toks[0].data(), toks[0].data() + toks[0].size(), n);
      if (toks.size() != 1 || ec != std::errc() || p != toks[0].data() + toks[0].size() || n < 0)
        throw GraphError("expected vertex count", lineno);
      g.emplace(n);
      continue;
    }
    if (toks.size() != 2) throw GraphError("expected 'u v'", lineno);
    auto u = g->find(toks[0]);
    auto v = g->find(toks[1]);
    if (!u) throw GraphError("unknown vertex '" + toks[0] + "'", lineno);
    if (!v) throw GraphError("unknown vertex '" + toks[1] + "'", lineno);
    if (*u == *v) throw GraphError("self-loop at vertex '" + toks[0] + "'", lineno);
    if (g->adjacent(*u, *v)) throw GraphError("duplicate edge " + toks[0] + " " + toks[1], lineno);
    g->add_edge(*u, *v);
  }
  if (!g) throw GraphError("empty input: expected vertex count", 1);
  return std::move(*g);
}

std::string json_name(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw GraphError("vertex identifiers must be strings or integers");
}

Graph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices")) throw GraphError("JSON graph needs 'vertices'");
  Graph g;
  for (const auto& v : doc["vertices"]) g.add_vertex(json_name(v));
  if (doc.contains("edges")) {
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair");
      auto a = json_name(e[0]), b = json_name(e[1]);
      auto u = g.find(a), v = g.find(b);
      if (!u) throw GraphError("unknown vertex '" + a + "'");
      if (!v) throw GraphError("unknown vertex '" + b + "'");
      g.add_edge(*u, *v);
    }
  }
  return g;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::Json ? parse_json(text) : parse_edge_list(text);
}

Graph parse_graph_auto(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_edge_list(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  if (format == GraphFormat::EdgeList) {
    for (int i = 0; i < g.size(); ++i)
      if (g.name(i) != std::to_string(i))
        throw GraphError("edge-list format needs vertices named 0..n-1");
    std::string out = std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
  }
  nlohmann::json doc;
  doc["vertices"] = g.names();
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.name(u), g.name(v)});
  doc["edges"] = edges;
  return doc.dump() + "\n";
}

}  // namespace raagqi
