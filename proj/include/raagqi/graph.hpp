// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace raagqi {

// Sorted list of vertex indices into some parent graph.
using VertexSet = std::vector<int>;

class GraphError : public std::runtime_error {
 public:
  GraphError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Finite simplicial graph with opaque string vertex names. Vertex indices
// follow insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // vertices named "0".."n-1"
  explicit Graph(std::vector<std::string> names);

  int add_vertex(std::string name);
  void add_edge(int u, int v);
  void add_edge(std::string_view u, std::string_view v);

  int size() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return edges_; }
  bool adjacent(int u, int v) const { return adj_[u * stride_ + v] != 0; }
  const std::vector<int>& neighbours(int v) const { return nbrs_[v]; }
  int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;
  int index(std::string_view name) const;  // throws if absent
  std::vector<std::pair<int, int>> edges() const;

  // Exact structural key (names + edges); equal keys <=> identical graphs.
  std::string key() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.key() == b.key(); }

 private:
  void grow(int n);

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> lookup_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<char> adj_;
  int stride_ = 0;
  int edges_ = 0;
};

VertexSet all_vertices(const Graph& g);
VertexSet link(const Graph& g, int v);
VertexSet star(const Graph& g, int v);
bool is_connected(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
// Components of g with the vertices of `removed` deleted.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);
Graph induced_subgraph(const Graph& g, const VertexSet& vs);
Graph complement(const Graph& g);
// Longest shortest path; -1 when disconnected, 0 for a single vertex.
int diameter(const Graph& g);
bool is_clique(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& vs);

VertexSet cut_vertices(const Graph& g);
std::vector<VertexSet> maximal_biconnected_subgraphs(const Graph& g);

struct JoinDecomposition {
  int clique_rank = 0;
  VertexSet clique;              // central vertices
  std::vector<VertexSet> factors;  // non-join factors, each with >= 2 vertices
};
JoinDecomposition join_decomposition(const Graph& g);
// Convenience form returning induced factor graphs.
std::pair<int, std::vector<Graph>> join_factors(const Graph& g);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, int v);

enum class GraphFormat { EdgeList, Json };

Graph parse_graph(std::string_view text, GraphFormat format);
// Picks JSON when the first non-blank character is '{'.
Graph parse_graph_auto(std::string_view text);
std::string serialize_graph(const Graph& g, GraphFormat format);

std::string format_set(const Graph& g, const VertexSet& vs);

}  // namespace raagqi
