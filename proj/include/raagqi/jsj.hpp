// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "raagqi/graph.hpp"

namespace raagqi {

// Counts in N u {inf}.
using Count = std::int64_t;
inline constexpr Count kInfinity = std::numeric_limits<Count>::max();
inline Count add_counts(Count a, Count b) { return (a == kInfinity || b == kInfinity) ? kInfinity : a + b; }
std::string count_str(Count c);

enum class NodeKind { Cylinder, Rigid };
const char* to_string(NodeKind k);

struct GogVertex {
  int id = 0;
  NodeKind kind = NodeKind::Rigid;
  VertexSet subgraph;   // vertices of the source graph
  int cut_vertex = -1;  // cylinders: the vertex v with subgraph == star(v)
  std::vector<int> edges;
};

struct GogEdge {
  int id = 0;
  int cylinder = 0;  // gog vertex ids
  int rigid = 0;
  int cut_vertex = -1;
  VertexSet subgraph;  // rigid subgraph intersected with star(cut_vertex)
};

struct GraphOfGroups {
  Graph source;
  bool trivial = false;
  std::vector<GogVertex> vertices;
  std::vector<GogEdge> edges;
};

// Tree of cylinders of a connected graph with at least three vertices.
// Graphs without cut vertices, or equal to a single star, give a one-vertex
// gog flagged `trivial`.
GraphOfGroups build_jsj(const Graph& g);

struct PeripheralBlock {
  VertexSet block;  // a link piece lk^{B}(v)
  VertexSet owner;  // the rigid subgraph B
};

struct CylinderBlocks {
  int cut_vertex = -1;
  std::vector<PeripheralBlock> peripheral;
  std::vector<VertexSet> non_peripheral;
};

CylinderBlocks cylinder_blocks(const Graph& g, int v);

// Number of tree edges in the orbit of `edge_id` at a fixed lift of `vertex_id`.
Count edge_multiplicity(const GraphOfGroups& gog, int vertex_id, int edge_id);

std::string export_dot(const GraphOfGroups& gog);
std::string export_json(const GraphOfGroups& gog);
GraphOfGroups import_json(const std::string& text);

}  // namespace raagqi
