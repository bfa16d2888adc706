// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force counterparts of the optimized routines. Slow on purpose;
// the test suite uses them as ground truth on small inputs.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raagqi/canonical.hpp"
#include "raagqi/jsj.hpp"

namespace raagqi::oracles {

// Delete each vertex and test connectivity.
VertexSet brute_cut_vertices(const Graph& g);
// Maximal vertex sets inducing a connected subgraph with no cut vertex
// (an edge counts). Sorted. g must have at most 16 vertices.
std::vector<VertexSet> brute_blocks(const Graph& g);
// Tries every permutation; at most 9 vertices.
std::optional<std::vector<int>> brute_iso(const MarkedGraph& a, const MarkedGraph& b);
bool is_isomorphism(const MarkedGraph& a, const MarkedGraph& b, const std::vector<int>& map);

// A finite window on the Bass-Serre tree: lifts of gog vertices out to a
// radius, infinite multiplicities truncated at `cap` lifts per edge.
struct BallNode {
  int vertex = -1;  // quotient vertex id
  int depth = 0;
  int parent = -1;
  int parent_edge = -1;  // quotient edge id of the tree edge to the parent
  std::vector<int> children;
};

struct BallUnfolding {
  int radius = 0;
  int cap = 0;
  bool capped = false;  // some infinite multiplicity was truncated
  std::vector<BallNode> nodes;  // nodes[0] is the root
};

BallUnfolding unfold_ball(const GraphOfGroups& gog, int root, int radius, int cap);

// Colours per ball node and per tree edge (indexed by the child node; the
// root's slot is unused).
struct BallColouring {
  std::vector<int> vertex;
  std::vector<int> edge;
};

// One literal round of neighbour refinement on the ball. Counts of at least
// `cap` fall in a single infinity bucket.
BallColouring refine_on_ball(const BallUnfolding& ball, const GraphOfGroups& gog, const BallColouring& in);

// Pulls quotient colours back to the ball.
BallColouring pull_back(const BallUnfolding& ball, const std::vector<int>& vertex_tokens,
                        const std::vector<int>& edge_tokens);

// rounds[t] = (vertex tokens, edge tokens) after t quotient refinement
// rounds. Unfolds a ball at every quotient vertex, refines literally, and
// checks that after t rounds the partition of nodes within distance
// radius - t of the root matches rounds[t] pulled back.
bool ball_matches_quotient(const GraphOfGroups& gog,
                           const std::vector<std::pair<std::vector<int>, std::vector<int>>>& rounds, int radius,
                           int cap, std::string* why = nullptr);

}  // namespace raagqi::oracles
