// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raagqi/graph.hpp"

namespace raagqi {

// A graph with a mark token per vertex; the empty string means unmarked.
struct MarkedGraph {
  Graph graph;
  std::vector<std::string> marks;

  MarkedGraph() = default;
  explicit MarkedGraph(Graph g) : graph(std::move(g)), marks(graph.size()) {}
  MarkedGraph(Graph g, std::vector<std::string> m);
};

using CanonicalCode = std::string;

struct CanonicalForm {
  CanonicalCode code;
  // order[i] = vertex placed at canonical position i
  std::vector<int> order;
};

CanonicalForm canonical_form(const MarkedGraph& m);
CanonicalCode canonical_code(const MarkedGraph& m);
CanonicalCode canonical_code(const Graph& g);

// mapping[v] = image in b of vertex v of a.
std::optional<std::vector<int>> find_isomorphism(const MarkedGraph& a, const MarkedGraph& b);
bool isomorphic(const Graph& a, const Graph& b);

// Short stable digest of a code, for display only.
std::string code_digest(const CanonicalCode& code);

// Connected graphs on exactly n vertices, one per isomorphism class, in a
// deterministic order (n <= 10; 9 and 10 are slow).
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace raagqi
