// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "raagqi/jsj.hpp"

using namespace raagqi;

namespace {

VertexSet named(const Graph& g, std::initializer_list<const char*> names) {
  VertexSet s;
  for (auto n : names) s.push_back(g.index(n));
  std::sort(s.begin(), s.end());
  return s;
}

// Structural checks every tree of cylinders must pass.
void check_gog_invariants(const GraphOfGroups& gog) {
  const Graph& g = gog.source;
  if (gog.trivial) {
    CHECK(gog.vertices.size() == 1);
    return;
  }
  auto cuts = cut_vertices(g);
  std::size_t cylinders = 0;
  for (const auto& v : gog.vertices) {
    if (v.kind == NodeKind::Cylinder) {
      ++cylinders;
      CHECK(contains(cuts, v.cut_vertex));
      CHECK(v.subgraph == star(g, v.cut_vertex));
    } else {
      auto blocks = maximal_biconnected_subgraphs(g);
      CHECK(std::find(blocks.begin(), blocks.end(), v.subgraph) != blocks.end());
    }
  }
  CHECK(cylinders == cuts.size());
  for (const auto& e : gog.edges) {
    CHECK(gog.vertices[e.cylinder].kind == NodeKind::Cylinder);
    CHECK(gog.vertices[e.rigid].kind == NodeKind::Rigid);
    CHECK(e.subgraph == set_intersection(gog.vertices[e.rigid].subgraph, star(g, e.cut_vertex)));
  }
  // a tree: connected with |E| = |V| - 1
  CHECK(gog.edges.size() + 1 == gog.vertices.size());
  std::vector<int> seen(gog.vertices.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : gog.vertices[v].edges) {
      int w = gog.edges[e].cylinder == v ? gog.edges[e].rigid : gog.edges[e].cylinder;
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  CHECK(std::count(seen.begin(), seen.end(), 1) == static_cast<int>(seen.size()));
}

}  // namespace

TEST_CASE("figure 4 tree of cylinders") {
  Graph g = fixtures::figure4();
  auto gog = build_jsj(g);
  REQUIRE(gog.vertices.size() == 4);
  CHECK(gog.vertices[0].kind == NodeKind::Rigid);
  CHECK(gog.vertices[0].subgraph == named(g, {"0", "1", "2", "3", "4"}));
  CHECK(gog.vertices[1].kind == NodeKind::Cylinder);
  CHECK(gog.vertices[1].subgraph == star(g, g.index("0")));
  CHECK(gog.vertices[2].subgraph == named(g, {"0", "6"}));
  CHECK(gog.vertices[3].subgraph == star(g, g.index("6")));
  REQUIRE(gog.edges.size() == 3);
  std::vector<VertexSet> edge_groups;
  for (const auto& e : gog.edges) edge_groups.push_back(e.subgraph);
  std::sort(edge_groups.begin(), edge_groups.end());
  CHECK(edge_groups == std::vector<VertexSet>{named(g, {"0", "1", "4"}), named(g, {"0", "6"}), named(g, {"0", "6"})});
  check_gog_invariants(gog);
}

TEST_CASE("trivial and path trees of cylinders") {
  CHECK(build_jsj(fixtures::pentagon()).trivial);
  CHECK(build_jsj(fixtures::clique(4)).trivial);
  Graph star4 = fixtures::from_edges({{"c", "a"}, {"c", "b"}, {"c", "d"}});
  CHECK(build_jsj(star4).trivial);

  Graph p4 = fixtures::path(4);
  auto gog = build_jsj(p4);
  REQUIRE(gog.vertices.size() == 3);
  std::vector<std::pair<NodeKind, VertexSet>> got;
  for (const auto& v : gog.vertices) got.push_back({v.kind, v.subgraph});
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::pair<NodeKind, VertexSet>>{
                   {NodeKind::Cylinder, {0, 1, 2}}, {NodeKind::Cylinder, {1, 2, 3}}, {NodeKind::Rigid, {1, 2}}});
  check_gog_invariants(gog);
}

TEST_CASE("cylinder blocks") {
  Graph f5 = fixtures::figure6_first();
  auto cb = cylinder_blocks(f5, f5.index("v"));
  CHECK(cb.peripheral.size() == 2);
  for (const auto& p : cb.peripheral) {
    CHECK(p.block.size() == 2);
    CHECK_FALSE(f5.adjacent(p.block[0], p.block[1]));
  }
  std::vector<VertexSet> np = cb.non_peripheral;
  std::sort(np.begin(), np.end());
  CHECK(np == std::vector<VertexSet>{named(f5, {"l"}), named(f5, {"x", "y"})});

  Graph g2 = fixtures::figure2_second();
  auto c1 = cylinder_blocks(g2, g2.index("1"));
  REQUIRE(c1.peripheral.size() == 1);
  CHECK(c1.peripheral[0].block == named(g2, {"2"}));
  REQUIRE(c1.non_peripheral.size() == 1);
  CHECK(c1.non_peripheral[0] == named(g2, {"0", "c"}));

  auto p4 = cylinder_blocks(fixtures::path(4), 1);
  REQUIRE(p4.peripheral.size() == 1);
  CHECK(p4.peripheral[0].block == VertexSet{2});
  CHECK(p4.non_peripheral == std::vector<VertexSet>{{0}});
}

TEST_CASE("cylinder block counts and connectivity on small graphs") {
  for (int n = 3; n <= 7; ++n)
    for (const auto& g : enumerate_connected_graphs(n)) {
      auto gog = build_jsj(g);
      check_gog_invariants(gog);
      if (gog.trivial) continue;
      for (const auto& v : gog.vertices) {
        if (v.kind != NodeKind::Cylinder) continue;
        auto cb = cylinder_blocks(g, v.cut_vertex);
        CHECK(cb.peripheral.size() >= 1);
        CHECK(cb.peripheral.size() + cb.non_peripheral.size() >= 2);
        for (const auto& b : cb.non_peripheral) CHECK(is_connected(induced_subgraph(g, b)));
      }
    }
}

TEST_CASE("edge multiplicities") {
  Graph g = fixtures::figure4();
  auto gog = build_jsj(g);
  for (const auto& e : gog.edges) {
    if (gog.vertices[e.rigid].subgraph.size() == 2) {
      CHECK(edge_multiplicity(gog, e.rigid, e.id) == 1);
    } else {
      CHECK(edge_multiplicity(gog, e.cylinder, e.id) == kInfinity);
      CHECK(edge_multiplicity(gog, e.rigid, e.id) == kInfinity);
    }
  }
  CHECK(add_counts(2, 3) == 5);
  CHECK(add_counts(2, kInfinity) == kInfinity);
  CHECK(count_str(kInfinity) == "inf");
}

TEST_CASE("dot and json export") {
  auto dot = export_dot(build_jsj(fixtures::figure4()));
  CHECK(std::count(dot.begin(), dot.end(), '\n') >= 8);
  CHECK(dot.find("fillcolor=black") != std::string::npos);
  CHECK(dot.find(" -- ") != std::string::npos);
  auto trivial = export_dot(build_jsj(fixtures::pentagon()));
  CHECK(trivial.find(" -- ") == std::string::npos);
  CHECK(trivial.find("v0") != std::string::npos);
}

TEST_CASE("json round trip on random trees of cylinders") {
  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    Graph g = fixtures::random_connected_graph(std::uniform_int_distribution<int>(3, 10)(rng), 0.25, rng);
    auto gog = build_jsj(g);
    auto text = export_json(gog);
    auto back = import_json(text);
    CHECK(export_json(back) == text);
    CHECK(back.source == gog.source);
  }
}

TEST_CASE("build_jsj rejects disconnected input") {
  CHECK_THROWS(build_jsj(parse_graph("4\n0 1\n2 3", GraphFormat::EdgeList)));
}
