// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

// Named graphs from the worked examples plus random generators shared by
// the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "raagqi/graph.hpp"
#include "raagqi/raag.hpp"

namespace fixtures {

using raagqi::Graph;

inline Graph from_edges(const std::vector<std::pair<std::string, std::string>>& es,
                        const std::vector<std::string>& extra = {}) {
  Graph g;
  auto ensure = [&](const std::string& v) {
    if (!g.find(v)) g.add_vertex(v);
  };
  for (const auto& [u, v] : es) {
    ensure(u);
    ensure(v);
    g.add_edge(u, v);
  }
  for (const auto& v : extra) ensure(v);
  return g;
}

inline Graph cycle(int n, const std::string& prefix = "") {
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i < n; ++i) es.push_back({prefix + std::to_string(i), prefix + std::to_string((i + 1) % n)});
  return from_edges(es);
}

inline Graph path(int n) {
  std::vector<std::pair<std::string, std::string>> es;
  for (int i = 0; i + 1 < n; ++i) es.push_back({std::to_string(i), std::to_string(i + 1)});
  return from_edges(es);
}

inline Graph clique(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph pentagon() { return cycle(5); }

// Pentagon 0..4, leaf 5 at 0, bridge 0-6, triangle 6-7-8.
inline Graph figure4() {
  return from_edges({{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "0"},
                     {"0", "5"}, {"0", "6"}, {"6", "7"}, {"7", "8"}, {"8", "6"}});
}

// Path 0-1-2-3 ending in a 4-clique {3, 4, t, b}.
inline Graph figure2_first() {
  return from_edges({{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"},
                     {"3", "t"}, {"3", "b"}, {"4", "t"}, {"4", "b"}, {"t", "b"}});
}

// As above plus a vertex c adjacent to 0 and 1.
inline Graph figure2_second() {
  Graph g = figure2_first();
  g.add_vertex("c");
  g.add_edge("c", "0");
  g.add_edge("c", "1");
  return g;
}

// Two pentagons glued at v.
inline Graph two_pentagons() {
  return from_edges({{"v", "a1"}, {"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "v"},
                     {"v", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"}, {"b4", "v"}});
}

// Two pentagons glued at v, plus a leaf and a triangle hanging at v.
inline Graph figure6_first() {
  Graph g = two_pentagons();
  for (auto name : {"l", "x", "y"}) g.add_vertex(name);
  g.add_edge("v", "l");
  g.add_edge("v", "x");
  g.add_edge("v", "y");
  g.add_edge("x", "y");
  return g;
}

inline Graph figure6_second() { return two_pentagons(); }

inline Graph figure8_first() { return two_pentagons(); }

// A pentagon glued at v to the double of a pentagon along star(v).
inline Graph figure8_second() {
  Graph doubled = raagqi::star_double(cycle(5, "b"), 0);  // doubled at b0
  Graph g = cycle(5, "a");
  for (const auto& name : doubled.names())
    if (name != "b0") g.add_vertex(name);
  auto rename = [](const std::string& s) { return s == "b0" ? std::string("a0") : s; };
  for (auto [u, v] : doubled.edges()) g.add_edge(rename(doubled.name(u)), rename(doubled.name(v)));
  return g;
}

// The 3-clique tree-graded graph of the introduction: two triangles at o,
// two more triangles hanging off one of them, leaves everywhere else.
inline Graph figure1() {
  return from_edges({{"o", "a"}, {"a", "b"}, {"b", "o"},
                     {"o", "c"}, {"c", "d"}, {"d", "o"},
                     {"a", "e"}, {"e", "f"}, {"f", "a"},
                     {"b", "g"}, {"g", "h"}, {"h", "b"},
                     {"o", "p"}, {"c", "l1"}, {"c", "l2"}, {"d", "l3"},
                     {"e", "e1"}, {"f", "f1"}, {"g", "g1"}, {"h", "h1"}});
}

// Random n-clique tree-graded graph with at most max_vertices vertices:
// a tree of k-cliques glued at single vertices, then one or more leaves at
// every clique vertex not used as a gluing point.
inline Graph random_clique_tree_graded(int n, int max_vertices, std::mt19937& rng) {
  for (;;) {
    Graph g;
    int next = 0;
    auto fresh = [&] { return g.add_vertex("v" + std::to_string(next++)); };
    std::vector<int> members;
    auto add_clique = [&](int at) {
      std::vector<int> vs{at};
      while (static_cast<int>(vs.size()) < n) vs.push_back(fresh());
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) g.add_edge(vs[i], vs[j]);
      members.insert(members.end(), vs.begin(), vs.end());
    };
    add_clique(fresh());
    int cliques = std::uniform_int_distribution<int>(2, 4)(rng);
    for (int c = 1; c < cliques; ++c) add_clique(members[std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng)]);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    // vertices in exactly one clique need a leaf to become cut vertices
    for (int v : members) {
      int cliques_at = 0;
      auto nb = g.neighbours(v);
      // in a clique tree, a vertex lies in deg/(n-1) cliques
      cliques_at = static_cast<int>(nb.size()) / (n - 1);
      int leaves = cliques_at >= 2 ? std::uniform_int_distribution<int>(0, 1)(rng) : std::uniform_int_distribution<int>(1, 2)(rng);
      for (int l = 0; l < leaves; ++l) g.add_edge(v, fresh());
    }
    if (g.size() <= max_vertices && raagqi::diameter(g) >= 3) return g;
  }
}

// Random graph on n vertices; each edge with probability p.
inline Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline Graph random_connected_graph(int n, double p, std::mt19937& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (raagqi::is_connected(g)) return g;
  }
}

// Same graph with vertices shuffled and renamed.
inline Graph relabel(const Graph& g, std::mt19937& rng, std::vector<int>* perm_out = nullptr) {
  std::vector<int> perm(g.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> names(g.size());
  for (int v = 0; v < g.size(); ++v) names[perm[v]] = "r" + g.name(v);
  Graph h(names);
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  if (perm_out) *perm_out = perm;
  return h;
}

}  // namespace fixtures
