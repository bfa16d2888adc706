// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include "raagqi/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace raagqi::oracles {

VertexSet brute_cut_vertices(const Graph& g) {
  VertexSet out;
  for (int v = 0; v < g.size(); ++v) {
    VertexSet rest;
    for (int u = 0; u < g.size(); ++u)
      if (u != v) rest.push_back(u);
    if (!rest.empty() && !is_connected(induced_subgraph(g, rest))) out.push_back(v);
  }
  return out;
}

namespace {

bool biconnected(const Graph& g, const VertexSet& s) {
  if (s.size() < 2) return false;
  Graph h = induced_subgraph(g, s);
  if (!is_connected(h)) return false;
  if (s.size() == 2) return true;
  return brute_cut_vertices(h).empty();
}

}  // namespace

std::vector<VertexSet> brute_blocks(const Graph& g) {
  int n = g.size();
  if (n > 16) throw std::invalid_argument("brute_blocks: too many vertices");
  std::vector<VertexSet> good;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    VertexSet s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    if (biconnected(g, s)) good.push_back(s);
  }
  std::vector<VertexSet> out;
  for (const auto& s : good) {
    bool maximal = std::none_of(good.begin(), good.end(),
                                [&](const VertexSet& t) { return t.size() > s.size() && is_subset(s, t); });
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isomorphism(const MarkedGraph& a, const MarkedGraph& b, const std::vector<int>& map) {
  int n = a.graph.size();
  if (b.graph.size() != n || static_cast<int>(map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v = 0; v < n; ++v) {
    if (map[v] < 0 || map[v] >= n || hit[map[v]]) return false;
    hit[map[v]] = 1;
    if (a.marks[v] != b.marks[map[v]]) return false;
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (a.graph.adjacent(u, v) != b.graph.adjacent(map[u], map[v])) return false;
  return true;
}

std::optional<std::vector<int>> brute_iso(const MarkedGraph& a, const MarkedGraph& b) {
  int n = a.graph.size();
  if (n > 9) throw std::invalid_argument("brute_iso: more than 9 vertices");
  if (b.graph.size() != n || a.graph.edge_count() != b.graph.edge_count()) return std::nullopt;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (is_isomorphism(a, b, p)) return p;
  } while (std::next_permutation(p.begin(), p.end()));
  return std::nullopt;
}

BallUnfolding unfold_ball(const GraphOfGroups& gog, int root, int radius, int cap) {
  if (radius < 0 || radius > 4) throw std::invalid_argument("unfold_ball: radius must be in [0, 4]");
  if (cap < 1 || cap > 5) throw std::invalid_argument("unfold_ball: cap must be in [1, 5]");
  BallUnfolding ball;
  ball.radius = radius;
  ball.cap = cap;
  ball.nodes.push_back({root, 0, -1, -1, {}});
  for (std::size_t i = 0; i < ball.nodes.size(); ++i) {
    if (ball.nodes[i].depth == radius) continue;
    int v = ball.nodes[i].vertex;
    for (int e : gog.vertices[v].edges) {
      Count m = edge_multiplicity(gog, v, e);
      if (m == kInfinity || m > cap) {
        ball.capped = true;
        m = cap;
      }
      // the edge to the parent is one of the lifts already
      if (e == ball.nodes[i].parent_edge) --m;
      const auto& edge = gog.edges[e];
      int other = edge.cylinder == v ? edge.rigid : edge.cylinder;
      for (Count k = 0; k < m; ++k) {
        int id = static_cast<int>(ball.nodes.size());
        ball.nodes.push_back({other, ball.nodes[i].depth + 1, static_cast<int>(i), e, {}});
        ball.nodes[i].children.push_back(id);
      }
    }
  }
  return ball;
}

BallColouring pull_back(const BallUnfolding& ball, const std::vector<int>& vertex_tokens,
                        const std::vector<int>& edge_tokens) {
  BallColouring c;
  for (const auto& n : ball.nodes) {
    c.vertex.push_back(vertex_tokens[n.vertex]);
    c.edge.push_back(n.parent_edge >= 0 ? edge_tokens[n.parent_edge] : -1);
  }
  return c;
}

BallColouring refine_on_ball(const BallUnfolding& ball, const GraphOfGroups& gog, const BallColouring& in) {
  std::map<std::vector<long long>, int> vkeys, ekeys;
  std::vector<std::vector<long long>> vk, ek;
  const long long inf = -1;
  for (std::size_t i = 0; i < ball.nodes.size(); ++i) {
    const auto& n = ball.nodes[i];
    std::map<int, long long> counts;
    if (n.parent >= 0) ++counts[in.edge[i]];
    for (int c : n.children) ++counts[in.edge[c]];
    std::vector<long long> k{in.vertex[i]};
    for (auto [col, cnt] : counts) {
      k.push_back(col);
      k.push_back(cnt >= ball.cap ? inf : cnt);
    }
    vkeys.emplace(k, 0);
    vk.push_back(std::move(k));
    if (n.parent < 0) {
      ek.push_back({});
      continue;
    }
    bool child_is_cylinder = gog.vertices[n.vertex].kind == NodeKind::Cylinder;
    int cyl = child_is_cylinder ? static_cast<int>(i) : n.parent;
    int rig = child_is_cylinder ? n.parent : static_cast<int>(i);
    std::vector<long long> e{in.edge[i], in.vertex[cyl], in.vertex[rig]};
    ekeys.emplace(e, 0);
    ek.push_back(std::move(e));
  }
  int next = 0;
  for (auto& [k, id] : vkeys) id = next++;
  for (auto& [k, id] : ekeys) id = next++;
  BallColouring out;
  for (std::size_t i = 0; i < ball.nodes.size(); ++i) {
    out.vertex.push_back(vkeys[vk[i]]);
    out.edge.push_back(ball.nodes[i].parent >= 0 ? ekeys[ek[i]] : -1);
  }
  return out;
}

namespace {

// Same partition on the selected indices.
bool same_partition(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& idx) {
  std::map<int, int> ab, ba;
  for (int i : idx) {
    auto [x, fx] = ab.emplace(a[i], b[i]);
    auto [y, fy] = ba.emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

}  // namespace

bool ball_matches_quotient(const GraphOfGroups& gog,
                           const std::vector<std::pair<std::vector<int>, std::vector<int>>>& rounds, int radius,
                           int cap, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (rounds.empty()) return true;
  for (const auto& root : gog.vertices) {
    auto ball = unfold_ball(gog, root.id, radius, cap);
    auto col = pull_back(ball, rounds[0].first, rounds[0].second);
    for (int t = 1; t < static_cast<int>(rounds.size()) && t <= radius; ++t) {
      col = refine_on_ball(ball, gog, col);
      auto expect = pull_back(ball, rounds[t].first, rounds[t].second);
      std::vector<int> vidx, eidx;
      for (int i = 0; i < static_cast<int>(ball.nodes.size()); ++i) {
        if (ball.nodes[i].depth > radius - t) continue;
        vidx.push_back(i);
        if (ball.nodes[i].parent >= 0) eidx.push_back(i);
      }
      if (!same_partition(col.vertex, expect.vertex, vidx))
        return fail("vertex partition differs at root " + std::to_string(root.id) + " round " + std::to_string(t));
      if (!same_partition(col.edge, expect.edge, eidx))
        return fail("edge partition differs at root " + std::to_string(root.id) + " round " + std::to_string(t));
    }
  }
  return true;
}

}  // namespace raagqi::oracles
