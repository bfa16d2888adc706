// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "raagqi/decoration.hpp"

using namespace raagqi;

namespace {

int find_vertex(const GogProfile& p, NodeKind kind, const VertexSet& sub) {
  for (const auto& v : p.gog.vertices)
    if (v.kind == kind && v.subgraph == sub) return v.id;
  return -1;
}

int cylinder_at(const GogProfile& p, const std::string& name) {
  const Graph& g = p.gog.source;
  return find_vertex(p, NodeKind::Cylinder, star(g, g.index(name)));
}

int rigid_with(const GogProfile& p, std::initializer_list<const char*> names) {
  const Graph& g = p.gog.source;
  VertexSet s;
  for (auto n : names) s.push_back(g.index(n));
  std::sort(s.begin(), s.end());
  return find_vertex(p, NodeKind::Rigid, s);
}

std::set<int> vertex_tokens(const JointDecoration& jd, int g, std::optional<NodeKind> kind = std::nullopt) {
  std::set<int> out;
  for (const auto& v : jd.gog(g).gog.vertices)
    if (!kind || v.kind == *kind) out.insert(jd.decoration(g).vertex[v.id]);
  return out;
}

std::set<int> edge_tokens(const JointDecoration& jd, int g) {
  return {jd.decoration(g).edge.begin(), jd.decoration(g).edge.end()};
}

// i ~ j in `finer` implies i ~ j in `coarser`.
bool refines(const std::vector<int>& finer, const std::vector<int>& coarser) {
  for (std::size_t i = 0; i < finer.size(); ++i)
    for (std::size_t j = 0; j < finer.size(); ++j)
      if (finer[i] == finer[j] && coarser[i] != coarser[j]) return false;
  return true;
}

bool same_partition(const std::vector<int>& a, const std::vector<int>& b) { return refines(a, b) && refines(b, a); }

// A triangle x, y, z whose corners carry pendant pieces; `kinds` picks a
// pentagon ('p') or a square-with-diagonal ('d') at each corner.
Graph decorated_triangle(const std::string& kinds) {
  Graph g = fixtures::from_edges({{"x", "y"}, {"y", "z"}, {"z", "x"}});
  const char* corners[3] = {"x", "y", "z"};
  for (int i = 0; i < 3; ++i) {
    std::string c = corners[i], p = c + "_";
    for (int k = 1; k <= 4; ++k) g.add_vertex(p + std::to_string(k));
    if (kinds[i] == 'p') {
      g.add_edge(c, p + "1");
      g.add_edge(p + "1", p + "2");
      g.add_edge(p + "2", p + "3");
      g.add_edge(p + "3", p + "4");
      g.add_edge(p + "4", c);
    } else {
      // K4 minus an edge through c: rigid, not a clique
      g.add_edge(c, p + "1");
      g.add_edge(c, p + "2");
      g.add_edge(p + "1", p + "2");
      g.add_edge(p + "1", p + "3");
      g.add_edge(p + "2", p + "3");
      g.add_edge(p + "3", p + "4");
      g.add_edge(p + "4", c);
    }
  }
  return g;
}

}  // namespace

TEST_CASE("naive decoration of figure 4 uses four vertex ornaments") {
  auto prof = profile_gog(build_jsj(fixtures::figure4()));
  JointDecoration jd({&prof});
  jd.naive();
  CHECK(vertex_tokens(jd, 0).size() == 4);
  CHECK(prof.cylinders[cylinder_at(prof, "0")]->group == "Z x (F_2 * Z * Z)");
}

TEST_CASE("figure 8 rigid vertices share a naive ornament") {
  auto a = profile_gog(build_jsj(fixtures::figure8_first()));
  auto b = profile_gog(build_jsj(fixtures::figure8_second()));
  JointDecoration jd({&a, &b});
  jd.naive();
  auto ra = vertex_tokens(jd, 0, NodeKind::Rigid), rb = vertex_tokens(jd, 1, NodeKind::Rigid);
  CHECK(ra.size() == 1);
  CHECK(rb == ra);  // pentagon and its double land in one class
  int doubled = rigid_with(b, {"a0", "b1", "b2.L", "b3.L", "b4", "b2.R", "b3.R"});
  REQUIRE(doubled >= 0);
  CHECK(b.rigids[doubled]->family == RigidData::Family::FiniteOut);
}

TEST_CASE("clique tree-graded trees of cylinders have two vertex ornaments and one edge ornament") {
  std::mt19937 rng(41);
  std::vector<Graph> gs{fixtures::figure1(), fixtures::random_clique_tree_graded(3, 20, rng),
                        fixtures::random_clique_tree_graded(4, 20, rng), fixtures::path(5)};
  for (const auto& g : gs) {
    auto prof = profile_gog(build_jsj(g));
    JointDecoration jd({&prof});
    jd.naive();
    CHECK(vertex_tokens(jd, 0).size() == 2);
    CHECK(edge_tokens(jd, 0).size() == 1);
    CHECK_FALSE(jd.neighbour_refine());
    CHECK_FALSE(jd.vertex_refine());
    CHECK(jd.complete());
    auto si = structure_invariant(jd, 0);
    REQUIRE(si.matrix.size() == 3);
    int cyl = -1, rig = -1, edge = -1;
    for (int i = 0; i < 3; ++i) {
      int t = si.ornaments[i];
      if (jd.is_edge_token(t)) edge = i;
      else if (t == *vertex_tokens(jd, 0, NodeKind::Cylinder).begin()) cyl = i;
      else rig = i;
    }
    Count n = 0;
    for (const auto& v : prof.gog.vertices)
      if (v.kind == NodeKind::Rigid) n = static_cast<Count>(v.subgraph.size());
    CHECK(si.matrix[cyl][edge] == kInfinity);
    CHECK(si.matrix[cyl][rig] == kInfinity);
    // a rigid clique meets one cylinder per vertex, each exactly once
    CHECK(si.matrix[rig][edge] == n);
    CHECK(si.matrix[rig][cyl] == n);
    CHECK(si.matrix[edge][cyl] == 1);
    CHECK(si.matrix[edge][rig] == 1);
    CHECK(si.matrix[edge][edge] == 0);
  }
}

TEST_CASE("structure invariant of a one-vertex tree") {
  auto prof = profile_gog(build_jsj(fixtures::pentagon()));
  JointDecoration jd({&prof});
  jd.naive();
  auto si = structure_invariant(jd, 0);
  REQUIRE(si.matrix.size() == 1);
  CHECK(si.matrix[0][0] == 0);
}

TEST_CASE("figure 4 structure invariant row of the abelian rigid vertex") {
  auto prof = profile_gog(build_jsj(fixtures::figure4()));
  JointDecoration jd({&prof});
  jd.naive();
  jd.refine_to_fixpoint();
  auto si = structure_invariant(jd, 0);
  int z2 = rigid_with(prof, {"0", "6"});
  int t = jd.decoration(0).vertex[z2];
  auto row = std::find(si.ornaments.begin(), si.ornaments.end(), t) - si.ornaments.begin();
  for (int e : prof.gog.vertices[z2].edges) {
    auto col = std::find(si.ornaments.begin(), si.ornaments.end(), jd.decoration(0).edge[e]) - si.ornaments.begin();
    CHECK(si.matrix[row][col] == 1);
  }
}

TEST_CASE("cylinder comparison") {
  // Z x (F_2 * F_2) against Z x (F_3 * F_3 * Z)
  Graph a = fixtures::two_pentagons();
  Graph b = fixtures::from_edges({{"v", "p1"}, {"v", "p2"}, {"v", "p3"}, {"w", "p1"}, {"w", "p2"}, {"w", "p3"},
                                  {"v", "q1"}, {"v", "q2"}, {"v", "q3"}, {"u", "q1"}, {"u", "q2"}, {"u", "q3"},
                                  {"v", "leaf"}});
  auto pa = profile_gog(build_jsj(a));
  auto pb = profile_gog(build_jsj(b));
  CHECK(pa.cylinders[cylinder_at(pa, "v")]->group == "Z x (F_2 * F_2)");
  CHECK(pb.cylinders[cylinder_at(pb, "v")]->group == "Z x (F_3 * F_3 * Z)");
  JointDecoration jd({&pa, &pb});
  jd.naive();
  CHECK(jd.decoration(0).vertex[cylinder_at(pa, "v")] == jd.decoration(1).vertex[cylinder_at(pb, "v")]);

  // Figure 2: the Z x (Z^2 * Z) cylinder matches nothing on the other side
  auto g1 = profile_gog(build_jsj(fixtures::figure2_first()));
  auto g2 = profile_gog(build_jsj(fixtures::figure2_second()));
  JointDecoration fig2({&g1, &g2});
  fig2.naive();
  int special = cylinder_at(g2, "1");
  CHECK(g2.cylinders[special]->group == "Z x (Z^2 * Z)");
  for (const auto& v : g1.gog.vertices) {
    if (v.kind != NodeKind::Cylinder) continue;
    auto r = fig2.strong_rel_qi_equal(0, v.id, 1, special);
    CHECK(r.result == Tri::Different);
  }
  fig2.refine_to_fixpoint();
  auto c1 = vertex_tokens(fig2, 0, NodeKind::Cylinder), c2 = vertex_tokens(fig2, 1, NodeKind::Cylinder);
  for (int t : c1) CHECK(c2.count(t) == 0);
}

TEST_CASE("rigid comparison") {
  // identical triangles with identical surroundings
  auto p1 = profile_gog(build_jsj(decorated_triangle("ppd")));
  auto p2 = profile_gog(build_jsj(decorated_triangle("ppd")));
  auto p3 = profile_gog(build_jsj(decorated_triangle("pdd")));
  JointDecoration same({&p1, &p2});
  same.naive();
  int t1 = rigid_with(p1, {"x", "y", "z"}), t2 = rigid_with(p2, {"x", "y", "z"});
  CHECK(same.strong_rel_qi_equal(0, t1, 1, t2).result == Tri::Equal);

  // marks a, a, b against a, b, b on Z^3
  JointDecoration diff({&p1, &p3});
  diff.naive();
  int t3 = rigid_with(p3, {"x", "y", "z"});
  auto r = diff.strong_rel_qi_equal(0, t1, 1, t3);
  CHECK(r.result == Tri::Different);

  // Z^2 with two distinct edge ornaments against itself with the ends swapped
  Graph f4 = fixtures::figure4();
  std::vector<std::string> names = f4.names();
  for (auto& n : names) n = n == "0" ? "6" : n == "6" ? "0" : n == "7" ? "1" : n == "1" ? "7" : n;
  Graph mirrored(names);
  for (auto [u, v] : f4.edges()) mirrored.add_edge(u, v);
  auto pf = profile_gog(build_jsj(f4));
  auto pm = profile_gog(build_jsj(mirrored));
  JointDecoration z2({&pf, &pm});
  z2.naive();
  z2.refine_to_fixpoint();
  int za = rigid_with(pf, {"0", "6"}), zb = rigid_with(pm, {"0", "6"});
  CHECK(z2.decoration(0).vertex[za] == z2.decoration(1).vertex[zb]);
  CHECK(z2.strong_rel_qi_equal(0, za, 1, zb).result == Tri::Equal);
}

TEST_CASE("neighbour refinement splits on a missing edge ornament") {
  // Two cylinders of the same naive class, one next to a pentagon, one next to a square
  Graph g = fixtures::from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"},
                                  {"a", "p1"}, {"p1", "p2"}, {"p2", "p3"}, {"p3", "p4"}, {"p4", "a"},
                                  {"d", "q1"}, {"q1", "q2"}, {"q2", "q3"}, {"q3", "q4"}, {"q4", "q5"}, {"q5", "d"}});
  auto prof = profile_gog(build_jsj(g));
  JointDecoration jd({&prof});
  jd.naive();
  int ca = cylinder_at(prof, "a"), cd = cylinder_at(prof, "d");
  if (jd.decoration(0).vertex[ca] == jd.decoration(0).vertex[cd]) {
    jd.refine_to_fixpoint();
    CHECK(jd.decoration(0).vertex[ca] != jd.decoration(0).vertex[cd]);
  }
  jd.refine_to_fixpoint();
  CHECK_FALSE(jd.neighbour_refine());
  CHECK_FALSE(jd.vertex_refine());
}

TEST_CASE("refinement is monotone, bounded and traced") {
  std::mt19937 rng(43);
  for (int i = 0; i < 80; ++i) {
    Graph g = fixtures::random_connected_graph(std::uniform_int_distribution<int>(4, 10)(rng), 0.3, rng);
    auto gog = build_jsj(g);
    if (gog.trivial) continue;
    auto prof = profile_gog(gog);
    JointDecoration jd({&prof});
    jd.naive();
    auto before_v = jd.decoration(0).vertex, before_e = jd.decoration(0).edge;
    std::size_t trace_before = jd.trace().size();
    int rounds = jd.refine_to_fixpoint();
    CHECK(refines(jd.decoration(0).vertex, before_v));
    CHECK(refines(jd.decoration(0).edge, before_e));
    std::size_t items = gog.vertices.size() + gog.edges.size();
    CHECK(static_cast<std::size_t>(rounds) <= items);
    CHECK(jd.trace().size() - trace_before <= items);
    for (const auto& t : jd.trace()) CHECK_FALSE(t.witness.empty());
  }
}

TEST_CASE("decorating isomorphic trees gives matching ornaments") {
  std::mt19937 rng(47);
  for (int i = 0; i < 60; ++i) {
    Graph g = fixtures::random_connected_graph(std::uniform_int_distribution<int>(4, 10)(rng), 0.3, rng);
    auto gog = build_jsj(g);
    if (gog.trivial) continue;
    auto pa = profile_gog(gog);
    auto pb = profile_gog(build_jsj(fixtures::relabel(g, rng)));
    JointDecoration jd({&pa, &pb});
    jd.naive();
    jd.refine_to_fixpoint();
    CHECK(jd.tokens(0) == jd.tokens(1));
    CHECK(structure_invariant(jd, 0, jd.tokens(0)) == structure_invariant(jd, 1, jd.tokens(0)));
  }
}

TEST_CASE("embellishment") {
  auto a = profile_gog(build_jsj(fixtures::figure8_first()));
  auto b = profile_gog(build_jsj(fixtures::figure8_second()));
  JointDecoration jd({&a, &b});
  jd.naive();
  jd.refine_to_fixpoint();
  auto naive_edges_a = jd.decoration(0).edge, naive_edges_b = jd.decoration(1).edge;
  jd.embellish();
  CHECK(jd.embellish_complete());
  std::multiset<std::string> ra, rb;
  for (const auto& r : jd.decoration(0).relstr) ra.insert(r ? r->str() : "-");
  for (const auto& r : jd.decoration(1).relstr) rb.insert(r ? r->str() : "-");
  CHECK(ra == std::multiset<std::string>{"1", "1"});
  CHECK(rb == std::multiset<std::string>{"1", "2"});
  // forgetting relstr recovers the previous partition
  auto check_append = [&](int g, const std::vector<int>& before) {
    const auto& d = jd.decoration(g);
    for (std::size_t i = 0; i < before.size(); ++i)
      for (std::size_t j = 0; j < before.size(); ++j) {
        bool same_rel = (d.relstr[i].has_value() == d.relstr[j].has_value()) && (!d.relstr[i] || *d.relstr[i] == *d.relstr[j]);
        CHECK((d.edge[i] == d.edge[j]) == (before[i] == before[j] && same_rel));
      }
  };
  check_append(0, naive_edges_a);
  check_append(1, naive_edges_b);
}

TEST_CASE("embellishment leaves all-abelian trees alone") {
  std::mt19937 rng(53);
  auto prof = profile_gog(build_jsj(fixtures::random_clique_tree_graded(3, 20, rng)));
  JointDecoration jd({&prof});
  jd.naive();
  jd.refine_to_fixpoint();
  auto v = jd.decoration(0).vertex, e = jd.decoration(0).edge;
  jd.embellish();
  jd.refine_to_fixpoint();
  CHECK(same_partition(v, jd.decoration(0).vertex));
  CHECK(same_partition(e, jd.decoration(0).edge));
  for (const auto& r : jd.decoration(0).relstr) CHECK_FALSE(r.has_value());
  CHECK(jd.embellish_complete());
}
