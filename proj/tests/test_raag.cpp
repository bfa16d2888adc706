// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "raagqi/oracles.hpp"
#include "raagqi/raag.hpp"

using namespace raagqi;

namespace {

Graph cone(const Graph& g) {
  Graph h = g;
  int apex = h.add_vertex("apex");
  for (int v = 0; v < g.size(); ++v) h.add_edge(v, apex);
  return h;
}

Graph lambda_prime() { return star_double(fixtures::pentagon(), 0); }

// Swaps x.L <-> x.R and fixes everything else.
std::vector<int> swap_copies(const Graph& d) {
  std::vector<int> m(d.size());
  for (int v = 0; v < d.size(); ++v) {
    std::string n = d.name(v);
    if (n.size() > 2 && n.substr(n.size() - 2) == ".L") n = n.substr(0, n.size() - 2) + ".R";
    else if (n.size() > 2 && n.substr(n.size() - 2) == ".R") n = n.substr(0, n.size() - 2) + ".L";
    m[v] = d.index(n);
  }
  return m;
}

}  // namespace

TEST_CASE("one-endedness") {
  CHECK(is_one_ended(fixtures::pentagon()));
  CHECK_FALSE(is_one_ended(Graph(1)));
  CHECK_FALSE(is_one_ended(parse_graph("4\n0 1\n2 3", GraphFormat::EdgeList)));
}

TEST_CASE("finite outer automorphism group") {
  CHECK(out_is_finite(fixtures::pentagon()));
  CHECK_FALSE(out_is_finite(fixtures::path(3)));
  CHECK_FALSE(out_is_finite(fixtures::clique(3)));
  CHECK(out_is_finite(fixtures::cycle(6)));
}

TEST_CASE("type II and trivial centre") {
  CHECK(is_type_II(fixtures::pentagon()));
  CHECK(has_trivial_centre(fixtures::pentagon()));
  CHECK_FALSE(is_type_II(fixtures::path(4)));
  CHECK_FALSE(has_trivial_centre(cone(fixtures::pentagon())));
}

TEST_CASE("finite Out implies type II with trivial centre on all small connected graphs") {
  for (int n = 2; n <= 7; ++n)
    for (const auto& g : enumerate_connected_graphs(n))
      if (out_is_finite(g)) {
        CHECK(is_type_II(g));
        CHECK(has_trivial_centre(g));
      }
}

TEST_CASE("star doubling") {
  Graph d = lambda_prime();
  // star(0) = {4,0,1} stays; 2 and 3 are copied
  CHECK(d.size() == 7);
  CHECK(d.edge_count() == 8);
  CHECK(d.find("2.L"));
  CHECK(d.find("3.R"));
  CHECK_THROWS(star_double(fixtures::path(3), 1));

  Graph sq = star_double(fixtures::cycle(4), 0);
  CHECK(sq.size() == 4 + 1);
  for (auto copy : {"2.L", "2.R"}) {
    CHECK(sq.adjacent(sq.index(copy), sq.index("1")));
    CHECK(sq.adjacent(sq.index(copy), sq.index("3")));
    CHECK(sq.degree(sq.index(copy)) == 2);
  }
}

TEST_CASE("star doubles carry the copy-swapping involution") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    Graph g = fixtures::random_connected_graph(std::uniform_int_distribution<int>(3, 7)(rng), 0.4, rng);
    for (int v = 0; v < g.size(); ++v) {
      if (static_cast<int>(star(g, v).size()) == g.size()) continue;
      Graph d = star_double(g, v);
      auto m = swap_copies(d);
      CHECK(oracles::is_isomorphism(MarkedGraph(d), MarkedGraph(d), m));
      for (int s : star(g, v)) CHECK(m[d.index(g.name(s))] == d.index(g.name(s)));
    }
  }
}

TEST_CASE("reduction to a finite-Out base") {
  auto p = reduce_to_finite_out_base(fixtures::pentagon());
  REQUIRE(p);
  CHECK(p->steps.empty());
  CHECK(isomorphic(p->base, fixtures::pentagon()));

  auto l = reduce_to_finite_out_base(lambda_prime());
  REQUIRE(l);
  CHECK(l->steps.size() == 1);
  CHECK(isomorphic(l->base, fixtures::pentagon()));
  CHECK(l->base_vertex("2.R") == l->base_vertex("2.L"));

  CHECK_FALSE(reduce_to_finite_out_base(fixtures::clique(3)));
}

TEST_CASE("doubling preserves reducibility and the base") {
  for (const Graph& g : {fixtures::pentagon(), fixtures::cycle(6), lambda_prime()}) {
    auto base = reduce_to_finite_out_base(g);
    REQUIRE(base);
    for (int v = 0; v < g.size(); ++v) {
      Graph d = star_double(g, v);
      auto again = reduce_to_finite_out_base(d);
      REQUIRE(again);
      CHECK(again->base_code == base->base_code);
    }
  }
}

TEST_CASE("stretch factors") {
  for (int v = 0; v < 5; ++v) CHECK(stretch_of_vertex(fixtures::pentagon(), v) == Rational(1));
  Graph d = lambda_prime();
  CHECK(stretch_of_vertex(d, d.index("0")) == Rational(2));
  Graph dd = star_double(d, d.index("0"));
  CHECK(stretch_of_vertex(dd, dd.index("0")) == Rational(4));
  CHECK_FALSE(stretch_of_vertex(fixtures::clique(3), 0));
}

TEST_CASE("doubling at v doubles its stretch and fixes its neighbours") {
  for (const Graph& g : {fixtures::pentagon(), fixtures::cycle(6), lambda_prime()}) {
    for (int v = 0; v < g.size(); ++v) {
      auto sv = stretch_of_vertex(g, v);
      REQUIRE(sv);
      Graph d = star_double(g, v);
      CHECK(stretch_of_vertex(d, d.index(g.name(v))) == *sv * Rational(2));
      for (int w : link(g, v)) CHECK(stretch_of_vertex(d, d.index(g.name(w))) == stretch_of_vertex(g, w));
    }
  }
}

TEST_CASE("stretch status of standard geodesics") {
  CHECK(r_edge_status(fixtures::clique(4), 1).kind == REdgeStatus::Kind::F);
  auto p = r_edge_status(fixtures::pentagon(), 0);
  CHECK(p.kind == REdgeStatus::Kind::RWithValue);
  CHECK(p.value == Rational(1));
  Graph d = lambda_prime();
  auto l = r_edge_status(d, d.index("0"));
  CHECK(l.kind == REdgeStatus::Kind::RWithValue);
  CHECK(l.value == Rational(2));
  CHECK(l.str() == "R(2)");
}

TEST_CASE("class labels") {
  CHECK(qi_class_label(parse_graph("2\n", GraphFormat::EdgeList)) == QiClassLabel::free_non_abelian());
  Graph two_triangles = parse_graph("6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3", GraphFormat::EdgeList);
  auto l = qi_class_label(two_triangles);
  CHECK(l.kind == QiClassLabel::Kind::FreeProductNF);
  REQUIRE(l.factors.size() == 1);
  CHECK(l.factors[0] == QiClassLabel::abelian(3));
  CHECK(qi_class_label(lambda_prime()) == QiClassLabel::finite_out_base(canonical_code(fixtures::pentagon())));
  CHECK(QiClassLabel::abelian(1) == QiClassLabel::two_ended());
  CHECK(qi_class_label(fixtures::clique(4)) == QiClassLabel::abelian(4));
  CHECK(qi_class_label(Graph(1)) == QiClassLabel::two_ended());
  CHECK(qi_class_label(Graph()) == QiClassLabel::abelian(0));
  auto prod = qi_class_label(cone(fixtures::pentagon()));
  CHECK(prod.kind == QiClassLabel::Kind::Product);
  CHECK(prod.rank == 1);
}

TEST_CASE("label comparison is three-valued and sound") {
  CHECK(compare_labels(QiClassLabel::abelian(2), QiClassLabel::abelian(3)) == Tri::Different);
  CHECK(compare_labels(QiClassLabel::abelian(2), QiClassLabel::abelian(2)) == Tri::Equal);
  auto pent = QiClassLabel::finite_out_base(canonical_code(fixtures::pentagon()));
  auto hex = QiClassLabel::finite_out_base(canonical_code(fixtures::cycle(6)));
  CHECK(compare_labels(pent, hex) == Tri::Different);
  CHECK(compare_labels(pent, QiClassLabel::abelian(2)) == Tri::Different);
  CHECK(compare_labels(QiClassLabel::unknown("x"), QiClassLabel::unknown("y")) == Tri::Unknown);
  CHECK(compare_labels(QiClassLabel::unknown("x"), QiClassLabel::unknown("x")) == Tri::Equal);
  CHECK(compare_labels(QiClassLabel::two_ended(), QiClassLabel::unknown("x")) == Tri::Different);
}

TEST_CASE("labels are invariant under relabelling") {
  std::mt19937 rng(23);
  for (int i = 0; i < 150; ++i) {
    Graph g = fixtures::random_graph(std::uniform_int_distribution<int>(1, 8)(rng), 0.45, rng);
    CHECK(qi_class_label(g) == qi_class_label(fixtures::relabel(g, rng)));
  }
}

TEST_CASE("dovetail status") {
  CHECK(dovetail_status(fixtures::clique(5)) == DovetailStatus::KnownDovetail);
  CHECK(dovetail_status(fixtures::pentagon()) == DovetailStatus::KnownDovetail);
  CHECK(dovetail_status(fixtures::figure4()) == DovetailStatus::KnownDovetail);
}

TEST_CASE("group descriptions") {
  CHECK(describe_group(Graph(1)) == "Z");
  CHECK(describe_group(fixtures::clique(3)) == "Z^3");
  CHECK(describe_group(parse_graph("3\n", GraphFormat::EdgeList)) == "F_3");
}

TEST_CASE("exact rationals") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK((Rational(2) / Rational(4)).str() == "1/2");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK_THROWS(Rational(0));
}
