// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "raagqi/jsj.hpp"
#include "raagqi/raag.hpp"

namespace raagqi {

// Comparison data for one vertex of a tree of cylinders.
struct CylinderData {
  struct Peripheral {
    int edge = -1;
    VertexSet block;
    QiClassLabel label;
  };
  std::vector<Peripheral> peripheral;
  std::vector<VertexSet> non_peripheral;
  std::vector<QiClassLabel> one_ended_non_peripheral;  // sorted, unique
  std::string group;                                   // e.g. "Z x (Z^2 * Z)"
};

struct RigidData {
  enum class Family { Abelian, FiniteOut, Other };
  Graph graph;
  Family family = Family::Other;
  QiClassLabel label;
  std::optional<DoublingLedger> ledger;
  std::vector<std::pair<int, int>> cut_edges;  // (local vertex, edge id)
  std::string group;
};

struct EdgeData {
  QiClassLabel group_label;
  REdgeStatus status;  // stretch status of the rigid side's cut-vertex geodesic
  Count at_cylinder = kInfinity;
  Count at_rigid = kInfinity;
};

// A tree of cylinders plus everything the comparisons need, computed once.
struct GogProfile {
  GraphOfGroups gog;
  std::vector<std::optional<CylinderData>> cylinders;  // by vertex id
  std::vector<std::optional<RigidData>> rigids;        // by vertex id
  std::vector<EdgeData> edges;

  std::string describe_vertex(int id) const;
  std::string describe_edge(int id) const;
};

GogProfile profile_gog(const GraphOfGroups& gog);

struct Decoration {
  std::vector<int> vertex;  // ornament token per gog vertex
  std::vector<int> edge;    // ornament token per gog edge
  std::vector<std::optional<Rational>> relstr;  // per edge, set by embellishment
  int generation = 0;
};

struct TraceEntry {
  int generation = 0;
  std::string procedure;  // naive | neighbour | vertex | embellish
  std::string witness;
};

struct CompareResult {
  Tri result = Tri::Unknown;
  std::string reason;
};

// Ornaments on one or two trees of cylinders, with tokens drawn from one
// pool so that shared ornaments are literally shared tokens.
class JointDecoration {
 public:
  explicit JointDecoration(std::vector<const GogProfile*> gogs);

  int gog_count() const { return static_cast<int>(gogs_.size()); }
  const GogProfile& gog(int i) const { return *gogs_[i]; }
  const Decoration& decoration(int i) const { return decs_[i]; }
  const std::vector<TraceEntry>& trace() const { return trace_; }
  const std::string& provenance(int token) const { return provenance_[token]; }
  bool is_edge_token(int token) const { return edge_token_[token]; }
  int generation() const { return generation_; }

  // Completeness: every pair sharing an ornament was proved equivalent.
  bool complete() const { return complete_; }
  const std::vector<std::string>& incompleteness() const { return incomplete_; }

  void naive();
  bool neighbour_refine();
  bool vertex_refine();
  // Alternates both refinements until neither splits; returns rounds run.
  int refine_to_fixpoint();
  // Appends normalized relative stretch to R-edges. Requires a fixpoint.
  void embellish();
  bool embellish_complete() const { return embellish_complete_; }

  CompareResult strong_rel_qi_equal(int ga, int va, int gb, int vb, int based_a = -1, int based_b = -1) const;
  CompareResult edges_match(int ga, int ea, int gb, int eb) const;

  // Sorted tokens used by gog i (vertex and edge ornaments).
  std::vector<int> tokens(int i) const;

 private:
  struct Item {
    int gog;
    int id;
  };
  int mint(std::string provenance, bool edge);
  void recompute_completeness();
  CompareResult compare_cylinders(int ga, int va, int gb, int vb, int based_a, int based_b) const;
  CompareResult compare_rigids(int ga, int va, int gb, int vb, int based_a, int based_b) const;
  MarkedGraph rigid_marks(int g, int v, int based) const;

  std::vector<const GogProfile*> gogs_;
  std::vector<Decoration> decs_;
  std::vector<std::string> provenance_;
  std::vector<char> edge_token_;
  std::vector<TraceEntry> trace_;
  int generation_ = 0;
  bool complete_ = true;
  bool embellish_complete_ = true;
  bool uniform_edges_ = false;  // naive phase: edge ornaments not yet assigned
  std::vector<std::string> incomplete_;
};

struct StructureInvariant {
  std::vector<int> ornaments;
  std::vector<std::vector<Count>> matrix;

  friend bool operator==(const StructureInvariant& a, const StructureInvariant& b) {
    return a.ornaments == b.ornaments && a.matrix == b.matrix;
  }
};

// Requires a neighbour-stable decoration. Rows/columns follow `order` when
// given (so two gogs can be laid out on a common ornament list).
StructureInvariant structure_invariant(const JointDecoration& jd, int gog, const std::vector<int>& order = {});

}  // namespace raagqi
