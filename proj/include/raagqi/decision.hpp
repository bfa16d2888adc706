// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "raagqi/decoration.hpp"
#include "raagqi/raag.hpp"

namespace raagqi {

// A named free factor, e.g. "F_3" with label FreeNonAbelian.
struct FactorTerm {
  std::string name;
  QiClassLabel label;
  friend bool operator==(const FactorTerm& a, const FactorTerm& b) { return a.name == b.name && a.label == b.label; }
};
FactorTerm free_factor(int rank);     // F_n (n == 1 is Z)
FactorTerm abelian_factor(int rank);  // Z^n
FactorTerm graph_factor(const Graph& g);

struct Move {
  enum class Kind { Duplicate, Merge, Replace, AddFree, RemoveFree };
  Kind kind = Kind::Duplicate;
  FactorTerm from;  // Replace: old term; Duplicate/Merge/Remove: the term involved
  FactorTerm to;    // Replace: new term; Add: added term
  int type() const;  // 1, 2 or 3
  std::string str() const;
};
using MoveCertificate = std::vector<Move>;

FreeProductNormalForm free_product_nf(const std::vector<FactorTerm>& terms);
std::optional<MoveCertificate> move_certificate(const std::vector<FactorTerm>& a, const std::vector<FactorTerm>& b);
// Applies the moves with their side conditions; true iff the result is b as a multiset.
bool replay_certificate(const std::vector<FactorTerm>& a, const MoveCertificate& cert, const std::vector<FactorTerm>& b,
                        std::string* why = nullptr);

std::optional<int> detect_n_clique_tree_graded(const Graph& g);

enum class VerdictTag {
  NotWeaklyEquivalent,
  WeaklyEquivalentNotEquivalent,
  EquivalentAndQI,
  EquivalentDovetailUnknown,
  Unknown,
};
const char* to_string(VerdictTag t);
bool is_not_qi(VerdictTag t);
bool is_qi_positive(VerdictTag t);  // EquivalentAndQI or EquivalentDovetailUnknown
int exit_code(VerdictTag t);        // 0 QI, 1 NotQI, 3 Unknown

struct Verdict {
  VerdictTag tag = VerdictTag::Unknown;
  std::vector<std::string> witnesses;
  std::string reason;
  nlohmann::json report;
};

struct CompareOptions {
  // Isomorphic defining graphs are reported QI without running the pipeline.
  bool isomorphism_shortcut = true;
  // Clique tree-graded inputs are settled by clique size alone.
  bool tree_graded_shortcut = true;
};

// Per-graph data shared between comparisons.
struct GraphProfile {
  Graph graph;
  CanonicalCode code;
  int ends = 0;  // 0, 1, 2, or 3 for infinitely many
  std::vector<std::shared_ptr<const GraphProfile>> one_ended_components;
  std::vector<Graph> components;
  std::optional<int> tree_graded;
  bool trivial_jsj = false;
  QiClassLabel label;  // trivial-JSJ inputs only
  std::optional<GogProfile> jsj;
  bool rigid_dovetail = true;  // every rigid vertex group known dovetail
};
std::shared_ptr<const GraphProfile> make_profile(const Graph& g);

Verdict compare(const Graph& g, const Graph& h, const CompareOptions& opts = {});
Verdict compare_profiles(const GraphProfile& a, const GraphProfile& b, const CompareOptions& opts = {});

struct CorpusClassification {
  std::vector<std::vector<int>> classes;  // QI-positive classes, by index
  std::vector<std::vector<VerdictTag>> matrix;
  std::vector<std::pair<int, int>> unknown_pairs;
};
CorpusClassification classify_corpus(const std::vector<Graph>& gs, const CompareOptions& opts = {}, int threads = 0);

// Per-graph report used by the analyze command.
nlohmann::json analyze_graph(const Graph& g);

}  // namespace raagqi
