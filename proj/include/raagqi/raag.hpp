// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "raagqi/canonical.hpp"
#include "raagqi/graph.hpp"
#include "raagqi/rational.hpp"

namespace raagqi {

// Three-valued answer used wherever a comparison may be out of reach.
enum class Tri { Equal, Different, Unknown };
const char* to_string(Tri t);

// Structural label for the quasi-isometry class of a RAAG.
struct QiClassLabel {
  enum class Kind { Abelian, FreeNonAbelian, TwoEnded, FiniteOutBase, Product, FreeProductNF, UnknownClass };

  Kind kind = Kind::Abelian;
  int rank = 0;                       // Abelian rank, or clique rank of a Product
  CanonicalCode code;                 // FiniteOutBase / UnknownClass token
  std::vector<QiClassLabel> factors;  // Product factors, or the one-ended classes of an NF

  static QiClassLabel abelian(int n);  // n == 1 normalizes to TwoEnded
  static QiClassLabel two_ended();
  static QiClassLabel free_non_abelian();
  static QiClassLabel finite_out_base(CanonicalCode c);
  static QiClassLabel product(int clique_rank, std::vector<QiClassLabel> fs);
  static QiClassLabel unknown(CanonicalCode c);

  bool one_ended() const;
  bool fully_known() const;  // no UnknownClass anywhere inside
  std::string key() const;   // canonical serialization; equality of keys is label equality
  std::string str() const;   // short human-readable form

  friend bool operator==(const QiClassLabel& a, const QiClassLabel& b) { return a.key() == b.key(); }
  friend bool operator<(const QiClassLabel& a, const QiClassLabel& b) { return a.key() < b.key(); }
};

// Grushko-level normal form of a free product up to quasi-isometry.
struct FreeProductNormalForm {
  std::vector<QiClassLabel> one_ended;  // sorted, without duplicates
  bool trivial = false;                 // no nontrivial factor at all
  bool single_factor = false;           // exactly one freely indecomposable factor (Z or one-ended)
  bool infinitely_many_ends = false;
  std::vector<QiClassLabel> unknown_tokens;

  std::string key() const;
  friend bool operator==(const FreeProductNormalForm& a, const FreeProductNormalForm& b) { return a.key() == b.key(); }
};

FreeProductNormalForm free_product_nf(const std::vector<QiClassLabel>& factors);
QiClassLabel label_of(const FreeProductNormalForm& nf);

// Sound three-valued comparison: Different only when an invariant (ends,
// product structure, abelian rank, finite-Out base) separates the classes.
Tri compare_labels(const QiClassLabel& a, const QiClassLabel& b);
Tri compare_nf(const FreeProductNormalForm& a, const FreeProductNormalForm& b);

bool is_one_ended(const Graph& g);
bool out_is_finite(const Graph& g);
bool is_type_II(const Graph& g);
bool has_trivial_centre(const Graph& g);

// Two copies of g glued along star(v); outside vertices get ".L"/".R".
Graph star_double(const Graph& g, int v);

struct DoublingStep {
  std::string doubled_vertex;
  // vertex of the previous graph -> vertex of the double (left copy)
  std::map<std::string, std::string> embedding;
  // vertex of the double -> vertex of the previous graph (folds the right copy)
  std::map<std::string, std::string> fold;
};

struct DoublingLedger {
  Graph base;
  std::vector<DoublingStep> steps;  // base first
  CanonicalCode base_code;

  // Image of a vertex of the final graph in the base.
  std::string base_vertex(const std::string& v) const;
};

std::optional<DoublingLedger> reduce_to_finite_out_base(const Graph& g);
std::optional<Rational> stretch_of_vertex(const Graph& g, int v);
// Stretch replayed along a known ledger (the graph must be the ledger's top).
Rational stretch_along(const DoublingLedger& ledger, const std::string& v);

struct REdgeStatus {
  enum class Kind { RWithValue, RNoValue, F, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Rational> value;
  std::string str() const;
};
REdgeStatus r_edge_status(const Graph& rigid, int v);

enum class DovetailStatus { KnownDovetail, Unknown };
DovetailStatus dovetail_status(const Graph& g);

QiClassLabel qi_class_label(const Graph& g);

// Human-readable group name for a small defining graph: Z, Z^n, F_n, ...
std::string describe_group(const Graph& g);

}  // namespace raagqi
