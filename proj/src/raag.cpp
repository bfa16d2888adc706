// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include "raagqi/raag.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace raagqi {

bool is_one_ended(const Graph& g) { return g.size() >= 2 && is_connected(g); }

bool out_is_finite(const Graph& g) {
  int n = g.size();
  for (int v = 0; v < n; ++v) {
    auto lk = link(g, v);
    for (int w = 0; w < n; ++w)
      if (w != v && is_subset(lk, star(g, w))) return false;
  }
  for (int w = 0; w < n; ++w)
    if (components_without(g, star(g, w)).size() >= 2) return false;
  return true;
}

bool is_type_II(const Graph& g) {
  if (g.size() == 0 || !is_connected(g)) return false;
  for (int v = 0; v < g.size(); ++v)
    for (int w = v + 1; w < g.size(); ++w) {
      auto sep = set_intersection(link(g, v), link(g, w));
      if (!sep.empty() && components_without(g, sep).size() >= 2) return false;
    }
  return true;
}

bool has_trivial_centre(const Graph& g) { return join_decomposition(g).clique_rank == 0; }

Graph star_double(const Graph& g, int v) {
  auto st = star(g, v);
  if (static_cast<int>(st.size()) == g.size())
    throw GraphError("star_double: star(" + g.name(v) + ") is the whole graph");
  Graph d;
  std::vector<int> left(g.size()), right(g.size());
  for (int x = 0; x < g.size(); ++x) {
    if (contains(st, x)) left[x] = right[x] = d.add_vertex(g.name(x));
    else left[x] = d.add_vertex(g.name(x) + ".L");
  }
  for (int x = 0; x < g.size(); ++x)
    if (!contains(st, x)) right[x] = d.add_vertex(g.name(x) + ".R");
  for (auto [a, b] : g.edges()) {
    d.add_edge(left[a], left[b]);
    if (left[a] != right[a] || left[b] != right[b]) d.add_edge(right[a], right[b]);
  }
  return d;
}

std::string DoublingLedger::base_vertex(const std::string& v) const {
  std::string x = v;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) x = it->fold.at(x);
  return x;
}

namespace {

template <class V>
class Memo {
 public:
  std::optional<V> get(const std::string& k) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(k);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void put(const std::string& k, const V& v) {
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.size() > 200000) map_.clear();
    map_.emplace(k, v);
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, V> map_;
};

Memo<std::optional<DoublingLedger>>& ledger_memo() {
  static Memo<std::optional<DoublingLedger>> m;
  return m;
}

bool better(const DoublingLedger& a, const DoublingLedger& b) {
  if (a.base.size() != b.base.size()) return a.base.size() < b.base.size();
  if (a.base_code != b.base_code) return a.base_code < b.base_code;
  return a.steps.size() < b.steps.size();
}

std::optional<DoublingLedger> undouble_search(const Graph& g) {
  if (auto hit = ledger_memo().get(g.key())) return *hit;
  std::optional<DoublingLedger> best;
  if (out_is_finite(g)) {
    best = DoublingLedger{g, {}, canonical_code(g)};
    ledger_memo().put(g.key(), best);
    return best;
  }
  for (int u = 0; u < g.size(); ++u) {
    auto st = star(g, u);
    if (static_cast<int>(st.size()) == g.size()) continue;
    auto comps = components_without(g, st);
    if (comps.size() < 2) continue;
    // The two halves of a double meet only in star(u), so the outside
    // components must pair up under isomorphisms fixing star(u) pointwise.
    std::vector<MarkedGraph> pieces;
    std::map<CanonicalCode, std::vector<int>> classes;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      auto part = set_union(st, comps[i]);
      MarkedGraph mg(induced_subgraph(g, part));
      for (int j = 0; j < mg.graph.size(); ++j)
        if (contains(st, part[j])) mg.marks[j] = "s" + g.name(part[j]);
      classes[canonical_code(mg)].push_back(static_cast<int>(i));
      pieces.push_back(std::move(mg));
    }
    bool even = std::all_of(classes.begin(), classes.end(), [](const auto& kv) { return kv.second.size() % 2 == 0; });
    if (!even) continue;
    std::vector<int> kept;
    DoublingStep step;
    step.doubled_vertex = g.name(u);
    std::vector<std::pair<int, int>> pairs;  // (dropped, kept)
    for (const auto& [code, ids] : classes)
      for (std::size_t k = 0; k < ids.size(); k += 2) {
        kept.push_back(ids[k]);
        pairs.emplace_back(ids[k + 1], ids[k]);
      }
    VertexSet half = st;
    for (int k : kept) half = set_union(half, comps[k]);
    for (int x : half) {
      step.fold[g.name(x)] = g.name(x);
      step.embedding[g.name(x)] = g.name(x);
    }
    for (auto [drop, keep] : pairs) {
      auto iso = find_isomorphism(pieces[drop], pieces[keep]);
      const auto& a = pieces[drop].graph;
      const auto& b = pieces[keep].graph;
      for (int j = 0; j < a.size(); ++j) step.fold[a.name(j)] = b.name((*iso)[j]);
    }
    auto sub = undouble_search(induced_subgraph(g, half));
    if (!sub) continue;
    sub->steps.push_back(std::move(step));
    if (!best || better(*sub, *best)) best = std::move(sub);
  }
  ledger_memo().put(g.key(), best);
  return best;
}

}  // namespace

std::optional<DoublingLedger> reduce_to_finite_out_base(const Graph& g) {
  if (g.size() == 0 || !is_connected(g)) return std::nullopt;
  return undouble_search(g);
}

Rational stretch_along(const DoublingLedger& ledger, const std::string& v) {
  Rational s(1);
  std::string x = v;
  for (auto it = ledger.steps.rbegin(); it != ledger.steps.rend(); ++it) {
    if (x == it->doubled_vertex) s = s * Rational(2);
    x = it->fold.at(x);
  }
  return s;
}

std::optional<Rational> stretch_of_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.size()) throw GraphError("vertex not in graph");
  auto ledger = reduce_to_finite_out_base(g);
  if (!ledger) return std::nullopt;
  return stretch_along(*ledger, g.name(v));
}

std::string REdgeStatus::str() const {
  switch (kind) {
    case Kind::RWithValue: return "R(" + value->str() + ")";
    case Kind::RNoValue: return "R(?)";
    case Kind::F: return "F";
    default: return "unknown";
  }
}

REdgeStatus r_edge_status(const Graph& rigid, int v) {
  REdgeStatus st;
  if (is_clique(rigid)) {
    st.kind = REdgeStatus::Kind::F;
  } else if (is_type_II(rigid) && has_trivial_centre(rigid)) {
    st.value = stretch_of_vertex(rigid, v);
    st.kind = st.value ? REdgeStatus::Kind::RWithValue : REdgeStatus::Kind::RNoValue;
  }
  return st;
}

DovetailStatus dovetail_status(const Graph& g) {
  using D = DovetailStatus;
  if (g.size() == 0 || is_clique(g)) return D::KnownDovetail;
  auto all_known = [&](const std::vector<VertexSet>& parts) {
    return std::all_of(parts.begin(), parts.end(), [&](const VertexSet& p) {
      return dovetail_status(induced_subgraph(g, p)) == D::KnownDovetail;
    });
  };
  if (!is_connected(g)) return all_known(connected_components(g)) ? D::KnownDovetail : D::Unknown;
  auto jd = join_decomposition(g);
  if (jd.clique_rank > 0 || jd.factors.size() >= 2) return all_known(jd.factors) ? D::KnownDovetail : D::Unknown;
  if (is_type_II(g)) return D::KnownDovetail;
  auto cuts = cut_vertices(g);
  if (!cuts.empty()) {
    int v = cuts.front();
    std::vector<VertexSet> pieces;
    for (auto& c : components_without(g, {v})) {
      c.insert(std::lower_bound(c.begin(), c.end(), v), v);
      pieces.push_back(std::move(c));
    }
    return all_known(pieces) ? D::KnownDovetail : D::Unknown;
  }
  return D::Unknown;
}

namespace {

Memo<QiClassLabel>& label_memo() {
  static Memo<QiClassLabel> m;
  return m;
}

}  // namespace

QiClassLabel qi_class_label(const Graph& g) {
  if (g.size() == 0) return QiClassLabel::abelian(0);
  if (is_clique(g)) return QiClassLabel::abelian(g.size());
  if (auto hit = label_memo().get(g.key())) return *hit;
  QiClassLabel out;
  if (!is_connected(g)) {
    std::vector<QiClassLabel> labels;
    for (const auto& c : connected_components(g)) labels.push_back(qi_class_label(induced_subgraph(g, c)));
    out = label_of(free_product_nf(labels));
  } else if (auto jd = join_decomposition(g); jd.clique_rank > 0 || jd.factors.size() >= 2) {
    std::vector<QiClassLabel> fs;
    for (const auto& f : jd.factors) fs.push_back(qi_class_label(induced_subgraph(g, f)));
    out = QiClassLabel::product(jd.clique_rank, std::move(fs));
  } else if (auto ledger = reduce_to_finite_out_base(g)) {
    out = QiClassLabel::finite_out_base(ledger->base_code);
  } else {
    out = QiClassLabel::unknown(canonical_code(g));
  }
  label_memo().put(g.key(), out);
  return out;
}

std::string describe_group(const Graph& g) {
  int n = g.size();
  if (n == 0) return "1";
  if (is_clique(g)) return n == 1 ? "Z" : "Z^" + std::to_string(n);
  if (g.edge_count() == 0) return "F_" + std::to_string(n);
  if (!is_connected(g)) {
    std::vector<std::pair<int, std::string>> parts;
    for (const auto& c : connected_components(g))
      parts.emplace_back(static_cast<int>(c.size()), describe_group(induced_subgraph(g, c)));
    std::sort(parts.rbegin(), parts.rend());
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " * ") + p.second;
    return s;
  }
  auto jd = join_decomposition(g);
  if (jd.clique_rank > 0 || jd.factors.size() >= 2) {
    std::string s = jd.clique_rank == 0 ? "" : jd.clique_rank == 1 ? "Z" : "Z^" + std::to_string(jd.clique_rank);
    for (const auto& f : jd.factors) s += (s.empty() ? "(" : " x (") + describe_group(induced_subgraph(g, f)) + ")";
    return s;
  }
  return "A(" + std::to_string(n) + "v/" + std::to_string(g.edge_count()) + "e)";
}

}  // namespace raagqi
