// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include "raagqi/decision.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace raagqi {

using nlohmann::json;

const char* to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::NotWeaklyEquivalent: return "NotWeaklyEquivalent";
    case VerdictTag::WeaklyEquivalentNotEquivalent: return "WeaklyEquivalentNotEquivalent";
    case VerdictTag::EquivalentAndQI: return "EquivalentAndQI";
    case VerdictTag::EquivalentDovetailUnknown: return "EquivalentDovetailUnknown";
    case VerdictTag::Unknown: return "Unknown";
  }
  return "?";
}

bool is_not_qi(VerdictTag t) {
  return t == VerdictTag::NotWeaklyEquivalent || t == VerdictTag::WeaklyEquivalentNotEquivalent;
}

bool is_qi_positive(VerdictTag t) {
  return t == VerdictTag::EquivalentAndQI || t == VerdictTag::EquivalentDovetailUnknown;
}

int exit_code(VerdictTag t) {
  if (t == VerdictTag::EquivalentAndQI) return 0;
  if (is_not_qi(t)) return 1;
  return 3;
}

std::optional<int> detect_n_clique_tree_graded(const Graph& g) {
  if (g.size() < 4 || !is_connected(g)) return std::nullopt;
  auto cuts = cut_vertices(g);
  for (int v = 0; v < g.size(); ++v)
    if (!contains(cuts, v) && g.degree(v) != 1) return std::nullopt;
  if (diameter(g) < 3) return std::nullopt;
  std::set<int> sizes;
  for (const auto& b : maximal_biconnected_subgraphs(g)) {
    if (!is_clique(g, b)) return std::nullopt;
    auto inside = set_intersection(b, cuts).size();
    if (inside == b.size()) sizes.insert(static_cast<int>(b.size()));
    else if (!(b.size() == 2 && inside == 1)) return std::nullopt;
  }
  if (sizes.size() != 1 || *sizes.begin() < 2) return std::nullopt;
  return *sizes.begin();
}

std::shared_ptr<const GraphProfile> make_profile(const Graph& g) {
  auto p = std::make_shared<GraphProfile>();
  p->graph = g;
  p->code = canonical_code(g);
  auto comps = connected_components(g);
  if (g.size() == 0) p->ends = 0;
  else if (comps.size() > 1) p->ends = 3;
  else if (g.size() == 1) p->ends = 2;
  else p->ends = 1;
  if (p->ends == 3) {
    for (const auto& c : comps) {
      p->components.push_back(induced_subgraph(g, c));
      if (c.size() >= 2) p->one_ended_components.push_back(make_profile(p->components.back()));
    }
    return p;
  }
  if (p->ends != 1) return p;
  p->tree_graded = detect_n_clique_tree_graded(g);
  if (g.size() < 3) {
    p->trivial_jsj = true;
  } else {
    auto gog = build_jsj(g);
    if (gog.trivial) {
      p->trivial_jsj = true;
    } else {
      p->jsj = profile_gog(gog);
      for (const auto& rd : p->jsj->rigids)
        if (rd && dovetail_status(rd->graph) != DovetailStatus::KnownDovetail) p->rigid_dovetail = false;
    }
  }
  if (p->trivial_jsj) p->label = qi_class_label(g);
  return p;
}

namespace {

const char* ends_name(int e) {
  switch (e) {
    case 0: return "0";
    case 1: return "1";
    case 2: return "2";
    default: return "infinitely many";
  }
}

Verdict make(VerdictTag tag, std::string reason, std::vector<std::string> witnesses = {}) {
  Verdict v;
  v.tag = tag;
  v.reason = std::move(reason);
  v.witnesses = std::move(witnesses);
  return v;
}

json si_json(const StructureInvariant& si) {
  json m = json::array();
  for (const auto& row : si.matrix) {
    json r = json::array();
    for (Count c : row) {
      if (c == kInfinity) r.push_back("inf");
      else r.push_back(c);
    }
    m.push_back(r);
  }
  return {{"ornaments", si.ornaments}, {"matrix", m}};
}

json ornament_table(const JointDecoration& jd, int g) {
  json rows = json::array();
  const auto& prof = jd.gog(g);
  const auto& dec = jd.decoration(g);
  for (int t : jd.tokens(g)) {
    json items = json::array();
    for (const auto& v : prof.gog.vertices)
      if (dec.vertex[v.id] == t) items.push_back(prof.describe_vertex(v.id));
    for (const auto& e : prof.gog.edges)
      if (dec.edge[e.id] == t) {
        std::string s = prof.describe_edge(e.id);
        if (dec.relstr[e.id]) s += " relstr " + dec.relstr[e.id]->str();
        items.push_back(s);
      }
    rows.push_back({{"ornament", t}, {"kind", jd.is_edge_token(t) ? "edge" : "vertex"}, {"items", items}});
  }
  return rows;
}

json ledgers_json(const GogProfile& prof) {
  json out = json::array();
  const auto& g = prof.gog.source;
  for (const auto& v : prof.gog.vertices) {
    const auto& rd = prof.rigids[v.id];
    if (!rd || !rd->ledger) continue;
    json steps = json::array();
    for (const auto& s : rd->ledger->steps) steps.push_back({{"doubledVertex", s.doubled_vertex}, {"fold", s.fold}});
    json stretch = json::object();
    for (auto [local, e] : rd->cut_edges)
      stretch[rd->graph.name(local)] = stretch_along(*rd->ledger, rd->graph.name(local)).str();
    out.push_back({{"rigid", format_set(g, v.subgraph)},
                   {"base", json::parse(serialize_graph(rd->ledger->base, GraphFormat::Json))},
                   {"steps", steps},
                   {"stretchAtCutVertices", stretch}});
  }
  return out;
}

struct Check {
  bool tables_equal = true;
  bool invariants_equal = true;
  std::vector<std::string> witnesses;
  StructureInvariant sa, sb;
};

std::string describe_token_item(const JointDecoration& jd, int g, int t) {
  const auto& prof = jd.gog(g);
  const auto& dec = jd.decoration(g);
  for (const auto& v : prof.gog.vertices)
    if (dec.vertex[v.id] == t) return prof.describe_vertex(v.id);
  for (const auto& e : prof.gog.edges)
    if (dec.edge[e.id] == t) return prof.describe_edge(e.id);
  return "?";
}

// Prop-2.16-style test on a jointly decorated pair: the shared ornament
// sets must agree and the structure invariants must coincide.
Check check_pair(const JointDecoration& jd, bool with_invariants) {
  Check c;
  auto ta = jd.tokens(0), tb = jd.tokens(1);
  const char* side[2] = {"first", "second"};
  if (ta != tb) {
    c.tables_equal = false;
    for (int g = 0; g < 2; ++g) {
      const auto& mine = g == 0 ? ta : tb;
      const auto& other = g == 0 ? tb : ta;
      for (int t : mine) {
        if (std::binary_search(other.begin(), other.end(), t)) continue;
        c.witnesses.push_back("ornament o" + std::to_string(t) + " occurs only in the " + side[g] +
                              " input: " + describe_token_item(jd, g, t));
        // cite why its vertices match nothing on the other side
        if (jd.is_edge_token(t)) continue;
        const auto& prof = jd.gog(g);
        int vid = -1;
        for (const auto& v : prof.gog.vertices)
          if (jd.decoration(g).vertex[v.id] == t) vid = v.id;
        std::set<std::string> reasons;
        for (const auto& w : jd.gog(1 - g).gog.vertices) {
          if (w.kind != prof.gog.vertices[vid].kind) continue;
          auto r = g == 0 ? jd.strong_rel_qi_equal(0, vid, 1, w.id) : jd.strong_rel_qi_equal(0, w.id, 1, vid);
          if (r.result == Tri::Different) reasons.insert(r.reason);
        }
        for (const auto& r : reasons) c.witnesses.push_back("  against " + std::string(side[1 - g]) + " input: " + r);
      }
    }
    return c;
  }
  if (!with_invariants) return c;
  c.sa = structure_invariant(jd, 0, ta);
  c.sb = structure_invariant(jd, 1, ta);
  if (!(c.sa == c.sb)) {
    c.invariants_equal = false;
    for (std::size_t i = 0; i < ta.size(); ++i)
      for (std::size_t j = 0; j < ta.size(); ++j)
        if (c.sa.matrix[i][j] != c.sb.matrix[i][j] && c.witnesses.size() < 8)
          c.witnesses.push_back("structure invariant cell (o" + std::to_string(ta[i]) + ", o" + std::to_string(ta[j]) +
                                "): " + count_str(c.sa.matrix[i][j]) + " vs " + count_str(c.sb.matrix[i][j]));
  }
  return c;
}

std::string relstr_multiset(const JointDecoration& jd, int g) {
  std::vector<Rational> vals;
  for (const auto& r : jd.decoration(g).relstr)
    if (r) vals.push_back(*r);
  std::sort(vals.begin(), vals.end());
  std::string s = "{";
  for (std::size_t i = 0; i < vals.size(); ++i) s += (i ? "," : "") + vals[i].str();
  return s + "}";
}

json trace_json(const JointDecoration& jd) {
  json out = json::array();
  for (const auto& t : jd.trace())
    out.push_back({{"generation", t.generation}, {"procedure", t.procedure}, {"witness", t.witness}});
  return out;
}

Verdict run_pipeline(const GraphProfile& a, const GraphProfile& b) {
  const GogProfile* pa = &*a.jsj;
  const GogProfile* pb = &*b.jsj;
  JointDecoration jd({pa, pb});
  json report;
  report["notes"] = {
      "structure invariant convention: vertex/edge entries count incident lifts via multiplicities; "
      "edge/vertex entries count endpoints; vertex/vertex entries count neighbouring lifts; edge/edge entries are 0",
      "positive verdicts require every rigid vertex group of both inputs to be known dovetail "
      "(a one-sided gate would suffice for the decision procedure; the symmetric gate is stricter)",
      "open question carried verbatim: is every RAAG dovetail?"};
  report["stretchLedgers"] = {ledgers_json(*pa), ledgers_json(*pb)};

  jd.naive();
  auto first = check_pair(jd, false);
  auto finish = [&](Verdict v) {
    report["trace"] = trace_json(jd);
    report["ornamentTables"] = {ornament_table(jd, 0), ornament_table(jd, 1)};
    report["completenessFlags"] = {{"refinement", jd.complete()},
                                   {"stretch", jd.embellish_complete()},
                                   {"notes", jd.incompleteness()}};
    report["dovetail"] = {a.rigid_dovetail, b.rigid_dovetail};
    v.report = report;
    return v;
  };
  if (!first.tables_equal) {
    report["stage"] = "naive";
    for (const auto& t : jd.trace())
      if (t.procedure == "naive") first.witnesses.push_back("naive split: " + t.witness);
    return finish(make(VerdictTag::NotWeaklyEquivalent, "naive decorations use different ornaments", first.witnesses));
  }
  jd.refine_to_fixpoint();
  auto naive = check_pair(jd, true);
  report["naiveFixpoint"] = {{"ornaments", {jd.tokens(0), jd.tokens(1)}},
                             {"ornamentTablesEqual", naive.tables_equal},
                             {"structureInvariantsEqual", naive.invariants_equal},
                             {"structureInvariants", naive.tables_equal ? json{si_json(naive.sa), si_json(naive.sb)} : json()}};
  if (!naive.tables_equal || !naive.invariants_equal) {
    report["stage"] = "naive fixpoint";
    return finish(make(VerdictTag::NotWeaklyEquivalent, "naive fixpoint decorations are not equivalent", naive.witnesses));
  }
  bool naive_complete = jd.complete();
  jd.embellish();
  jd.refine_to_fixpoint();
  auto emb = check_pair(jd, true);
  std::string ra = relstr_multiset(jd, 0), rb = relstr_multiset(jd, 1);
  report["embellished"] = {{"relstr", {ra, rb}},
                           {"ornamentTablesEqual", emb.tables_equal},
                           {"structureInvariantsEqual", emb.invariants_equal},
                           {"structureInvariants", emb.tables_equal ? json{si_json(emb.sa), si_json(emb.sb)} : json()}};
  if (!emb.tables_equal || !emb.invariants_equal) {
    report["stage"] = "embellished fixpoint";
    auto w = emb.witnesses;
    w.insert(w.begin(), "relstr multisets " + ra + " vs " + rb);
    return finish(make(VerdictTag::WeaklyEquivalentNotEquivalent, "embellished decorations are not equivalent", w));
  }
  report["stage"] = "equivalent";
  if (!naive_complete || !jd.complete() || !jd.embellish_complete()) {
    auto notes = jd.incompleteness();
    return finish(make(VerdictTag::Unknown, "decorations match but some shared ornaments are unproven", notes));
  }
  if (!a.rigid_dovetail || !b.rigid_dovetail)
    return finish(make(VerdictTag::EquivalentDovetailUnknown,
                       "embellished trees equivalent; a rigid vertex group is not known to be dovetail"));
  return finish(make(VerdictTag::EquivalentAndQI, "embellished trees of cylinders equivalent, dovetail gate passed"));
}

Verdict compare_free_products(const GraphProfile& a, const GraphProfile& b, const CompareOptions& opts) {
  const auto& ca = a.one_ended_components;
  const auto& cb = b.one_ended_components;
  std::vector<std::vector<VerdictTag>> m(ca.size(), std::vector<VerdictTag>(cb.size()));
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) m[i][j] = compare_profiles(*ca[i], *cb[j], opts).tag;

  std::vector<std::string> missing;
  bool all_qi = true, all_positive = true;
  auto scan = [&](std::size_t na, std::size_t nb, bool flip, const auto& comps, const char* side) {
    for (std::size_t i = 0; i < na; ++i) {
      bool qi = false, pos = false, open = false;
      for (std::size_t j = 0; j < nb; ++j) {
        auto t = flip ? m[j][i] : m[i][j];
        qi |= t == VerdictTag::EquivalentAndQI;
        pos |= is_qi_positive(t);
        open |= !is_not_qi(t);
      }
      if (!open)
        missing.push_back("one-ended free factor " + describe_group(comps[i]->graph) + " of the " + side +
                          " input has no quasi-isometric counterpart");
      all_qi &= qi;
      all_positive &= pos;
    }
  };
  scan(ca.size(), cb.size(), false, ca, "first");
  scan(cb.size(), ca.size(), true, cb, "second");

  // certificate over class keys: components joined by a QI verdict share a key
  std::vector<int> parent(ca.size() + cb.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j)
      if (m[i][j] == VerdictTag::EquivalentAndQI) parent[find(static_cast<int>(i))] = find(static_cast<int>(ca.size() + j));
  std::map<int, CanonicalCode> key;
  auto code_of = [&](int x) { return x < static_cast<int>(ca.size()) ? ca[x]->code : cb[x - ca.size()]->code; };
  for (int x = 0; x < static_cast<int>(parent.size()); ++x) {
    auto& k = key[find(x)];
    if (k.empty() || code_of(x) < k) k = code_of(x);
  }
  auto terms = [&](const GraphProfile& p, int offset) {
    std::vector<FactorTerm> out;
    int k = 0;
    for (const auto& c : p.components) {
      if (c.size() == 1) {
        out.push_back(free_factor(1));
      } else {
        out.push_back({describe_group(c), QiClassLabel::unknown("class:" + key[find(offset + k)])});
        ++k;
      }
    }
    return out;
  };
  auto ta = terms(a, 0), tb = terms(b, static_cast<int>(ca.size()));
  json certs = json::array();
  Verdict v;
  if (!missing.empty()) {
    v = make(VerdictTag::NotWeaklyEquivalent, "Grushko factors do not match", missing);
  } else if (all_qi) {
    v = make(VerdictTag::EquivalentAndQI, "one-ended Grushko factors match up to quasi-isometry");
    if (auto cert = move_certificate(ta, tb)) {
      json moves = json::array();
      for (const auto& mv : *cert) moves.push_back(mv.str());
      certs.push_back(moves);
    }
  } else if (all_positive) {
    v = make(VerdictTag::EquivalentDovetailUnknown, "one-ended Grushko factors match, some without dovetail proof");
  } else {
    v = make(VerdictTag::Unknown, "some one-ended Grushko factors could not be compared");
  }
  json fa = json::array(), fb = json::array();
  for (const auto& t : ta) fa.push_back(t.name);
  for (const auto& t : tb) fb.push_back(t.name);
  v.report = {{"stage", "grushko"}, {"factors", {fa, fb}}, {"certificates", certs}};
  return v;
}

}  // namespace

Verdict compare_profiles(const GraphProfile& a, const GraphProfile& b, const CompareOptions& opts) {
  Verdict v;
  if (opts.isomorphism_shortcut && a.code == b.code) {
    v = make(VerdictTag::EquivalentAndQI, "isomorphic defining graphs");
    v.report = {{"stage", "isomorphism"}};
  } else if (a.ends != b.ends) {
    v = make(VerdictTag::NotWeaklyEquivalent, "numbers of ends differ",
             {std::string("ends: ") + ends_name(a.ends) + " vs " + ends_name(b.ends)});
    v.report = {{"stage", "ends"}};
  } else if (a.ends == 0 || a.ends == 2) {
    v = make(VerdictTag::EquivalentAndQI, std::string("both groups have ") + ends_name(a.ends) + " ends");
    v.report = {{"stage", "ends"}};
  } else if (a.ends == 3) {
    v = compare_free_products(a, b, opts);
  } else if (opts.tree_graded_shortcut && (a.tree_graded || b.tree_graded)) {
    if (a.tree_graded && b.tree_graded) {
      if (*a.tree_graded == *b.tree_graded) {
        v = make(VerdictTag::EquivalentAndQI,
                 "both inputs are " + std::to_string(*a.tree_graded) + "-clique tree-graded");
      } else {
        v = make(VerdictTag::NotWeaklyEquivalent, "clique tree-graded with different clique sizes",
                 {std::to_string(*a.tree_graded) + "-clique vs " + std::to_string(*b.tree_graded) + "-clique"});
      }
    } else {
      v = make(VerdictTag::NotWeaklyEquivalent, "only one input is clique tree-graded, a class closed under quasi-isometry",
               {std::string(a.tree_graded ? "first" : "second") + " input is " +
                std::to_string(a.tree_graded ? *a.tree_graded : *b.tree_graded) + "-clique tree-graded"});
    }
    v.report = {{"stage", "tree-graded"}};
  } else if (a.trivial_jsj || b.trivial_jsj) {
    if (a.trivial_jsj && b.trivial_jsj) {
      Tri t = compare_labels(a.label, b.label);
      std::string w = "labels " + a.label.str() + " vs " + b.label.str();
      if (t == Tri::Equal) v = make(VerdictTag::EquivalentAndQI, "equal quasi-isometry class labels", {w});
      else if (t == Tri::Different) v = make(VerdictTag::NotWeaklyEquivalent, "class labels separated by an invariant", {w});
      else v = make(VerdictTag::Unknown, "class labels not comparable", {w});
    } else {
      v = make(VerdictTag::NotWeaklyEquivalent, "tree of cylinders is a single vertex for one input only",
               {std::string(a.trivial_jsj ? "first" : "second") + " input has a one-vertex tree of cylinders"});
    }
    v.report = {{"stage", "trivial-jsj"}};
  } else {
    v = run_pipeline(a, b);
  }
  v.report["verdict"] = to_string(v.tag);
  v.report["reason"] = v.reason;
  v.report["witnesses"] = v.witnesses;
  for (const char* k : {"ornamentTables", "structureInvariants", "stretchLedgers", "completenessFlags", "certificates"})
    if (!v.report.contains(k)) v.report[k] = json::array();
  return v;
}

Verdict compare(const Graph& g, const Graph& h, const CompareOptions& opts) {
  auto a = make_profile(g);
  auto b = make_profile(h);
  return compare_profiles(*a, *b, opts);
}

namespace {

template <class F>
void parallel_for(std::size_t n, int threads, F f) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) f(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

CorpusClassification classify_corpus(const std::vector<Graph>& gs, const CompareOptions& opts, int threads) {
  std::size_t n = gs.size();
  std::vector<std::shared_ptr<const GraphProfile>> profiles(n);
  parallel_for(n, threads, [&](std::size_t i) { profiles[i] = make_profile(gs[i]); });
  CorpusClassification out;
  out.matrix.assign(n, std::vector<VerdictTag>(n, VerdictTag::EquivalentAndQI));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  parallel_for(pairs.size(), threads, [&](std::size_t k) {
    auto [i, j] = pairs[k];
    auto t = compare_profiles(*profiles[i], *profiles[j], opts).tag;
    out.matrix[i][j] = out.matrix[j][i] = t;
  });
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (auto [i, j] : pairs) {
    if (is_qi_positive(out.matrix[i][j])) {
      int a = find(static_cast<int>(i)), b = find(static_cast<int>(j));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    if (out.matrix[i][j] == VerdictTag::Unknown) out.unknown_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  std::map<int, std::vector<int>> classes;
  for (int i = 0; i < static_cast<int>(n); ++i) classes[find(i)].push_back(i);
  for (auto& [root, members] : classes) out.classes.push_back(std::move(members));
  return out;
}

json analyze_graph(const Graph& g) {
  json out;
  out["vertices"] = g.size();
  out["edges"] = g.edge_count();
  bool connected = g.size() > 0 && is_connected(g);
  out["connected"] = connected;
  out["oneEnded"] = is_one_ended(g);
  auto label = qi_class_label(g);
  out["label"] = label.str();
  out["labelKey"] = label.key();
  out["outIsFinite"] = out_is_finite(g);
  out["typeII"] = is_type_II(g);
  out["trivialCentre"] = has_trivial_centre(g);
  out["dovetail"] = dovetail_status(g) == DovetailStatus::KnownDovetail ? "known-dovetail" : "unknown";
  if (!connected) {
    json comps = json::array();
    for (const auto& c : connected_components(g)) {
      auto h = induced_subgraph(g, c);
      comps.push_back({{"vertices", format_set(g, c)}, {"group", describe_group(h)}, {"label", qi_class_label(h).str()}});
    }
    out["components"] = comps;
    return out;
  }
  auto tg = detect_n_clique_tree_graded(g);
  out["treeGraded"] = tg ? json(*tg) : json(nullptr);
  if (auto ledger = reduce_to_finite_out_base(g)) {
    json steps = json::array();
    for (const auto& s : ledger->steps) steps.push_back(s.doubled_vertex);
    out["doublingLedger"] = {{"base", json::parse(serialize_graph(ledger->base, GraphFormat::Json))}, {"steps", steps}};
  }
  if (g.size() < 3) {
    out["jsj"] = {{"trivial", true}};
    return out;
  }
  auto gog = build_jsj(g);
  auto prof = profile_gog(gog);
  json jsj = json::parse(export_json(gog));
  for (auto& v : jsj["vertices"]) {
    int id = v["id"].get<int>();
    v["group"] = prof.gog.vertices[id].kind == NodeKind::Cylinder ? prof.cylinders[id]->group : prof.rigids[id]->group;
    if (const auto& cd = prof.cylinders[id]) {
      json per = json::array(), np = json::array();
      for (const auto& p : cd->peripheral) per.push_back({{"block", format_set(g, p.block)}, {"label", p.label.str()}});
      for (const auto& b : cd->non_peripheral) np.push_back(format_set(g, b));
      v["peripheralBlocks"] = per;
      v["nonPeripheralBlocks"] = np;
    }
    if (const auto& rd = prof.rigids[id]) {
      v["label"] = rd->label.str();
      v["family"] = rd->family == RigidData::Family::Abelian ? "abelian"
                    : rd->family == RigidData::Family::FiniteOut ? "finite-Out" : "other";
      v["dovetail"] = dovetail_status(rd->graph) == DovetailStatus::KnownDovetail ? "known-dovetail" : "unknown";
    }
  }
  for (auto& e : jsj["edges"]) e["stretchStatus"] = prof.edges[e["id"].get<int>()].status.str();
  out["jsj"] = jsj;
  out["stretchLedgers"] = ledgers_json(prof);
  return out;
}

}  // namespace raagqi
