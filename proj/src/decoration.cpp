// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include "raagqi/decoration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace raagqi {

namespace {

std::string join_labels(const std::vector<QiClassLabel>& ls) {
  std::string s = "{";
  for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? ", " : "") + ls[i].str();
  return s + "}";
}

}  // namespace

GogProfile profile_gog(const GraphOfGroups& gog) {
  GogProfile p;
  p.gog = gog;
  const auto& g = gog.source;
  p.cylinders.resize(gog.vertices.size());
  p.rigids.resize(gog.vertices.size());
  for (const auto& v : gog.vertices) {
    if (v.kind == NodeKind::Cylinder) {
      CylinderData cd;
      auto blocks = cylinder_blocks(g, v.cut_vertex);
      std::vector<std::pair<int, std::string>> parts;
      for (const auto& pb : blocks.peripheral) {
        CylinderData::Peripheral per;
        per.block = pb.block;
        per.label = qi_class_label(induced_subgraph(g, pb.block));
        for (int e : v.edges)
          if (gog.vertices[gog.edges[e].rigid].subgraph == pb.owner) per.edge = e;
        parts.emplace_back(static_cast<int>(pb.block.size()), describe_group(induced_subgraph(g, pb.block)));
        cd.peripheral.push_back(std::move(per));
      }
      for (const auto& b : blocks.non_peripheral) {
        cd.non_peripheral.push_back(b);
        parts.emplace_back(static_cast<int>(b.size()), describe_group(induced_subgraph(g, b)));
        if (b.size() >= 2) cd.one_ended_non_peripheral.push_back(qi_class_label(induced_subgraph(g, b)));
      }
      std::sort(cd.one_ended_non_peripheral.begin(), cd.one_ended_non_peripheral.end());
      cd.one_ended_non_peripheral.erase(
          std::unique(cd.one_ended_non_peripheral.begin(), cd.one_ended_non_peripheral.end()),
          cd.one_ended_non_peripheral.end());
      std::sort(parts.rbegin(), parts.rend());
      cd.group = "Z x (";
      for (std::size_t i = 0; i < parts.size(); ++i) cd.group += (i ? " * " : "") + parts[i].second;
      cd.group += ")";
      p.cylinders[v.id] = std::move(cd);
    } else {
      RigidData rd;
      rd.graph = induced_subgraph(g, v.subgraph);
      rd.label = qi_class_label(rd.graph);
      rd.group = describe_group(rd.graph);
      if (is_clique(rd.graph)) {
        rd.family = RigidData::Family::Abelian;
      } else if (rd.label.kind == QiClassLabel::Kind::FiniteOutBase) {
        rd.family = RigidData::Family::FiniteOut;
        rd.ledger = reduce_to_finite_out_base(rd.graph);
      }
      for (int e : v.edges) rd.cut_edges.emplace_back(rd.graph.index(g.name(gog.edges[e].cut_vertex)), e);
      p.rigids[v.id] = std::move(rd);
    }
  }
  for (const auto& e : gog.edges) {
    EdgeData ed;
    ed.group_label = qi_class_label(induced_subgraph(g, e.subgraph));
    const auto& rd = *p.rigids[e.rigid];
    ed.status = r_edge_status(rd.graph, rd.graph.index(g.name(e.cut_vertex)));
    ed.at_cylinder = edge_multiplicity(gog, e.cylinder, e.id);
    ed.at_rigid = edge_multiplicity(gog, e.rigid, e.id);
    p.edges.push_back(std::move(ed));
  }
  return p;
}

std::string GogProfile::describe_vertex(int id) const {
  const auto& v = gog.vertices[id];
  const auto& g = gog.source;
  if (v.kind == NodeKind::Cylinder) {
    return "cylinder star(" + g.name(v.cut_vertex) + ")=" + format_set(g, v.subgraph) + " group " +
           cylinders[id]->group;
  }
  return "rigid " + format_set(g, v.subgraph) + " group " + rigids[id]->group;
}

std::string GogProfile::describe_edge(int id) const {
  const auto& e = gog.edges[id];
  return "edge " + format_set(gog.source, e.subgraph) + " at star(" + gog.source.name(e.cut_vertex) + ")";
}

namespace {

struct Partition {
  std::vector<int> cls;  // class per item, numbered by first appearance
  int count = 0;
  std::vector<std::string> witnesses;
};

template <class Cmp>
Partition partition_items(int n, Cmp cmp) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<CompareResult>> res(n, std::vector<CompareResult>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      res[i][j] = cmp(i, j);
      if (res[i][j].result != Tri::Different) parent[find(i)] = find(j);
    }
  Partition p;
  p.cls.assign(n, -1);
  std::map<int, int> ids;
  std::vector<int> rep;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto [it, fresh] = ids.emplace(r, p.count);
    if (fresh) {
      ++p.count;
      rep.push_back(i);
    }
    p.cls[i] = it->second;
  }
  // every cross-class pair was compared Different; cite representatives
  for (std::size_t a = 0; a < rep.size(); ++a)
    for (std::size_t b = a + 1; b < rep.size() && p.witnesses.size() < 24; ++b)
      p.witnesses.push_back(res[rep[a]][rep[b]].reason);
  return p;
}

Tri combine(Tri a, Tri b) {
  if (a == Tri::Different || b == Tri::Different) return Tri::Different;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::Equal;
}

template <class T, class Cmp>
Tri compare_sets(const std::vector<T>& a, const std::vector<T>& b, Cmp cmp) {
  bool all_equal = true;
  auto side = [&](const std::vector<T>& xs, const std::vector<T>& ys, bool flip) {
    for (const auto& x : xs) {
      Tri best = Tri::Different;
      for (const auto& y : ys) {
        Tri t = flip ? cmp(y, x) : cmp(x, y);
        if (t == Tri::Equal) { best = Tri::Equal; break; }
        if (t == Tri::Unknown) best = Tri::Unknown;
      }
      if (best == Tri::Different) return false;
      if (best == Tri::Unknown) all_equal = false;
    }
    return true;
  };
  if (!side(a, b, false) || !side(b, a, true)) return Tri::Different;
  return all_equal ? Tri::Equal : Tri::Unknown;
}

}  // namespace

JointDecoration::JointDecoration(std::vector<const GogProfile*> gogs) : gogs_(std::move(gogs)) {
  decs_.resize(gogs_.size());
  for (std::size_t i = 0; i < gogs_.size(); ++i) {
    decs_[i].vertex.assign(gogs_[i]->gog.vertices.size(), -1);
    decs_[i].edge.assign(gogs_[i]->gog.edges.size(), -1);
    decs_[i].relstr.assign(gogs_[i]->gog.edges.size(), std::nullopt);
  }
}

int JointDecoration::mint(std::string provenance, bool edge) {
  provenance_.push_back(std::move(provenance));
  edge_token_.push_back(edge ? 1 : 0);
  return static_cast<int>(provenance_.size()) - 1;
}

std::vector<int> JointDecoration::tokens(int i) const {
  std::set<int> s(decs_[i].vertex.begin(), decs_[i].vertex.end());
  s.insert(decs_[i].edge.begin(), decs_[i].edge.end());
  return {s.begin(), s.end()};
}

MarkedGraph JointDecoration::rigid_marks(int g, int v, int based) const {
  const auto& rd = *gogs_[g]->rigids[v];
  MarkedGraph m(rd.graph);
  for (auto [local, e] : rd.cut_edges) {
    m.marks[local] = "e" + (uniform_edges_ ? std::string() : std::to_string(decs_[g].edge[e]));
    if (e == based) m.marks[local] += "*";
  }
  return m;
}

CompareResult JointDecoration::compare_cylinders(int ga, int va, int gb, int vb, int based_a, int based_b) const {
  const auto& ca = *gogs_[ga]->cylinders[va];
  const auto& cb = *gogs_[gb]->cylinders[vb];
  using Pair = std::pair<int, QiClassLabel>;
  auto pairs = [this](int g, const CylinderData& cd) {
    std::vector<Pair> out;
    for (const auto& p : cd.peripheral) out.emplace_back(uniform_edges_ ? 0 : decs_[g].edge[p.edge], p.label);
    std::sort(out.begin(), out.end(), [](const Pair& x, const Pair& y) {
      return std::make_pair(x.first, x.second.key()) < std::make_pair(y.first, y.second.key());
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Pair& x, const Pair& y) { return x.first == y.first && x.second == y.second; }),
              out.end());
    return out;
  };
  auto pair_cmp = [](const Pair& x, const Pair& y) {
    return x.first != y.first ? Tri::Different : compare_labels(x.second, y.second);
  };
  auto show = [](const std::vector<Pair>& ps) {
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i)
      s += (i ? ", " : "") + std::string("(o") + std::to_string(ps[i].first) + "," + ps[i].second.str() + ")";
    return s + "}";
  };
  // the non-peripheral test ignores edge ornaments, so it is the more basic witness
  Tri np = compare_sets(ca.one_ended_non_peripheral, cb.one_ended_non_peripheral,
                        [](const QiClassLabel& x, const QiClassLabel& y) { return compare_labels(x, y); });
  if (np == Tri::Different)
    return {Tri::Different, "one-ended non-peripheral factor sets differ: " + join_labels(ca.one_ended_non_peripheral) +
                                " vs " + join_labels(cb.one_ended_non_peripheral)};
  auto pa = pairs(ga, ca), pb = pairs(gb, cb);
  Tri per = compare_sets(pa, pb, pair_cmp);
  if (per == Tri::Different)
    return {Tri::Different, "peripheral factor sets differ: " + show(pa) + " vs " + show(pb)};
  Tri based = Tri::Equal;
  if (based_a >= 0) {
    auto find_pair = [this](int g, const CylinderData& cd, int e) {
      for (const auto& p : cd.peripheral)
        if (p.edge == e) return Pair(uniform_edges_ ? 0 : decs_[g].edge[e], p.label);
      return Pair(-1, QiClassLabel());
    };
    based = pair_cmp(find_pair(ga, ca, based_a), find_pair(gb, cb, based_b));
    if (based == Tri::Different) return {Tri::Different, "based peripheral factors differ"};
  }
  Tri all = combine(combine(per, np), based);
  if (all == Tri::Equal) return {Tri::Equal, "same peripheral and one-ended non-peripheral factor classes"};
  return {Tri::Unknown, "cylinder factor classes not decidable with structural labels"};
}

CompareResult JointDecoration::compare_rigids(int ga, int va, int gb, int vb, int based_a, int based_b) const {
  const auto& ra = *gogs_[ga]->rigids[va];
  const auto& rb = *gogs_[gb]->rigids[vb];
  Tri lab = compare_labels(ra.label, rb.label);
  if (lab == Tri::Different)
    return {Tri::Different, "rigid classes differ: " + ra.label.str() + " vs " + rb.label.str()};
  auto ma = rigid_marks(ga, va, based_a);
  auto mb = rigid_marks(gb, vb, based_b);
  using F = RigidData::Family;
  if (ra.family == F::Abelian && rb.family == F::Abelian) {
    auto marked = [](const MarkedGraph& m) {
      std::vector<std::string> out;
      for (const auto& s : m.marks)
        if (!s.empty()) out.push_back(s);
      std::sort(out.begin(), out.end());
      return out;
    };
    if (marked(ma) == marked(mb)) return {Tri::Equal, "abelian: mark-preserving bijection of peripheral vertices"};
    return {Tri::Different, "abelian rank " + std::to_string(ra.graph.size()) +
                                ": no mark-preserving bijection of peripheral vertices"};
  }
  if (find_isomorphism(ma, mb)) return {Tri::Equal, "marked isomorphism of rigid graphs"};
  if (ra.family == F::FiniteOut && rb.family == F::FiniteOut && ra.ledger && rb.ledger) {
    auto project = [](const RigidData& rd, const MarkedGraph& m) -> std::optional<MarkedGraph> {
      const auto& base = rd.ledger->base;
      std::vector<std::set<std::string>> fibre(base.size());
      for (int j = 0; j < m.graph.size(); ++j)
        fibre[base.index(rd.ledger->base_vertex(m.graph.name(j)))].insert(m.marks[j]);
      MarkedGraph out(base);
      for (int b = 0; b < base.size(); ++b) {
        if (fibre[b].size() != 1) return std::nullopt;
        out.marks[b] = *fibre[b].begin();
      }
      return out;
    };
    auto pa = project(ra, ma), pb = project(rb, mb);
    if (!pa || !pb) return {Tri::Unknown, "peripheral marks not constant on doubling fibres"};
    if (find_isomorphism(*pa, *pb)) return {Tri::Equal, "marked isomorphism of finite-Out base graphs"};
    return {Tri::Different, "no mark-preserving isomorphism of finite-Out base graphs"};
  }
  return {Tri::Unknown, "rigid vertex outside the abelian and finite-Out families"};
}

CompareResult JointDecoration::strong_rel_qi_equal(int ga, int va, int gb, int vb, int based_a, int based_b) const {
  auto ka = gogs_[ga]->gog.vertices[va].kind;
  if (ka != gogs_[gb]->gog.vertices[vb].kind) throw GraphError("strong_rel_qi_equal: vertex kinds differ");
  if (ka == NodeKind::Cylinder) return compare_cylinders(ga, va, gb, vb, based_a, based_b);
  return compare_rigids(ga, va, gb, vb, based_a, based_b);
}

CompareResult JointDecoration::edges_match(int ga, int ea, int gb, int eb) const {
  const auto& xa = gogs_[ga]->gog.edges[ea];
  const auto& xb = gogs_[gb]->gog.edges[eb];
  Tri lab = compare_labels(gogs_[ga]->edges[ea].group_label, gogs_[gb]->edges[eb].group_label);
  if (lab == Tri::Different) return {Tri::Different, "edge groups differ"};
  auto c = strong_rel_qi_equal(ga, xa.cylinder, gb, xb.cylinder, ea, eb);
  if (c.result == Tri::Different) return {Tri::Different, "no matching at cylinder endpoint: " + c.reason};
  auto r = strong_rel_qi_equal(ga, xa.rigid, gb, xb.rigid, ea, eb);
  if (r.result == Tri::Different) return {Tri::Different, "no matching at rigid endpoint: " + r.reason};
  Tri all = combine(combine(c.result, r.result), lab);
  return {all, all == Tri::Equal ? "matchings at both endpoints" : "endpoint matching undecided: " + c.reason + "; " + r.reason};
}

void JointDecoration::naive() {
  uniform_edges_ = true;
  std::vector<Item> items[2];
  for (int g = 0; g < gog_count(); ++g)
    for (const auto& v : gogs_[g]->gog.vertices) items[v.kind == NodeKind::Cylinder ? 0 : 1].push_back({g, v.id});
  for (auto& group : items) {
    auto part = partition_items(static_cast<int>(group.size()), [&](int i, int j) {
      return strong_rel_qi_equal(group[i].gog, group[i].id, group[j].gog, group[j].id);
    });
    std::vector<int> tok(part.count, -1);
    for (std::size_t i = 0; i < group.size(); ++i) {
      int c = part.cls[i];
      if (tok[c] < 0) tok[c] = mint(gogs_[group[i].gog]->describe_vertex(group[i].id), false);
      decs_[group[i].gog].vertex[group[i].id] = tok[c];
    }
    for (const auto& w : part.witnesses) trace_.push_back({generation_, "naive", w});
  }
  uniform_edges_ = false;
  std::map<std::pair<int, int>, std::vector<Item>> edge_groups;
  for (int g = 0; g < gog_count(); ++g)
    for (const auto& e : gogs_[g]->gog.edges)
      edge_groups[{decs_[g].vertex[e.cylinder], decs_[g].vertex[e.rigid]}].push_back({g, e.id});
  for (auto& [ends, group] : edge_groups) {
    auto part = partition_items(static_cast<int>(group.size()), [&](int i, int j) -> CompareResult {
      Tri t = compare_labels(gogs_[group[i].gog]->edges[group[i].id].group_label,
                             gogs_[group[j].gog]->edges[group[j].id].group_label);
      return {t, "edge group classes " + std::string(to_string(t))};
    });
    std::vector<int> tok(part.count, -1);
    for (std::size_t i = 0; i < group.size(); ++i) {
      int c = part.cls[i];
      if (tok[c] < 0) tok[c] = mint(gogs_[group[i].gog]->describe_edge(group[i].id), true);
      decs_[group[i].gog].edge[group[i].id] = tok[c];
    }
  }
  recompute_completeness();
}

bool JointDecoration::neighbour_refine() {
  using Key = std::vector<Count>;
  std::map<Key, int> vkeys, ekeys;
  std::vector<std::vector<Key>> vk(gog_count()), ek(gog_count());
  std::set<int> vold, eold;
  for (int g = 0; g < gog_count(); ++g) {
    const auto& gog = gogs_[g]->gog;
    for (const auto& v : gog.vertices) {
      std::map<int, Count> counts;
      for (int e : v.edges) {
        Count m = v.kind == NodeKind::Cylinder ? gogs_[g]->edges[e].at_cylinder : gogs_[g]->edges[e].at_rigid;
        auto [it, fresh] = counts.emplace(decs_[g].edge[e], 0);
        it->second = add_counts(it->second, m);
      }
      Key k{decs_[g].vertex[v.id]};
      for (auto [tok, c] : counts) {
        k.push_back(tok);
        k.push_back(c);
      }
      vkeys.emplace(k, 0);
      vold.insert(decs_[g].vertex[v.id]);
      vk[g].push_back(std::move(k));
    }
    for (const auto& e : gog.edges) {
      Key k{decs_[g].edge[e.id], decs_[g].vertex[e.cylinder], decs_[g].vertex[e.rigid]};
      ekeys.emplace(k, 0);
      eold.insert(decs_[g].edge[e.id]);
      ek[g].push_back(std::move(k));
    }
  }
  if (vkeys.size() == vold.size() && ekeys.size() == eold.size()) return false;
  ++generation_;
  auto key_str = [](const Key& k) {
    std::string s;
    for (std::size_t i = 1; i + 1 < k.size(); i += 2) s += (s.empty() ? "" : ",") + ("o" + std::to_string(k[i])) + ":" + count_str(k[i + 1]);
    return "[" + s + "]";
  };
  std::map<int, std::vector<const Key*>> by_parent;
  for (auto& [k, tok] : vkeys) {
    tok = mint(provenance_[k[0]] + " /n" + std::to_string(generation_), false);
    by_parent[static_cast<int>(k[0])].push_back(&k);
  }
  for (auto& [k, tok] : ekeys) {
    tok = mint(provenance_[k[0]] + " /n" + std::to_string(generation_), true);
    by_parent[static_cast<int>(k[0])].push_back(&k);
  }
  for (const auto& [parent, ks] : by_parent) {
    if (ks.size() < 2) continue;
    std::string w = "count mismatch within o" + std::to_string(parent) + ":";
    for (const auto* k : ks) w += " " + (edge_token_[parent] ? "ends(o" + std::to_string((*k)[1]) + ",o" + std::to_string((*k)[2]) + ")" : key_str(*k));
    trace_.push_back({generation_, "neighbour", w});
  }
  for (int g = 0; g < gog_count(); ++g) {
    for (std::size_t i = 0; i < vk[g].size(); ++i) decs_[g].vertex[i] = vkeys[vk[g][i]];
    for (std::size_t i = 0; i < ek[g].size(); ++i) decs_[g].edge[i] = ekeys[ek[g][i]];
    decs_[g].generation = generation_;
  }
  return true;
}

bool JointDecoration::vertex_refine() {
  std::map<int, std::vector<Item>> vclasses, eclasses;
  for (int g = 0; g < gog_count(); ++g) {
    for (const auto& v : gogs_[g]->gog.vertices) vclasses[decs_[g].vertex[v.id]].push_back({g, v.id});
    for (const auto& e : gogs_[g]->gog.edges) eclasses[decs_[g].edge[e.id]].push_back({g, e.id});
  }
  struct Split {
    int parent;
    bool edge;
    std::vector<Item> items;
    Partition part;
  };
  std::vector<Split> splits;
  for (auto& [tok, items] : vclasses) {
    if (items.size() < 2) continue;
    auto part = partition_items(static_cast<int>(items.size()), [&](int i, int j) {
      return strong_rel_qi_equal(items[i].gog, items[i].id, items[j].gog, items[j].id);
    });
    if (part.count > 1) splits.push_back({tok, false, items, std::move(part)});
  }
  for (auto& [tok, items] : eclasses) {
    if (items.size() < 2) continue;
    auto part = partition_items(static_cast<int>(items.size()), [&](int i, int j) {
      return edges_match(items[i].gog, items[i].id, items[j].gog, items[j].id);
    });
    if (part.count > 1) splits.push_back({tok, true, items, std::move(part)});
  }
  if (splits.empty()) return false;
  ++generation_;
  for (const auto& s : splits) {
    std::vector<int> tok(s.part.count, -1);
    for (std::size_t i = 0; i < s.items.size(); ++i) {
      int c = s.part.cls[i];
      if (tok[c] < 0)
        tok[c] = mint(provenance_[s.parent] + " /v" + std::to_string(generation_) + "." + std::to_string(c), s.edge);
      auto& slot = s.edge ? decs_[s.items[i].gog].edge[s.items[i].id] : decs_[s.items[i].gog].vertex[s.items[i].id];
      slot = tok[c];
    }
    for (const auto& w : s.part.witnesses)
      trace_.push_back({generation_, "vertex", "o" + std::to_string(s.parent) + " split: " + w});
  }
  for (auto& d : decs_) d.generation = generation_;
  return true;
}

int JointDecoration::refine_to_fixpoint() {
  int rounds = 0;
  while (true) {
    while (neighbour_refine()) ++rounds;
    if (!vertex_refine()) break;
    ++rounds;
  }
  recompute_completeness();
  return rounds;
}

void JointDecoration::recompute_completeness() {
  std::vector<std::string> notes;
  std::map<int, std::vector<Item>> vclasses, eclasses;
  for (int g = 0; g < gog_count(); ++g) {
    for (const auto& v : gogs_[g]->gog.vertices) vclasses[decs_[g].vertex[v.id]].push_back({g, v.id});
    for (const auto& e : gogs_[g]->gog.edges) eclasses[decs_[g].edge[e.id]].push_back({g, e.id});
  }
  for (const auto& [tok, items] : vclasses)
    for (std::size_t i = 1; i < items.size(); ++i) {
      auto r = strong_rel_qi_equal(items[0].gog, items[0].id, items[i].gog, items[i].id);
      if (r.result != Tri::Equal) {
        notes.push_back("o" + std::to_string(tok) + " merges " + gogs_[items[0].gog]->describe_vertex(items[0].id) +
                        " and " + gogs_[items[i].gog]->describe_vertex(items[i].id) + ": " + r.reason);
        break;
      }
    }
  for (const auto& [tok, items] : eclasses)
    for (std::size_t i = 1; i < items.size(); ++i) {
      auto r = edges_match(items[0].gog, items[0].id, items[i].gog, items[i].id);
      if (r.result != Tri::Equal) {
        notes.push_back("o" + std::to_string(tok) + " merges " + gogs_[items[0].gog]->describe_edge(items[0].id) +
                        " and " + gogs_[items[i].gog]->describe_edge(items[i].id) + ": " + r.reason);
        break;
      }
    }
  complete_ = notes.empty();
  std::vector<std::string> keep;
  for (const auto& s : incomplete_)
    if (s.rfind("stretch:", 0) == 0) keep.push_back(s);
  keep.insert(keep.end(), notes.begin(), notes.end());
  incomplete_ = std::move(keep);
}

void JointDecoration::embellish() {
  std::map<std::pair<int, std::string>, int> keys;
  for (int g = 0; g < gog_count(); ++g) {
    const auto& prof = *gogs_[g];
    for (const auto& v : prof.gog.vertices) {
      if (v.kind != NodeKind::Cylinder) continue;
      bool blocked = false, any_r = false;
      std::optional<Rational> least;
      for (int e : v.edges) {
        const auto& st = prof.edges[e].status;
        using K = REdgeStatus::Kind;
        if (st.kind == K::RNoValue || st.kind == K::Unknown) blocked = true;
        if (st.kind == K::RWithValue) {
          any_r = true;
          if (!least || *st.value < *least) least = st.value;
        }
      }
      if (blocked) {
        embellish_complete_ = false;
        incomplete_.push_back("stretch: " + prof.describe_vertex(v.id) +
                              " has an incident edge without a known stretch status");
        continue;
      }
      if (!any_r) continue;
      for (int e : v.edges)
        if (prof.edges[e].status.kind == REdgeStatus::Kind::RWithValue)
          decs_[g].relstr[e] = *prof.edges[e].status.value / *least;
    }
  }
  std::vector<std::vector<std::pair<int, std::string>>> ek(gog_count());
  std::set<int> old;
  for (int g = 0; g < gog_count(); ++g)
    for (const auto& e : gogs_[g]->gog.edges) {
      auto rs = decs_[g].relstr[e.id];
      std::pair<int, std::string> k{decs_[g].edge[e.id], rs ? rs->str() : std::string()};
      keys.emplace(k, 0);
      old.insert(k.first);
      ek[g].push_back(std::move(k));
    }
  ++generation_;
  for (auto& [k, tok] : keys) {
    std::string prov = provenance_[k.first];
    if (!k.second.empty()) prov += " +relstr=" + k.second;
    tok = mint(prov, true);
  }
  if (keys.size() != old.size()) {
    std::map<int, std::vector<std::string>> by_parent;
    for (const auto& [k, tok] : keys) by_parent[k.first].push_back(k.second.empty() ? "-" : k.second);
    for (const auto& [p, vals] : by_parent) {
      if (vals.size() < 2) continue;
      std::string w = "relstr mismatch within o" + std::to_string(p) + ":";
      for (const auto& v : vals) w += " " + v;
      trace_.push_back({generation_, "embellish", w});
    }
  }
  for (int g = 0; g < gog_count(); ++g) {
    for (std::size_t i = 0; i < ek[g].size(); ++i) decs_[g].edge[i] = keys[ek[g][i]];
    decs_[g].generation = generation_;
  }
}

StructureInvariant structure_invariant(const JointDecoration& jd, int gi, const std::vector<int>& order) {
  StructureInvariant si;
  si.ornaments = order.empty() ? jd.tokens(gi) : order;
  std::map<int, int> pos;
  for (std::size_t i = 0; i < si.ornaments.size(); ++i) pos[si.ornaments[i]] = static_cast<int>(i);
  std::size_t n = si.ornaments.size();
  si.matrix.assign(n, std::vector<Count>(n, 0));
  const auto& prof = jd.gog(gi);
  const auto& dec = jd.decoration(gi);
  std::set<int> done;
  for (const auto& v : prof.gog.vertices) {
    int t = dec.vertex[v.id];
    if (!done.insert(t).second) continue;
    auto& row = si.matrix[pos.at(t)];
    for (int e : v.edges) {
      const auto& ed = prof.gog.edges[e];
      Count m = v.kind == NodeKind::Cylinder ? prof.edges[e].at_cylinder : prof.edges[e].at_rigid;
      int other = v.kind == NodeKind::Cylinder ? ed.rigid : ed.cylinder;
      auto& a = row[pos.at(dec.edge[e])];
      a = add_counts(a, m);
      auto& b = row[pos.at(dec.vertex[other])];
      b = add_counts(b, m);
    }
  }
  for (const auto& e : prof.gog.edges) {
    int t = dec.edge[e.id];
    if (!done.insert(t).second) continue;
    auto& row = si.matrix[pos.at(t)];
    row[pos.at(dec.vertex[e.cylinder])] += 1;
    row[pos.at(dec.vertex[e.rigid])] += 1;
  }
  return si;
}

}  // namespace raagqi
