// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include "raagqi/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

namespace raagqi {

MarkedGraph::MarkedGraph(Graph g, std::vector<std::string> m) : graph(std::move(g)), marks(std::move(m)) {
  if (static_cast<int>(marks.size()) != graph.size()) throw GraphError("mark map must cover every vertex");
}

namespace {

using Colouring = std::vector<int>;

int renumber(std::vector<std::pair<std::vector<int>, int>>& sigs, Colouring& colours) {
  std::vector<int> idx(sigs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sigs[a].first < sigs[b].first; });
  int c = -1;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || sigs[idx[i]].first != sigs[idx[i - 1]].first) ++c;
    colours[sigs[idx[i]].second] = c;
  }
  return c + 1;
}

int count_colours(const Colouring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Equitable refinement; colour order is derived only from old colours and
// neighbour colour multisets, so it commutes with relabelling.
void refine(const Graph& g, Colouring& colours) {
  int n = g.size();
  int k = count_colours(colours);
  std::vector<std::pair<std::vector<int>, int>> sigs(n);
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& s = sigs[v].first;
      s.clear();
      s.push_back(colours[v]);
      std::size_t base = s.size();
      for (int w : g.neighbours(v)) s.push_back(colours[w]);
      std::sort(s.begin() + base, s.end());
      sigs[v].second = v;
    }
    int nk = renumber(sigs, colours);
    if (nk == k) return;
    k = nk;
  }
}

struct Search {
  const MarkedGraph& m;
  int n;
  std::string best;
  std::vector<int> best_order;
  bool have_best = false;
  std::vector<std::vector<int>> automorphisms;

  explicit Search(const MarkedGraph& mg) : m(mg), n(mg.graph.size()) {}

  std::string leaf_code(const std::vector<int>& order) const {
    std::string code = std::to_string(n) + ";";
    for (int v : order) {
      code += std::to_string(m.marks[v].size());
      code += ':';
      code += m.marks[v];
    }
    code += '|';
    std::string bits;
    bits.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) bits += m.graph.adjacent(order[i], order[j]) ? '1' : '0';
    return code + bits;
  }

  bool twins(int u, int w) const {
    const auto& a = m.graph.neighbours(u);
    const auto& b = m.graph.neighbours(w);
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (i < a.size() && a[i] == w) { ++i; continue; }
      if (j < b.size() && b[j] == u) { ++j; continue; }
      if (i == a.size() || j == b.size() || a[i] != b[j]) return false;
      ++i;
      ++j;
    }
    return true;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  bool same_orbit(int v, const std::vector<int>& explored, const std::vector<int>& prefix) {
    if (explored.empty() || automorphisms.empty()) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& a : automorphisms) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return a[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < n; ++x) {
        int r1 = find(parent, x), r2 = find(parent, a[x]);
        if (r1 != r2) parent[r1] = r2;
      }
    }
    int rv = find(parent, v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(parent, e) == rv; });
  }

  void run(Colouring colours, std::vector<int>& prefix) {
    refine(m.graph, colours);
    int k = count_colours(colours);
    if (k == n) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[colours[v]] = v;
      std::string code = leaf_code(order);
      if (!have_best || code < best) {
        best = std::move(code);
        best_order = std::move(order);
        have_best = true;
      } else if (code == best) {
        std::vector<int> aut(n);
        for (int i = 0; i < n; ++i) aut[best_order[i]] = order[i];
        automorphisms.push_back(std::move(aut));
      }
      return;
    }
    std::vector<int> sizes(k, 0);
    for (int c : colours) ++sizes[c];
    int target = -1;
    for (int c = 0; c < k; ++c)
      if (sizes[c] > 1 && (target < 0 || sizes[c] < sizes[target])) target = c;
    std::vector<int> explored;
    for (int v = 0; v < n; ++v) {
      if (colours[v] != target) continue;
      if (std::any_of(explored.begin(), explored.end(), [&](int e) { return twins(v, e); })) continue;
      if (same_orbit(v, explored, prefix)) continue;
      Colouring next(n);
      for (int u = 0; u < n; ++u) next[u] = colours[u] * 2 + (u == v ? 0 : 1);
      std::vector<std::pair<std::vector<int>, int>> sigs(n);
      for (int u = 0; u < n; ++u) sigs[u] = {{next[u]}, u};
      renumber(sigs, next);
      prefix.push_back(v);
      run(std::move(next), prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const MarkedGraph& m) {
  int n = m.graph.size();
  if (n == 0) return {"0;|", {}};
  // initial colouring by mark, ordered by mark token
  std::vector<std::string> distinct(m.marks.begin(), m.marks.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Colouring colours(n);
  for (int v = 0; v < n; ++v)
    colours[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), m.marks[v]) - distinct.begin());
  Search s(m);
  std::vector<int> prefix;
  s.run(std::move(colours), prefix);
  return {std::move(s.best), std::move(s.best_order)};
}

CanonicalCode canonical_code(const MarkedGraph& m) { return canonical_form(m).code; }

CanonicalCode canonical_code(const Graph& g) { return canonical_code(MarkedGraph(g)); }

std::optional<std::vector<int>> find_isomorphism(const MarkedGraph& a, const MarkedGraph& b) {
  if (a.graph.size() != b.graph.size() || a.graph.edge_count() != b.graph.edge_count()) return std::nullopt;
  auto ca = canonical_form(a);
  auto cb = canonical_form(b);
  if (ca.code != cb.code) return std::nullopt;
  std::vector<int> mapping(a.graph.size());
  for (std::size_t i = 0; i < ca.order.size(); ++i) mapping[ca.order[i]] = cb.order[i];
  return mapping;
}

bool isomorphic(const Graph& a, const Graph& b) {
  return find_isomorphism(MarkedGraph(a), MarkedGraph(b)).has_value();
}

std::string code_digest(const CanonicalCode& code) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : code) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 10);
}

std::vector<Graph> enumerate_connected_graphs(int n) {
  if (n < 1 || n > 10) throw GraphError("enumeration supports 1 <= n <= 10");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::map<CanonicalCode, Graph> next;
    for (const auto& g : level) {
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        Graph h(k);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (int u = 0; u < k - 1; ++u)
          if (mask & (1u << u)) h.add_edge(u, k - 1);
        auto code = canonical_code(h);
        next.try_emplace(std::move(code), std::move(h));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  std::vector<Graph> out;
  for (auto& g : level)
    if (is_connected(g)) out.push_back(std::move(g));
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return a.edge_count() < b.edge_count(); });
  return out;
}

}  // namespace raagqi
