// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>

#include "raagqi/decision.hpp"

namespace raagqi {

FactorTerm free_factor(int rank) {
  if (rank == 1) return {"Z", QiClassLabel::two_ended()};
  if (rank == 0) return {"1", QiClassLabel::abelian(0)};
  return {"F_" + std::to_string(rank), QiClassLabel::free_non_abelian()};
}

FactorTerm abelian_factor(int rank) {
  if (rank <= 1) return free_factor(rank);
  return {"Z^" + std::to_string(rank), QiClassLabel::abelian(rank)};
}

FactorTerm graph_factor(const Graph& g) { return {describe_group(g), qi_class_label(g)}; }

int Move::type() const {
  switch (kind) {
    case Kind::Duplicate:
    case Kind::Merge: return 1;
    case Kind::Replace: return 2;
    default: return 3;
  }
}

std::string Move::str() const {
  switch (kind) {
    case Kind::Duplicate: return "TypeI(duplicate " + from.name + ")";
    case Kind::Merge: return "TypeI(merge " + from.name + ")";
    case Kind::Replace: return "TypeII(" + from.name + "->" + to.name + ")";
    case Kind::AddFree: return "TypeIII(add " + to.name + ")";
    case Kind::RemoveFree: return "TypeIII(remove " + from.name + ")";
  }
  return "?";
}

FreeProductNormalForm free_product_nf(const std::vector<FactorTerm>& terms) {
  std::vector<QiClassLabel> labels;
  for (const auto& t : terms) labels.push_back(t.label);
  return free_product_nf(labels);
}

namespace {

bool free_like(const QiClassLabel& l) {
  return l.kind == QiClassLabel::Kind::TwoEnded || l.kind == QiClassLabel::Kind::FreeNonAbelian ||
         (l.kind == QiClassLabel::Kind::Abelian && l.rank == 0);
}

bool same_multiset(std::vector<FactorTerm> a, std::vector<FactorTerm> b) {
  auto by_name = [](const FactorTerm& x, const FactorTerm& y) {
    return std::make_pair(x.name, x.label.key()) < std::make_pair(y.name, y.label.key());
  };
  std::sort(a.begin(), a.end(), by_name);
  std::sort(b.begin(), b.end(), by_name);
  return a == b;
}

}  // namespace

std::optional<MoveCertificate> move_certificate(const std::vector<FactorTerm>& a, const std::vector<FactorTerm>& b) {
  if (!(free_product_nf(a) == free_product_nf(b))) return std::nullopt;
  MoveCertificate cert;
  std::vector<char> used_b(b.size(), 0), used_a(a.size(), 0);
  // pair factors of equal class; renaming within a class is a type II move
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (used_b[j] || !(a[i].label == b[j].label)) continue;
      used_a[i] = used_b[j] = 1;
      if (!(a[i] == b[j])) cert.push_back({Move::Kind::Replace, a[i], b[j]});
      break;
    }
  }
  std::vector<FactorTerm> current;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (used_b[j]) current.push_back(b[j]);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!used_a[i]) current.push_back(a[i]);
  // missing target factors: duplicate an equal class, or add a free factor
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (used_b[j]) continue;
    auto it = std::find_if(current.begin(), current.end(), [&](const FactorTerm& t) { return t.label == b[j].label; });
    if (it != current.end()) {
      FactorTerm src = *it;
      cert.push_back({Move::Kind::Duplicate, src, src});
      if (!(src == b[j])) cert.push_back({Move::Kind::Replace, src, b[j]});
    } else if (free_like(b[j].label)) {
      cert.push_back({Move::Kind::AddFree, {}, b[j]});
    } else {
      return std::nullopt;
    }
    current.push_back(b[j]);
  }
  // surplus source factors: merge into an equal class, or drop a free factor
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (used_a[i]) continue;
    bool twin = std::count_if(b.begin(), b.end(), [&](const FactorTerm& t) { return t.label == a[i].label; }) > 0;
    if (twin) {
      auto it = std::find_if(b.begin(), b.end(), [&](const FactorTerm& t) { return t.label == a[i].label; });
      if (!(a[i] == *it)) cert.push_back({Move::Kind::Replace, a[i], *it});
      cert.push_back({Move::Kind::Merge, *it, *it});
    } else if (free_like(a[i].label)) {
      cert.push_back({Move::Kind::RemoveFree, a[i], {}});
    } else {
      return std::nullopt;
    }
  }
  if (!replay_certificate(a, cert, b)) return std::nullopt;
  return cert;
}

bool replay_certificate(const std::vector<FactorTerm>& a, const MoveCertificate& cert, const std::vector<FactorTerm>& b,
                        std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  std::vector<FactorTerm> cur = a;
  auto find = [&](const FactorTerm& t) { return std::find(cur.begin(), cur.end(), t); };
  for (const auto& m : cert) {
    switch (m.kind) {
      case Move::Kind::Replace: {
        auto it = find(m.from);
        if (it == cur.end()) return fail(m.str() + ": factor absent");
        if (!(m.from.label == m.to.label)) return fail(m.str() + ": factors not quasi-isometric");
        *it = m.to;
        break;
      }
      case Move::Kind::Duplicate:
        if (find(m.from) == cur.end()) return fail(m.str() + ": factor absent");
        if (!free_product_nf(cur).infinitely_many_ends) return fail(m.str() + ": needs infinitely many ends");
        cur.push_back(m.from);
        break;
      case Move::Kind::Merge: {
        if (std::count(cur.begin(), cur.end(), m.from) < 2) return fail(m.str() + ": needs two copies");
        cur.erase(find(m.from));
        if (!free_product_nf(cur).infinitely_many_ends) return fail(m.str() + ": needs infinitely many ends");
        break;
      }
      case Move::Kind::AddFree:
      case Move::Kind::RemoveFree: {
        const auto& t = m.kind == Move::Kind::AddFree ? m.to : m.from;
        bool trivial = t.label.kind == QiClassLabel::Kind::Abelian && t.label.rank == 0;
        if (!free_like(t.label)) return fail(m.str() + ": not a free factor");
        bool before = free_product_nf(cur).infinitely_many_ends;
        if (m.kind == Move::Kind::AddFree) {
          cur.push_back(t);
        } else {
          auto it = find(t);
          if (it == cur.end()) return fail(m.str() + ": factor absent");
          cur.erase(it);
        }
        // adding or removing free factors is only a quasi-isometry with
        // infinitely many ends on both sides (trivial factors are free to go)
        if (!trivial && !(before && free_product_nf(cur).infinitely_many_ends))
          return fail(m.str() + ": leaves the infinitely-many-ends regime");
        break;
      }
    }
  }
  if (!same_multiset(cur, b)) return fail("replay does not reach the target multiset");
  return true;
}

}  // namespace raagqi
