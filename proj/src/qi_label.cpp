// Copyright 2026 The raagqi Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <numeric>

#include "raagqi/raag.hpp"

namespace raagqi {

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Equal: return "equal";
    case Tri::Different: return "different";
    default: return "unknown";
  }
}

QiClassLabel QiClassLabel::abelian(int n) {
  if (n == 1) return two_ended();
  QiClassLabel l;
  l.kind = Kind::Abelian;
  l.rank = n;
  return l;
}

QiClassLabel QiClassLabel::two_ended() {
  QiClassLabel l;
  l.kind = Kind::TwoEnded;
  return l;
}

QiClassLabel QiClassLabel::free_non_abelian() {
  QiClassLabel l;
  l.kind = Kind::FreeNonAbelian;
  return l;
}

QiClassLabel QiClassLabel::finite_out_base(CanonicalCode c) {
  QiClassLabel l;
  l.kind = Kind::FiniteOutBase;
  l.code = std::move(c);
  return l;
}

QiClassLabel QiClassLabel::product(int clique_rank, std::vector<QiClassLabel> fs) {
  QiClassLabel l;
  l.kind = Kind::Product;
  l.rank = clique_rank;
  // abelian factors fold into the clique rank
  for (auto& f : fs) {
    if (f.kind == Kind::Abelian) l.rank += f.rank;
    else if (f.kind == Kind::TwoEnded) l.rank += 1;
    else l.factors.push_back(std::move(f));
  }
  std::sort(l.factors.begin(), l.factors.end());
  return l;
}

QiClassLabel QiClassLabel::unknown(CanonicalCode c) {
  QiClassLabel l;
  l.kind = Kind::UnknownClass;
  l.code = std::move(c);
  return l;
}

bool QiClassLabel::one_ended() const {
  switch (kind) {
    case Kind::Abelian: return rank >= 2;
    case Kind::FiniteOutBase:
    case Kind::Product:
    case Kind::UnknownClass: return true;
    default: return false;
  }
}

bool QiClassLabel::fully_known() const {
  if (kind == Kind::UnknownClass) return false;
  return std::all_of(factors.begin(), factors.end(), [](const QiClassLabel& f) { return f.fully_known(); });
}

std::string QiClassLabel::key() const {
  auto list = [this] {
    std::string s = "[";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += ',';
      s += factors[i].key();
    }
    return s + "]";
  };
  switch (kind) {
    case Kind::Abelian: return "A" + std::to_string(rank);
    case Kind::TwoEnded: return "Z";
    case Kind::FreeNonAbelian: return "F";
    case Kind::FiniteOutBase: return "B(" + code + ")";
    case Kind::Product: return "P" + std::to_string(rank) + list();
    case Kind::FreeProductNF: return "N" + list();
    case Kind::UnknownClass: return "U(" + code + ")";
  }
  return "?";
}

std::string QiClassLabel::str() const {
  auto join = [this](const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += sep;
      s += factors[i].str();
    }
    return s;
  };
  switch (kind) {
    case Kind::Abelian: return rank == 0 ? "1" : "Z^" + std::to_string(rank);
    case Kind::TwoEnded: return "Z";
    case Kind::FreeNonAbelian: return "F";
    case Kind::FiniteOutBase: return "FinOut#" + code_digest(code);
    case Kind::Product: {
      std::string s = rank > 0 ? (rank == 1 ? "Z" : "Z^" + std::to_string(rank)) : "";
      for (const auto& f : factors) s += (s.empty() ? "(" : " x (") + f.str() + ")";
      return s;
    }
    case Kind::FreeProductNF: return "FreeProduct(" + join(", ") + ")";
    case Kind::UnknownClass: return "Unknown#" + code_digest(code);
  }
  return "?";
}

std::string FreeProductNormalForm::key() const {
  if (trivial) return "T";
  std::string s = single_factor ? "S[" : "I[";
  for (std::size_t i = 0; i < one_ended.size(); ++i) {
    if (i) s += ',';
    s += one_ended[i].key();
  }
  return s + "]";
}

FreeProductNormalForm free_product_nf(const std::vector<QiClassLabel>& factors) {
  FreeProductNormalForm nf;
  int total = 0;
  for (const auto& f : factors) {
    using K = QiClassLabel::Kind;
    if (f.kind == K::Abelian && f.rank == 0) continue;
    if (f.kind == K::TwoEnded) {
      total += 1;
    } else if (f.kind == K::FreeNonAbelian) {
      total += 2;
    } else if (f.kind == K::FreeProductNF) {
      total += 2;
      nf.one_ended.insert(nf.one_ended.end(), f.factors.begin(), f.factors.end());
    } else {
      total += 1;
      nf.one_ended.push_back(f);
    }
  }
  std::sort(nf.one_ended.begin(), nf.one_ended.end());
  nf.one_ended.erase(std::unique(nf.one_ended.begin(), nf.one_ended.end()), nf.one_ended.end());
  for (const auto& l : nf.one_ended)
    if (!l.fully_known()) nf.unknown_tokens.push_back(l);
  nf.trivial = total == 0;
  nf.single_factor = total == 1;
  nf.infinitely_many_ends = total >= 2;
  return nf;
}

QiClassLabel label_of(const FreeProductNormalForm& nf) {
  if (nf.trivial) return QiClassLabel::abelian(0);
  if (nf.single_factor) return nf.one_ended.empty() ? QiClassLabel::two_ended() : nf.one_ended.front();
  if (nf.one_ended.empty()) return QiClassLabel::free_non_abelian();
  QiClassLabel l;
  l.kind = QiClassLabel::Kind::FreeProductNF;
  l.factors = nf.one_ended;
  return l;
}

namespace {

// 0, 1, 2 or 3 (= infinitely many) ends.
int ends_of(const QiClassLabel& l) {
  using K = QiClassLabel::Kind;
  if (l.kind == K::Abelian && l.rank == 0) return 0;
  if (l.kind == K::TwoEnded) return 2;
  if (l.kind == K::FreeNonAbelian || l.kind == K::FreeProductNF) return 3;
  return 1;
}

// Set equality up to a three-valued element comparison.
Tri compare_sets(const std::vector<QiClassLabel>& a, const std::vector<QiClassLabel>& b) {
  bool all_equal = true;
  auto side = [&](const std::vector<QiClassLabel>& xs, const std::vector<QiClassLabel>& ys) {
    for (const auto& x : xs) {
      Tri best = Tri::Different;
      for (const auto& y : ys) {
        Tri t = compare_labels(x, y);
        if (t == Tri::Equal) { best = Tri::Equal; break; }
        if (t == Tri::Unknown) best = Tri::Unknown;
      }
      if (best == Tri::Different) return false;
      if (best == Tri::Unknown) all_equal = false;
    }
    return true;
  };
  if (!side(a, b) || !side(b, a)) return Tri::Different;
  return all_equal ? Tri::Equal : Tri::Unknown;
}

// Multiset matching of product factors.
Tri compare_factor_lists(const std::vector<QiClassLabel>& a, const std::vector<QiClassLabel>& b) {
  if (a.size() != b.size()) return Tri::Different;
  std::vector<std::vector<Tri>> m(a.size(), std::vector<Tri>(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m[i][j] = compare_labels(a[i], b[j]);
  std::vector<int> perm(b.size());
  std::iota(perm.begin(), perm.end(), 0);
  Tri best = Tri::Different;
  do {
    Tri here = Tri::Equal;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (m[i][perm[i]] == Tri::Different) { here = Tri::Different; break; }
      if (m[i][perm[i]] == Tri::Unknown) here = Tri::Unknown;
    }
    if (here == Tri::Equal) return Tri::Equal;
    if (here == Tri::Unknown) best = Tri::Unknown;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

Tri compare_labels(const QiClassLabel& a, const QiClassLabel& b) {
  using K = QiClassLabel::Kind;
  if (a == b) return Tri::Equal;
  int ea = ends_of(a), eb = ends_of(b);
  if (ea != eb) return Tri::Different;
  if (ea == 3) {
    if (a.kind != b.kind) return Tri::Different;  // free group vs free product with one-ended factors
    return compare_sets(a.factors, b.factors);
  }
  if (ea != 1) return Tri::Different;
  if (a.kind == K::UnknownClass || b.kind == K::UnknownClass) {
    const auto& other = a.kind == K::UnknownClass ? b : a;
    // an unknown label comes from a connected non-join non-clique graph
    if (other.kind == K::Abelian || other.kind == K::Product) return Tri::Different;
    return Tri::Unknown;
  }
  if (a.kind == K::Abelian || b.kind == K::Abelian) return Tri::Different;
  if (a.kind == K::FiniteOutBase && b.kind == K::FiniteOutBase) return Tri::Different;
  if (a.kind == K::Product && b.kind == K::Product) {
    if (a.rank != b.rank) return Tri::Different;
    return compare_factor_lists(a.factors, b.factors);
  }
  return Tri::Unknown;  // finite-Out base against a product
}

Tri compare_nf(const FreeProductNormalForm& a, const FreeProductNormalForm& b) {
  if (a.trivial != b.trivial || a.single_factor != b.single_factor ||
      a.infinitely_many_ends != b.infinitely_many_ends)
    return Tri::Different;
  return compare_labels(label_of(a), label_of(b));
}

}  // namespace raagqi
