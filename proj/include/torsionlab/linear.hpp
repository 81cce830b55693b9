#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>

#include "torsionlab/ring.hpp"

namespace torsionlab::linear {

/// Sparse vector keyed by an ordered coordinate type.
template <class Key, class Less = std::less<Key>>
using SparseVector = std::map<Key, Rational, Less>;

/// Linear combination of inserted vectors, by insertion tag.
using Combination = std::map<std::size_t, Rational>;

/// Incremental row-echelon basis over the rationals. Each row remembers, as a
/// combination of tags, which inserted vectors it was built from; untagged
/// inserts contribute nothing to that bookkeeping.
template <class Key, class Less = std::less<Key>>
class Echelon {
 public:
  using Vector = SparseVector<Key, Less>;

  /// Reduces `v` against the basis, accumulating the subtracted tag
  /// combinations into `combo` with negative sign.
  void reduce(Vector& v, Combination& combo) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto row = rows_.find(it->first);
      if (row == rows_.end()) {
        ++it;
        continue;
      }
      Rational c = it->second;
      Key pivot = it->first;
      for (auto& [k, x] : row->second.vec) add_to(v, k, -c * x);
      for (auto& [t, x] : row->second.combo) add_to(combo, t, -c * x);
      it = v.upper_bound(pivot);
    }
  }

  /// Inserts `v` with combination `combo` (use {{tag, 1}} for a fresh input).
  /// Returns the combination that reduces to zero when `v` is dependent.
  std::optional<Combination> insert(Vector v, Combination combo) {
    reduce(v, combo);
    if (v.empty()) return combo;
    Rational lead = v.begin()->second;
    for (auto& [k, x] : v) x /= lead;
    for (auto& [t, x] : combo) x /= lead;
    Key pivot = v.begin()->first;
    rows_.emplace(std::move(pivot), Row{std::move(v), std::move(combo)});
    return std::nullopt;
  }

  /// Whether `v` lies in the span; on success `combo` expresses it through the
  /// tagged inputs.
  bool contains(Vector v, Combination* combo = nullptr) const {
    Combination c;
    reduce(v, c);
    if (!v.empty()) return false;
    if (combo) {
      combo->clear();
      for (auto& [t, x] : c) (*combo)[t] = -x;
    }
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }

 private:
  struct Row {
    Vector vec;
    Combination combo;
  };

  template <class Map, class K>
  static void add_to(Map& m, const K& k, const Rational& x) {
    if (x == 0) return;
    auto [it, inserted] = m.try_emplace(k, x);
    if (!inserted) {
      it->second += x;
      if (it->second == 0) m.erase(it);
    }
  }

  std::map<Key, Row, Less> rows_;
};

inline SparseVector<Monomial, GrlexLess> to_vector(const Element& e) {
  SparseVector<Monomial, GrlexLess> v;
  for (auto& [m, c] : e.terms()) v.emplace(m, c);
  return v;
}

}  // namespace torsionlab::linear
