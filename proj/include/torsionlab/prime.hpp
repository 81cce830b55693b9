#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <vector>

#include "torsionlab/monomial.hpp"

namespace torsionlab {

/// A prime generated by distinct variables. The empty set is the zero prime,
/// meaningful only in a presentation without rules.
struct MonomialPrime {
  std::vector<VarIndex> vars;  // sorted, distinct

  MonomialPrime() = default;
  explicit MonomialPrime(std::vector<VarIndex> v) : vars(std::move(v)) {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  }

  bool contains(VarIndex v) const { return std::binary_search(vars.begin(), vars.end(), v); }

  /// True iff the support of `m` meets this prime, i.e. m lies in it.
  bool contains(const Monomial& m) const {
    return std::any_of(m.factors().begin(), m.factors().end(),
                       [&](const Monomial::Factor& f) { return contains(f.first); });
  }

  bool subset_of(const MonomialPrime& o) const {
    return std::includes(o.vars.begin(), o.vars.end(), vars.begin(), vars.end());
  }

  std::string to_string(const std::string& var_name = "X") const {
    std::string s = "prime(";
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (k) s += ", ";
      s += var_name + std::to_string(vars[k]);
    }
    return s + ")";
  }

  friend auto operator<=>(const MonomialPrime&, const MonomialPrime&) = default;
  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
};

using PrimeSet = std::set<MonomialPrime>;

inline std::string to_string(const PrimeSet& s, const std::string& var_name = "X") {
  std::string out = "{";
  bool first = true;
  for (auto& p : s) {
    if (!first) out += ", ";
    first = false;
    out += p.to_string(var_name);
  }
  return out + "}";
}

inline PrimeSet set_union(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet r = a;
  r.insert(b.begin(), b.end());
  return r;
}

inline bool is_subset(const PrimeSet& a, const PrimeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace torsionlab
