#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsionlab/error.hpp"

namespace torsionlab {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// A power product over indexed variables, stored sparsely as (index, exponent)
/// pairs sorted by index. Absent indices have exponent zero; the empty product
/// is the unit monomial.
class Monomial {
 public:
  using Factor = std::pair<VarIndex, Exponent>;

  Monomial() = default;

  Monomial(std::initializer_list<Factor> factors) {
    for (auto [v, e] : factors) multiply_var(v, e);
  }

  static Monomial var(VarIndex v, Exponent e = 1) {
    Monomial m;
    m.multiply_var(v, e);
    return m;
  }

  /// Builds from a dense exponent vector (index i holds the exponent of X_i).
  static Monomial from_dense(const std::vector<Exponent>& exps) {
    Monomial m;
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] != 0) m.factors_.emplace_back(static_cast<VarIndex>(i), exps[i]);
    return m;
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }

  std::uint64_t degree() const noexcept {
    std::uint64_t d = 0;
    for (auto& f : factors_) d += f.second;
    return d;
  }

  Exponent exponent(VarIndex v) const noexcept {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, VarIndex x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  /// Largest variable index occurring, if any.
  std::optional<VarIndex> max_var() const noexcept {
    if (factors_.empty()) return std::nullopt;
    return factors_.back().first;
  }

  std::vector<VarIndex> support() const {
    std::vector<VarIndex> s;
    s.reserve(factors_.size());
    for (auto& f : factors_) s.push_back(f.first);
    return s;
  }

  bool is_squarefree() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](const Factor& f) { return f.second == 1; });
  }

  void multiply_var(VarIndex v, Exponent e) {
    if (e == 0) return;
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, VarIndex x) { return f.first < x; });
    if (it != factors_.end() && it->first == v)
      it->second += e;
    else
      factors_.insert(it, {v, e});
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        r.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, i->second + j->second);
        ++i, ++j;
      }
    }
    return r;
  }

  Monomial pow(Exponent n) const {
    Monomial r;
    if (n == 0) return r;
    r.factors_ = factors_;
    for (auto& f : r.factors_) f.second *= n;
    return r;
  }

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept {
    auto j = other.factors_.begin();
    for (auto& f : factors_) {
      while (j != other.factors_.end() && j->first < f.first) ++j;
      if (j == other.factors_.end() || j->first != f.first || j->second < f.second) return false;
    }
    return true;
  }

  /// Exact quotient; requires `d.divides(*this)`.
  Monomial divided_by(const Monomial& d) const {
    Monomial r;
    auto j = d.factors_.begin();
    for (auto& f : factors_) {
      Exponent e = f.second;
      if (j != d.factors_.end() && j->first == f.first) {
        e -= j->second;
        ++j;
      }
      if (e != 0) r.factors_.emplace_back(f.first, e);
    }
    return r;
  }

  /// The quotient of this monomial by gcd(this, d); the standard generator of
  /// the monomial colon (this : d).
  Monomial colon(const Monomial& d) const {
    Monomial r;
    auto j = d.factors_.begin();
    for (auto& f : factors_) {
      while (j != d.factors_.end() && j->first < f.first) ++j;
      Exponent e = f.second;
      if (j != d.factors_.end() && j->first == f.first) e = e > j->second ? e - j->second : 0;
      if (e != 0) r.factors_.emplace_back(f.first, e);
    }
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors_.begin(), j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        r.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, std::max(i->second, j->second));
        ++i, ++j;
      }
    }
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto j = b.factors_.begin();
    for (auto& f : a.factors_) {
      while (j != b.factors_.end() && j->first < f.first) ++j;
      if (j != b.factors_.end() && j->first == f.first)
        r.factors_.emplace_back(f.first, std::min(f.second, j->second));
    }
    return r;
  }

  /// Product of the distinct variables occurring.
  Monomial radical() const {
    Monomial r;
    r.factors_.reserve(factors_.size());
    for (auto& f : factors_) r.factors_.emplace_back(f.first, 1);
    return r;
  }

  bool coprime_with(const Monomial& other) const noexcept { return gcd(*this, other).is_one(); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Printed as `X0*X1^2`, with `1` for the unit.
  std::string to_string(const std::string& var_name = "X") const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t k = 0; k < factors_.size(); ++k) {
      if (k) s += '*';
      s += var_name + std::to_string(factors_[k].first);
      if (factors_[k].second != 1) s += '^' + std::to_string(factors_[k].second);
    }
    return s;
  }

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order by variable index: lower degree first; within a
/// degree, the monomials compare as their sorted index sequences
/// (X0^2 < X0*X1 < X1^2).
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t n = std::min(fa.size(), fb.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
      if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
    }
    return fa.size() < fb.size();
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto [v, e] : m.factors()) {
      h ^= (static_cast<std::size_t>(v) << 20) ^ e;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// Sorts, deduplicates and removes every monomial divisible by another one.
/// The result is the minimal generating set of the monomial ideal generated by
/// the input, in grlex order.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), GrlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (!gens.empty() && gens.front().is_one()) return {Monomial{}};
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (auto& g : gens) {
    auto deg = g.degree();
    bool redundant = false;
    for (auto& k : kept) {
      if (k.degree() >= deg) break;
      if (k.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

/// All monomials in variables 0..num_vars-1 of total degree at most `max_degree`,
/// in grlex order.
inline std::vector<Monomial> monomials_up_to_degree(std::size_t num_vars, std::size_t max_degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> exps(num_vars, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t var, std::size_t left) {
    if (var == num_vars) {
      out.push_back(Monomial::from_dense(exps));
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      exps[var] = static_cast<Exponent>(e);
      rec(var + 1, left - e);
    }
    exps[var] = 0;
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace torsionlab
