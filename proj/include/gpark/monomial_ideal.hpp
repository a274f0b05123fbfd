#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpark/bigint.hpp"

namespace gpark {

/// Monomial as an exponent vector over x_1..x_n (variable i is index i-1).
class Monomial {
 public:
  explicit Monomial(std::vector<long long> exponents) : e_(std::move(exponents)) {
    for (long long v : e_)
      if (v < 0) throw std::invalid_argument("monomial exponents must be nonnegative");
  }

  static Monomial one(int nvars) { return Monomial(std::vector<long long>(nvars, 0)); }

  static Monomial pure_power(int nvars, int var, long long exp) {
    std::vector<long long> e(nvars, 0);
    if (var < 0 || var >= nvars) throw std::out_of_range("pure_power: variable out of range");
    e[var] = exp;
    return Monomial(std::move(e));
  }

  int nvars() const { return static_cast<int>(e_.size()); }

  long long exponent(int var) const { return e_.at(var); }

  const std::vector<long long>& exponents() const { return e_; }

  long long total_degree() const {
    long long d = 0;
    for (long long v : e_) d += v;
    return d;
  }

  bool is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](long long v) { return v == 0; });
  }

  /// Index of the single variable with positive exponent, or -1 when the
  /// support has size != 1.
  int pure_power_var() const {
    int var = -1;
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > 0) {
        if (var >= 0) return -1;
        var = i;
      }
    return var;
  }

  int support_size() const {
    return static_cast<int>(std::count_if(e_.begin(), e_.end(), [](long long v) { return v > 0; }));
  }

  bool divides(const Monomial& m) const {
    if (m.nvars() != nvars()) throw std::invalid_argument("divides: variable count mismatch");
    for (int i = 0; i < nvars(); ++i)
      if (e_[i] > m.e_[i]) return false;
    return true;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::vector<long long> e_;
};

/// Graded lexicographic order: first by total degree, then lexicographically
/// on the exponent vector.
inline bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const long long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

/// Monomial ideal held as its unique minimal generating set (an antichain
/// under divisibility, sorted in graded lex order). If the monomial 1 is
/// generated, the generator set collapses to {1} (the unit ideal).
class MonomialIdeal {
 public:
  /// Reduces an arbitrary generating set to the minimal one.
  static MonomialIdeal minimalize(int nvars, std::vector<Monomial> gens) {
    for (const Monomial& m : gens)
      if (m.nvars() != nvars)
        throw std::invalid_argument("minimalize: generator has " + std::to_string(m.nvars()) +
                                    " variables, expected " + std::to_string(nvars));
    for (const Monomial& m : gens)
      if (m.is_one()) return unit(nvars);
    std::sort(gens.begin(), gens.end(), graded_lex_less);
    std::vector<Monomial> kept;
    for (const Monomial& m : gens) {
      bool redundant = false;
      for (const Monomial& k : kept)
        if (k.divides(m)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(m);
    }
    return MonomialIdeal(nvars, std::move(kept));
  }

  static MonomialIdeal zero(int nvars) { return MonomialIdeal(nvars, {}); }

  static MonomialIdeal unit(int nvars) { return MonomialIdeal(nvars, {Monomial::one(nvars)}); }

  int nvars() const { return nvars_; }

  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }

  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  /// Ideal membership: some minimal generator divides m.
  bool contains(const Monomial& m) const {
    if (m.nvars() != nvars_) throw std::invalid_argument("contains: variable count mismatch");
    for (const Monomial& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  bool operator==(const MonomialIdeal&) const = default;

 private:
  MonomialIdeal(int nvars, std::vector<Monomial> gens) : nvars_(nvars), gens_(std::move(gens)) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
  }

  int nvars_;
  std::vector<Monomial> gens_;
};

/// Colon by the pure power x_var^r: every generator's exponent of x_var
/// drops by r (floored at 0). r = 0 is the identity.
inline MonomialIdeal colon_pure_power(const MonomialIdeal& ideal, int var, long long r) {
  if (var < 0 || var >= ideal.nvars())
    throw std::out_of_range("colon_pure_power: variable out of range");
  if (r < 0) throw std::invalid_argument("colon_pure_power: negative exponent");
  if (r == 0) return ideal;
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<long long> e = g.exponents();
    e[var] = std::max(e[var] - r, 0LL);
    gens.push_back(Monomial(std::move(e)));
  }
  return MonomialIdeal::minimalize(ideal.nvars(), std::move(gens));
}

/// Adds the generator x_var^r. r = 0 adds the monomial 1, i.e. yields the
/// unit ideal.
inline MonomialIdeal add_pure_power(const MonomialIdeal& ideal, int var, long long r) {
  if (var < 0 || var >= ideal.nvars())
    throw std::out_of_range("add_pure_power: variable out of range");
  if (r < 0) throw std::invalid_argument("add_pure_power: negative exponent");
  std::vector<Monomial> gens = ideal.generators();
  gens.push_back(Monomial::pure_power(ideal.nvars(), var, r));
  return MonomialIdeal::minimalize(ideal.nvars(), std::move(gens));
}

/// True iff the quotient is finite-dimensional: every variable has a pure
/// power among the generators (the unit ideal qualifies trivially).
inline bool is_artinian(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return true;
  std::vector<char> covered(ideal.nvars(), 0);
  for (const Monomial& g : ideal.generators()) {
    const int v = g.pure_power_var();
    if (v >= 0) covered[v] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace detail {

/// Per-variable box bound: the (unique minimal) pure-power exponent.
inline std::vector<long long> pure_power_bounds(const MonomialIdeal& ideal) {
  std::vector<long long> bounds(ideal.nvars(), -1);
  for (const Monomial& g : ideal.generators()) {
    const int v = g.pure_power_var();
    if (v >= 0 && (bounds[v] < 0 || g.exponent(v) < bounds[v])) bounds[v] = g.exponent(v);
  }
  return bounds;
}

/// Walks the exponent box beneath the pure-power bounds in lexicographic
/// order, pruning a whole subtree as soon as a generator whose support is
/// already fully assigned divides the prefix. Calls visit(a) on every
/// standard exponent vector.
template <typename Visit>
void scan_standard_box(const MonomialIdeal& ideal, unsigned long long max_box, Visit&& visit) {
  if (!is_artinian(ideal))
    throw std::invalid_argument("standard monomials: ideal is not Artinian, the count is infinite");
  const int n = ideal.nvars();
  if (ideal.is_unit()) return;
  const std::vector<long long> bounds = pure_power_bounds(ideal);
  unsigned long long volume = 1;
  for (long long b : bounds) {
    if (b == 0) return;  // x_i^0 = 1 generated; cannot happen after minimalize
    if (volume > max_box / static_cast<unsigned long long>(b))
      throw std::length_error("standard monomials: bounding box exceeds the volume guard (" +
                              std::to_string(max_box) + ")");
    volume *= static_cast<unsigned long long>(b);
  }
  // Generators bucketed by their largest supported variable; each is checked
  // exactly once, at the depth where its support becomes fully assigned.
  std::vector<std::vector<const Monomial*>> by_last_var(n);
  for (const Monomial& g : ideal.generators()) {
    int last = -1;
    for (int i = 0; i < n; ++i)
      if (g.exponent(i) > 0) last = i;
    if (last >= 0) by_last_var[last].push_back(&g);
  }
  std::vector<long long> a(n, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      visit(a);
      return;
    }
    for (a[depth] = 0; a[depth] < bounds[depth]; ++a[depth]) {
      bool in_ideal = false;
      for (const Monomial* g : by_last_var[depth]) {
        bool divides = true;
        for (int i = 0; i <= depth; ++i)
          if (g->exponent(i) > a[i]) {
            divides = false;
            break;
          }
        if (divides) {
          in_ideal = true;
          break;
        }
      }
      if (!in_ideal) self(self, depth + 1);
    }
    a[depth] = 0;
  };
  rec(rec, 0);
}

}  // namespace detail

/// Number of standard monomials (monomials outside the ideal) by exhaustive
/// scan of the exponent box. Requires an Artinian ideal and a box volume
/// within the guard.
inline BigInt std_count_enum(const MonomialIdeal& ideal,
                             unsigned long long max_box = 100000000ULL) {
  unsigned long long count = 0;
  detail::scan_standard_box(ideal, max_box, [&](const std::vector<long long>&) { ++count; });
  return BigInt(static_cast<unsigned long>(count));
}

/// All standard monomials, sorted in graded lex order.
inline std::vector<Monomial> std_enumerate(const MonomialIdeal& ideal,
                                           unsigned long long max_box = 100000000ULL) {
  std::vector<Monomial> out;
  detail::scan_standard_box(ideal, max_box,
                            [&](const std::vector<long long>& a) { out.push_back(Monomial(a)); });
  std::sort(out.begin(), out.end(), graded_lex_less);
  return out;
}

namespace detail {

inline std::vector<long long> ideal_key(const MonomialIdeal& ideal) {
  std::vector<long long> key;
  key.push_back(ideal.nvars());
  for (const Monomial& g : ideal.generators())
    key.insert(key.end(), g.exponents().begin(), g.exponents().end());
  return key;
}

struct RecursionCache {
  std::map<std::vector<long long>, BigInt> table;
  // Insertion stops past the cap; lookups keep working on what is there.
  static constexpr std::size_t cap = 1u << 20;
};

inline BigInt std_count_rec(const MonomialIdeal& ideal, RecursionCache& cache) {
  if (ideal.is_unit()) return 0;
  const int n = ideal.nvars();
  const std::vector<long long> bounds = pure_power_bounds(ideal);
  // Largest exponent of each variable over the mixed (support >= 2) generators.
  std::vector<long long> mixed_max(n, 0);
  bool any_mixed = false;
  for (const Monomial& g : ideal.generators()) {
    if (g.support_size() < 2) continue;
    any_mixed = true;
    for (int i = 0; i < n; ++i) mixed_max[i] = std::max(mixed_max[i], g.exponent(i));
  }
  if (!any_mixed) {
    BigInt product = 1;
    for (int i = 0; i < n; ++i) {
      if (bounds[i] < 0)
        throw std::logic_error("std_count_recursive: variable without a pure power");
      product *= to_bigint(bounds[i]);
    }
    return product;
  }
  const std::vector<long long> key = ideal_key(ideal);
  if (auto it = cache.table.find(key); it != cache.table.end()) return it->second;

  // Pivot: the variable whose pure-power bound clears the mixed generators
  // by the widest margin; the split strips exactly that margin, so both
  // branches strictly shrink the bound sum.
  int pivot = -1;
  long long split = 1;
  for (int i = 0; i < n; ++i) {
    if (mixed_max[i] == 0) continue;
    const long long gap = bounds[i] - mixed_max[i];
    if (pivot < 0 || gap > split) {
      pivot = i;
      split = gap;
    }
  }
  if (pivot < 0 || split < 1) {  // unreachable after minimalize; stay safe
    pivot = 0;
    split = 1;
  }
  BigInt result = std_count_rec(colon_pure_power(ideal, pivot, split), cache) +
                  std_count_rec(add_pure_power(ideal, pivot, split), cache);
  if (cache.table.size() < RecursionCache::cap) cache.table.emplace(key, result);
  return result;
}

}  // namespace detail

/// Number of standard monomials by recursive colon/sum splitting on pure
/// powers: dim(R/I) = dim(R/(I : x_i^r)) + dim(R/<I, x_i^r>). Base cases:
/// the unit ideal is 0-dimensional and an ideal of pure powers has the
/// product of its exponents. Results are memoized per call.
inline BigInt std_count_recursive(const MonomialIdeal& ideal) {
  if (!is_artinian(ideal))
    throw std::invalid_argument("std_count_recursive: ideal is not Artinian, the count is infinite");
  detail::RecursionCache cache;
  return detail::std_count_rec(ideal, cache);
}

/// Preferred counting route (the recursive splitter; the box scan is its
/// independent cross-check).
inline BigInt std_count(const MonomialIdeal& ideal) { return std_count_recursive(ideal); }

}  // namespace gpark
