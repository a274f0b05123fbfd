#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpark/exact_matrix.hpp"
#include "gpark/monomial_ideal.hpp"
#include "gpark/multigraph.hpp"

namespace gpark {

/// Parking-function ideal: one generator per nonempty subset S of the
/// non-root vertices, with exponent on x_i the number of edges from i
/// leaving S. Subsets are walked in Gray-code order so the exit counts are
/// maintained incrementally (one vertex flips per step).
inline MonomialIdeal parking_ideal(const Multigraph& g, int max_n = 20) {
  const int n = g.inner_vertex_count();
  if (n > max_n)
    throw std::length_error("parking_ideal: n = " + std::to_string(n) +
                            " exceeds the subset enumeration guard " + std::to_string(max_n));
  std::vector<long long> deg(n + 1, 0);
  for (int i = 1; i <= n; ++i) deg[i] = g.degree(i);
  std::vector<long long> in_set_sum(n + 1, 0);  // sum of a_{i,j} over j currently in S
  std::uint32_t current = 0;
  std::vector<Monomial> gens;
  for (std::uint32_t k = 1; k < (1u << n); ++k) {
    const std::uint32_t mask = k ^ (k >> 1);
    const std::uint32_t diff = mask ^ current;
    int flipped = 0;
    while (!(diff & (1u << flipped))) ++flipped;
    const int v = flipped + 1;
    const long long sign = (mask & diff) ? 1 : -1;
    for (int i = 1; i <= n; ++i) in_set_sum[i] += sign * g.multiplicity(i, v);
    current = mask;
    std::vector<long long> exps(n, 0);
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) exps[i - 1] = deg[i] - in_set_sum[i];
    gens.push_back(Monomial(std::move(exps)));
  }
  return MonomialIdeal::minimalize(n, std::move(gens));
}

/// k-skeleton subideal: only the generators of subsets with at most k + 1
/// vertices. k = n - 1 gives the full parking ideal.
inline MonomialIdeal skeleton_ideal(const Multigraph& g, int k,
                                    unsigned long long max_subsets = 1ULL << 20) {
  const int n = g.inner_vertex_count();
  if (k < 0 || k > n - 1)
    throw std::invalid_argument("skeleton_ideal: k = " + std::to_string(k) +
                                " out of range [0, " + std::to_string(n - 1) + "]");
  unsigned long long subsets = 0, choose = 1;
  for (int s = 1; s <= k + 1; ++s) {
    choose = choose * static_cast<unsigned long long>(n - s + 1) / s;
    subsets += choose;
    if (subsets > max_subsets)
      throw std::length_error("skeleton_ideal: subset count exceeds the guard " +
                              std::to_string(max_subsets));
  }
  std::vector<Monomial> gens;
  std::vector<int> subset;
  auto emit = [&]() {
    std::vector<long long> exps(n, 0);
    for (int i : subset) {
      long long d = g.degree(i);
      for (int j : subset) d -= g.multiplicity(i, j);
      exps[i - 1] = d;
    }
    gens.push_back(Monomial(std::move(exps)));
  };
  auto rec = [&](auto&& self, int next) -> void {
    if (!subset.empty()) emit();
    if (static_cast<int>(subset.size()) == k + 1) return;
    for (int v = next; v <= n; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  rec(rec, 1);
  return MonomialIdeal::minimalize(n, std::move(gens));
}

/// Ideal attached to a dominant symmetric matrix H: pure powers x_t^{h_tt}
/// and, for each pair i < j, the generator
/// x_i^{h_ii - h_ij} * x_j^{h_jj - h_ij}. With H the truncated signless
/// Laplace matrix of a graph this is exactly the 1-skeleton ideal.
inline MonomialIdeal matrix_ideal(const GnMatrix& h) {
  const int n = h.order();
  std::vector<Monomial> gens;
  for (int t = 0; t < n; ++t) gens.push_back(Monomial::pure_power(n, t, h(t, t)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<long long> e(n, 0);
      e[i] = h(i, i) - h(i, j);
      e[j] = h(j, j) - h(i, j);
      gens.push_back(Monomial(std::move(e)));
    }
  return MonomialIdeal::minimalize(n, std::move(gens));
}

}  // namespace gpark
