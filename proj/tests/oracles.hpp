#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <vector>

#include "gpark/bigint.hpp"
#include "gpark/exact_matrix.hpp"
#include "gpark/graph_enumeration.hpp"
#include "gpark/multigraph.hpp"

namespace oracles {

/// Determinant by recursive cofactor expansion along the first row.
/// Exponential; intended for order <= 6.
inline gpark::BigInt cofactor_determinant(const std::vector<std::vector<gpark::BigInt>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  gpark::BigInt det = 0;
  for (int col = 0; col < n; ++col) {
    if (m[0][col] == 0) continue;
    std::vector<std::vector<gpark::BigInt>> minor(n - 1, std::vector<gpark::BigInt>(n - 1));
    for (int i = 1; i < n; ++i) {
      int c = 0;
      for (int j = 0; j < n; ++j) {
        if (j == col) continue;
        minor[i - 1][c++] = m[i][j];
      }
    }
    const gpark::BigInt term = m[0][col] * cofactor_determinant(minor);
    if (col % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

inline gpark::BigInt cofactor_determinant(const gpark::SymmetricIntMatrix& m) {
  const int n = m.order();
  std::vector<std::vector<gpark::BigInt>> grid(n, std::vector<gpark::BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) grid[i][j] = gpark::to_bigint(m(i, j));
  return cofactor_determinant(grid);
}

/// Spanning trees by brute force over labeled-edge subsets of size n:
/// a subset is a spanning tree iff it is acyclic and connects every vertex.
inline unsigned long long spanning_trees_brute(const gpark::Multigraph& g) {
  const auto list = gpark::EdgeList::from_graph(g);
  const int e = static_cast<int>(list.edges.size());
  const int vcount = g.vertex_count();
  const int need = vcount - 1;
  if (need > e) return 0;
  unsigned long long trees = 0;
  std::vector<int> parent(vcount);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    if (__builtin_popcountll(mask) != need) continue;
    for (int i = 0; i < vcount; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (int i = 0; i < e && acyclic; ++i) {
      if (!(mask & (std::uint64_t{1} << i))) continue;
      const int ru = find(list.edges[i].first), rv = find(list.edges[i].second);
      if (ru == rv)
        acyclic = false;
      else
        parent[ru] = rv;
    }
    if (acyclic) ++trees;  // n edges, acyclic => spanning tree
  }
  return trees;
}

}  // namespace oracles
