#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpark/exact_matrix.hpp"

namespace gpark {

/// Rooted loopless undirected multigraph on the vertex set {0, 1, ..., n}.
/// Vertex 0 is the root. Parallel edges are stored as multiplicities; they
/// only become individually labeled objects in the subgraph enumerators.
/// Instances are immutable after construction and safe to share across
/// threads; every transformation returns a new graph.
class Multigraph {
 public:
  /// Edgeless graph with n non-root vertices, n >= 1.
  explicit Multigraph(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("multigraph needs at least one non-root vertex");
    adj_.assign(n + 1, std::vector<long long>(n + 1, 0));
  }

  /// Builds from (u, v, multiplicity) triples; duplicate pairs accumulate.
  /// Rejects loops, out-of-range vertices and negative multiplicities.
  static Multigraph from_edges(int n, const std::vector<std::array<long long, 3>>& triples) {
    Multigraph g(n);
    for (const auto& t : triples) {
      const long long u = t[0], v = t[1], m = t[2];
      if (u < 0 || u > n || v < 0 || v > n)
        throw std::invalid_argument("edge endpoint out of range: [" + std::to_string(u) + ", " +
                                    std::to_string(v) + "]");
      if (u == v)
        throw std::invalid_argument("loops are not allowed: [" + std::to_string(u) + ", " +
                                    std::to_string(v) + "]");
      if (m < 0)
        throw std::invalid_argument("negative edge multiplicity: " + std::to_string(m));
      g.adj_[u][v] += m;
      g.adj_[v][u] += m;
    }
    return g;
  }

  /// Validates an explicit adjacency matrix (symmetric, zero diagonal,
  /// nonnegative, square of order n + 1).
  static Multigraph from_adjacency(std::vector<std::vector<long long>> adj) {
    const int vcount = static_cast<int>(adj.size());
    if (vcount < 2) throw std::invalid_argument("adjacency matrix must have order >= 2");
    for (int i = 0; i < vcount; ++i) {
      if (static_cast<int>(adj[i].size()) != vcount)
        throw std::invalid_argument("adjacency matrix is not square");
      if (adj[i][i] != 0) throw std::invalid_argument("adjacency diagonal must be zero (loopless)");
      for (int j = 0; j < vcount; ++j) {
        if (adj[i][j] < 0) throw std::invalid_argument("adjacency entries must be nonnegative");
        if (adj[i][j] != adj[j][i])
          throw std::invalid_argument("adjacency matrix is not symmetric");
      }
    }
    Multigraph g(vcount - 1);
    g.adj_ = std::move(adj);
    return g;
  }

  int inner_vertex_count() const { return n_; }
  int vertex_count() const { return n_ + 1; }

  long long multiplicity(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u][v];
  }

  /// Number of edge endpoints at v, counted with multiplicity.
  long long degree(int v) const {
    check_vertex(v);
    return std::accumulate(adj_[v].begin(), adj_[v].end(), 0LL);
  }

  /// Total number of edges, counted with multiplicity.
  long long edge_count() const {
    long long total = 0;
    for (int u = 0; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v) total += adj_[u][v];
    return total;
  }

  /// Edges as (u, v, multiplicity) with u < v and multiplicity > 0, ordered
  /// lexicographically.
  std::vector<std::array<long long, 3>> edge_triples() const {
    std::vector<std::array<long long, 3>> out;
    for (int u = 0; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v)
        if (adj_[u][v] > 0) out.push_back({u, v, adj_[u][v]});
    return out;
  }

  bool operator==(const Multigraph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }

  int n_;
  std::vector<std::vector<long long>> adj_;
};

/// Complete multigraph: every rooted pair {0, i} carries `root_mult` edges
/// and every inner pair {i, j} carries `inner_mult` edges.
inline Multigraph complete_multigraph(int n, long long root_mult, long long inner_mult) {
  if (n < 1) throw std::invalid_argument("complete_multigraph: n must be >= 1");
  if (root_mult < 0 || inner_mult < 0)
    throw std::invalid_argument("complete_multigraph: multiplicities must be nonnegative");
  std::vector<std::array<long long, 3>> triples;
  for (int i = 1; i <= n; ++i) triples.push_back({0, i, root_mult});
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) triples.push_back({static_cast<long long>(i), j, inner_mult});
  return Multigraph::from_edges(n, triples);
}

/// Removes `removals[i]` copies of the rooted edge {0, i}; everything else
/// is untouched. Rejects removals that exceed the present multiplicity.
inline Multigraph delete_rooted_edges(const Multigraph& g,
                                      const std::map<int, long long>& removals) {
  const int n = g.inner_vertex_count();
  std::vector<std::vector<long long>> adj(n + 1, std::vector<long long>(n + 1, 0));
  for (int u = 0; u <= n; ++u)
    for (int v = 0; v <= n; ++v) adj[u][v] = g.multiplicity(u, v);
  for (const auto& [v, count] : removals) {
    if (v < 1 || v > n)
      throw std::invalid_argument("delete_rooted_edges: vertex " + std::to_string(v) +
                                  " out of range");
    if (count < 0) throw std::invalid_argument("delete_rooted_edges: negative removal count");
    if (count > adj[0][v])
      throw std::invalid_argument("delete_rooted_edges: removing " + std::to_string(count) +
                                  " copies of {0," + std::to_string(v) + "} but only " +
                                  std::to_string(adj[0][v]) + " present");
    adj[0][v] -= count;
    adj[v][0] -= count;
  }
  return Multigraph::from_adjacency(std::move(adj));
}

/// Join product: keeps both graphs' rooted and inner edges (the second
/// graph's vertices are shifted past the first), and joins every inner
/// vertex of the first to every inner vertex of the second with exactly d
/// parallel edges.
inline Multigraph d_fold_product(const Multigraph& g1, const Multigraph& g2, long long d) {
  if (d < 0) throw std::invalid_argument("d_fold_product: d must be nonnegative");
  const int n = g1.inner_vertex_count();
  const int m = g2.inner_vertex_count();
  std::vector<std::array<long long, 3>> triples;
  for (const auto& [u, v, mult] : g1.edge_triples()) triples.push_back({u, v, mult});
  for (const auto& [u, v, mult] : g2.edge_triples()) {
    const long long su = (u == 0) ? 0 : u + n;
    const long long sv = (v == 0) ? 0 : v + n;
    triples.push_back({su, sv, mult});
  }
  for (int i = 1; i <= n; ++i)
    for (int j = n + 1; j <= n + m; ++j)
      triples.push_back({static_cast<long long>(i), static_cast<long long>(j), d});
  return Multigraph::from_edges(n + m, triples);
}

/// Number of edges incident to i whose other endpoint lies outside `subset`.
/// `subset` must be a nonempty set of non-root vertices containing i.
inline long long exit_degree(const Multigraph& g, const std::vector<int>& subset, int i) {
  const int n = g.inner_vertex_count();
  if (subset.empty()) throw std::invalid_argument("exit_degree: subset must be nonempty");
  std::vector<char> in_set(n + 1, 0);
  for (int v : subset) {
    if (v < 1 || v > n)
      throw std::invalid_argument("exit_degree: subset member " + std::to_string(v) +
                                  " is not a non-root vertex");
    in_set[v] = 1;
  }
  if (i < 1 || i > n || !in_set[i])
    throw std::invalid_argument("exit_degree: vertex " + std::to_string(i) +
                                " is not a member of the subset");
  long long out = 0;
  for (int j = 0; j <= n; ++j)
    if (!in_set[j]) out += g.multiplicity(i, j);
  return out;
}

/// Truncated signless Laplace matrix: diagonal d_i, off-diagonal a_{i,j},
/// root row and column dropped.
inline SymmetricIntMatrix signless_laplacian_truncated(const Multigraph& g) {
  const int n = g.inner_vertex_count();
  SymmetricIntMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.set(i - 1, i - 1, g.degree(i));
    for (int j = i + 1; j <= n; ++j) m.set(i - 1, j - 1, g.multiplicity(i, j));
  }
  return m;
}

/// Truncated Laplace matrix: diagonal d_i, off-diagonal -a_{i,j}.
inline SymmetricIntMatrix laplacian_truncated(const Multigraph& g) {
  const int n = g.inner_vertex_count();
  SymmetricIntMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    m.set(i - 1, i - 1, g.degree(i));
    for (int j = i + 1; j <= n; ++j) m.set(i - 1, j - 1, -g.multiplicity(i, j));
  }
  return m;
}

/// One essentially connected component: the induced subgraph on a connected
/// component of the root-deleted graph, with the root re-attached. Vertices
/// are relabeled 1..k preserving their original ascending order;
/// original_labels[i-1] is the original name of the component's vertex i.
struct EssentialComponent {
  Multigraph graph;
  std::vector<int> original_labels;
};

/// Splits along the connected components of the induced subgraph on the
/// non-root vertices. Components are ordered by smallest original vertex.
inline std::vector<EssentialComponent> essential_components(const Multigraph& g) {
  const int n = g.inner_vertex_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (g.multiplicity(u, v) > 0) parent[find(u)] = find(v);

  std::map<int, std::vector<int>> members;  // keyed by smallest member via ordered walk
  for (int v = 1; v <= n; ++v) members[find(v)].push_back(v);
  std::vector<std::vector<int>> groups;
  for (auto& [root, verts] : members) groups.push_back(std::move(verts));
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<EssentialComponent> out;
  for (const auto& verts : groups) {
    const int k = static_cast<int>(verts.size());
    std::vector<std::array<long long, 3>> triples;
    for (int p = 0; p < k; ++p) {
      if (g.multiplicity(0, verts[p]) > 0)
        triples.push_back({0, p + 1, g.multiplicity(0, verts[p])});
      for (int q = p + 1; q < k; ++q)
        if (g.multiplicity(verts[p], verts[q]) > 0)
          triples.push_back({static_cast<long long>(p + 1), q + 1,
                             g.multiplicity(verts[p], verts[q])});
    }
    out.push_back({Multigraph::from_edges(k, triples), verts});
  }
  return out;
}

}  // namespace gpark
