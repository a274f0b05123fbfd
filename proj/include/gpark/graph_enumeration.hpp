#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gpark/bigint.hpp"
#include "gpark/monomial_ideal.hpp"
#include "gpark/multigraph.hpp"
#include "gpark/skeleton_ideals.hpp"

namespace gpark {

/// Labeled edge list: parallel edges appear as distinct entries, so each of
/// the 2^E edge subsets is a distinct subgraph. This convention is forced by
/// the matrix-tree count on multigraphs and is carried over to the
/// tree/unicyclic census.
struct EdgeList {
  std::vector<std::pair<int, int>> edges;

  static EdgeList from_graph(const Multigraph& g) {
    EdgeList list;
    for (const auto& [u, v, mult] : g.edge_triples())
      for (long long c = 0; c < mult; ++c)
        list.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    return list;
  }
};

/// Census of spanning subgraphs whose components are one tree through the
/// root plus unicyclic components with odd cycles, keyed by the number c of
/// unicyclic components, together with the 4^c-weighted total.
struct TUReport {
  std::map<int, unsigned long long> census;
  BigInt weighted_sum;
};

/// Number of spanning trees (labeled-edge count), via the determinant of the
/// truncated Laplace matrix.
inline BigInt spanning_trees_count(const Multigraph& g) {
  return determinant(laplacian_truncated(g));
}

namespace detail {

/// Union-find over vertices with parity toward the parent; an edge closing a
/// cycle inside a component flags the component non-bipartite exactly when
/// the endpoints have equal parity (odd cycle).
struct ParityDsu {
  std::vector<int> parent;
  std::vector<int> rank_;
  std::vector<std::uint8_t> parity;  // relative to parent
  std::vector<std::uint8_t> odd;     // component contains an odd cycle

  explicit ParityDsu(int n) : parent(n), rank_(n, 0), parity(n, 0), odd(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  std::pair<int, int> find(int x) {
    int p = 0;
    int root = x;
    while (parent[root] != root) {
      p ^= parity[root];
      root = parent[root];
    }
    // Path compression, re-anchoring parities at the root.
    int q = p;
    while (parent[x] != root && parent[x] != x) {
      const int next = parent[x];
      const int next_par = q ^ parity[x];
      parent[x] = root;
      parity[x] = static_cast<std::uint8_t>(q);
      x = next;
      q = next_par;
    }
    return {root, p};
  }

  void add_edge(int u, int v) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      if (pu == pv) odd[ru] = 1;
      return;
    }
    if (rank_[ru] < rank_[rv]) {
      std::swap(ru, rv);
      std::swap(pu, pv);
    }
    parent[rv] = ru;
    parity[rv] = static_cast<std::uint8_t>(pu ^ pv ^ 1);
    odd[ru] = static_cast<std::uint8_t>(odd[ru] | odd[rv]);
    if (rank_[ru] == rank_[rv]) ++rank_[ru];
  }
};

/// Census over one contiguous block of edge-subset masks.
inline std::vector<unsigned long long> tu_census_range(const Multigraph& g, const EdgeList& list,
                                                       std::uint64_t begin, std::uint64_t end) {
  const int vcount = g.vertex_count();
  const int ecount = static_cast<int>(list.edges.size());
  std::vector<unsigned long long> census(ecount + 2, 0);
  std::vector<int> edge_at_root(vcount);
  std::vector<int> verts_at_root(vcount);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    ParityDsu dsu(vcount);
    for (int e = 0; e < ecount; ++e)
      if (mask & (std::uint64_t{1} << e)) dsu.add_edge(list.edges[e].first, list.edges[e].second);
    std::fill(edge_at_root.begin(), edge_at_root.end(), 0);
    std::fill(verts_at_root.begin(), verts_at_root.end(), 0);
    for (int e = 0; e < ecount; ++e)
      if (mask & (std::uint64_t{1} << e)) ++edge_at_root[dsu.find(list.edges[e].first).first];
    for (int v = 0; v < vcount; ++v) ++verts_at_root[dsu.find(v).first];
    const int root_component = dsu.find(0).first;
    bool ok = true;
    int trees = 0, unicyclic = 0;
    for (int v = 0; v < vcount && ok; ++v) {
      if (verts_at_root[v] == 0) continue;  // v is not a representative
      if (edge_at_root[v] == verts_at_root[v] - 1) {
        ++trees;
        if (v != root_component) ok = false;  // a tree component away from the root
      } else if (edge_at_root[v] == verts_at_root[v] && dsu.odd[v]) {
        ++unicyclic;
      } else {
        ok = false;  // even unique cycle, or more than one independent cycle
      }
    }
    if (ok && trees == 1) ++census[unicyclic];
  }
  return census;
}

}  // namespace detail

/// Exhaustive census of the spanning tree/odd-unicyclic subgraphs described
/// above. The 2^E subset space is block-partitioned across `threads` workers
/// whose tallies merge by addition, so the result is deterministic.
inline TUReport tu_enumerate(const Multigraph& g, int max_edges = 18, int threads = 1) {
  const long long ecount = g.edge_count();
  if (ecount > max_edges)
    throw std::length_error("tu_enumerate: " + std::to_string(ecount) +
                            " edges exceed the subset guard " + std::to_string(max_edges) +
                            " (2^E subsets)");
  const EdgeList list = EdgeList::from_graph(g);
  const int e = static_cast<int>(list.edges.size());
  const std::uint64_t total = std::uint64_t{1} << e;
  int workers = threads < 1 ? 1 : threads;
  if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);
  if (workers > 64) workers = 64;

  std::vector<std::vector<unsigned long long>> local(workers);
  if (workers == 1) {
    local[0] = detail::tu_census_range(g, list, 0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = total / workers;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * w;
      const std::uint64_t end = (w + 1 == workers) ? total : begin + chunk;
      pool.emplace_back(
          [&, w, begin, end]() { local[w] = detail::tu_census_range(g, list, begin, end); });
    }
    for (auto& t : pool) t.join();
  }

  TUReport report;
  report.weighted_sum = 0;
  for (const auto& census : local)
    for (int c = 0; c < static_cast<int>(census.size()); ++c)
      if (census[c] > 0) report.census[c] += census[c];
  for (const auto& [c, count] : report.census)
    report.weighted_sum += pow4(static_cast<unsigned long>(c)) * BigInt(static_cast<unsigned long>(count));
  return report;
}

/// The standard monomials of the parking ideal, i.e. the graph's parking
/// functions as exponent vectors.
inline std::vector<Monomial> parking_functions(const Multigraph& g,
                                               unsigned long long max_box = 100000000ULL) {
  return std_enumerate(parking_ideal(g), max_box);
}

}  // namespace gpark
