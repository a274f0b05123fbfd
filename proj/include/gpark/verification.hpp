#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gpark/bigint.hpp"
#include "gpark/exact_matrix.hpp"
#include "gpark/graph_enumeration.hpp"
#include "gpark/monomial_ideal.hpp"
#include "gpark/multigraph.hpp"
#include "gpark/skeleton_ideals.hpp"

namespace gpark {

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace detail

/// Sorted-degree/adjacency fingerprint. Heuristic only: equal fingerprints
/// are treated as the same graph by the scanners, which can conflate
/// non-isomorphic graphs; it is never used to certify anything.
inline std::string degree_fingerprint(const Multigraph& g) {
  const int n = g.inner_vertex_count();
  std::vector<std::string> rows;
  for (int i = 1; i <= n; ++i) {
    std::vector<long long> inner;
    for (int j = 1; j <= n; ++j)
      if (j != i) inner.push_back(g.multiplicity(i, j));
    std::sort(inner.begin(), inner.end());
    std::ostringstream os;
    os << g.multiplicity(0, i) << '|';
    for (long long m : inner) os << m << ',';
    rows.push_back(os.str());
  }
  std::sort(rows.begin(), rows.end());
  std::ostringstream os;
  os << 'n' << n << ';';
  for (const auto& r : rows) os << r << ';';
  return os.str();
}

/// Stable hash of the exact labeled edge multiset.
inline std::uint64_t edge_hash(const Multigraph& g) {
  std::ostringstream os;
  os << g.inner_vertex_count() << ':';
  for (const auto& [u, v, m] : g.edge_triples()) os << u << ',' << v << ',' << m << ';';
  return detail::fnv1a64(os.str());
}

/// Standard-monomial count of the 1-skeleton ideal (for a single inner
/// vertex the 0-skeleton is the whole parking ideal already).
inline BigInt one_skeleton_count(const Multigraph& g) {
  const int n = g.inner_vertex_count();
  return std_count(skeleton_ideal(g, std::min(1, n - 1)));
}

struct ComponentVerdict {
  std::vector<int> vertices;  // original labels
  BigInt std_count;
  BigInt det;
};

/// Verdict of the central equality: the 1-skeleton standard-monomial count
/// against the determinant of the truncated signless Laplace matrix, in
/// total and per essentially connected component. The count can never fall
/// below the determinant; `equal` marks coincidence.
struct EqualityVerdict {
  BigInt std_count;
  BigInt det_q;
  bool equal = false;
  std::vector<ComponentVerdict> per_component;
};

inline EqualityVerdict check_equality(const Multigraph& g) {
  EqualityVerdict v;
  v.std_count = one_skeleton_count(g);
  v.det_q = determinant(signless_laplacian_truncated(g));
  v.equal = (v.std_count == v.det_q);
  for (const EssentialComponent& comp : essential_components(g)) {
    ComponentVerdict cv;
    cv.vertices = comp.original_labels;
    cv.std_count = one_skeleton_count(comp.graph);
    cv.det = determinant(signless_laplacian_truncated(comp.graph));
    v.per_component.push_back(std::move(cv));
  }
  return v;
}

struct ClassifyVerdict {
  bool matches = false;
  std::string witness;  // first failing inner pair, when matches is false
};

/// Classification of subgraphs of a complete multigraph with unit inner
/// multiplicities: the verdict is true iff every essentially connected
/// component induces a complete simple graph on its non-root vertices (its
/// rooted edges may be arbitrary, since rooted deletions are free). Inputs
/// with an inner multiplicity >= 2 are outside this family and rejected.
inline ClassifyVerdict classify_subgraph_of_Ka1(const Multigraph& g) {
  const int n = g.inner_vertex_count();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (g.multiplicity(i, j) > 1)
        throw std::invalid_argument(
            "classify_subgraph_of_Ka1: inner pair {" + std::to_string(i) + "," +
            std::to_string(j) + "} has multiplicity " + std::to_string(g.multiplicity(i, j)) +
            "; not a subgraph of a complete multigraph with unit inner multiplicities");
  for (const EssentialComponent& comp : essential_components(g)) {
    const auto& verts = comp.original_labels;
    for (std::size_t p = 0; p < verts.size(); ++p)
      for (std::size_t q = p + 1; q < verts.size(); ++q)
        if (g.multiplicity(verts[p], verts[q]) == 0) {
          std::ostringstream os;
          os << "inner pair {" << verts[p] << "," << verts[q] << "} missing in component {";
          for (std::size_t t = 0; t < verts.size(); ++t) os << (t ? "," : "") << verts[t];
          os << "}";
          return {false, os.str()};
        }
  }
  return {true, ""};
}

/// Equality check for the uniform-off-diagonal matrix family.
inline bool verify_uniform_offdiag_equality(const std::vector<long long>& diag, long long b) {
  const GnMatrix h = build_uniform_offdiag(diag, b);
  return std_count(matrix_ideal(h)) == determinant(h.matrix());
}

/// Equality check for the block-join matrix family.
inline bool verify_block_join_equality(const std::vector<JoinBlock>& blocks,
                                       const std::vector<long long>& cross) {
  const GnMatrix h = build_block_join(blocks, cross);
  return std_count(matrix_ideal(h)) == determinant(h.matrix());
}

/// Clique-first presentation of the truncated signless Laplace matrix of an
/// essentially connected graph: a maximal clique of inner vertices with a
/// uniform pairwise multiplicity b is found greedily (largest multiplicity
/// pair first, ties to the smallest labels) and moved to the front.
struct NormalForm {
  std::vector<int> vertex_order;  // original inner labels, clique first
  int clique_size = 0;
  long long clique_multiplicity = 0;  // b
  SymmetricIntMatrix matrix;
};

/// Nullopt when there are fewer than two inner vertices or no inner edge.
inline std::optional<NormalForm> normal_form(const Multigraph& g) {
  const int n = g.inner_vertex_count();
  if (n < 2) return std::nullopt;
  long long b = 0;
  std::pair<int, int> seed{-1, -1};
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (g.multiplicity(i, j) > b) {
        b = g.multiplicity(i, j);
        seed = {i, j};
      }
  if (b == 0) return std::nullopt;
  std::vector<int> clique = {seed.first, seed.second};
  std::vector<char> used(n + 1, 0);
  used[seed.first] = used[seed.second] = 1;
  bool extended = true;
  while (extended) {
    extended = false;
    for (int w = 1; w <= n && !extended; ++w) {
      if (used[w]) continue;
      bool joins_all = true;
      for (int c : clique)
        if (g.multiplicity(w, c) != b) {
          joins_all = false;
          break;
        }
      if (joins_all) {
        clique.push_back(w);
        used[w] = 1;
        extended = true;
      }
    }
  }
  std::vector<int> order = clique;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) order.push_back(v);
  const SymmetricIntMatrix q = signless_laplacian_truncated(g);
  SymmetricIntMatrix h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) h.set(i, j, q(order[i] - 1, order[j] - 1));
  return NormalForm{std::move(order), static_cast<int>(clique.size()), b, std::move(h)};
}

/// True when some column of the clique-to-rest block is not constant. For an
/// essentially connected graph this forces the count to exceed the
/// determinant strictly.
inline bool has_nonuniform_cross_column(const NormalForm& nf) {
  const int n = nf.matrix.order();
  for (int l = nf.clique_size; l < n; ++l)
    for (int i = 1; i < nf.clique_size; ++i)
      if (nf.matrix(i, l) != nf.matrix(0, l)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Deterministic samplers (all randomness drawn via modulo on mt19937_64, so
// results are identical across platforms for a fixed seed).
// ---------------------------------------------------------------------------

inline long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Multigraph random_multigraph(std::mt19937_64& rng, int n, long long max_mult) {
  std::vector<std::array<long long, 3>> triples;
  for (int u = 0; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      const long long m = draw(rng, 0, max_mult);
      if (m > 0) triples.push_back({u, v, m});
    }
  return Multigraph::from_edges(n, triples);
}

inline GnMatrix random_gn_matrix(std::mt19937_64& rng, int n, long long max_entry) {
  SymmetricIntMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, draw(rng, 0, max_entry));
  for (int i = 0; i < n; ++i) {
    long long row_max = 0;
    for (int j = 0; j < n; ++j)
      if (j != i) row_max = std::max(row_max, m(i, j));
    m.set(i, i, draw(rng, row_max, max_entry >= row_max ? max_entry : row_max));
  }
  return GnMatrix(std::move(m));
}

inline GnMatrix random_psd_gn_matrix(std::mt19937_64& rng, int n, long long max_entry,
                                     int max_attempts = 1000000) {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    GnMatrix h = random_gn_matrix(rng, n, max_entry);
    if (is_positive_semidefinite(h.matrix())) return h;
  }
  throw std::runtime_error("random_psd_gn_matrix: rejection sampling exhausted its attempts");
}

// ---------------------------------------------------------------------------
// Family scanner
// ---------------------------------------------------------------------------

enum class ScanMode { exhaustive, random };

struct ScanRow {
  std::string fingerprint;
  int n = 0;
  std::uint64_t edge_hash = 0;
  BigInt std_count;
  BigInt det;
  bool equal = false;
  bool classified = false;
  bool agree = false;
  bool strictness_ok = true;  // nonuniform cross column implies a strict gap
};

struct ScanReport {
  int n = 0;
  long long max_root_mult = 0;
  ScanMode mode = ScanMode::exhaustive;
  unsigned long long generated = 0;
  unsigned long long duplicates = 0;
  bool partial = false;  // budget ran out before the family was exhausted
  std::vector<ScanRow> rows;
  unsigned long long disagreements = 0;
  unsigned long long strictness_violations = 0;

  bool all_agree() const { return disagreements == 0 && strictness_violations == 0; }
};

namespace detail {

inline ScanRow make_scan_row(const Multigraph& g) {
  ScanRow row;
  row.fingerprint = degree_fingerprint(g);
  row.n = g.inner_vertex_count();
  row.edge_hash = edge_hash(g);
  const EqualityVerdict verdict = check_equality(g);
  row.std_count = verdict.std_count;
  row.det = verdict.det_q;
  row.equal = verdict.equal;
  row.classified = classify_subgraph_of_Ka1(g).matches;
  row.agree = (row.equal == row.classified);
  const auto comps = essential_components(g);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto nf = normal_form(comps[i].graph);
    if (nf && has_nonuniform_cross_column(*nf) &&
        verdict.per_component[i].std_count <= verdict.per_component[i].det)
      row.strictness_ok = false;
  }
  return row;
}

}  // namespace detail

/// Scans subgraphs of the complete multigraph with unit inner multiplicities
/// and rooted multiplicities up to `a`: every inner-edge subset crossed with
/// every rooted multiplicity assignment (or `budget` random samples),
/// deduplicated by fingerprint. Each unique graph is checked for agreement
/// between the equality verdict and the classification, plus the strictness
/// implication of a nonuniform normal-form cross column.
inline ScanReport scan_family(int n, long long a, ScanMode mode,
                              unsigned long long budget = 1000000, std::uint64_t seed = 0,
                              int threads = 1) {
  if (n < 1) throw std::invalid_argument("scan_family: n must be >= 1");
  if (mode == ScanMode::exhaustive && n > 5)
    throw std::length_error("scan_family: exhaustive mode is limited to n <= 5");
  if (a < 0) throw std::invalid_argument("scan_family: a must be >= 0");

  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  const int npairs = static_cast<int>(pairs.size());

  ScanReport report;
  report.n = n;
  report.max_root_mult = a;
  report.mode = mode;

  std::set<std::string> seen;
  std::vector<Multigraph> graphs;
  auto consider = [&](std::uint64_t inner_mask, const std::vector<long long>& rooted) {
    ++report.generated;
    std::vector<std::array<long long, 3>> triples;
    for (int p = 0; p < npairs; ++p)
      if (inner_mask & (std::uint64_t{1} << p))
        triples.push_back({pairs[p].first, pairs[p].second, 1});
    for (int v = 1; v <= n; ++v)
      if (rooted[v - 1] > 0) triples.push_back({0, v, rooted[v - 1]});
    Multigraph g = Multigraph::from_edges(n, triples);
    if (seen.insert(degree_fingerprint(g)).second)
      graphs.push_back(std::move(g));
    else
      ++report.duplicates;
  };

  if (mode == ScanMode::exhaustive) {
    std::vector<long long> rooted(n, 0);
    bool done = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << npairs) && !done; ++mask) {
      std::fill(rooted.begin(), rooted.end(), 0);
      while (true) {
        if (report.generated >= budget) {
          report.partial = true;
          done = true;
          break;
        }
        consider(mask, rooted);
        int pos = 0;
        while (pos < n && rooted[pos] == a) rooted[pos++] = 0;
        if (pos == n) break;
        ++rooted[pos];
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::vector<long long> rooted(n, 0);
    for (unsigned long long s = 0; s < budget; ++s) {
      const std::uint64_t mask =
          npairs == 0 ? 0 : (rng() & ((std::uint64_t{1} << npairs) - 1));
      for (int v = 0; v < n; ++v) rooted[v] = draw(rng, 0, a);
      consider(mask, rooted);
    }
  }

  report.rows.resize(graphs.size());
  int workers = threads < 1 ? 1 : threads;
  if (static_cast<std::size_t>(workers) > graphs.size()) workers = static_cast<int>(graphs.size());
  if (workers > 64) workers = 64;
  if (workers <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) report.rows[i] = detail::make_scan_row(graphs[i]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = graphs.size() / workers;
    for (int w = 0; w < workers; ++w) {
      const std::size_t begin = chunk * w;
      const std::size_t end = (w + 1 == workers) ? graphs.size() : begin + chunk;
      pool.emplace_back([&, begin, end]() {
        for (std::size_t i = begin; i < end; ++i) report.rows[i] = detail::make_scan_row(graphs[i]);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (const ScanRow& row : report.rows) {
    if (!row.agree) ++report.disagreements;
    if (!row.strictness_ok) ++report.strictness_violations;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Named verification suites (the CLI's `verify` subcommand drives these)
// ---------------------------------------------------------------------------

struct SuiteResult {
  std::string name;
  bool passed = true;
  unsigned long long cases = 0;
  unsigned long long failures = 0;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> notes;

  void record(bool ok, std::vector<std::string> row, const std::string& detail_on_failure) {
    ++cases;
    rows.push_back(std::move(row));
    if (!ok) {
      ++failures;
      passed = false;
      notes.push_back(detail_on_failure);
    }
  }
};

/// Lower bound: the standard-monomial count of the ideal of a positive
/// semidefinite dominant matrix is at least its determinant.
inline SuiteResult run_psd_lower_bound_suite(unsigned long long samples = 300,
                                             std::uint64_t seed = 1, int max_n = 4,
                                             long long max_entry = 5) {
  SuiteResult result;
  result.name = "psd lower bound";
  result.csv_header = {"case", "n", "det", "std_count", "ok"};
  std::mt19937_64 rng(seed);
  for (unsigned long long s = 0; s < samples; ++s) {
    const int n = static_cast<int>(draw(rng, 1, max_n));
    const GnMatrix h = random_psd_gn_matrix(rng, n, max_entry);
    const BigInt det = determinant(h.matrix());
    const BigInt count = std_count(matrix_ideal(h));
    const bool ok = count >= det;
    std::string detail;
    if (!ok) {
      std::ostringstream os;
      os << "counterexample: n=" << n << " det=" << det.get_str()
         << " std_count=" << count.get_str() << " matrix rows:";
      for (int i = 0; i < n; ++i) {
        os << " [";
        for (int j = 0; j < n; ++j) os << (j ? "," : "") << h(i, j);
        os << "]";
      }
      detail = os.str();
    }
    result.record(ok,
                  {std::to_string(s), std::to_string(n), det.get_str(), count.get_str(),
                   ok ? "1" : "0"},
                  detail);
  }
  return result;
}

/// Equality on the uniform off-diagonal family, including the degenerate
/// all-equal case where both sides vanish.
inline SuiteResult run_uniform_family_suite(unsigned long long samples = 200,
                                            std::uint64_t seed = 2, int max_n = 5,
                                            long long max_value = 4) {
  SuiteResult result;
  result.name = "uniform off-diagonal family";
  result.csv_header = {"case", "n", "b", "diag", "det", "std_count", "ok"};
  std::mt19937_64 rng(seed);
  auto run_case = [&](const std::vector<long long>& diag, long long b, const std::string& id) {
    const GnMatrix h = build_uniform_offdiag(diag, b);
    const BigInt det = determinant(h.matrix());
    const BigInt count = std_count(matrix_ideal(h));
    const bool ok = (count == det);
    std::ostringstream diag_os;
    for (std::size_t i = 0; i < diag.size(); ++i) diag_os << (i ? " " : "") << diag[i];
    result.record(ok,
                  {id, std::to_string(diag.size()), std::to_string(b), diag_os.str(),
                   det.get_str(), count.get_str(), ok ? "1" : "0"},
                  ok ? "" : "inequality at diag=[" + diag_os.str() + "] b=" + std::to_string(b));
  };
  run_case({2, 2, 2}, 2, "degenerate-all-b");  // 0 = 0
  for (unsigned long long s = 0; s < samples; ++s) {
    const int n = static_cast<int>(draw(rng, 1, max_n));
    const long long b = draw(rng, 0, max_value);
    std::vector<long long> diag(n);
    for (auto& d : diag) d = draw(rng, b, max_value);
    run_case(diag, b, std::to_string(s));
  }
  return result;
}

/// Equality on the block-join family; instances are drawn inside the
/// admissible hypothesis chain.
inline SuiteResult run_block_join_family_suite(unsigned long long samples = 200,
                                               std::uint64_t seed = 3, int max_order = 5,
                                               long long max_value = 4) {
  SuiteResult result;
  result.name = "block join family";
  result.csv_header = {"case", "order", "blocks", "cross", "det", "std_count", "ok"};
  std::mt19937_64 rng(seed);
  for (unsigned long long s = 0; s < samples; ++s) {
    const int r = static_cast<int>(draw(rng, 1, 3));
    std::vector<int> sizes(r, 1);
    const int extra = static_cast<int>(draw(rng, 0, max_order - r));
    for (int e = 0; e < extra; ++e) ++sizes[rng() % r];
    std::vector<long long> cross(r - 1, 0);
    for (int i = 0; i < r - 1; ++i)
      cross[i] = (i == 0) ? draw(rng, 0, max_value) : draw(rng, 0, cross[i - 1]);
    std::vector<JoinBlock> blocks(r);
    int order = 0;
    for (int i = 0; i < r; ++i) {
      const long long lower = (i == 0) ? (r > 1 ? cross[0] : 0) : cross[i - 1];
      blocks[i].offdiag = draw(rng, lower, max_value);
      blocks[i].diag.resize(sizes[i]);
      for (auto& d : blocks[i].diag) d = draw(rng, blocks[i].offdiag, max_value);
      order += sizes[i];
    }
    const GnMatrix h = build_block_join(blocks, cross);
    const BigInt det = determinant(h.matrix());
    const BigInt count = std_count(matrix_ideal(h));
    const bool ok = (count == det);
    std::ostringstream blocks_os, cross_os;
    for (int i = 0; i < r; ++i) {
      blocks_os << (i ? " | " : "") << "b=" << blocks[i].offdiag << " diag=";
      for (std::size_t j = 0; j < blocks[i].diag.size(); ++j)
        blocks_os << (j ? "," : "") << blocks[i].diag[j];
    }
    for (int i = 0; i < r - 1; ++i) cross_os << (i ? "," : "") << cross[i];
    result.record(ok,
                  {std::to_string(s), std::to_string(order), blocks_os.str(), cross_os.str(),
                   det.get_str(), count.get_str(), ok ? "1" : "0"},
                  ok ? "" : "inequality at blocks [" + blocks_os.str() + "] cross [" +
                                cross_os.str() + "]");
  }
  return result;
}

/// Multiplicativity across essentially connected components: both the count
/// and the determinant factor through the component split.
inline SuiteResult run_component_product_suite(unsigned long long samples = 200,
                                               std::uint64_t seed = 4, int max_n = 5,
                                               long long max_mult = 3) {
  SuiteResult result;
  result.name = "component product";
  result.csv_header = {"case", "n", "components", "std_count", "det", "ok"};
  std::mt19937_64 rng(seed);
  for (unsigned long long s = 0; s < samples; ++s) {
    const int n = static_cast<int>(draw(rng, 1, max_n));
    const Multigraph g = random_multigraph(rng, n, max_mult);
    const EqualityVerdict v = check_equality(g);
    BigInt count_product = 1, det_product = 1;
    for (const ComponentVerdict& cv : v.per_component) {
      count_product *= cv.std_count;
      det_product *= cv.det;
    }
    const bool ok =
        (count_product == v.std_count) && (det_product == v.det_q) && (v.std_count >= v.det_q);
    result.record(ok,
                  {std::to_string(s), std::to_string(n), std::to_string(v.per_component.size()),
                   v.std_count.get_str(), v.det_q.get_str(), ok ? "1" : "0"},
                  ok ? "" : "component products disagree, edge hash " +
                                std::to_string(edge_hash(g)));
  }
  return result;
}

/// Weighted tree/odd-unicyclic census against the signless Laplace
/// determinant: exhaustive over connected simple graphs with up to
/// `exhaustive_vertex_max` vertices, then random multigraphs with at most 14
/// edges.
inline SuiteResult run_tu_weighted_sum_suite(unsigned long long samples = 100,
                                             std::uint64_t seed = 5,
                                             int exhaustive_vertex_max = 4, int threads = 1) {
  SuiteResult result;
  result.name = "tu weighted sum";
  result.csv_header = {"case", "n", "edges", "weighted_sum", "det", "ok"};
  unsigned long long id = 0;
  auto run_case = [&](const Multigraph& g, const std::string& tag) {
    const TUReport tu = tu_enumerate(g, 18, threads);
    const BigInt det = determinant(signless_laplacian_truncated(g));
    const bool ok = (tu.weighted_sum == det);
    result.record(ok,
                  {tag + std::to_string(id++), std::to_string(g.inner_vertex_count()),
                   std::to_string(g.edge_count()), tu.weighted_sum.get_str(), det.get_str(),
                   ok ? "1" : "0"},
                  ok ? ""
                     : "census mismatch: weighted " + tu.weighted_sum.get_str() + " vs det " +
                           det.get_str() + ", edge hash " + std::to_string(edge_hash(g)));
  };
  for (int vcount = 2; vcount <= exhaustive_vertex_max; ++vcount) {
    const int n = vcount - 1;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    const int npairs = static_cast<int>(pairs.size());
    for (std::uint32_t mask = 0; mask < (1u << npairs); ++mask) {
      std::vector<std::array<long long, 3>> triples;
      for (int p = 0; p < npairs; ++p)
        if (mask & (1u << p)) triples.push_back({pairs[p].first, pairs[p].second, 1});
      const Multigraph g = Multigraph::from_edges(n, triples);
      // connectivity over the full vertex set
      std::vector<int> parent(vcount);
      for (int i = 0; i < vcount; ++i) parent[i] = i;
      auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (const auto& [u, v, m] : g.edge_triples()) parent[find(static_cast<int>(u))] = find(static_cast<int>(v));
      bool connected = true;
      for (int v = 1; v < vcount; ++v)
        if (find(v) != find(0)) connected = false;
      if (!connected) continue;
      run_case(g, "x");
    }
  }
  std::mt19937_64 rng(seed);
  for (unsigned long long s = 0; s < samples; ++s) {
    Multigraph g = random_multigraph(rng, static_cast<int>(draw(rng, 1, 4)), 2);
    while (g.edge_count() > 14) g = random_multigraph(rng, static_cast<int>(draw(rng, 1, 4)), 2);
    run_case(g, "r");
  }
  return result;
}

/// Wraps the family scanner into a suite: classification must coincide with
/// the equality verdict on every scanned graph, and no strictness violation
/// may appear.
inline SuiteResult run_clique_classification_scan(int n, long long a, ScanMode mode,
                                                  unsigned long long budget = 1000000,
                                                  std::uint64_t seed = 0, int threads = 1) {
  SuiteResult result;
  result.name = "clique classification scan (n=" + std::to_string(n) + ", a=" + std::to_string(a) +
                ", " + (mode == ScanMode::exhaustive ? "exhaustive" : "random") + ")";
  result.csv_header = {"fingerprint", "n",     "edge_hash",  "std_count",
                       "det",         "equal", "classified", "agree"};
  const ScanReport report = scan_family(n, a, mode, budget, seed, threads);
  for (const ScanRow& row : report.rows) {
    std::string detail;
    if (!row.agree)
      detail = "disagreement: equal=" + std::string(row.equal ? "1" : "0") +
               " classified=" + std::string(row.classified ? "1" : "0") + " fingerprint " +
               row.fingerprint;
    else if (!row.strictness_ok)
      detail = "nonuniform cross column without a strict gap, fingerprint " + row.fingerprint;
    result.record(row.agree && row.strictness_ok,
                  {row.fingerprint, std::to_string(row.n), std::to_string(row.edge_hash),
                   row.std_count.get_str(), row.det.get_str(), row.equal ? "1" : "0",
                   row.classified ? "1" : "0", row.agree ? "1" : "0"},
                  detail);
  }
  std::ostringstream os;
  os << "generated " << report.generated << " instances, " << report.rows.size()
     << " unique after fingerprint dedup, " << report.duplicates << " duplicates";
  result.notes.push_back(os.str());
  if (report.partial) {
    result.notes.push_back("partial scan: the budget ran out before the family was exhausted");
  }
  return result;
}

}  // namespace gpark
