#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpark/bigint.hpp"

namespace gpark {

/// Dense symmetric integer matrix. `set` writes both (i, j) and (j, i), so
/// symmetry is a construction invariant. Entries may be negative (the
/// truncated Laplace matrix has negative off-diagonals).
class SymmetricIntMatrix {
 public:
  explicit SymmetricIntMatrix(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("matrix order must be nonnegative");
    e_.assign(static_cast<std::size_t>(order) * order, 0);
  }

  /// Builds from explicit rows; rejects non-square or asymmetric input.
  static SymmetricIntMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
    const int t = static_cast<int>(rows.size());
    SymmetricIntMatrix m(t);
    for (int i = 0; i < t; ++i) {
      if (static_cast<int>(rows[i].size()) != t)
        throw std::invalid_argument("matrix rows must all have length equal to the order");
      for (int j = 0; j < t; ++j) m.e_[static_cast<std::size_t>(i) * t + j] = rows[i][j];
    }
    for (int i = 0; i < t; ++i)
      for (int j = i + 1; j < t; ++j)
        if (m(i, j) != m(j, i))
          throw std::invalid_argument("matrix is not symmetric at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
    return m;
  }

  int order() const { return order_; }

  long long operator()(int i, int j) const {
    check_index(i);
    check_index(j);
    return e_[static_cast<std::size_t>(i) * order_ + j];
  }

  void set(int i, int j, long long value) {
    check_index(i);
    check_index(j);
    e_[static_cast<std::size_t>(i) * order_ + j] = value;
    e_[static_cast<std::size_t>(j) * order_ + i] = value;
  }

  bool operator==(const SymmetricIntMatrix&) const = default;

 private:
  void check_index(int i) const {
    if (i < 0 || i >= order_) throw std::out_of_range("matrix index out of range");
  }

  int order_;
  std::vector<long long> e_;
};

namespace detail {

/// Fraction-free Bareiss elimination over arbitrary-precision integers.
/// Row swaps for zero pivots, sign tracked; every division is exact.
inline BigInt bareiss_determinant(std::vector<BigInt> a, int n) {
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[static_cast<std::size_t>(k) * n + k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<std::size_t>(i) * n + k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;  // pivot column exhausted: singular
      for (int j = k; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(k) * n + j], a[static_cast<std::size_t>(p) * n + j]);
      sign = -sign;
    }
    const BigInt& pivot = a[static_cast<std::size_t>(k) * n + k];
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt t = a[static_cast<std::size_t>(i) * n + j] * pivot -
                   a[static_cast<std::size_t>(i) * n + k] * a[static_cast<std::size_t>(k) * n + j];
        mpz_divexact(a[static_cast<std::size_t>(i) * n + j].get_mpz_t(), t.get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[static_cast<std::size_t>(i) * n + k] = 0;
    }
    prev = a[static_cast<std::size_t>(k) * n + k];
  }
  BigInt d = a[static_cast<std::size_t>(n - 1) * n + (n - 1)];
  if (sign < 0) d = -d;
  return d;
}

}  // namespace detail

/// Exact determinant.
inline BigInt determinant(const SymmetricIntMatrix& m) {
  const int n = m.order();
  std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = to_bigint(m(i, j));
  return detail::bareiss_determinant(std::move(a), n);
}

/// Exact positive-semidefiniteness test: every principal minor must be
/// nonnegative. Enumerates all 2^t - 1 principal submatrices, so the order
/// is capped (desk scale).
inline bool is_positive_semidefinite(const SymmetricIntMatrix& m, int max_order = 20) {
  const int t = m.order();
  if (t > max_order)
    throw std::length_error("is_positive_semidefinite: order " + std::to_string(t) +
                            " exceeds the principal-minor scan limit " +
                            std::to_string(max_order));
  for (int i = 0; i < t; ++i)
    if (m(i, i) < 0) return false;
  std::vector<int> idx;
  for (std::uint32_t mask = 1; mask < (1u << t); ++mask) {
    idx.clear();
    for (int i = 0; i < t; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int s = static_cast<int>(idx.size());
    if (s == 1) continue;  // diagonal already checked
    std::vector<BigInt> sub(static_cast<std::size_t>(s) * s);
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        sub[static_cast<std::size_t>(i) * s + j] = to_bigint(m(idx[i], idx[j]));
    if (detail::bareiss_determinant(std::move(sub), s) < 0) return false;
  }
  return true;
}

/// Membership in the class of symmetric nonnegative matrices whose diagonal
/// dominates every off-diagonal entry of its row.
inline bool is_diagonally_dominant_nonnegative(const SymmetricIntMatrix& m) {
  const int t = m.order();
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (m(i, j) < 0) return false;
      if (j != i && m(i, i) < m(i, j)) return false;
    }
  return true;
}

/// Strong type for matrices in that class: the ideal constructors require the
/// dominance invariant so all pair exponents are nonnegative.
class GnMatrix {
 public:
  explicit GnMatrix(SymmetricIntMatrix m) : m_(std::move(m)) {
    const int t = m_.order();
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        if (m_(i, j) < 0)
          throw std::invalid_argument("matrix class violation: negative entry at (" +
                                      std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        if (j != i && m_(i, i) < m_(i, j))
          throw std::invalid_argument(
              "matrix class violation: diagonal h_" + std::to_string(i + 1) +
              "," + std::to_string(i + 1) + " = " + std::to_string(m_(i, i)) +
              " < off-diagonal h_" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
              " = " + std::to_string(m_(i, j)));
      }
  }

  const SymmetricIntMatrix& matrix() const { return m_; }
  int order() const { return m_.order(); }
  long long operator()(int i, int j) const { return m_(i, j); }

  bool operator==(const GnMatrix&) const = default;

 private:
  SymmetricIntMatrix m_;
};

/// Matrix with prescribed diagonal and one constant off-diagonal value b,
/// requiring diag[i] >= b >= 0.
inline GnMatrix build_uniform_offdiag(const std::vector<long long>& diag, long long offdiag) {
  const int n = static_cast<int>(diag.size());
  if (n < 1) throw std::invalid_argument("build_uniform_offdiag: empty diagonal");
  if (offdiag < 0)
    throw std::invalid_argument("build_uniform_offdiag: off-diagonal b = " +
                                std::to_string(offdiag) + " < 0");
  for (int i = 0; i < n; ++i)
    if (diag[i] < offdiag)
      throw std::invalid_argument("build_uniform_offdiag: a_" + std::to_string(i + 1) + " = " +
                                  std::to_string(diag[i]) + " < b = " + std::to_string(offdiag));
  SymmetricIntMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m.set(i, i, diag[i]);
    for (int j = i + 1; j < n; ++j) m.set(i, j, offdiag);
  }
  return GnMatrix(std::move(m));
}

/// One diagonal block of a block-join matrix: `diag` holds the block's
/// diagonal entries, `offdiag` its constant within-block off-diagonal.
/// For a 1x1 block `offdiag` never enters the matrix and is not constrained.
struct JoinBlock {
  std::vector<long long> diag;
  long long offdiag = 0;
};

/// Block matrix whose diagonal blocks are uniform-off-diagonal and whose
/// cross block between blocks s < t is the constant cross[t - 1]. The
/// hypothesis chain b_1 >= d_1, b_i >= d_{i-1}, d_i >= d_{i+1} is validated
/// entry by entry; a violation names the failing inequality.
inline GnMatrix build_block_join(const std::vector<JoinBlock>& blocks,
                                 const std::vector<long long>& cross) {
  const int r = static_cast<int>(blocks.size());
  if (r < 1) throw std::invalid_argument("build_block_join: no blocks");
  if (static_cast<int>(cross.size()) != r - 1)
    throw std::invalid_argument("build_block_join: expected " + std::to_string(r - 1) +
                                " cross values, got " + std::to_string(cross.size()));
  for (int i = 0; i + 1 < r - 1; ++i)
    if (cross[i] < cross[i + 1])
      throw std::invalid_argument("build_block_join: d_" + std::to_string(i + 1) + " = " +
                                  std::to_string(cross[i]) + " < d_" + std::to_string(i + 2) +
                                  " = " + std::to_string(cross[i + 1]));
  for (int i = 0; i < r - 1; ++i)
    if (cross[i] < 0)
      throw std::invalid_argument("build_block_join: d_" + std::to_string(i + 1) + " < 0");
  int n = 0;
  for (int i = 0; i < r; ++i) {
    const int ni = static_cast<int>(blocks[i].diag.size());
    if (ni < 1) throw std::invalid_argument("build_block_join: empty block " + std::to_string(i + 1));
    if (ni >= 2) {
      if (blocks[i].offdiag < 0)
        throw std::invalid_argument("build_block_join: b_" + std::to_string(i + 1) + " < 0");
      const long long bound = (i == 0) ? (r > 1 ? cross[0] : 0) : cross[i - 1];
      if (r > 1 && blocks[i].offdiag < bound)
        throw std::invalid_argument("build_block_join: b_" + std::to_string(i + 1) + " = " +
                                    std::to_string(blocks[i].offdiag) + " < d_" +
                                    std::to_string(i == 0 ? 1 : i) + " = " + std::to_string(bound));
      for (int j = 0; j < ni; ++j)
        if (blocks[i].diag[j] < blocks[i].offdiag)
          throw std::invalid_argument("build_block_join: alpha_" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + " = " +
                                      std::to_string(blocks[i].diag[j]) + " < b_" +
                                      std::to_string(i + 1) + " = " +
                                      std::to_string(blocks[i].offdiag));
    }
    for (int j = 0; j < ni; ++j)
      if (blocks[i].diag[j] < 0)
        throw std::invalid_argument("build_block_join: negative diagonal entry");
    n += ni;
  }
  SymmetricIntMatrix m(n);
  std::vector<int> offset(r + 1, 0);
  for (int i = 0; i < r; ++i) offset[i + 1] = offset[i] + static_cast<int>(blocks[i].diag.size());
  for (int b = 0; b < r; ++b) {
    const int ni = static_cast<int>(blocks[b].diag.size());
    for (int i = 0; i < ni; ++i) {
      m.set(offset[b] + i, offset[b] + i, blocks[b].diag[i]);
      for (int j = i + 1; j < ni; ++j) m.set(offset[b] + i, offset[b] + j, blocks[b].offdiag);
    }
  }
  for (int s = 0; s < r; ++s)
    for (int t = s + 1; t < r; ++t)
      for (int i = offset[s]; i < offset[s + 1]; ++i)
        for (int j = offset[t]; j < offset[t + 1]; ++j) m.set(i, j, cross[t - 1]);
  return GnMatrix(std::move(m));  // dominance re-checked entrywise here
}

}  // namespace gpark
