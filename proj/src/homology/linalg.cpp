#include "flaglab/homology/linalg.hpp"

#include <algorithm>

#include "eliminator.hpp"
#include "flaglab/simd/kernels.hpp"

namespace flaglab {
namespace {

using detail::SparseEliminator;

// Finish sparsely while pivots stay cheap; hand over once the active block
// is both dense and small enough to store as a full array.
auto dense_switch(double cells_limit) {
  return [cells_limit](std::size_t min_count, std::size_t nnz, std::size_t rows, std::size_t cols) {
    const double cells = static_cast<double>(rows) * static_cast<double>(cols);
    return min_count >= 3 && static_cast<double>(nnz) > 0.05 * cells && cells <= cells_limit;
  };
}

template <typename Elim>
std::vector<std::size_t> column_slots(const Elim& e, const std::vector<std::uint32_t>& cols, std::size_t total) {
  (void)e;
  std::vector<std::size_t> slot(total, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < cols.size(); ++i) slot[cols[i]] = i;
  return slot;
}

}  // namespace

std::size_t rank_gf2(const IntMatrix& m) {
  SparseEliminator<detail::Gf2Ring> e(m, {}, false);
  std::size_t rank = e.run(dense_switch(5e8));
  const auto rows = e.remaining_rows();
  const auto cols = e.remaining_cols();
  if (rows.empty() || cols.empty()) return rank;

  const auto& k = simd::active();
  const std::size_t words = (cols.size() + 63) / 64;
  const auto slot = column_slots(e, cols, m.cols);
  std::vector<std::uint64_t> bits(rows.size() * words, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& en : e.row(rows[i])) {
      const std::size_t s = slot[en.col];
      if (s != static_cast<std::size_t>(-1)) bits[i * words + s / 64] |= std::uint64_t{1} << (s % 64);
    }
  }
  // Echelon form keyed by leading column.
  std::vector<std::ptrdiff_t> pivot_of(cols.size(), -1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint64_t* row = bits.data() + i * words;
    for (;;) {
      const std::ptrdiff_t lead = k.find_next_set(row, words, 0);
      if (lead < 0) break;
      const std::ptrdiff_t piv = pivot_of[static_cast<std::size_t>(lead)];
      if (piv < 0) {
        pivot_of[static_cast<std::size_t>(lead)] = static_cast<std::ptrdiff_t>(i);
        ++rank;
        break;
      }
      k.xor_into(row, bits.data() + static_cast<std::size_t>(piv) * words, words);
    }
  }
  return rank;
}

std::size_t rank_mod(const IntMatrix& m, std::uint32_t p) {
  if (p < 2 || p >= simd::kMaxModulus) throw InputError("rank_mod: modulus out of range");
  if (p == 2) return rank_gf2(m);
  detail::GfpRing ring{p};
  SparseEliminator<detail::GfpRing> e(m, ring, false);
  std::size_t rank = e.run(dense_switch(4e7));
  const auto rows = e.remaining_rows();
  const auto cols = e.remaining_cols();
  if (rows.empty() || cols.empty()) return rank;

  const auto& k = simd::active();
  const std::size_t w = cols.size();
  const auto slot = column_slots(e, cols, m.cols);
  std::vector<std::uint32_t> a(rows.size() * w, 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& en : e.row(rows[i])) {
      const std::size_t s = slot[en.col];
      if (s != static_cast<std::size_t>(-1)) a[i * w + s] = en.v;
    }
  }
  // Pivot rows are scaled to a leading 1, so clearing a lead is one axpy.
  std::vector<std::ptrdiff_t> pivot_of(w, -1);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::uint32_t* row = a.data() + i * w;
    std::size_t lead = 0;
    for (;;) {
      while (lead < w && row[lead] == 0) ++lead;
      if (lead == w) break;
      const std::ptrdiff_t piv = pivot_of[lead];
      if (piv < 0) {
        const std::uint32_t inv = ring.inverse(row[lead]);
        for (std::size_t j = lead; j < w; ++j) row[j] = ring.mul(row[j], inv);
        pivot_of[lead] = static_cast<std::ptrdiff_t>(i);
        ++rank;
        break;
      }
      k.axpy_mod(row + lead, a.data() + static_cast<std::size_t>(piv) * w + lead, p - row[lead], p, w - lead);
    }
  }
  return rank;
}

std::size_t rank_rational(const IntMatrix& m) {
  const std::size_t a = rank_mod(m, kRankPrimeA);
  const std::size_t b = rank_mod(m, kRankPrimeB);
  if (a == b) return a;
  return smith_invariants(m).size();
}

namespace {

// Row and column operations on a dense matrix, mirrored on optional
// transform matrices (rows on u, columns on v).
class DenseSmith {
 public:
  DenseSmith(BigMatrix a, BigMatrix* u, BigMatrix* v) : a_(std::move(a)), u_(u), v_(v) {
    rows_ = a_.size();
    cols_ = rows_ ? a_[0].size() : 0;
  }

  std::vector<BigInt> run() {
    std::vector<BigInt> inv;
    for (std::size_t t = 0; t < std::min(rows_, cols_); ++t) {
      if (!bring_min(t, t, rows_, t, cols_)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows_; ++i) {
          if (a_[i][t].is_zero()) continue;
          add_row(i, t, a_[i][t] / a_[t][t]);
          clean = clean && a_[i][t].is_zero();
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
          if (a_[t][j].is_zero()) continue;
          add_col(j, t, a_[t][j] / a_[t][t]);
          clean = clean && a_[t][j].is_zero();
        }
        if (!clean) {
          bring_min_cross(t);
          continue;
        }
        bool divides = true;
        for (std::size_t i = t + 1; i < rows_ && divides; ++i) {
          for (std::size_t j = t + 1; j < cols_; ++j) {
            if (!BigInt(a_[i][j] % a_[t][t]).is_zero()) {
              add_row(t, i, BigInt(-1));
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      if (a_[t][t] < 0) negate_row(t);
      inv.push_back(a_[t][t]);
    }
    return inv;
  }

  BigMatrix& matrix() { return a_; }

 private:
  // Moves a smallest nonzero entry of the block into (t, t).
  bool bring_min(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    BigInt best;
    for (std::size_t i = r0; i < r1; ++i) {
      for (std::size_t j = c0; j < c1; ++j) {
        if (a_[i][j].is_zero()) continue;
        BigInt mag = abs(a_[i][j]);
        if (!found || mag < best) {
          best = mag;
          bi = i;
          bj = j;
          found = true;
        }
      }
    }
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void bring_min_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    BigInt best = abs(a_[t][t]);
    for (std::size_t i = t + 1; i < rows_; ++i) {
      if (!a_[i][t].is_zero() && abs(a_[i][t]) < best) {
        best = abs(a_[i][t]);
        bi = i;
        bj = t;
      }
    }
    for (std::size_t j = t + 1; j < cols_; ++j) {
      if (!a_[t][j].is_zero() && abs(a_[t][j]) < best) {
        best = abs(a_[t][j]);
        bi = t;
        bj = j;
      }
    }
    swap_rows(t, bi);
    swap_cols(t, bj);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a_[i], a_[j]);
    if (u_) std::swap((*u_)[i], (*u_)[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a_) std::swap(row[i], row[j]);
    if (v_) {
      for (auto& row : *v_) std::swap(row[i], row[j]);
    }
  }
  // row dst -= q * row src
  void add_row(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t j = 0; j < cols_; ++j) a_[dst][j] -= q * a_[src][j];
    if (u_) {
      for (std::size_t j = 0; j < u_->size(); ++j) (*u_)[dst][j] -= q * (*u_)[src][j];
    }
  }
  // col dst -= q * col src
  void add_col(std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t i = 0; i < rows_; ++i) a_[i][dst] -= q * a_[i][src];
    if (v_) {
      for (auto& row : *v_) row[dst] -= q * row[src];
    }
  }
  void negate_row(std::size_t t) {
    for (auto& x : a_[t]) x = -x;
    if (u_) {
      for (auto& x : (*u_)[t]) x = -x;
    }
  }

  BigMatrix a_;
  BigMatrix* u_;
  BigMatrix* v_;
  std::size_t rows_ = 0, cols_ = 0;
};

BigMatrix identity(std::size_t n) {
  BigMatrix id(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

template <typename Ring>
std::vector<BigInt> sparse_smith(const IntMatrix& m) {
  SparseEliminator<Ring> e(m, Ring{}, true);
  const std::size_t ones = e.run([](std::size_t, std::size_t, std::size_t, std::size_t) { return false; });
  const auto rows = e.remaining_rows();
  const auto cols = e.remaining_cols();
  std::vector<BigInt> inv(ones, BigInt(1));
  if (rows.empty() || cols.empty()) return inv;
  std::vector<std::size_t> slot(m.cols, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < cols.size(); ++i) slot[cols[i]] = i;
  BigMatrix a(rows.size(), std::vector<BigInt>(cols.size(), BigInt(0)));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& en : e.row(rows[i])) {
      if (slot[en.col] != static_cast<std::size_t>(-1)) a[i][slot[en.col]] = BigInt(en.v);
    }
  }
  auto rest = smith_invariants_dense(std::move(a));
  inv.insert(inv.end(), rest.begin(), rest.end());
  return inv;
}

}  // namespace

std::vector<BigInt> smith_invariants_dense(BigMatrix a) { return DenseSmith(std::move(a), nullptr, nullptr).run(); }

std::vector<BigInt> smith_invariants(const IntMatrix& m) {
  try {
    return sparse_smith<detail::Z64Ring>(m);
  } catch (const detail::Overflow&) {
    return sparse_smith<detail::ZBigRing>(m);
  }
}

SmithDecomposition smith_decompose(const BigMatrix& m) {
  const std::size_t r = m.size(), c = r ? m[0].size() : 0;
  SmithDecomposition out;
  out.u = identity(r);
  out.v = identity(c);
  DenseSmith s(m, &out.u, &out.v);
  s.run();
  out.d = std::move(s.matrix());
  return out;
}

BigMatrix to_big(const IntMatrix& m) {
  BigMatrix a(m.rows, std::vector<BigInt>(m.cols, BigInt(0)));
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (std::size_t i = m.col_start[c]; i < m.col_start[c + 1]; ++i) a[m.row_index[i]][c] = m.value[i];
  }
  return a;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), p = k ? b[0].size() : 0;
  BigMatrix out(n, std::vector<BigInt>(p, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

BigInt determinant(BigMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && a[s][k].is_zero()) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace flaglab
