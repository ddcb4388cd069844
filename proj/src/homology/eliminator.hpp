#pragma once

// Sparse Gaussian elimination with Markowitz-style pivoting, generic over the
// coefficient ring. Columns are taken in order of fewest remaining entries
// (singletons first), and the pivot row is the shortest one in that column.
// When the active block gets dense the caller finishes it with a dense
// routine over the rows and columns that are left.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flaglab/homology/boundary.hpp"

namespace flaglab::detail {

struct Gf2Ring {
  using value_type = std::uint8_t;
  value_type from_int(std::int64_t v) const { return static_cast<value_type>(v & 1); }
  static bool is_zero(value_type v) { return v == 0; }
  static bool is_unit(value_type v) { return v != 0; }
  // x - f*y with f = 1 always
  static value_type axpy(value_type x, value_type, value_type y) { return x ^ y; }
  static value_type ratio(value_type, value_type) { return 1; }
};

struct GfpRing {
  using value_type = std::uint32_t;
  std::uint32_t p;
  value_type from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p);
    return static_cast<value_type>(((v % m) + m) % m);
  }
  static bool is_zero(value_type v) { return v == 0; }
  static bool is_unit(value_type v) { return v != 0; }
  value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t{a} * b % p); }
  value_type inverse(value_type a) const {
    std::uint64_t r = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(r);
  }
  value_type axpy(value_type x, value_type f, value_type y) const {
    return static_cast<value_type>((x + std::uint64_t{p - mul(f, y)}) % p);
  }
  value_type ratio(value_type a, value_type b) const { return mul(a, inverse(b)); }
};

struct Overflow : std::runtime_error {
  Overflow() : std::runtime_error("64-bit overflow during integer elimination") {}
};

/// Integers with overflow detection; only unit pivots are used.
struct Z64Ring {
  using value_type = std::int64_t;
  value_type from_int(std::int64_t v) const { return v; }
  static bool is_zero(value_type v) { return v == 0; }
  static bool is_unit(value_type v) { return v == 1 || v == -1; }
  static value_type axpy(value_type x, value_type f, value_type y) {
    value_type prod, out;
    if (__builtin_mul_overflow(f, y, &prod) || __builtin_sub_overflow(x, prod, &out)) throw Overflow();
    return out;
  }
  // b is a unit, so a / b = a * b.
  static value_type ratio(value_type a, value_type b) { return a * b; }
};

struct ZBigRing {
  using value_type = boost::multiprecision::cpp_int;
  value_type from_int(std::int64_t v) const { return value_type(v); }
  static bool is_zero(const value_type& v) { return v.is_zero(); }
  static bool is_unit(const value_type& v) { return v == 1 || v == -1; }
  static value_type axpy(const value_type& x, const value_type& f, const value_type& y) { return x - f * y; }
  static value_type ratio(const value_type& a, const value_type& b) { return a * b; }
};

template <typename Ring>
class SparseEliminator {
 public:
  using V = typename Ring::value_type;
  struct Entry {
    std::uint32_t col;
    V v;
  };

  SparseEliminator(const IntMatrix& m, Ring ring, bool unit_pivots_only)
      : ring_(ring), unit_only_(unit_pivots_only), rows_(m.rows), col_rows_(m.cols), col_count_(m.cols, 0),
        row_alive_(m.rows, true), col_state_(m.cols, kOpen), stamp_(m.rows, 0) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      for (std::size_t i = m.col_start[c]; i < m.col_start[c + 1]; ++i) {
        V v = ring_.from_int(m.value[i]);
        if (Ring::is_zero(v)) continue;
        rows_[m.row_index[i]].push_back({static_cast<std::uint32_t>(c), std::move(v)});
        col_rows_[c].push_back(m.row_index[i]);
        ++col_count_[c];
        ++nnz_;
      }
    }
    for (std::size_t c = 0; c < m.cols; ++c) heap_.push({col_count_[c], static_cast<std::uint32_t>(c)});
  }

  /// Runs until every column is pivoted, empty, or deferred, or until the
  /// active block is dense enough that `go_dense(min_count, active_nnz,
  /// active_rows, active_cols)` says to stop. Returns the pivot count.
  template <typename Stop>
  std::size_t run(Stop&& go_dense) {
    while (!heap_.empty()) {
      auto [count, c] = heap_.top();
      if (col_state_[c] != kOpen || count != col_count_[c]) {
        heap_.pop();
        continue;
      }
      if (count == 0) {
        heap_.pop();
        col_state_[c] = kEmpty;
        continue;
      }
      if (go_dense(count, active_nnz(), active_rows(), active_cols())) break;
      heap_.pop();
      pivot_on(c);
    }
    return pivots_;
  }

  std::size_t pivots() const { return pivots_; }

  /// Rows and columns still open, for the dense finish.
  std::vector<std::uint32_t> remaining_rows() const {
    std::vector<std::uint32_t> out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (row_alive_[r] && !rows_[r].empty()) out.push_back(static_cast<std::uint32_t>(r));
    }
    return out;
  }
  std::vector<std::uint32_t> remaining_cols() const {
    std::vector<std::uint32_t> out;
    for (std::size_t c = 0; c < col_state_.size(); ++c) {
      if ((col_state_[c] == kOpen || col_state_[c] == kDeferred) && col_count_[c] > 0) out.push_back(static_cast<std::uint32_t>(c));
    }
    return out;
  }
  const std::vector<Entry>& row(std::uint32_t r) const { return rows_[r]; }

 private:
  enum : std::uint8_t { kOpen, kPivoted, kEmpty, kDeferred };

  std::size_t active_nnz() const { return nnz_; }
  std::size_t active_rows() const { return rows_.size() - dead_rows_; }
  std::size_t active_cols() const { return col_state_.size() - closed_cols_; }

  // Live rows that really hold column c (the per-column lists are lazy).
  std::vector<std::uint32_t> holders(std::uint32_t c) {
    ++epoch_;
    std::vector<std::uint32_t> out;
    std::vector<std::uint32_t> keep;
    for (std::uint32_t r : col_rows_[c]) {
      if (!row_alive_[r] || stamp_[r] == epoch_) continue;
      stamp_[r] = epoch_;
      const auto& row = rows_[r];
      auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t k) { return e.col < k; });
      if (it != row.end() && it->col == c) {
        out.push_back(r);
        keep.push_back(r);
      }
    }
    col_rows_[c] = std::move(keep);
    return out;
  }

  const V& at(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::uint32_t k) { return e.col < k; });
    return it->v;
  }

  void pivot_on(std::uint32_t c) {
    auto hs = holders(c);
    std::uint32_t best = static_cast<std::uint32_t>(-1);
    for (std::uint32_t r : hs) {
      if (unit_only_ && !Ring::is_unit(at(r, c))) continue;
      if (best == static_cast<std::uint32_t>(-1) || rows_[r].size() < rows_[best].size()) best = r;
    }
    if (best == static_cast<std::uint32_t>(-1)) {
      col_state_[c] = kDeferred;
      ++closed_cols_;
      return;
    }
    const V pv = at(best, c);
    const std::vector<Entry> prow = rows_[best];
    for (std::uint32_t r : hs) {
      if (r == best) continue;
      const V f = ring_.ratio(at(r, c), pv);
      subtract(r, f, prow);
    }
    // Retire the pivot row and column.
    for (const Entry& e : prow) {
      --col_count_[e.col];
      --nnz_;
      if (e.col != c && col_state_[e.col] == kOpen) heap_.push({col_count_[e.col], e.col});
    }
    rows_[best].clear();
    row_alive_[best] = false;
    ++dead_rows_;
    col_state_[c] = kPivoted;
    ++closed_cols_;
    ++pivots_;
  }

  // row r -= f * prow, keeping entries sorted and dropping zeros.
  void subtract(std::uint32_t r, const V& f, const std::vector<Entry>& prow) {
    const std::vector<Entry>& old = rows_[r];
    std::vector<Entry> out;
    out.reserve(old.size() + prow.size());
    std::size_t i = 0, j = 0;
    while (i < old.size() || j < prow.size()) {
      if (j == prow.size() || (i < old.size() && old[i].col < prow[j].col)) {
        out.push_back(old[i++]);
      } else if (i == old.size() || prow[j].col < old[i].col) {
        const std::uint32_t col = prow[j].col;
        V v = ring_.axpy(ring_.from_int(0), f, prow[j].v);
        ++j;
        if (Ring::is_zero(v)) continue;
        out.push_back({col, std::move(v)});
        ++col_count_[col];
        ++nnz_;
        col_rows_[col].push_back(r);
        if (col_state_[col] == kOpen) heap_.push({col_count_[col], col});
      } else {
        const std::uint32_t col = old[i].col;
        V v = ring_.axpy(old[i].v, f, prow[j].v);
        ++i;
        ++j;
        if (Ring::is_zero(v)) {
          --col_count_[col];
          --nnz_;
          if (col_state_[col] == kOpen) heap_.push({col_count_[col], col});
          continue;
        }
        out.push_back({col, std::move(v)});
      }
    }
    rows_[r] = std::move(out);
  }

  struct HeapItem {
    std::size_t count;
    std::uint32_t col;
    bool operator>(const HeapItem& o) const { return count != o.count ? count > o.count : col > o.col; }
  };

  Ring ring_;
  bool unit_only_;
  std::vector<std::vector<Entry>> rows_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<bool> row_alive_;
  std::vector<std::uint8_t> col_state_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::priority_queue<HeapItem, std::vector<HeapItem>, std::greater<HeapItem>> heap_;
  std::size_t pivots_ = 0;
  std::size_t nnz_ = 0;
  std::size_t dead_rows_ = 0;
  std::size_t closed_cols_ = 0;
};

}  // namespace flaglab::detail
