#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "flaglab/topology/complex.hpp"

namespace flaglab {

/// Sparse integer matrix in compressed-column form; row indices inside a
/// column are strictly increasing and stored values are nonzero.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::size_t> col_start{0};
  std::vector<std::uint32_t> row_index;
  std::vector<std::int64_t> value;

  std::size_t nnz() const { return value.size(); }
  static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& a);
  std::vector<std::vector<std::int64_t>> to_dense() const;
  /// Product of two matrices (dimensions must agree).
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  bool is_zero() const { return value.empty(); }
};

/// Simplicial boundary from k-faces (columns) to (k-1)-faces (rows). The
/// entry for dropping the i-th smallest vertex of a face is (-1)^i.
struct BoundaryMatrix {
  int degree = 0;
  IntMatrix matrix;
};

/// Requires 1 <= k, and k <= dim_cap for a capped complex.
BoundaryMatrix boundary_matrix(const SimplicialComplex& x, int k);

/// Header "rows cols nnz", then one "row col value" line per entry (0-based).
void write_triplets(std::ostream& out, const IntMatrix& m);

}  // namespace flaglab
