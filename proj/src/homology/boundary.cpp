#include "flaglab/homology/boundary.hpp"

#include <algorithm>
#include <ostream>

namespace flaglab {

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& a) {
  IntMatrix m;
  m.rows = a.size();
  m.cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (a[r][c] != 0) {
        m.row_index.push_back(static_cast<std::uint32_t>(r));
        m.value.push_back(a[r][c]);
      }
    }
    m.col_start.push_back(m.value.size());
  }
  return m;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_dense() const {
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t i = col_start[c]; i < col_start[c + 1]; ++i) a[row_index[i]][c] = value[i];
  }
  return a;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) throw InputError("matrix product: inner dimensions differ");
  IntMatrix out;
  out.rows = a.rows;
  out.cols = b.cols;
  std::vector<std::int64_t> acc(a.rows, 0);
  std::vector<std::uint32_t> touched;
  for (std::size_t c = 0; c < b.cols; ++c) {
    touched.clear();
    for (std::size_t i = b.col_start[c]; i < b.col_start[c + 1]; ++i) {
      const std::size_t k = b.row_index[i];
      for (std::size_t j = a.col_start[k]; j < a.col_start[k + 1]; ++j) {
        if (acc[a.row_index[j]] == 0) touched.push_back(a.row_index[j]);
        acc[a.row_index[j]] += a.value[j] * b.value[i];
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::uint32_t r : touched) {
      if (acc[r] != 0) {
        out.row_index.push_back(r);
        out.value.push_back(acc[r]);
      }
      acc[r] = 0;
    }
    out.col_start.push_back(out.value.size());
  }
  return out;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& x, int k) {
  if (k < 1) throw InputError("boundary_matrix: degree must be at least 1");
  if (x.bounded() && k > x.dim_cap()) throw InputError("boundary_matrix: degree exceeds the materialized dimension");
  BoundaryMatrix b;
  b.degree = k;
  IntMatrix& m = b.matrix;
  m.rows = x.face_count(k - 1);
  m.cols = x.face_count(k);
  m.col_start.reserve(m.cols + 1);
  std::vector<Vertex> buf(static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < m.cols; ++j) {
    auto f = x.face(k, j);
    // Dropping a later vertex yields a lexicographically smaller facet, so
    // walking i downward emits rows in increasing order.
    for (std::size_t i = f.size(); i-- > 0;) {
      std::size_t w = 0;
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (t != i) buf[w++] = f[t];
      }
      m.row_index.push_back(static_cast<std::uint32_t>(*x.index_of(buf)));
      m.value.push_back(i % 2 == 0 ? 1 : -1);
    }
    m.col_start.push_back(m.value.size());
  }
  return b;
}

void write_triplets(std::ostream& out, const IntMatrix& m) {
  out << m.rows << ' ' << m.cols << ' ' << m.nnz() << '\n';
  for (std::size_t c = 0; c < m.cols; ++c) {
    for (std::size_t i = m.col_start[c]; i < m.col_start[c + 1]; ++i) {
      out << m.row_index[i] << ' ' << c << ' ' << m.value[i] << '\n';
    }
  }
}

}  // namespace flaglab
