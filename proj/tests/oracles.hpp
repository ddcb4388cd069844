#pragma once

// Brute-force reference implementations used only by the tests. They favor
// obviousness over speed and share no code with the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "flaglab/topology/complex.hpp"
#include "flaglab/topology/graph.hpp"

namespace oracle {

using flaglab::Edge;
using flaglab::Face;
using flaglab::Graph;
using flaglab::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline Graph graph_from_mask(std::size_t n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1u) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

inline bool adjacent(const Graph& g, Vertex a, Vertex b) {
  for (Vertex w : g.neighbors(a)) {
    if (w == b) return true;
  }
  return false;
}

/// All cliques with exactly `size` vertices, by testing every vertex subset.
inline std::set<std::vector<Vertex>> cliques(const Graph& g, std::size_t size) {
  std::set<std::vector<Vertex>> out;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) vs.push_back(v);
    }
    bool ok = true;
    for (std::size_t i = 0; i < vs.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < vs.size() && ok; ++j) ok = adjacent(g, vs[i], vs[j]);
    }
    if (ok) out.insert(vs);
  }
  return out;
}

inline std::set<std::vector<Vertex>> faces_of(const flaglab::SimplicialComplex& x, int k) {
  std::set<std::vector<Vertex>> out;
  for (std::size_t i = 0; i < x.face_count(k); ++i) {
    auto f = x.face(k, i);
    out.insert(std::vector<Vertex>(f.begin(), f.end()));
  }
  return out;
}

/// max e(S)/|S| over all nonempty vertex subsets.
inline boost::rational<std::int64_t> max_density(const Graph& g) {
  const std::size_t n = g.vertex_count();
  boost::rational<std::int64_t> best(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t e = 0;
    for (auto [u, v] : g.edges()) {
      if ((mask >> u & 1u) && (mask >> v & 1u)) ++e;
    }
    best = std::max(best, boost::rational<std::int64_t>(e, std::popcount(mask)));
  }
  return best;
}

/// Copies of the cross-polytope graph: for every (2d+2)-subset, every perfect
/// matching of it whose cross pairs are all edges.
inline std::size_t crosspolytope_copies(const Graph& g, int d, bool induced_only) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = static_cast<std::size_t>(2 * d + 2);
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v) {
      if (mask >> v & 1u) vs.push_back(v);
    }
    // Enumerate perfect matchings recursively.
    std::vector<int> partner(m, -1);
    auto rec = [&](auto&& self) -> void {
      std::size_t first = 0;
      while (first < m && partner[first] >= 0) ++first;
      if (first == m) {
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a) {
          for (std::size_t b = a + 1; b < m && ok; ++b) {
            const bool edge = adjacent(g, vs[a], vs[b]);
            if (partner[a] == static_cast<int>(b)) ok = !(induced_only && edge);
            else ok = edge;
          }
        }
        if (ok) ++count;
        return;
      }
      for (std::size_t b = first + 1; b < m; ++b) {
        if (partner[b] >= 0) continue;
        partner[first] = static_cast<int>(b);
        partner[b] = static_cast<int>(first);
        self(self);
        partner[first] = partner[b] = -1;
      }
    };
    rec(rec);
  }
  return count;
}

inline bool is_octahedron_graph(const Graph& g) {
  if (g.vertex_count() != 6 || g.edge_count() != 12) return false;
  for (Vertex v = 0; v < 6; ++v) {
    if (g.degree(v) != 4) return false;
  }
  return true;
}

inline Graph octahedron() {
  std::vector<Edge> e;
  for (Vertex a = 0; a < 6; ++a) {
    for (Vertex b = a + 1; b < 6; ++b) {
      if (a / 2 != b / 2) e.emplace_back(a, b);
    }
  }
  return Graph(6, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  }
  return Graph(n, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) e.emplace_back(a, static_cast<Vertex>((a + 1) % n));
  return Graph(n, e);
}

/// Rank of an integer matrix over GF(p) by plain Gaussian elimination.
inline std::size_t rank_mod(std::vector<std::vector<long long>> a, long long p) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  auto inv = [&](long long x) {
    long long r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a) {
    for (auto& v : row) v = ((v % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const long long iv = inv(a[rank][c]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const long long f = a[r][c] * iv % p;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Determinant by fraction-free elimination in 128-bit arithmetic.
inline __int128 det(std::vector<std::vector<__int128>> a) {
  const std::size_t n = a.size();
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// gcd of all k-by-k minors (0 when every minor vanishes).
inline long long determinantal_divisor(const std::vector<std::vector<long long>>& a, std::size_t k) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  if (k == 0) return 1;
  if (k > rows || k > cols) return 0;
  long long g = 0;
  std::vector<std::size_t> rs(k), cs(k);
  auto first = [&](std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < k; ++i) v[i] = i;
  };
  auto next = [&](std::vector<std::size_t>& v, std::size_t n) {
    for (std::size_t i = k; i-- > 0;) {
      if (v[i] < n - k + i) {
        ++v[i];
        for (std::size_t j = i + 1; j < k; ++j) v[j] = v[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  std::vector<std::vector<__int128>> sub(k, std::vector<__int128>(k));
  first(rs);
  do {
    first(cs);
    do {
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rs[i]][cs[j]];
      }
      __int128 d = det(sub);
      if (d < 0) d = -d;
      g = std::gcd(g, static_cast<long long>(d));
      if (g == 1) return 1;
    } while (next(cs, cols));
  } while (next(rs, rows));
  return g;
}

/// Nonzero elementary divisors as successive quotients of determinantal
/// divisors.
inline std::vector<long long> elementary_divisors(const std::vector<std::vector<long long>>& a) {
  std::vector<long long> out;
  long long prev = 1;
  for (std::size_t k = 1;; ++k) {
    const long long dk = determinantal_divisor(a, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

}  // namespace oracle
