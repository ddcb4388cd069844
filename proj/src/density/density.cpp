#include "flaglab/density/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include <boost/multiprecision/cpp_int.hpp>

namespace flaglab {
namespace {

// Dinic's algorithm on an adjacency-list network with paired reverse arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t nodes) : head_(nodes, -1), level_(nodes), it_(nodes) {}

  void add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    arcs_.push_back({to, cap, head_[from]});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, 0, head_[to]});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (bfs(s, t)) {
      std::copy(head_.begin(), head_.end(), it_.begin());
      while (std::int64_t f = dfs(s, t, std::numeric_limits<std::int64_t>::max())) total += f;
    }
    return total;
  }

  /// Nodes reachable from s in the residual network after max_flow.
  std::vector<bool> source_side(std::size_t s) const {
    std::vector<bool> seen(head_.size(), false);
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
    int next;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
        const auto& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[u] + 1;
          q.push(arc.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t t, std::int64_t pushed) {
    if (u == t) return pushed;
    for (int& a = it_[u]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
      auto& arc = arcs_[static_cast<std::size_t>(a)];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (std::int64_t f = dfs(arc.to, t, std::min(pushed, arc.cap))) {
        arc.cap -= f;
        arcs_[static_cast<std::size_t>(a) ^ 1].cap += f;
        return f;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> it_;
};

struct Closure {
  std::int64_t value;           // max over S of b*e(S) - a*|S|
  std::vector<Vertex> best;     // smallest maximizer
};

// Maximum-weight closure: picking an edge (profit b) forces both endpoints
// (cost a each). Source side of the minimum cut is the optimal choice.
Closure max_closure(const Graph& g, std::span<const Edge> edges, std::int64_t a, std::int64_t b) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = edges.size();
  const std::size_t s = n + m, t = n + m + 1;
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
  FlowNetwork net(n + m + 2);
  for (std::size_t e = 0; e < m; ++e) {
    net.add_arc(s, n + e, b);
    net.add_arc(n + e, edges[e].first, inf);
    net.add_arc(n + e, edges[e].second, inf);
  }
  for (std::size_t v = 0; v < n; ++v) net.add_arc(v, t, a);
  const std::int64_t cut = net.max_flow(s, t);
  Closure c{static_cast<std::int64_t>(m) * b - cut, {}};
  const auto side = net.source_side(s);
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v]) c.best.push_back(static_cast<Vertex>(v));
  }
  return c;
}

std::size_t induced_edges(const Graph& g, std::span<const Vertex> sorted) {
  std::size_t e = 0;
  for (Vertex v : sorted) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && std::binary_search(sorted.begin(), sorted.end(), w)) ++e;
    }
  }
  return e;
}

// Dinkelbach iteration: each cut either certifies the current ratio as the
// maximum or returns a set of strictly larger density.
std::pair<Rational, std::vector<Vertex>> max_density(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> witness(n);
  for (std::size_t v = 0; v < n; ++v) witness[v] = static_cast<Vertex>(v);
  Rational rho(static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(n));
  if (g.edge_count() == 0) return {rho, witness};
  const auto edges = g.edges();
  for (;;) {
    Closure c = max_closure(g, edges, rho.numerator(), rho.denominator());
    if (c.value <= 0 || c.best.empty()) break;
    const auto e = static_cast<std::int64_t>(induced_edges(g, c.best));
    rho = Rational(e, static_cast<std::int64_t>(c.best.size()));
    witness = std::move(c.best);
  }
  return {rho, witness};
}

}  // namespace

DensityReport essential_density(const Graph& g) {
  if (g.vertex_count() == 0) throw InputError("essential_density: graph has no vertices");
  DensityReport r;
  std::tie(r.rho, r.witness) = max_density(g);
  r.strictly_balanced = is_strictly_balanced(g);
  return r;
}

bool is_strictly_balanced(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  const Rational whole(static_cast<std::int64_t>(g.edge_count()), static_cast<std::int64_t>(n));
  // Every proper subgraph sits inside some G - x or drops edges of G.
  std::vector<Vertex> keep;
  for (Vertex x = 0; x < n; ++x) {
    if (n == 1) break;
    keep.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (v != x) keep.push_back(v);
    }
    if (max_density(g.induced(keep)).first >= whole) return false;
  }
  return true;
}

std::size_t max_face_degree(const SimplicialComplex& x, int i) {
  if (i < 1) throw InputError("max_face_degree: i must be at least 1");
  std::vector<std::size_t> deg(x.face_count(i - 1), 0);
  std::vector<Vertex> buf(static_cast<std::size_t>(i));
  for (std::size_t j = 0; j < x.face_count(i); ++j) {
    auto f = x.face(i, j);
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::size_t w = 0;
      for (std::size_t k = 0; k < f.size(); ++k) {
        if (k != drop) buf[w++] = f[k];
      }
      if (auto idx = x.index_of(buf)) ++deg[*idx];
    }
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

CBoundedReport c_bounded_check(const SimplicialComplex& x, int d, Rational c) {
  using boost::multiprecision::cpp_int;
  if (d < 1) throw InputError("c_bounded_check: d must be at least 1");
  if (c < 0) throw InputError("c_bounded_check: c must be nonnegative");
  CBoundedReport r;
  r.d = d;
  r.c = c;
  const auto n = static_cast<std::int64_t>(x.vertex_count());
  for (int i = 1; i < d; ++i) {
    const std::size_t mx = max_face_degree(x, i);
    r.max_degree.push_back(mx);
    r.bound.push_back(std::pow(boost::rational_cast<double>(c), i) *
                      std::pow(static_cast<double>(n), 1.0 - static_cast<double>(i) / d));
    // mx <= c^i n^{1-i/d}  <=>  mx^d * den^{id} <= num^{id} * n^{d-i}
    cpp_int lhs = 1, rhs = 1;
    for (int k = 0; k < d; ++k) lhs *= cpp_int(mx);
    for (int k = 0; k < i * d; ++k) {
      lhs *= cpp_int(c.denominator());
      rhs *= cpp_int(c.numerator());
    }
    for (int k = 0; k < d - i; ++k) rhs *= cpp_int(n);
    if (lhs > rhs) r.pass = false;
  }
  return r;
}

Rational density_threshold(int d) { return Rational(d) + Rational(1, 4 + 4 * static_cast<std::int64_t>(d)); }

bool density_bound_audit(const Graph& g, int d) {
  if (g.vertex_count() == 0) return true;
  return max_density(g).first < density_threshold(d);
}

}  // namespace flaglab
