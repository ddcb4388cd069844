#include "flaglab/random/models.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "flaglab/topology/operations.hpp"

namespace flaglab {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// C(n, k), saturating at kSaturated.
std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t prod;
    if (!__builtin_mul_overflow(r, n - k + i, &prod)) {
      r = prod / i;
      continue;
    }
    const unsigned __int128 wide = static_cast<unsigned __int128>(r) * (n - k + i) / i;
    if (wide >= kSaturated) return kSaturated;
    r = static_cast<std::uint64_t>(wide);
  }
  return r;
}

// Lexicographic unranking of k-subsets of {0..n-1}. The subsets whose
// smallest element is at least a number C(n - a, m), so each position is a
// binary search on that count.
void unrank(std::uint64_t r, std::size_t n, std::size_t k, Vertex* out) {
  std::size_t lo = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t m = k - i;
    const std::uint64_t total = binom(n - lo, m);
    // Largest a in [lo, n - m] with total - C(n - a, m) <= r.
    std::size_t a = lo, b = n - m;
    while (a < b) {
      const std::size_t mid = (a + b + 1) / 2;
      if (total - binom(n - mid, m) <= r) {
        a = mid;
      } else {
        b = mid - 1;
      }
    }
    r -= total - binom(n - a, m);
    out[i] = static_cast<Vertex>(a);
    lo = a + 1;
  }
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("probability " + std::to_string(p) + " outside [0, 1]");
}

}  // namespace

std::vector<Vertex> sample_subsets(std::size_t n, std::size_t k, double p, Rng& rng) {
  check_probability(p);
  std::vector<Vertex> out;
  if (k == 0 || k > n || p == 0.0) return out;
  const std::uint64_t total = binom(n, k);
  if (total == kSaturated) throw InputError("too many candidate faces to sample");
  out.reserve(static_cast<std::size_t>(std::min<double>(static_cast<double>(total) * p * 1.1 + 16, 1e8)) * k);
  if (p == 1.0) {
    out.resize(total * k);
    for (std::uint64_t r = 0; r < total; ++r) unrank(r, n, k, out.data() + r * k);
    return out;
  }
  std::uint64_t pos = 0;
  std::uint64_t last = 0;
  bool have_last = false;
  for (;;) {
    const std::uint64_t skip = rng.geometric(p, total - pos);
    pos += skip;
    if (pos >= total) break;
    out.resize(out.size() + k);
    Vertex* slot = out.data() + out.size() - k;
    // Within one run of subsets that share all but the last element the rank
    // grows with the last element, so short jumps skip the unranking.
    if (have_last) {
      const Vertex* prev = slot - k;
      const std::uint64_t step = pos - last;
      if (step < n - prev[k - 1]) {
        std::copy(prev, prev + k, slot);
        slot[k - 1] = static_cast<Vertex>(prev[k - 1] + step);
        last = pos++;
        continue;
      }
      if (k == 2) {
        // Pairs: walk forward row by row; over one sample this visits each
        // row at most once.
        std::uint64_t u = prev[0], v = prev[1], left = step;
        while (v + left > n - 1) {
          left -= n - 1 - v;
          ++u;
          v = u;
        }
        slot[0] = static_cast<Vertex>(u);
        slot[1] = static_cast<Vertex>(v + left);
        last = pos++;
        continue;
      }
    }
    unrank(pos, n, k, slot);
    have_last = true;
    last = pos++;
  }
  return out;
}

Graph sample_gnp(std::size_t n, double p, Rng& rng) {
  const auto flat = sample_subsets(n, 2, p, rng);
  std::vector<Edge> edges;
  edges.reserve(flat.size() / 2);
  for (std::size_t i = 0; i < flat.size(); i += 2) edges.emplace_back(flat[i], flat[i + 1]);
  return Graph(n, edges);
}

Graph sample_gnp(std::size_t n, double p, RngSpec spec) {
  Rng rng(spec);
  return sample_gnp(n, p, rng);
}

SimplicialComplex sample_flag_complex(std::size_t n, double p, int dim_cap, RngSpec spec) {
  return clique_complex(sample_gnp(n, p, spec), dim_cap);
}

SimplicialComplex sample_linial_meshulam(std::size_t n, int d, double p, RngSpec spec) {
  if (d < 1) throw InputError("sample_linial_meshulam: d must be at least 1");
  check_probability(p);
  Rng rng(spec);
  std::vector<std::vector<Vertex>> layers(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k < d; ++k) {
    const auto size = static_cast<std::size_t>(k) + 1;
    const std::uint64_t total = binom(n, size);
    if (total == kSaturated || total > (std::uint64_t{1} << 32)) throw InputError("complete skeleton too large");
    auto& layer = layers[static_cast<std::size_t>(k)];
    layer.resize(total * size);
    for (std::uint64_t r = 0; r < total; ++r) unrank(r, n, size, layer.data() + r * size);
  }
  layers[static_cast<std::size_t>(d)] = sample_subsets(n, static_cast<std::size_t>(d) + 1, p, rng);
  return SimplicialComplex::from_sorted_layers(n, std::move(layers), SimplicialComplex::kUnbounded);
}

double ReferenceConstants::poisson_mean(double c) const {
  return std::pow(c, 2.0 * d * (d + 1)) / static_cast<double>(crosspolytope_automorphisms(d));
}

double ReferenceConstants::gamma_d() const {
  if (!gamma) throw InputError("gamma_d is tabulated only for 2 <= d <= 5");
  return *gamma;
}

double ReferenceConstants::c_d() const {
  if (!c_threshold) throw InputError("c_d is tabulated only for 2 <= d <= 5");
  return *c_threshold;
}

ReferenceConstants reference_constants(int d) {
  if (d < 1) throw InputError("reference_constants: d must be at least 1");
  static constexpr std::array<double, 4> kGamma{2.455, 3.089, 3.509, 3.822};
  static constexpr std::array<double, 4> kC{2.754, 3.907, 4.962, 5.984};
  ReferenceConstants r;
  r.d = d;
  r.epsilon = 1.0 / (std::ldexp(1.0, 2 * d + 1) * d);
  if (d >= 2 && d <= 5) {
    r.gamma = kGamma[static_cast<std::size_t>(d - 2)];
    r.c_threshold = kC[static_cast<std::size_t>(d - 2)];
  }
  return r;
}

std::uint64_t crosspolytope_automorphisms(int d) {
  if (d < 0 || d > 18) throw InputError("crosspolytope_automorphisms: d out of range");
  std::uint64_t a = std::uint64_t{1} << (d + 1);
  for (int i = 2; i <= d + 1; ++i) a *= static_cast<std::uint64_t>(i);
  return a;
}

double expected_crosspolytope_count(std::size_t n, int d, double p) {
  const auto v = static_cast<std::size_t>(2 * d + 2);
  if (n < v) return 0.0;
  double falling = 1.0;
  for (std::size_t i = 0; i < v; ++i) falling *= static_cast<double>(n - i);
  return falling * std::pow(p, 2.0 * d * (d + 1)) / static_cast<double>(crosspolytope_automorphisms(d));
}

double cycle_probability_limit(double c) {
  if (!(c >= 0.0 && c < 1.0)) throw InputError("cycle_probability_limit: c must lie in [0, 1)");
  return 1.0 - std::sqrt(1.0 - c) * std::exp(c / 2.0 + c * c / 4.0);
}

}  // namespace flaglab
