#include "flaglab/random/rng.hpp"

#include <cmath>

namespace flaglab {

namespace {

std::seed_seq seed_of(RngSpec spec) {
  auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  return std::seed_seq{lo(spec.master_seed), hi(spec.master_seed), lo(spec.stream), hi(spec.stream)};
}

}  // namespace

Rng::Rng(RngSpec spec) {
  auto seq = seed_of(spec);
  engine_.seed(seq);
}

std::uint64_t Rng::geometric(double p, std::uint64_t limit) {
  // Inversion: floor(log U / log(1 - p)) with U in (0, 1].
  const double u = 1.0 - uniform();
  const double skip = std::floor(std::log(u) / std::log1p(-p));
  if (!(skip < static_cast<double>(limit))) return limit;
  return static_cast<std::uint64_t>(skip);
}

}  // namespace flaglab
