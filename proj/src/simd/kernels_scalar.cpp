#include "flaglab/simd/kernels.hpp"

#include <bit>

namespace flaglab::simd {
namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

void and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::ptrdiff_t find_next_set(const std::uint64_t* a, std::size_t words, std::size_t from) {
  std::size_t w = from / 64;
  if (w >= words) return -1;
  std::uint64_t cur = a[w] & (~std::uint64_t{0} << (from % 64));
  while (true) {
    if (cur != 0) return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(cur));
    if (++w == words) return -1;
    cur = a[w];
  }
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
              std::uint32_t p, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(dst[i]) + static_cast<std::uint64_t>(factor) * src[i]) % p);
  }
}

}  // namespace

const KernelSet& scalar_kernels() {
  static const KernelSet set{"scalar",  &xor_into,      &and_popcount, &and_into,
                             &popcount, &find_next_set, &axpy_mod};
  return set;
}

}  // namespace flaglab::simd
