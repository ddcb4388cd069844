// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.
#include "flaglab/simd/kernels.hpp"

#include <immintrin.h>

#include <bit>

namespace flaglab::simd {
namespace detail {

namespace {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < words; ++i) dst[i] ^= src[i];
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    if (_mm256_testz_si256(x, x)) continue;
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), x);
    total += std::popcount(lanes[0]) + std::popcount(lanes[1]) + std::popcount(lanes[2]) +
             std::popcount(lanes[3]);
  }
  for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

void and_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i x = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                       _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), x);
  }
  for (; i < words; ++i) dst[i] = a[i] & b[i];
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    if (_mm256_testz_si256(x, x)) continue;
    total += std::popcount(a[i]) + std::popcount(a[i + 1]) + std::popcount(a[i + 2]) +
             std::popcount(a[i + 3]);
  }
  for (; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::ptrdiff_t find_next_set(const std::uint64_t* a, std::size_t words, std::size_t from) {
  std::size_t w = from / 64;
  if (w >= words) return -1;
  const std::uint64_t head = a[w] & (~std::uint64_t{0} << (from % 64));
  if (head != 0) return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(head));
  ++w;
  // Skip zero blocks four words at a time.
  while (w + 4 <= words) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + w));
    if (!_mm256_testz_si256(x, x)) break;
    w += 4;
  }
  for (; w < words; ++w) {
    if (a[w] != 0) return static_cast<std::ptrdiff_t>(w * 64 + std::countr_zero(a[w]));
  }
  return -1;
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
              std::uint32_t p, std::size_t n) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d fd = _mm256_set1_pd(static_cast<double>(factor));
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i d32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
    const __m128i s32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
    // Residues are < 2^26, so the signed conversions are exact.
    const __m256d d = _mm256_cvtepi32_pd(d32);
    const __m256d s = _mm256_cvtepi32_pd(s32);
    const __m256d x = _mm256_add_pd(d, _mm256_mul_pd(fd, s));  // < 2^52, exact
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, inv));
    __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, pd));
    // q may be off by one in either direction.
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm256_cvtpd_epi32(r));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(dst[i]) + static_cast<std::uint64_t>(factor) * src[i]) % p);
  }
}

}  // namespace

const KernelSet& avx2_kernel_table() {
  static const KernelSet set{"avx2",    &xor_into,      &and_popcount, &and_into,
                             &popcount, &find_next_set, &axpy_mod};
  return set;
}

}  // namespace detail
}  // namespace flaglab::simd
