#pragma once

// Data-parallel inner loops used by the bit-packed GF(2) and dense GF(p)
// elimination phases. Every kernel has a portable scalar reference and an
// AVX2 variant; the variant is picked once at startup from CPUID and can be
// forced with the FLAGLAB_SIMD environment variable ("scalar" or "avx2").

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace flaglab::simd {

/// Largest modulus accepted by axpy_mod. Products of two residues stay below
/// 2^52, so the AVX2 path can reduce them exactly in double precision.
inline constexpr std::uint32_t kMaxModulus = 1u << 26;

struct KernelSet {
  std::string_view name;

  /// dst[i] ^= src[i]
  void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

  /// popcount(a[i] & b[i]) summed over i
  std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

  /// dst[i] = a[i] & b[i]
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                   std::size_t words);

  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);

  /// Index of the lowest set bit at or after bit `from`, or -1.
  std::ptrdiff_t (*find_next_set)(const std::uint64_t* a, std::size_t words, std::size_t from);

  /// dst[i] = (dst[i] + factor * src[i]) mod p for residues < p < kMaxModulus.
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t factor,
                   std::uint32_t p, std::size_t n);
};

const KernelSet& scalar_kernels();

/// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelSet* avx2_kernels();

/// The kernel set chosen for this process.
const KernelSet& active();

}  // namespace flaglab::simd
