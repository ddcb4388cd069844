#include <doctest.h>

#include <random>
#include <vector>

#include "flaglab/simd/kernels.hpp"

using namespace flaglab::simd;

namespace {

std::vector<std::uint64_t> random_words(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  std::vector<std::uint64_t> w(n);
  std::bernoulli_distribution bit(density);
  for (auto& x : w) {
    for (int b = 0; b < 64; ++b) {
      if (bit(rng)) x |= std::uint64_t{1} << b;
    }
  }
  return w;
}

std::vector<const KernelSet*> variants() {
  std::vector<const KernelSet*> v{&scalar_kernels()};
  if (const KernelSet* a = avx2_kernels()) v.push_back(a);
  return v;
}

}  // namespace

TEST_CASE("kernel variants agree with the scalar reference") {
  std::mt19937_64 rng(99);
  const KernelSet& ref = scalar_kernels();
  MESSAGE("active kernels: " << active().name << ", variants: " << variants().size());
  for (const KernelSet* k : variants()) {
    for (std::size_t words : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 131u}) {
      auto a = random_words(words, rng), b = random_words(words, rng);
      auto x1 = a, x2 = a;
      ref.xor_into(x1.data(), b.data(), words);
      k->xor_into(x2.data(), b.data(), words);
      CHECK(x1 == x2);
      CHECK(ref.and_popcount(a.data(), b.data(), words) == k->and_popcount(a.data(), b.data(), words));
      CHECK(ref.popcount(a.data(), words) == k->popcount(a.data(), words));
      std::vector<std::uint64_t> y1(words), y2(words);
      ref.and_into(y1.data(), a.data(), b.data(), words);
      k->and_into(y2.data(), a.data(), b.data(), words);
      CHECK(y1 == y2);
      auto sparse = random_words(words, rng, 0.002);
      for (std::size_t from = 0; from < words * 64 + 3; from += 1 + from / 3) {
        CHECK(ref.find_next_set(sparse.data(), words, from) == k->find_next_set(sparse.data(), words, from));
      }
    }
  }
}

TEST_CASE("find_next_set semantics") {
  std::vector<std::uint64_t> w(3, 0);
  w[1] = std::uint64_t{1} << 5;
  for (const KernelSet* k : variants()) {
    CHECK(k->find_next_set(w.data(), 3, 0) == 69);
    CHECK(k->find_next_set(w.data(), 3, 69) == 69);
    CHECK(k->find_next_set(w.data(), 3, 70) == -1);
    CHECK(k->find_next_set(w.data(), 3, 1000) == -1);
  }
}

TEST_CASE("modular axpy variants agree, including the largest modulus") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u, 65521u, 67108837u, 67108859u}) {
    std::uniform_int_distribution<std::uint32_t> res(0, p - 1);
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 100u}) {
      std::vector<std::uint32_t> dst(n), src(n);
      for (auto& v : dst) v = res(rng);
      for (auto& v : src) v = res(rng);
      for (std::uint32_t f : {0u, 1u, p - 1, res(rng)}) {
        std::vector<std::uint32_t> expect = dst;
        for (std::size_t i = 0; i < n; ++i) expect[i] = static_cast<std::uint32_t>((expect[i] + std::uint64_t{f} * src[i]) % p);
        for (const KernelSet* k : variants()) {
          auto got = dst;
          k->axpy_mod(got.data(), src.data(), f, p, n);
          CHECK(got == expect);
        }
      }
    }
  }
}
