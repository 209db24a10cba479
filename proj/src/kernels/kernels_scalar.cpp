// SPDX-License-Identifier: Apache-2.0
//
// Reference implementations. Every vector variant is checked against these.

#include "kernels_detail.hpp"

#include <vector>

namespace lindio::kernels::detail {

std::uint64_t popcount_words(const std::uint64_t* words, std::size_t nwords) {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < nwords; ++i) c += static_cast<std::uint64_t>(__builtin_popcountll(words[i]));
  return c;
}

void or_shift_self_scalar(std::uint64_t* w, std::size_t nwords, std::size_t shift) {
  if (shift == 0 || nwords == 0) return;
  std::size_t ws = shift / 64, bs = shift % 64;
  if (ws >= nwords) return;
  // Top-down keeps the reads on pre-call contents: word i only reads words
  // <= i, and words > i were the only ones already rewritten.
  if (bs == 0) {
    for (std::size_t i = nwords; i-- > ws;) w[i] |= w[i - ws];
  } else {
    for (std::size_t i = nwords; i-- > ws;) {
      std::uint64_t v = w[i - ws] << bs;
      if (i - ws >= 1) v |= w[i - ws - 1] >> (64 - bs);
      w[i] |= v;
    }
  }
}

std::uint64_t sum_u32_scalar(const std::uint32_t* v, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc += v[i];
  return acc;
}

double ratio_sum_u32_scalar(const std::uint32_t* num, std::size_t n, std::uint32_t offset) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += static_cast<double>(num[i]) / (static_cast<double>(offset) + static_cast<double>(i));
  }
  return acc;
}

std::uint64_t product_coverage_count_scalar(std::uint32_t p, std::uint32_t cap) {
  std::size_t nwords = (static_cast<std::size_t>(p) + 63) / 64;
  std::vector<std::uint64_t> hit(nwords, 0);
  std::uint64_t covered = 0;
  for (std::uint32_t x = 1; x <= cap; ++x) {
    // Residues x*y mod p for y = x..cap step by +x with one conditional
    // subtract (x < p and r < p keep the sum below 2p). x*y == y*x, so
    // restricting to y >= x loses nothing.
    std::uint64_t r = static_cast<std::uint64_t>(x) * x % p;
    for (std::uint32_t y = x; y <= cap; ++y) {
      hit[r >> 6] |= 1ULL << (r & 63);
      r += x;
      if (r >= p) r -= p;
    }
    covered = popcount_words(hit.data(), nwords);
    if (covered == static_cast<std::uint64_t>(p) - 1) break;
  }
  return covered;
}

}  // namespace lindio::kernels::detail
