// SPDX-License-Identifier: Apache-2.0
//
// AVX2 variants. This translation unit is the only one built with -mavx2;
// nothing here runs unless dispatch confirmed CPU support at runtime.

#if !defined(LINDIO_NO_AVX2)

#include <immintrin.h>

#include <cstring>
#include <vector>

#include "kernels_detail.hpp"

namespace lindio::kernels::detail {

void or_shift_self_avx2(std::uint64_t* w, std::size_t nwords, std::size_t shift) {
  if (shift == 0 || nwords == 0) return;
  std::size_t ws = shift / 64, bs = shift % 64;
  if (ws >= nwords) return;
  std::size_t i = nwords;
  if (bs == 0) {
    // Blocks of four words, top-down; sources sit at or below the block, so
    // nothing reads a word this pass already rewrote.
    while (i >= ws + 4) {
      i -= 4;
      __m256i src = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i - ws));
      __m256i dst = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(w + i), _mm256_or_si256(dst, src));
    }
    while (i > ws) {
      --i;
      w[i] |= w[i - ws];
    }
  } else {
    // Need the word one below the aligned source too, hence ws + 5.
    while (i >= ws + 5) {
      i -= 4;
      __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i - ws));
      __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i - ws - 1));
      __m256i v = _mm256_or_si256(_mm256_slli_epi64(hi, static_cast<int>(bs)),
                                  _mm256_srli_epi64(lo, static_cast<int>(64 - bs)));
      __m256i dst = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(w + i), _mm256_or_si256(dst, v));
    }
    while (i > ws) {
      --i;
      std::uint64_t v = w[i - ws] << bs;
      if (i - ws >= 1) v |= w[i - ws - 1] >> (64 - bs);
      w[i] |= v;
    }
  }
}

std::uint64_t sum_u32_avx2(const std::uint32_t* v, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    // Widen each u32 half to u64 lanes so the accumulator cannot overflow.
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(x)));
    acc = _mm256_add_epi64(acc, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(x, 1)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) total += v[i];
  return total;
}

double ratio_sum_u32_avx2(const std::uint32_t* num, std::size_t n, std::uint32_t offset) {
  __m256d acc = _mm256_setzero_pd();
  const __m256d step = _mm256_set1_pd(4.0);
  __m256d den = _mm256_add_pd(_mm256_set1_pd(static_cast<double>(offset)),
                              _mm256_set_pd(3.0, 2.0, 1.0, 0.0));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i raw = _mm_loadu_si128(reinterpret_cast<const __m128i*>(num + i));
    __m256d x = _mm256_cvtepi32_pd(raw);  // values < 2^31, signed convert is exact
    acc = _mm256_add_pd(acc, _mm256_div_pd(x, den));
    den = _mm256_add_pd(den, step);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    total += static_cast<double>(num[i]) / (static_cast<double>(offset) + static_cast<double>(i));
  }
  return total;
}

std::uint64_t product_coverage_count_avx2(std::uint32_t p, std::uint32_t cap) {
  std::size_t nwords = (static_cast<std::size_t>(p) + 63) / 64;
  std::vector<std::uint64_t> hit(nwords, 0);
  std::uint64_t covered = 0;
  alignas(32) std::uint32_t lane[8];
  for (std::uint32_t x = 1; x <= cap; ++x) {
    std::uint64_t r0 = static_cast<std::uint64_t>(x) * x % p;
    std::uint32_t y = x;
    // Eight residues x*(y..y+7) mod p per vector; stepping adds 8x mod p to
    // every lane with a compare-and-subtract. All values stay below 2^31, so
    // signed 32-bit compares are safe.
    if (cap - x + 1 >= 8) {
      for (int j = 0; j < 8; ++j) {
        lane[j] = static_cast<std::uint32_t>(r0);
        r0 += x;
        if (r0 >= p) r0 -= p;
      }
      __m256i rv = _mm256_load_si256(reinterpret_cast<const __m256i*>(lane));
      const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
      const __m256i stepv = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint64_t>(8) * x % p));
      for (; y + 7 <= cap; y += 8) {
        _mm256_store_si256(reinterpret_cast<__m256i*>(lane), rv);
        for (int j = 0; j < 8; ++j) {
          hit[lane[j] >> 6] |= 1ULL << (lane[j] & 63);
        }
        rv = _mm256_add_epi32(rv, stepv);
        __m256i ge = _mm256_cmpgt_epi32(pv, rv);  // ge = (rv < p) ? -1 : 0
        rv = _mm256_sub_epi32(rv, _mm256_andnot_si256(ge, pv));
      }
      _mm256_store_si256(reinterpret_cast<__m256i*>(lane), rv);
      r0 = lane[0];
    }
    for (; y <= cap; ++y) {
      hit[r0 >> 6] |= 1ULL << (r0 & 63);
      r0 += x;
      if (r0 >= p) r0 -= p;
    }
    covered = popcount_words(hit.data(), nwords);
    if (covered == static_cast<std::uint64_t>(p) - 1) break;
  }
  return covered;
}

}  // namespace lindio::kernels::detail

#endif  // !LINDIO_NO_AVX2
