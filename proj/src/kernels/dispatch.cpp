// SPDX-License-Identifier: Apache-2.0
//
// Runtime ISA selection. The decision is made once (CPU query is cached);
// tests can override it with force_isa to exercise both paths on one box.

#include "lindio/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "kernels_detail.hpp"

namespace lindio::kernels {

namespace {

// -1 = automatic, otherwise a forced Isa value.
std::atomic<int> g_forced{-1};

bool detect_avx2() {
#if defined(LINDIO_NO_AVX2)
  return false;
#elif defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

}  // namespace

bool avx2_available() {
  static const bool available = detect_avx2();
  return available;
}

Isa active_isa() {
  int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

void force_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_available()) {
    throw std::invalid_argument("avx2 not available on this host");
  }
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_forced.store(-1, std::memory_order_relaxed); }

void or_shift_self(std::uint64_t* words, std::size_t nwords, std::size_t shift) {
#if !defined(LINDIO_NO_AVX2)
  if (active_isa() == Isa::avx2) {
    detail::or_shift_self_avx2(words, nwords, shift);
    return;
  }
#endif
  detail::or_shift_self_scalar(words, nwords, shift);
}

void add_multiples_closure(std::uint64_t* words, std::size_t nwords, std::uint64_t step) {
  if (step == 0 || nwords == 0) return;
  const std::uint64_t nbits = static_cast<std::uint64_t>(nwords) * 64;
  // Doubling shifts: after passes step, 2*step, 4*step, ..., any multiple
  // k*step that fits the window is reachable via k's binary expansion.
  for (std::uint64_t shift = step; shift < nbits; shift *= 2) {
    or_shift_self(words, nwords, static_cast<std::size_t>(shift));
  }
}

std::uint64_t sum_u32(const std::uint32_t* v, std::size_t n) {
#if !defined(LINDIO_NO_AVX2)
  if (active_isa() == Isa::avx2) return detail::sum_u32_avx2(v, n);
#endif
  return detail::sum_u32_scalar(v, n);
}

double ratio_sum_u32(const std::uint32_t* num, std::size_t n, std::uint32_t offset) {
#if !defined(LINDIO_NO_AVX2)
  if (active_isa() == Isa::avx2) return detail::ratio_sum_u32_avx2(num, n, offset);
#endif
  return detail::ratio_sum_u32_scalar(num, n, offset);
}

std::uint64_t product_coverage_count(std::uint32_t p, std::uint32_t cap) {
  if (p < 3 || cap == 0 || cap >= p) throw std::invalid_argument("coverage needs 0 < cap < p, p >= 3");
#if !defined(LINDIO_NO_AVX2)
  if (active_isa() == Isa::avx2) return detail::product_coverage_count_avx2(p, cap);
#endif
  return detail::product_coverage_count_scalar(p, cap);
}

}  // namespace lindio::kernels
