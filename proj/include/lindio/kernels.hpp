// SPDX-License-Identifier: Apache-2.0
//
// Hot inner loops behind a tiny runtime-dispatch layer: a scalar reference
// implementation always exists, and an AVX2 variant is selected at startup
// when the CPU supports it. Tests can pin the implementation with force_isa
// and check the variants agree (bit-exact for integer kernels; floating-point
// reductions may differ by rounding order and are compared with tolerance).

#pragma once

#include <cstddef>
#include <cstdint>

namespace lindio::kernels {

enum class Isa { scalar, avx2 };

// True when the AVX2 variants were compiled in and the CPU reports support.
bool avx2_available();

// Implementation that calls will actually use right now.
Isa active_isa();

// Pin the implementation (test hook). Throws std::invalid_argument when the
// requested ISA is unavailable. reset_isa() returns to automatic selection.
void force_isa(Isa isa);
void reset_isa();

// words |= words << shift, over a fixed window of nwords 64-bit words.
// Bits shifted beyond the window are dropped. The right-hand side reads the
// pre-call contents (self-aliasing is handled).
void or_shift_self(std::uint64_t* words, std::size_t nwords, std::size_t shift);

// Close a bit set under "add step": afterwards, bit (b + k*step) is set for
// every originally set bit b and every k >= 0 that stays inside the window.
// Runs log2(window/step) or_shift_self passes with doubling shifts.
void add_multiples_closure(std::uint64_t* words, std::size_t nwords, std::uint64_t step);

// Horizontal sum of 32-bit values into a 64-bit accumulator. Exact.
std::uint64_t sum_u32(const std::uint32_t* v, std::size_t n);

// Sum of num[i] / (offset + i) as double, i in [0, n). offset >= 1.
// Lane-parallel accumulation reassociates, so variants agree only to ~1e-12.
double ratio_sum_u32(const std::uint32_t* num, std::size_t n, std::uint32_t offset);

// Number of distinct residues of x*y mod p over 1 <= x, y <= cap, cap < p,
// p an odd prime. Early-exits once all p-1 nonzero residues are covered.
std::uint64_t product_coverage_count(std::uint32_t p, std::uint32_t cap);

}  // namespace lindio::kernels
