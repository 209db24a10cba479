// SPDX-License-Identifier: Apache-2.0
//
// Internal: per-ISA kernel entry points wired up by dispatch.cpp.

#pragma once

#include <cstddef>
#include <cstdint>

namespace lindio::kernels::detail {

void or_shift_self_scalar(std::uint64_t* words, std::size_t nwords, std::size_t shift);
std::uint64_t sum_u32_scalar(const std::uint32_t* v, std::size_t n);
double ratio_sum_u32_scalar(const std::uint32_t* num, std::size_t n, std::uint32_t offset);
std::uint64_t product_coverage_count_scalar(std::uint32_t p, std::uint32_t cap);

#if !defined(LINDIO_NO_AVX2)
void or_shift_self_avx2(std::uint64_t* words, std::size_t nwords, std::size_t shift);
std::uint64_t sum_u32_avx2(const std::uint32_t* v, std::size_t n);
double ratio_sum_u32_avx2(const std::uint32_t* num, std::size_t n, std::uint32_t offset);
std::uint64_t product_coverage_count_avx2(std::uint32_t p, std::uint32_t cap);
#endif

// Shared by both coverage variants: popcount of a word array.
std::uint64_t popcount_words(const std::uint64_t* words, std::size_t nwords);

}  // namespace lindio::kernels::detail
