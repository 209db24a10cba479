// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision integer plumbing shared by every other component:
// gcd with division counting, exact integer roots, perfect-square and
// perfect-power detection, modular arithmetic, a strong-pseudoprime test,
// and a deterministic seeded random stream.
//
// All core math is exact integer arithmetic; no floating point is used for
// any value that feeds a square test or a discriminant.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lindio {

// Semantic aliases: Nat for values that are nonnegative by contract,
// Int where signs carry meaning (Bezout coefficients, solution components).
// Both share one representation; ops taking Nat validate sign at the boundary.
using Nat = boost::multiprecision::cpp_int;
using Int = boost::multiprecision::cpp_int;

struct GcdSteps {
  Nat g;
  std::uint64_t divisions = 0;  // division steps executed, final zero-remainder step included
};

// gcd with the number of division steps the classic remainder loop performs.
// Throws std::invalid_argument if both inputs are zero.
GcdSteps gcd_with_steps(const Nat& a, const Nat& b);

struct BezoutTriple {
  Nat g;   // gcd, always positive
  Int x;   // a*x + b*y = g
  Int y;
};

// Extended Euclid. Requires at least one input nonzero.
BezoutTriple extended_gcd(const Int& a, const Int& b);

// Floor square root, exact. isqrt(n)^2 <= n < (isqrt(n)+1)^2.
Nat isqrt(const Nat& n);

// Perfect-square test; returns the root when n is a square.
std::optional<Nat> exact_sqrt(const Nat& n);

// Floor k-th root, exact (binary search on the k-th power). k >= 1.
Nat iroot(const Nat& n, unsigned k);

// Floor division / floor remainder with sign handling (C++ '/' truncates).
Int floor_div(const Int& a, const Int& b);
// Reduce into [0, m). m > 0.
Nat mod_floor(const Int& a, const Nat& m);

// Modular inverse in [1, m) via extended Euclid; throws std::invalid_argument
// unless gcd(a, m) = 1 and m > 1. try_* returns nullopt instead of throwing.
Nat mod_inverse(const Int& a, const Nat& m);
std::optional<Nat> try_mod_inverse(const Int& a, const Nat& m);

// (base^exp) mod m, m > 0.
Nat mod_pow(const Nat& base, const Nat& exp, const Nat& m);

// Strong-pseudoprime (Miller-Rabin) test. Deterministic witness set below
// 3.3e24; above that a fixed extended base list makes the answer a
// high-confidence label, which is all the factoring pre-screens need.
bool is_probable_prime(const Nat& n);

// Smallest-exponent perfect-power decomposition: returns (b, k) with
// b^k = n, k >= 2, if one exists.
std::optional<std::pair<Nat, unsigned>> perfect_power(const Nat& n);

// Digit/bit measures. bit_length(0) = 0; decimal_digits(0) = 1.
unsigned bit_length(const Nat& n);
std::size_t decimal_digits(const Nat& n);

// ceil(a/b) for positive operands.
Nat div_ceil(const Nat& a, const Nat& b);

// Simple prime sieve, ascending.
std::vector<std::uint32_t> primes_up_to(std::uint32_t n);

// Deterministic random stream (PCG32, XSH-RR 64/32). Identical
// (seed, stream_id) reproduce the same sequence on every platform; distinct
// stream ids give statistically independent sequences, which is how work
// fans out across threads without changing results.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  // Uniform in [0, bound), bound > 0. Rejection sampling, exact.
  Nat below(const Nat& bound);
  // Uniform in [lo, hi] inclusive; throws std::invalid_argument if lo > hi.
  Nat range(const Nat& lo, const Nat& hi);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

 private:
  std::uint64_t state_;
  std::uint64_t inc_;
  std::uint64_t seed_;
  std::uint64_t stream_id_;
};

}  // namespace lindio
