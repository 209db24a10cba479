// SPDX-License-Identifier: Apache-2.0
//
// Statistical experiments over the number-theoretic machinery: quotient-digit
// distributions, division-step averages, coprimality densities, totient sums,
// inverse and negated-inverse uniformity, product coverage modulo a prime,
// and the representability rate of near-square constants.
//
// Every Monte Carlo experiment derives trial i from RngStream(seed, i), so
// trials are independent of execution order and reports are identical for
// any worker count. Accumulators are integers; floating point appears only
// when a finished tally is turned into a report row.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lindio/arith.hpp"

namespace lindio {

struct ObservedRow {
  std::string label;
  double value = 0.0;
};

// Uniform result shape for every experiment: an echo of the configuration,
// the observed rows, the matching theoretical rows, and the experiment's
// headline gap (for most experiments the largest observed-vs-reference gap
// over shared labels; grid and histogram experiments use their cell-level
// maximum). Counts and frequencies both appear as row values; labels say
// which is which.
struct ExperimentReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::uint64_t trials = 0;
  std::vector<ObservedRow> observed;
  std::vector<ObservedRow> reference;
  double deviation = 0.0;
  std::uint64_t seed = 0;
};

// Distribution of the continued-fraction quotient at position `depth`
// (1-indexed past the integer part) for random rationals with 128-bit-plus
// denominators. Reference: the exact first-quotient law 1/(k(k+1)) at depth
// 1, the limiting digit distribution log2(1 + 1/(k(k+2))) deeper in.
// Requires trials >= 1, depth >= 1.
ExperimentReport quotient_digit_distribution(std::uint64_t trials, unsigned depth,
                                             std::uint64_t seed, unsigned workers = 1);

// Mean and variance of the division-step count of gcd(a, b) over uniform
// pairs a, b in [1, 2^magnitude], against the classical average-case mean
// (12 ln 2 / pi^2) * ln(2^magnitude). Requires trials >= 1, magnitude >= 16.
ExperimentReport euclid_steps(std::uint64_t trials, unsigned magnitude,
                              std::uint64_t seed, unsigned workers = 1);

// Fraction of uniform pairs in [1, 2^magnitude]^2 with gcd 1, against
// 6/pi^2. Requires trials >= 1, magnitude >= 1.
ExperimentReport coprime_density(std::uint64_t trials, unsigned magnitude,
                                 std::uint64_t seed, unsigned workers = 1);

// Exact sieve-computed totient sums up to x against their leading
// asymptotic terms: sum phi(n) ~ 3x^2/pi^2 and sum phi(n)/n ~ 6x/pi^2.
// Requires 1 <= x <= 10^7.
ExperimentReport phi_sums(std::uint64_t x);

// Exact count of integers in [x, y] coprime to n (inclusion-exclusion over
// the squarefree divisors of n) against the density heuristic
// phi(n)/n * (y - x). The gap is certified to be at most 2^omega(n).
// Requires 0 < x < y <= n, n with at most 20 distinct prime factors, and n
// factorable by trial division plus a primality check on the cofactor.
ExperimentReport coprime_interval(const Nat& n, const Nat& x, const Nat& y);

// bins x bins tally of (x/n, x^{-1}/n) over all totatives x of n. Exposed
// separately so the full grid can be inspected; the report summarizes it.
// Requires bins >= 1, bins^2 <= phi(n)/10, and n <= 10^7 for enumeration.
std::vector<std::vector<std::uint64_t>> inverse_grid(const Nat& n, unsigned bins);
ExperimentReport inverse_uniformity(const Nat& n, unsigned bins);

// The negated inverse a - (n^{-1} mod a), always in [1, a-1] and coprime to
// a. Requires a >= 2 and gcd(n, a) = 1.
Nat theta_residue(const Nat& n, const Nat& a);

// Distribution of theta_residue over random moduli n coprime to a, against
// the uniform law on the unit residues of a. Reports a chi-square statistic,
// and per-value frequencies when a is small enough to print. Requires
// 3 <= a <= 2^20 and modulus_count >= 1.
ExperimentReport theta_uniformity(const Nat& a, std::uint64_t modulus_count,
                                  std::uint64_t seed, unsigned workers = 1);

// Exact count of distinct products x*y mod p over 1 <= x, y <= cap with
// cap = min(p - 1, floor(sqrt(p) * log10(p)^2.5)), reported as a fraction
// of the p residue classes. Requires p an odd prime, 11 <= p <= 10^5.
ExperimentReport product_coverage(std::uint64_t p);

// Empirical rate at which near-square constants n = (r+b2)^2 - (r+b1)^2 are
// representable as r*x + s*y with 0 <= x, y <= floor(sqrt(r)), against the
// heuristic rate 1/(2 ln(r)^{2B}). Comparison only; no gate on the
// heuristic. Requires gcd(r, s) = 1, s >= 1, s < r minus the sampler's
// offset bound, r >= 16, trials >= 1.
ExperimentReport near_square_representability(const Nat& r, const Nat& s, unsigned b,
                                              std::uint64_t trials, std::uint64_t seed,
                                              unsigned workers = 1);

}  // namespace lindio
