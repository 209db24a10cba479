// SPDX-License-Identifier: Apache-2.0
//
// Integer factoring by linear Diophantine trace search. Random constants
// (c0, c1) against a modulus r yield small solutions of c0^{-1}c1 * x ≡ y
// (mod r); products of the constants with inverted solution components give
// residues s; each s spawns a handful of trace candidates T, and a perfect
// square T^2 - 4N factors N = p*q through the quadratic x^2 - Tx + N.
//
// Three search variants share that core:
//   I    square discriminants only;
//   II   adds near-miss detection (effective approximations) resolved by a
//        bounded divisor scan around the approximate factor;
//   III  replaces the constants by coprime pairs (r, s) near N and walks
//        convergents of r/s, deriving trace candidates from small solutions
//        of a two-term equation between consecutive convergent numerators.
//
// key_recovery drives variant I with the public exponent as modulus and
// difference-of-consecutive-squares probe constants, then converts a
// factorization into the private exponent.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lindio/arith.hpp"

namespace lindio {

inline constexpr std::uint64_t kDefaultSeed = 0xD10FAC70ULL;

// How the per-iteration constants are chosen.
enum class ConstantStrategy {
  uniform_random,       // c0, c1 uniform in [1, r^2)
  random_square_differences,    // c0 = 1, c1 a difference of near-squares around N+1
  consecutive_squares,  // c0 = 1, c1 = (N+1+j)^2 - (N+1)^2 for j = 1, 2, ...
};

// Which product produced a residue candidate.
enum class SOrigin { c0_x_inv, c1_x_inv, c0_y_inv, c1_y_inv };

struct SCandidate {
  Nat s;                   // in [0, r)
  SOrigin origin;
  unsigned variant;        // 0: the product itself; 1: its complement r - s
  std::size_t pair_index;  // 0-based index of the solution pair it came from
};

// Residue candidates for one constant pair, in a pinned deterministic order:
// solution pairs ascending; within a pair x-products before y-products, c0
// before c1, plain value before complement. Components that are not
// invertible mod r are skipped. Requires gcd(c0, r) = gcd(c1, r) = 1 (the
// caller reselects constants otherwise) and r > 1.
std::vector<SCandidate> candidate_s_values(const Nat& r, const Nat& c0, const Nat& c1,
                                           std::size_t max_candidates);

// Trace candidates derived from a residue: N+1-s, N+1+s, and when a modulus
// is supplied also N+1-r±s and N+1+r±s. Values identical up to sign are
// deduplicated (the discriminant depends only on T^2).
std::vector<Int> trace_forms(const Nat& n, const Nat& s, const std::optional<Nat>& r);

struct DiscriminantHit {
  Int t;     // trace candidate as derived (sign preserved for the record)
  Nat d;     // |t|^2 - 4n, a perfect square
  Nat root;  // sqrt(d)
  Nat p, q;  // recovered factors, 1 < p <= q < n
};

struct DiscriminantStats {
  std::uint64_t evaluated = 0;  // discriminants computed
  std::uint64_t squares = 0;    // of those, perfect squares >= 0
};

// Test every trace form of s and return the factorizations found. Trivial
// square discriminants (yielding p = 1) are not hits.
std::vector<DiscriminantHit> discriminant_roots(const Nat& n, const Nat& s,
                                                const std::optional<Nat>& r,
                                                DiscriminantStats* stats = nullptr);

// Exact effective-approximation test: 0 < x0 < x1 < 2*x0 and
// |n - x0*x1|^4 < 81*n^3 (the integer form of |n - x0*x1| < 3*n^{3/4}).
bool effective_approx_test(const Nat& n, const Int& x0, const Int& x1);

// Scan divisor candidates center+U for U = 0, +1, -1, +2, -2, ... up to
// |U| <= radius; returns the first nontrivial factor pair (p <= q), and
// counts examined candidates into *steps when given.
std::optional<std::pair<Nat, Nat>> small_divisor_scan(const Nat& n, const Nat& center,
                                                      const Nat& radius,
                                                      std::uint64_t* steps = nullptr);

// Near-miss resolution used by variant II: for each trace form of s with a
// positive non-square discriminant, take the integer root floors, apply the
// effective-approximation test, and on a pass scan around the smaller root
// with the given radius. Counters accumulate into *work when given.
struct WorkCounters {
  std::uint64_t outer_iterations = 0;      // outer loop turns consumed
  std::uint64_t pair_draws = 0;            // constant / pair draws attempted
  std::uint64_t rejected_draws = 0;        // draws rejected (not invertible/coprime)
  std::uint64_t candidates_generated = 0;  // residue candidates produced
  std::uint64_t discriminants_tested = 0;
  std::uint64_t square_hits = 0;
  std::uint64_t approx_hits = 0;   // variant II effective approximations
  std::uint64_t scan_steps = 0;    // variant II divisor-scan candidates
  std::uint64_t t_candidates = 0;  // variant III trace candidates derived
};

std::optional<std::pair<Nat, Nat>> approx_probe(const Nat& n, const Nat& s,
                                                const std::optional<Nat>& r, const Nat& radius,
                                                WorkCounters* work = nullptr);

struct FactorConfig {
  // Outer loop budget; default 4 * bit_length(N)^4.
  std::optional<std::uint64_t> max_outer;
  // Constant pairs drawn per outer turn.
  std::uint64_t pairs_per_outer = 1;
  // Residue candidates taken per constant pair; default 5 * bit_length(r).
  std::optional<std::uint64_t> candidates_per_pair;
  // Variant III: family members probed per convergent index.
  std::uint64_t alg3_reps_per_n = 8;
  ConstantStrategy constant_strategy = ConstantStrategy::uniform_random;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  // Fill elapsed_ms in reports (off by default so identical inputs give
  // byte-identical reports).
  bool timings = false;
  // Test hooks: pin the modulus draw, the first constant pair, or the
  // variant-III pair component instead of drawing them.
  std::optional<Nat> plant_r, plant_c0, plant_c1, plant_s;
};

inline constexpr std::size_t kTraceEntryLimit = 32;
inline constexpr std::size_t kTraceListLimit = 512;

struct TraceEntry {
  std::uint64_t iteration = 0;
  Nat r;
  std::optional<Nat> s;         // variant III pair component
  std::optional<Nat> c0, c1;    // variants I/II constants
  std::vector<SCandidate> candidates;
  std::vector<Int> discriminants;  // values tested, in order (capped)
  std::vector<Int> t_values;       // variant III trace candidates (capped)
  std::uint64_t square_hits = 0;
};

enum class FactorOutcome { factored, exhausted };

struct FactorReport {
  FactorOutcome outcome = FactorOutcome::exhausted;
  std::string algorithm;  // "I", "II" or "III"
  Nat n;
  std::optional<Nat> p, q;
  std::optional<Nat> r_used;           // variants I/II: the fixed modulus
  std::optional<Nat> s_hit, c1_hit;    // what produced the winning candidate
  WorkCounters work;
  std::vector<TraceEntry> trace;
  std::uint64_t winning_iteration = 0;
  std::uint64_t elapsed_ms = 0;
  std::uint64_t seed = 0;
  unsigned workers_used = 1;
};

// The three search variants. N must be odd, composite, and not a perfect
// power (descriptive std::invalid_argument otherwise). Reports are
// deterministic functions of (N, config) regardless of worker count.
FactorReport algorithm_I(const Nat& n, const FactorConfig& cfg);
FactorReport algorithm_II(const Nat& n, const FactorConfig& cfg);
FactorReport algorithm_III(const Nat& n, const FactorConfig& cfg);

struct KeyRecoveryReport {
  bool factored = false;
  Nat n, e;
  std::optional<Nat> p, q, phi, d;  // d absent when gcd(e, phi) != 1
  std::optional<Nat> c1_hit, s_hit;
  WorkCounters work;
  std::vector<TraceEntry> trace;
  std::uint64_t winning_iteration = 0;
  std::uint64_t elapsed_ms = 0;
  std::uint64_t seed = 0;
  unsigned workers_used = 1;
};

// Recover a private exponent from (N, e) by factoring N with the public
// exponent as modulus. Exhaustion and a non-invertible e both yield an
// absent d rather than an error.
KeyRecoveryReport key_recovery(const Nat& n, const Nat& e, const FactorConfig& cfg);

// Draw window for the modulus r: [n - ceil(1.5*sqrt(2n)), n].
std::pair<Nat, Nat> modulus_window(const Nat& n);
// Draw window for variant-III pairs: [n - ceil(1.5*sqrt(2n)), n - floor(2*sqrt(n))].
std::pair<Nat, Nat> pair_window(const Nat& n);

struct Semiprime {
  std::uint64_t n, p, q;
};

// All n = p*q <= bound with odd primes p < q < 2p, ascending by n.
std::vector<Semiprime> balanced_semiprimes_up_to(std::uint64_t bound);

}  // namespace lindio
