// SPDX-License-Identifier: Apache-2.0
//
// Congruence toolbox: small-solution pairs for a*x ≡ y (mod r) from the
// extended-Euclid descent, a minimal-solution search for a*x ≡ y + c (mod N)
// with y below a cap, and four routes to the modular inverse (Euclid, a
// closed-form recursion, a floor-sum formula, and two-sided bounds).

#pragma once

#include <cstdint>
#include <vector>

#include "lindio/arith.hpp"

namespace lindio {

struct ThuePair {
  Int x;  // Bezout coefficient of a; signs alternate strictly along the list
  Nat y;  // Euclid remainder; strictly decreasing, ends at gcd = 1
};

// All pairs (x_k, y_k) with a*x_k ≡ y_k (mod r) produced by the remainder
// descent on (r, a). Requires 0 < a < r and gcd(a, r) = 1. The list starts
// at (1, a) and ends with y = 1.
std::vector<ThuePair> thue_pairs(const Nat& a, const Nat& r);

// First pair of the descent with y <= floor(sqrt(r)); the classical identity
// |x_k| * y_{k-1} + |x_{k-1}| * y_k = r then guarantees |x| <= floor(sqrt(r))
// as well, so both components are small.
ThuePair thue_small_pair(const Nat& a, const Nat& r);

struct LcaResult {
  Nat x0;  // smallest x >= 0 with (a*x - c) mod N < B
  Nat y0;  // the residue at that x
};

// Minimal solution of a*x ≡ y + c (mod N) with y < B, minimizing x >= 0.
// Requires N > 1, 0 < a < N, 0 <= c < N, 0 < B < N, gcd(a, N) = 1.
// Runs in O(log N) divisions rather than scanning x.
LcaResult linear_congruence_min(const Nat& a, const Nat& c, const Nat& N, const Nat& B);

// Inverse of a modulo N via extended Euclid, in [1, N).
// Requires 0 < a < N, N > 1, gcd(a, N) = 1.
Nat inverse_euclid(const Nat& a, const Nat& N);

// Same value through the closed-form recursion a^{-1} = (theta*N + 1) / a
// with theta = (-N^{-1}) mod a; the division must come out exact, and a
// non-integral quotient is reported as an internal invariant breach.
Nat inverse_formula(const Nat& a, const Nat& N);

// Same value through the floor-sum identity
// a^{-1} ≡ 3 - 2a + 6 * sum_{k<a} floor(kN/a)^2 (mod N).
// Quadratic in a, so capped at a <= 10^4; use inverse_formula beyond that.
Nat inverse_voronoi(const Nat& a, const Nat& N);

struct InverseBounds {
  Nat lo;  // ceil((N+1)/a)
  Nat hi;  // N - ceil((N-1)/a)
};

// Two-sided a-priori bounds on a^{-1} mod N. Requires 2 <= a < N coprime.
InverseBounds inverse_bounds(const Nat& a, const Nat& N);

struct MaxInverseDistance {
  std::uint64_t m;  // max over units of |a - a^{-1} mod n|
  std::uint32_t a;  // first witness attaining it
  std::uint32_t b;  // a^{-1} mod n
};

// Exhaustive maximum of |a - a^{-1}| over the units of Z/n. n in [2, 10^5].
MaxInverseDistance max_inverse_distance(std::uint32_t n);

namespace detail {

// One snapshot of the reduction loop behind linear_congruence_min, taken at
// each loop test: current (a', c', N') and the candidate y' = -c' mod N'.
struct LcaState {
  Nat a, c, n, y;
};

// Full trajectory of the reduction, which does not depend on the cap B: the
// public function stops at the first state with y < B. The last state always
// has y = 0, and the moduli n decrease strictly.
std::vector<LcaState> lca_states(const Nat& a, const Nat& c, const Nat& N);

// Recover the minimal x for the state picked by a given cap.
LcaResult lca_recover(const LcaState& st, const Nat& a, const Nat& c, const Nat& N);

}  // namespace detail

}  // namespace lindio
