// SPDX-License-Identifier: Apache-2.0
//
// Linear Diophantine equations and representation counting: two-variable
// solvers, congruence solution lists, Frobenius numbers (closed form and
// bitmap search), exact representation counts via the inverse-remainder
// formula, and a sampler for near-square constants used by the factoring
// experiments.

#pragma once

#include <optional>
#include <vector>

#include "lindio/arith.hpp"

namespace lindio {

struct DiophSolution {
  Int x0;      // particular solution with 0 <= x0 < x_step
  Int y0;
  Nat x_step;  // s / d: the full solution set is (x0 + x_step*t, y0 - y_step*t)
  Nat y_step;  // r / d
  Nat d;       // gcd(r, s)
};

// General solution of r*x + s*y = n over the integers; r, s >= 1.
// Returns nullopt when gcd(r, s) does not divide n.
std::optional<DiophSolution> solve_linear(const Nat& r, const Nat& s, const Int& n);

// All solutions of a*x ≡ b (mod N) in [0, N), ascending; empty when none
// exist. There are gcd(a, N) of them, so the count is capped (10^6) to keep
// the materialized list sane; beyond that the call is rejected.
std::vector<Nat> solve_congruence(const Nat& a, const Nat& b, const Nat& N);

// Largest integer not representable as r*x + s*y with x, y >= 0, in closed
// form. Requires coprime r, s >= 2.
Nat frobenius_two(const Nat& r, const Nat& s);

// Largest n <= cap that is NOT a nonnegative combination of the coins, by
// bitmap dynamic programming; nullopt when every n in [0, cap] is
// representable. Coins must be >= 1; cap is limited to 2^30 bits.
std::optional<Nat> frobenius_brute(const std::vector<Nat>& coins, const Nat& cap);

// Exact number of nonnegative solutions (x, y) of r*x + s*y = n for coprime
// r, s >= 1, via the inverse-remainder formula (no enumeration). The closed
// form divides exactly; a remainder is an internal invariant breach.
Nat rep_count(const Nat& r, const Nat& s, const Nat& n);

// Count nonnegative integer vectors t with sum r_i*t_i = n and
// sum s_i*t_i = m, by two-dimensional dynamic programming. Coefficient
// pairs must not be (0, 0); the (n+1)*(m+1) table is size-capped, and a
// count overflowing 64 bits throws std::overflow_error.
Nat rep_count_system(const std::vector<Nat>& r_coeffs, const std::vector<Nat>& s_coeffs,
                     const Nat& n, const Nat& m);

struct RepresentabilityDensity {
  Nat representable;  // how many n in [s, (r-1)(s-1)] have a solution
  Nat total;          // size of that interval
};

// Density of representable targets across the interesting interval.
// Requires r > s >= 2 coprime.
RepresentabilityDensity representability_density(const Nat& r, const Nat& s);

struct NearSquareSample {
  Nat n;   // 2r(b2-b1) + b2^2 - b1^2 = (r+b2)^2 - (r+b1)^2 > 0
  Int b1;  // both drawn from [-bound, bound], bound = floor(sqrt(r)/(ln r)^B)
  Int b2;  // strictly greater than b1
};

// Draw a difference-of-near-squares constant around r. Requires r >= 16 and
// a B small enough that the draw window is nonempty.
NearSquareSample sample_near_square_constant(const Nat& r, unsigned B, RngStream& rng);

}  // namespace lindio
