// SPDX-License-Identifier: Apache-2.0
//
// Continued fractions of nonnegative rationals: quotient expansion via the
// remainder loop, convergents via the standard three-term recurrence, and
// the classical best-approximation test that underpins the factoring search.

#pragma once

#include <vector>

#include "lindio/arith.hpp"

namespace lindio {

struct Convergent {
  Nat p;  // numerator, in lowest terms by construction
  Nat q;  // denominator, strictly increasing from index 1 on
};

// Continued-fraction quotients of num/den from the division loop. den > 0,
// num >= 0. The output is canonical: a single quotient, or a final quotient
// >= 2; interior quotients are >= 1.
std::vector<Nat> cf_expand(const Nat& num, const Nat& den);

// Validate a quotient list (first >= 0, rest >= 1) and fold a trailing 1
// into its predecessor so [..., a, 1] becomes [..., a+1].
std::vector<Nat> cf_normalize(std::vector<Nat> quotients);

// Convergents p_n/q_n of the (normalized) quotient list, one per quotient.
std::vector<Convergent> convergents(const std::vector<Nat>& quotients);

struct ConvergentCheck {
  // 2*q*|num*q - p*den| < den, i.e. |num/den - p/q| < 1/(2q^2).
  bool approximation_inequality;
  // p/q literally appears in the convergent table of num/den.
  bool in_convergent_table;
};

// Both halves of the best-approximation criterion, reported separately
// (the inequality implies table membership; the converse can fail).
// Requires q > 0, gcd(p, q) = 1, den > 0, p and num nonnegative.
ConvergentCheck is_convergent_of(const Nat& p, const Nat& q, const Nat& num, const Nat& den);

}  // namespace lindio
