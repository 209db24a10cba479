// SPDX-License-Identifier: Apache-2.0

#include "lindio/contfrac.hpp"

#include <stdexcept>

namespace lindio {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

std::vector<Nat> cf_expand(const Nat& num, const Nat& den) {
  require(den > 0, "cf_expand denominator must be positive");
  require(num >= 0, "cf_expand numerator must be nonnegative");
  std::vector<Nat> out;
  Nat x = num, y = den;
  while (y != 0) {
    out.push_back(x / y);
    Nat r = x % y;
    x = y;
    y = r;
  }
  // The division loop ends with a quotient >= 2 whenever there is more than
  // one (the last remainder strictly divides its predecessor), so the result
  // is canonical as-is.
  return out;
}

std::vector<Nat> cf_normalize(std::vector<Nat> quotients) {
  require(!quotients.empty(), "empty quotient list");
  require(quotients.front() >= 0, "first quotient must be nonnegative");
  for (std::size_t i = 1; i < quotients.size(); ++i) {
    require(quotients[i] >= 1, "quotients after the first must be positive");
  }
  if (quotients.size() > 1 && quotients.back() == 1) {
    quotients.pop_back();
    quotients.back() += 1;
  }
  return quotients;
}

std::vector<Convergent> convergents(const std::vector<Nat>& quotients) {
  std::vector<Nat> qs = cf_normalize(quotients);
  std::vector<Convergent> out;
  out.reserve(qs.size());
  Nat p_prev2 = 0, p_prev1 = 1;  // p_{-2}, p_{-1}
  Nat q_prev2 = 1, q_prev1 = 0;  // q_{-2}, q_{-1}
  for (const Nat& a : qs) {
    Nat p = a * p_prev1 + p_prev2;
    Nat q = a * q_prev1 + q_prev2;
    out.push_back({p, q});
    p_prev2 = p_prev1;
    p_prev1 = p;
    q_prev2 = q_prev1;
    q_prev1 = q;
  }
  return out;
}

ConvergentCheck is_convergent_of(const Nat& p, const Nat& q, const Nat& num, const Nat& den) {
  require(q > 0, "denominator q must be positive");
  require(p >= 0 && num >= 0, "negative rational");
  require(den > 0, "denominator must be positive");
  require(gcd(p, q) == 1, "p/q must be in lowest terms");

  Nat err = num * q - p * den;
  if (err < 0) err = -err;
  ConvergentCheck res;
  res.approximation_inequality = 2 * q * err < den;

  res.in_convergent_table = false;
  for (const Convergent& c : convergents(cf_expand(num, den))) {
    if (c.p == p && c.q == q) {
      res.in_convergent_table = true;
      break;
    }
  }
  return res;
}

}  // namespace lindio
