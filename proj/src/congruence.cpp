// SPDX-License-Identifier: Apache-2.0

#include "lindio/congruence.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace lindio {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_unit(const Nat& a, const Nat& r, const char* who) {
  if (!(r > 1 && a > 0 && a < r)) {
    throw std::invalid_argument(std::string(who) + ": need 0 < a < r with r > 1");
  }
  if (gcd(a, r) != 1) {
    throw std::invalid_argument(std::string(who) + ": a and r must be coprime");
  }
}

}  // namespace

std::vector<ThuePair> thue_pairs(const Nat& a, const Nat& r) {
  check_unit(a, r, "thue_pairs");
  std::vector<ThuePair> out;
  // Remainder descent on (r, a); t_k tracks the coefficient of a, so that
  // a * t_k ≡ r_k (mod r) at every step.
  Nat r_prev = r, r_cur = a;
  Int t_prev = 0, t_cur = 1;
  for (;;) {
    out.push_back({t_cur, r_cur});
    Nat q = r_prev / r_cur;
    Nat r_next = r_prev - q * r_cur;
    if (r_next == 0) break;
    Int t_next = t_prev - Int(q) * t_cur;
    r_prev = r_cur;
    r_cur = r_next;
    t_prev = t_cur;
    t_cur = t_next;
  }
  assert(out.back().y == 1);
  return out;
}

ThuePair thue_small_pair(const Nat& a, const Nat& r) {
  check_unit(a, r, "thue_small_pair");
  Nat cap = isqrt(r);
  for (const ThuePair& p : thue_pairs(a, r)) {
    if (p.y <= cap) {
      if (abs(p.x) > cap) throw std::runtime_error("thue_small_pair: coefficient bound breached");
      return p;
    }
  }
  throw std::runtime_error("thue_small_pair: descent ended without a small pair");
}

namespace detail {

std::vector<LcaState> lca_states(const Nat& a, const Nat& c, const Nat& N) {
  std::vector<LcaState> states;
  Nat ap = a, cp = c, np = N;
  Nat yp = cp == 0 ? Nat(0) : Nat(np - cp);  // -c' mod N'
  for (;;) {
    states.push_back({ap, cp, np, yp});
    if (yp == 0) break;
    // Reduce: the modulus becomes the old multiplier, the multiplier its
    // negated remainder. Coprimality keeps this from stalling before y = 0.
    Nat t = np % ap;
    Nat next_a = t == 0 ? Nat(0) : Nat(ap - t);  // -N' mod a'
    np = ap;
    ap = next_a;
    cp = cp % np;
    yp = cp == 0 ? Nat(0) : Nat(np - cp);
    if (np >= states.back().n) throw std::runtime_error("reduction loop failed to shrink the modulus");
  }
  return states;
}

LcaResult lca_recover(const LcaState& st, const Nat& a, const Nat& c, const Nat& N) {
  // x0 is recovered against the ORIGINAL congruence, not the reduced one.
  Nat x0 = mod_floor(Int(mod_inverse(a, N)) * Int(st.y + c), N);
  assert(mod_floor(Int(a) * Int(x0) - Int(c), N) == st.y);
  return {x0, st.y};
}

}  // namespace detail

LcaResult linear_congruence_min(const Nat& a, const Nat& c, const Nat& N, const Nat& B) {
  check_unit(a, N, "linear_congruence_min");
  require(c >= 0 && c < N, "linear_congruence_min: need 0 <= c < N");
  require(B > 0 && B < N, "linear_congruence_min: need 0 < B < N");
  for (const detail::LcaState& st : detail::lca_states(a, c, N)) {
    if (st.y < B) return detail::lca_recover(st, a, c, N);
  }
  throw std::runtime_error("reduction trajectory ended above the cap");  // unreachable: last y = 0
}

Nat inverse_euclid(const Nat& a, const Nat& N) {
  check_unit(a, N, "inverse_euclid");
  return mod_inverse(a, N);
}

Nat inverse_formula(const Nat& a, const Nat& N) {
  check_unit(a, N, "inverse_formula");
  if (a == 1) return 1;
  // theta = (-N^{-1}) mod a, obtained by applying the same formula one level
  // down; the recursion depth matches the Euclid chain of (a, N).
  Nat theta = a - inverse_formula(N % a, a);
  Nat numer = theta * N + 1;
  if (numer % a != 0) throw std::runtime_error("inverse_formula: quotient not integral");
  Nat inv = numer / a;
  assert(inv >= 1 && inv < N);
  return inv;
}

Nat inverse_voronoi(const Nat& a, const Nat& N) {
  check_unit(a, N, "inverse_voronoi");
  require(a <= 10000, "inverse_voronoi: a too large (quadratic cost); use inverse_formula");
  Nat s = 0;
  for (Nat k = 1; k < a; ++k) {
    Nat f = k * N / a;
    s += f * f;
  }
  return mod_floor(Int(3) - 2 * Int(a) + 6 * Int(s), N);
}

InverseBounds inverse_bounds(const Nat& a, const Nat& N) {
  check_unit(a, N, "inverse_bounds");
  require(a >= 2, "inverse_bounds: need a >= 2");
  return {div_ceil(N + 1, a), N - div_ceil(N - 1, a)};
}

MaxInverseDistance max_inverse_distance(std::uint32_t n) {
  require(n >= 2, "max_inverse_distance: need n >= 2");
  require(n <= 100000, "max_inverse_distance: n too large for the exhaustive scan");
  MaxInverseDistance best{0, 1, 1};
  for (std::uint32_t a = 1; a < n; ++a) {
    // Word-size extended Euclid; the cpp_int version would dominate the
    // exhaustive sweeps that call this for every n.
    std::int64_t r0 = a, r1 = n, s0 = 1, s1 = 0;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    if (r0 != 1) continue;  // not a unit
    std::int64_t inv = s0 % static_cast<std::int64_t>(n);
    if (inv < 0) inv += n;
    std::uint64_t d = inv > static_cast<std::int64_t>(a)
                          ? static_cast<std::uint64_t>(inv) - a
                          : a - static_cast<std::uint64_t>(inv);
    if (d > best.m) best = {d, a, static_cast<std::uint32_t>(inv)};
  }
  return best;
}

}  // namespace lindio
