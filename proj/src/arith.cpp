// SPDX-License-Identifier: Apache-2.0

#include "lindio/arith.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <stdexcept>

namespace lindio {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

GcdSteps gcd_with_steps(const Nat& a, const Nat& b) {
  require(!(a == 0 && b == 0), "gcd undefined for (0, 0)");
  require(a >= 0 && b >= 0, "gcd_with_steps expects nonnegative inputs");
  Nat x = a, y = b;
  std::uint64_t steps = 0;
  while (y != 0) {
    Nat r = x % y;
    x = y;
    y = r;
    ++steps;
  }
  return {x, steps};
}

BezoutTriple extended_gcd(const Int& a, const Int& b) {
  require(!(a == 0 && b == 0), "gcd undefined for (0, 0)");
  // Iterative schoolbook form on |a|, |b|; signs restored at the end.
  Int old_r = abs(a), r = abs(b);
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;  // operands nonnegative, truncation == floor
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (a < 0) old_s = -old_s;
  if (b < 0) old_t = -old_t;
  assert(a * old_s + b * old_t == old_r);
  return {old_r, old_s, old_t};
}

Nat isqrt(const Nat& n) {
  require(n >= 0, "isqrt of negative value");
  if (n == 0) return 0;
  return sqrt(n);  // boost cpp_int sqrt is the exact floor root
}

std::optional<Nat> exact_sqrt(const Nat& n) {
  if (n < 0) return std::nullopt;
  Nat r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

Nat iroot(const Nat& n, unsigned k) {
  require(k >= 1, "iroot exponent must be >= 1");
  require(n >= 0, "iroot of negative value");
  if (k == 1 || n <= 1) return n;
  if (k == 2) return isqrt(n);
  // Binary search over the answer; bit-length bound gives a tight bracket.
  unsigned bits = bit_length(n);
  Nat hi = Nat(1) << (bits / k + 1);
  Nat lo = 0;
  while (lo < hi) {  // invariant: lo^k <= n < hi^k ... converge to floor root
    Nat mid = (lo + hi + 1) >> 1;
    if (pow(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

Int floor_div(const Int& a, const Int& b) {
  require(b != 0, "division by zero");
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Nat mod_floor(const Int& a, const Nat& m) {
  require(m > 0, "modulus must be positive");
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

std::optional<Nat> try_mod_inverse(const Int& a, const Nat& m) {
  if (m <= 1) return std::nullopt;
  Nat ar = mod_floor(a, m);
  if (ar == 0) return std::nullopt;
  BezoutTriple bt = extended_gcd(Int(ar), Int(m));
  if (bt.g != 1) return std::nullopt;
  return mod_floor(bt.x, m);
}

Nat mod_inverse(const Int& a, const Nat& m) {
  auto inv = try_mod_inverse(a, m);
  require(inv.has_value(), "modular inverse does not exist");
  return *inv;
}

Nat mod_pow(const Nat& base, const Nat& exp, const Nat& m) {
  require(m > 0, "modulus must be positive");
  require(exp >= 0, "negative exponent");
  if (m == 1) return 0;
  return powm(base % m, exp, m);
}

bool is_probable_prime(const Nat& n) {
  if (n < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // n odd, > 37. Write n-1 = d * 2^s.
  Nat d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto witness_passes = [&](const Nat& a) {
    Nat x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
      x = (x * x) % n;
      if (x == n - 1) return true;
    }
    return false;
  };
  // First 12 primes decide correctly for all n < 3.3e24; the tail bases
  // push the error probability far below any chance this project exercises.
  for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u,
                          41u, 43u, 47u, 53u, 59u, 61u, 67u, 71u}) {
    if (n == a) return true;  // witness equals n: n is one of these primes
    if (!witness_passes(a)) return false;
  }
  return true;
}

std::optional<std::pair<Nat, unsigned>> perfect_power(const Nat& n) {
  if (n < 4) return std::nullopt;
  unsigned max_k = bit_length(n);  // 2^k <= n constrains k
  for (unsigned k = 2; k <= max_k; ++k) {
    Nat b = iroot(n, k);
    if (b >= 2 && pow(b, k) == n) return std::make_pair(b, k);
  }
  return std::nullopt;
}

unsigned bit_length(const Nat& n) {
  require(n >= 0, "bit_length of negative value");
  if (n == 0) return 0;
  return static_cast<unsigned>(msb(n)) + 1;
}

std::size_t decimal_digits(const Nat& n) {
  require(n >= 0, "decimal_digits of negative value");
  return n.str().size();
}

Nat div_ceil(const Nat& a, const Nat& b) {
  require(b > 0, "division by zero");
  require(a >= 0, "div_ceil expects nonnegative dividend");
  return (a + b - 1) / b;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t n) {
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= n; q += p) {
      composite[static_cast<std::size_t>(q)] = true;
    }
  }
  return out;
}

// ----- RngStream (PCG32, XSH-RR 64/32) -------------------------------------
//
// Hand-rolled on purpose: <random> distributions are implementation-defined,
// and reproducibility across compilers is a hard requirement here. The
// generator is ~15 lines and its output is pinned by unit tests.

namespace {
constexpr std::uint64_t kPcgMult = 6364136223846793005ULL;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id)
    : state_(0), inc_((stream_id << 1u) | 1u), seed_(seed), stream_id_(stream_id) {
  next_u32();
  state_ += seed;
  next_u32();
}

std::uint32_t RngStream::next_u32() {
  std::uint64_t old = state_;
  state_ = old * kPcgMult + inc_;
  std::uint32_t xorshifted = static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  std::uint32_t rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((32u - rot) & 31u));
}

std::uint64_t RngStream::next_u64() {
  std::uint64_t hi = next_u32();
  return (hi << 32) | next_u32();
}

Nat RngStream::below(const Nat& bound) {
  if (bound <= 0) throw std::invalid_argument("rng bound must be positive");
  if (bound == 1) return 0;
  unsigned bits = bit_length(Nat(bound - 1));
  unsigned words = (bits + 31) / 32;
  Nat mask = (Nat(1) << bits) - 1;
  // Rejection sampling on the minimal bit window: unbiased, and the expected
  // number of draws is < 2.
  for (;;) {
    Nat v = 0;
    for (unsigned i = 0; i < words; ++i) {
      v <<= 32;
      v |= next_u32();
    }
    v &= mask;
    if (v < bound) return v;
  }
}

Nat RngStream::range(const Nat& lo, const Nat& hi) {
  if (lo > hi) throw std::invalid_argument("rng range is empty");
  return lo + below(Nat(hi - lo + 1));
}

}  // namespace lindio
