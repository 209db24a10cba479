// SPDX-License-Identifier: Apache-2.0

#include "lindio/diophantine.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "lindio/kernels.hpp"

namespace lindio {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

constexpr std::uint64_t kMaxCongruenceSolutions = 1000000;
constexpr std::uint64_t kMaxBitmapBits = std::uint64_t(1) << 30;
constexpr std::uint64_t kMaxTableCells = 40000000;

}  // namespace

std::optional<DiophSolution> solve_linear(const Nat& r, const Nat& s, const Int& n) {
  require(r >= 1 && s >= 1, "solve_linear: coefficients must be positive");
  Nat d = gcd(r, s);
  if (n % d != 0) return std::nullopt;
  BezoutTriple bt = extended_gcd(Int(r), Int(s));
  assert(bt.g == d);
  Nat x_step = s / d, y_step = r / d;
  Int scale = n / Int(d);
  // Shift the particular solution so x0 lands in [0, x_step).
  Int x0 = Int(mod_floor(bt.x * scale, x_step));
  Int y0 = (n - Int(r) * x0) / Int(s);
  assert(Int(r) * x0 + Int(s) * y0 == n);
  return DiophSolution{x0, y0, x_step, y_step, d};
}

std::vector<Nat> solve_congruence(const Nat& a, const Nat& b, const Nat& N) {
  require(N >= 1, "solve_congruence: modulus must be positive");
  require(a >= 0 && b >= 0, "solve_congruence: negative input");
  Nat ar = a % N, br = b % N;
  Nat d = gcd(ar, N);  // gcd(0, N) = N: a ≡ 0 either fails or admits every x
  if (br % d != 0) return {};
  require(d <= kMaxCongruenceSolutions, "solve_congruence: too many solutions to materialize");
  Nat step = N / d;
  Nat x0;
  if (step == 1) {
    x0 = 0;
  } else {
    x0 = mod_floor(Int(mod_inverse(ar / d, step)) * Int(br / d), step);
  }
  std::vector<Nat> out;
  out.reserve(d.convert_to<std::size_t>());
  for (Nat k = 0; k < d; ++k) out.push_back(x0 + k * step);
  return out;
}

Nat frobenius_two(const Nat& r, const Nat& s) {
  require(r >= 2 && s >= 2, "frobenius_two: coins must be >= 2");
  require(gcd(r, s) == 1, "frobenius_two: coins must be coprime");
  return r * s - r - s;
}

std::optional<Nat> frobenius_brute(const std::vector<Nat>& coins, const Nat& cap) {
  require(!coins.empty(), "frobenius_brute: no coins");
  require(cap >= 0, "frobenius_brute: negative cap");
  require(Nat(cap + 1) <= kMaxBitmapBits, "frobenius_brute: cap too large for the bitmap");
  for (const Nat& c : coins) require(c >= 1, "frobenius_brute: coins must be >= 1");

  std::uint64_t bits = cap.convert_to<std::uint64_t>() + 1;
  std::size_t nwords = static_cast<std::size_t>((bits + 63) / 64);
  std::vector<std::uint64_t> reach(nwords, 0);
  reach[0] = 1;  // the empty sum
  for (const Nat& c : coins) {
    if (c > cap) continue;  // cannot contribute inside the window
    kernels::add_multiples_closure(reach.data(), nwords, c.convert_to<std::uint64_t>());
  }
  // Clear slack bits above cap, then report the highest unset position.
  if (bits % 64 != 0) reach[nwords - 1] &= (~0ULL) >> (64 - bits % 64);
  for (std::size_t w = nwords; w-- > 0;) {
    std::uint64_t missing = ~reach[w];
    if (w == nwords - 1 && bits % 64 != 0) missing &= (~0ULL) >> (64 - bits % 64);
    if (missing != 0) {
      unsigned top = 63 - static_cast<unsigned>(__builtin_clzll(missing));
      return Nat(w) * 64 + top;
    }
  }
  return std::nullopt;
}

Nat rep_count(const Nat& r, const Nat& s, const Nat& n) {
  require(r >= 1 && s >= 1, "rep_count: coefficients must be positive");
  require(n >= 0, "rep_count: target must be nonnegative");
  require(gcd(r, s) == 1, "rep_count: coefficients must be coprime");
  if (r == 1) return n / s + 1;
  if (s == 1) return n / r + 1;
  Nat s_inv = mod_inverse(s, r);  // in [1, r)
  Nat r_inv = mod_inverse(r, s);  // in [1, s)
  Int t = Int(n) - Int(s) * Int(mod_floor(Int(s_inv) * Int(n), r)) -
          Int(r) * Int(mod_floor(Int(r_inv) * Int(n), s)) + Int(r) * Int(s);
  Int rs = Int(r) * Int(s);
  if (t % rs != 0 || t < 0) throw std::runtime_error("rep_count: closed form not integral");
  return Nat(t / rs);
}

Nat rep_count_system(const std::vector<Nat>& r_coeffs, const std::vector<Nat>& s_coeffs,
                     const Nat& n, const Nat& m) {
  require(!r_coeffs.empty(), "rep_count_system: no coefficient pairs");
  require(r_coeffs.size() == s_coeffs.size(), "rep_count_system: coefficient lists differ in length");
  require(n >= 0 && m >= 0, "rep_count_system: negative target");
  require(n < kMaxTableCells && m < kMaxTableCells, "rep_count_system: target too large");
  std::uint64_t rows = n.convert_to<std::uint64_t>() + 1;
  std::uint64_t cols = m.convert_to<std::uint64_t>() + 1;
  require(rows * cols <= kMaxTableCells, "rep_count_system: table too large");
  for (std::size_t i = 0; i < r_coeffs.size(); ++i) {
    require(r_coeffs[i] >= 0 && s_coeffs[i] >= 0, "rep_count_system: negative coefficient");
    require(r_coeffs[i] != 0 || s_coeffs[i] != 0, "rep_count_system: (0, 0) coefficient pair");
  }

  std::vector<std::uint64_t> dp(static_cast<std::size_t>(rows * cols), 0);
  dp[0] = 1;
  for (std::size_t i = 0; i < r_coeffs.size(); ++i) {
    std::uint64_t ri = r_coeffs[i].convert_to<std::uint64_t>();
    std::uint64_t si = s_coeffs[i].convert_to<std::uint64_t>();
    if (ri >= rows || si >= cols) continue;
    // In-place ascending sweep = "use this pair any number of times".
    for (std::uint64_t a = ri; a < rows; ++a) {
      for (std::uint64_t b = si; b < cols; ++b) {
        std::uint64_t& cell = dp[static_cast<std::size_t>(a * cols + b)];
        std::uint64_t add = dp[static_cast<std::size_t>((a - ri) * cols + (b - si))];
        if (__builtin_add_overflow(cell, add, &cell)) {
          throw std::overflow_error("rep_count_system: count exceeds 64 bits");
        }
      }
    }
  }
  return Nat(dp[static_cast<std::size_t>(rows * cols - 1)]);
}

RepresentabilityDensity representability_density(const Nat& r, const Nat& s) {
  require(s >= 2 && r > s, "representability_density: need r > s >= 2");
  require(gcd(r, s) == 1, "representability_density: coefficients must be coprime");
  Nat lo = s, hi = (r - 1) * (s - 1);
  require(hi - lo <= 10000000, "representability_density: interval too large");
  Nat count = 0;
  for (Nat n = lo; n <= hi; ++n) {
    if (rep_count(r, s, n) >= 1) ++count;
  }
  return {count, hi - lo + 1};
}

NearSquareSample sample_near_square_constant(const Nat& r, unsigned B, RngStream& rng) {
  require(r >= 16, "sample_near_square_constant: need r >= 16");
  double rd = r.convert_to<double>();
  double denom = std::pow(std::log(rd), static_cast<double>(B));
  Nat bound(static_cast<std::int64_t>(std::sqrt(rd) / denom));
  require(bound >= 1, "sample_near_square_constant: r too small for B");
  Int b1, b2;
  do {
    b1 = Int(rng.range(Int(0) - Int(bound), Int(bound)));
    b2 = Int(rng.range(Int(0) - Int(bound), Int(bound)));
  } while (b1 == b2);
  if (b1 > b2) std::swap(b1, b2);
  Nat n = Nat(2 * Int(r) * (b2 - b1) + b2 * b2 - b1 * b1);
  assert(n > 0);
  assert(Int(n) == (Int(r) + b2) * (Int(r) + b2) - (Int(r) + b1) * (Int(r) + b1));
  return {n, b1, b2};
}

}  // namespace lindio
