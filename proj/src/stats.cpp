// SPDX-License-Identifier: Apache-2.0

#include "lindio/stats.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "lindio/arith.hpp"
#include "lindio/contfrac.hpp"
#include "lindio/diophantine.hpp"

namespace lindio {

namespace {

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

// Trials partition round-robin across workers; each trial seeds its own
// stream, and accumulators are integer tallies merged by addition, so the
// result is identical for every worker count.
template <typename Acc, typename Body>
Acc run_trials(std::uint64_t trials, unsigned workers, const Body& body) {
  if (workers <= 1) {
    Acc acc{};
    for (std::uint64_t i = 0; i < trials; ++i) body(acc, i);
    return acc;
  }
  std::vector<Acc> parts(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::uint64_t i = w; i < trials; i += workers) body(parts[w], i);
    });
  }
  for (auto& th : pool) th.join();
  Acc merged{};
  for (const auto& part : parts) merged.merge(part);
  return merged;
}

void check_trial_args(std::uint64_t trials, unsigned workers) {
  require(trials >= 1, "experiment needs at least one trial");
  require(workers >= 1 && workers <= 256, "workers must lie in [1, 256]");
}

// Distinct prime factors by trial division against a sieve, with a
// primality or perfect-power fallback for the remaining cofactor.
std::vector<Nat> distinct_prime_factors(const Nat& n) {
  require(n >= 2, "factorization needs n >= 2");
  static const std::vector<std::uint32_t> small_primes = primes_up_to(100000);
  std::vector<Nat> factors;
  Nat rest = n;
  for (std::uint32_t p : small_primes) {
    if (Nat(p) * p > rest) break;
    if (rest % p == 0) {
      factors.emplace_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  while (rest > 1) {
    if (is_probable_prime(rest)) {
      factors.push_back(rest);
      break;
    }
    auto power = perfect_power(rest);
    if (!power || !is_probable_prime(power->first)) {
      throw std::invalid_argument("cannot determine the prime factors of n");
    }
    factors.push_back(power->first);
    Nat base = power->first;
    while (rest % base == 0) rest /= base;
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

Nat totient_from_factors(const Nat& n, const std::vector<Nat>& factors) {
  Nat phi = n;
  for (const Nat& p : factors) phi = phi / p * (p - 1);
  return phi;
}

double max_label_gap(const std::vector<ObservedRow>& observed,
                     const std::vector<ObservedRow>& reference) {
  double gap = 0.0;
  for (const auto& obs : observed) {
    for (const auto& ref : reference) {
      if (obs.label == ref.label) gap = std::max(gap, std::fabs(obs.value - ref.value));
    }
  }
  return gap;
}

constexpr double kPi = 3.14159265358979323846;
// 12 ln 2 / pi^2: the average-case division-count factor of the gcd loop.
constexpr double kEuclidMeanFactor = 0.84276591327219451;

// Offset cap used by the near-square sampler; kept textually in sync with
// sample_near_square_constant so the precondition here matches its draws.
Nat near_square_offset_bound(const Nat& r, unsigned b) {
  double rd = r.convert_to<double>();
  return Nat(static_cast<std::int64_t>(std::sqrt(rd) / std::pow(std::log(rd), b)));
}

}  // namespace

ExperimentReport quotient_digit_distribution(std::uint64_t trials, unsigned depth,
                                             std::uint64_t seed, unsigned workers) {
  check_trial_args(trials, workers);
  require(depth >= 1, "quotient position must be at least 1");

  constexpr std::size_t kBuckets = 15;  // quotients 1..15 exact, larger pooled
  struct Acc {
    std::array<std::uint64_t, kBuckets + 1> counts{};
    void merge(const Acc& other) {
      for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    }
  };

  const Nat half = Nat(1) << 128;
  Acc acc = run_trials<Acc>(trials, workers, [&](Acc& a, std::uint64_t i) {
    RngStream rng(seed, i);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Nat den = half + rng.below(half);
      Nat num = rng.range(1, den - 1);
      auto quotients = cf_expand(num, den);
      if (quotients.size() <= depth) continue;  // expansion too short, redraw
      const Nat& digit = quotients[depth];
      std::size_t slot =
          digit > kBuckets ? kBuckets : digit.convert_to<std::size_t>() - 1;
      ++a.counts[slot];
      return;
    }
    throw std::runtime_error("quotient sampling kept drawing short expansions");
  });

  ExperimentReport rep;
  rep.name = "quotient-digits";
  rep.parameters = {{"depth", std::to_string(depth)}};
  rep.trials = trials;
  rep.seed = seed;
  double ref_tail = 1.0;
  for (std::size_t k = 1; k <= kBuckets; ++k) {
    double freq = static_cast<double>(acc.counts[k - 1]) / static_cast<double>(trials);
    double ref = depth == 1
                     ? 1.0 / (static_cast<double>(k) * (k + 1))
                     : std::log2(1.0 + 1.0 / (static_cast<double>(k) * (k + 2)));
    ref_tail -= ref;
    rep.observed.push_back({std::to_string(k), freq});
    rep.reference.push_back({std::to_string(k), ref});
  }
  rep.observed.push_back(
      {">15", static_cast<double>(acc.counts[kBuckets]) / static_cast<double>(trials)});
  rep.reference.push_back({">15", ref_tail});
  rep.deviation = max_label_gap(rep.observed, rep.reference);
  return rep;
}

ExperimentReport euclid_steps(std::uint64_t trials, unsigned magnitude,
                              std::uint64_t seed, unsigned workers) {
  check_trial_args(trials, workers);
  require(magnitude >= 16, "magnitude must be at least 16 bits");
  require(magnitude <= 4096, "magnitude above 4096 bits is unsupported");

  struct Acc {
    std::uint64_t sum = 0;
    std::uint64_t sum_sq = 0;
    void merge(const Acc& other) {
      sum += other.sum;
      sum_sq += other.sum_sq;
    }
  };

  const Nat top = Nat(1) << magnitude;
  Acc acc = run_trials<Acc>(trials, workers, [&](Acc& a, std::uint64_t i) {
    RngStream rng(seed, i);
    Nat x = rng.range(1, top);
    Nat y = rng.range(1, top);
    std::uint64_t steps = gcd_with_steps(x, y).divisions;
    a.sum += steps;
    a.sum_sq += steps * steps;
  });

  const double mean = static_cast<double>(acc.sum) / static_cast<double>(trials);
  const double variance =
      static_cast<double>(acc.sum_sq) / static_cast<double>(trials) - mean * mean;
  const double ref_mean = kEuclidMeanFactor * magnitude * std::log(2.0);

  ExperimentReport rep;
  rep.name = "euclid-steps";
  rep.parameters = {{"magnitude", std::to_string(magnitude)}};
  rep.trials = trials;
  rep.seed = seed;
  rep.observed = {{"mean_divisions", mean}, {"variance", variance}};
  rep.reference = {{"mean_divisions", ref_mean}};
  rep.deviation = max_label_gap(rep.observed, rep.reference);
  return rep;
}

ExperimentReport coprime_density(std::uint64_t trials, unsigned magnitude,
                                 std::uint64_t seed, unsigned workers) {
  check_trial_args(trials, workers);
  require(magnitude >= 1, "magnitude must be at least 1 bit");
  require(magnitude <= 4096, "magnitude above 4096 bits is unsupported");

  struct Acc {
    std::uint64_t coprime = 0;
    void merge(const Acc& other) { coprime += other.coprime; }
  };

  const Nat top = Nat(1) << magnitude;
  Acc acc = run_trials<Acc>(trials, workers, [&](Acc& a, std::uint64_t i) {
    RngStream rng(seed, i);
    Nat x = rng.range(1, top);
    Nat y = rng.range(1, top);
    if (gcd(x, y) == 1) ++a.coprime;
  });

  ExperimentReport rep;
  rep.name = "coprime-density";
  rep.parameters = {{"magnitude", std::to_string(magnitude)}};
  rep.trials = trials;
  rep.seed = seed;
  rep.observed = {{"coprime_fraction",
                   static_cast<double>(acc.coprime) / static_cast<double>(trials)}};
  rep.reference = {{"coprime_fraction", 6.0 / (kPi * kPi)}};
  rep.deviation = max_label_gap(rep.observed, rep.reference);
  return rep;
}

ExperimentReport phi_sums(std::uint64_t x) {
  require(x >= 1, "totient sums need x >= 1");
  require(x <= 10000000, "totient sums cap at x = 10^7");

  // Sieve phi over [1, x]: start at the identity and peel each prime.
  std::vector<std::uint32_t> phi(x + 1);
  for (std::uint64_t i = 0; i <= x; ++i) phi[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (phi[p] != p) continue;  // composite, already reduced
    for (std::uint64_t m = p; m <= x; m += p) phi[m] -= phi[m] / p;
  }

  std::uint64_t sum = 0;
  double ratio_sum = 0.0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    sum += phi[n];
    ratio_sum += static_cast<double>(phi[n]) / static_cast<double>(n);
  }

  const double xd = static_cast<double>(x);
  const double sum_ref = 3.0 / (kPi * kPi) * xd * xd;
  const double ratio_ref = 6.0 / (kPi * kPi) * xd;

  ExperimentReport rep;
  rep.name = "phi-sums";
  rep.parameters = {{"x", std::to_string(x)}};
  rep.trials = x;
  rep.observed = {{"totient_sum", static_cast<double>(sum)},
                  {"totient_ratio_sum", ratio_sum}};
  rep.reference = {{"totient_sum", sum_ref}, {"totient_ratio_sum", ratio_ref}};
  if (x >= 2) {
    // Normalized error of the quadratic term; the classical remainder is
    // O(x log x), so this ratio should stay bounded as x grows.
    rep.observed.push_back({"totient_sum_error_over_x_ln_x",
                            std::fabs(static_cast<double>(sum) - sum_ref) /
                                (xd * std::log(xd))});
  }
  rep.deviation = max_label_gap(rep.observed, rep.reference);
  return rep;
}

ExperimentReport coprime_interval(const Nat& n, const Nat& x, const Nat& y) {
  require(n >= 2, "modulus must be at least 2");
  require(x > 0 && x < y && y <= n, "need 0 < x < y <= n");

  auto factors = distinct_prime_factors(n);
  require(factors.size() <= 20, "n has too many distinct prime factors");

  // Inclusion-exclusion over squarefree divisors: each subset of the prime
  // factors contributes the signed count of its multiples in [x, y].
  const std::size_t omega = factors.size();
  Int exact = 0;
  for (std::size_t mask = 0; mask < (std::size_t(1) << omega); ++mask) {
    Nat d = 1;
    bool negate = false;
    for (std::size_t bit = 0; bit < omega; ++bit) {
      if (mask & (std::size_t(1) << bit)) {
        d *= factors[bit];
        negate = !negate;
      }
    }
    Int in_range = Int(y / d) - Int((x - 1) / d);
    exact += negate ? -in_range : in_range;
  }
  assert(exact >= 0);

  double density = 1.0;
  for (const Nat& p : factors) density *= 1.0 - 1.0 / p.convert_to<double>();
  const double main_term = density * (y - x).convert_to<double>();
  const double deviation = std::fabs(exact.convert_to<double>() - main_term);
  if (deviation > std::ldexp(1.0, static_cast<int>(omega))) {
    throw std::runtime_error("interval coprime count drifted past its sieve bound");
  }

  ExperimentReport rep;
  rep.name = "coprime-interval";
  rep.parameters = {{"n", n.str()}, {"x", x.str()}, {"y", y.str()}};
  const Nat length = y - x + 1;
  rep.trials = length >> 64 == 0 ? length.convert_to<std::uint64_t>()
                                 : ~std::uint64_t{0};
  rep.observed = {{"coprime_count", exact.convert_to<double>()}};
  rep.reference = {{"coprime_count", main_term}};
  rep.deviation = deviation;
  return rep;
}

std::vector<std::vector<std::uint64_t>> inverse_grid(const Nat& n, unsigned bins) {
  require(n >= 3, "grid needs n >= 3");
  require(n <= 10000000, "grid enumeration caps at n = 10^7");
  require(bins >= 1, "need at least one bin");

  auto factors = distinct_prime_factors(n);
  Nat phi = totient_from_factors(n, factors);
  require(Nat(bins) * bins * 10 <= phi, "bins^2 must be at most phi(n)/10");

  std::vector<std::vector<std::uint64_t>> grid(
      bins, std::vector<std::uint64_t>(bins, 0));
  for (Nat a = 1; a < n; ++a) {
    if (gcd(a, n) != 1) continue;
    Nat inv = mod_inverse(Int(a), n);
    auto row = Nat(a * bins / n).convert_to<std::size_t>();
    auto col = Nat(inv * bins / n).convert_to<std::size_t>();
    ++grid[row][col];
  }
  return grid;
}

ExperimentReport inverse_uniformity(const Nat& n, unsigned bins) {
  auto grid = inverse_grid(n, bins);
  Nat phi = totient_from_factors(n, distinct_prime_factors(n));

  const double expected =
      phi.convert_to<double>() / (static_cast<double>(bins) * bins);
  std::uint64_t cell_min = ~std::uint64_t{0}, cell_max = 0, total = 0;
  double chi_square = 0.0, max_gap = 0.0;
  for (const auto& row : grid) {
    for (std::uint64_t cell : row) {
      cell_min = std::min(cell_min, cell);
      cell_max = std::max(cell_max, cell);
      total += cell;
      const double gap = static_cast<double>(cell) - expected;
      chi_square += gap * gap / expected;
      max_gap = std::max(max_gap, std::fabs(gap));
    }
  }
  if (Nat(total) != phi) {
    throw std::runtime_error("inverse grid lost totatives while binning");
  }

  ExperimentReport rep;
  rep.name = "inverse-uniformity";
  rep.parameters = {{"n", n.str()}, {"bins", std::to_string(bins)}};
  rep.trials = phi.convert_to<std::uint64_t>();
  rep.observed = {{"cell_min", static_cast<double>(cell_min)},
                  {"cell_max", static_cast<double>(cell_max)},
                  {"chi_square", chi_square}};
  rep.reference = {{"expected_per_cell", expected}};
  rep.deviation = max_gap;
  return rep;
}

Nat theta_residue(const Nat& n, const Nat& a) {
  require(a >= 2, "theta residue needs a >= 2");
  require(n >= 1 && gcd(n, a) == 1, "theta residue needs gcd(n, a) = 1");
  return mod_floor(-Int(mod_inverse(Int(n), a)), a);
}

ExperimentReport theta_uniformity(const Nat& a, std::uint64_t modulus_count,
                                  std::uint64_t seed, unsigned workers) {
  check_trial_args(modulus_count, workers);
  require(a >= 3, "theta tally needs a >= 3");
  require(a <= (Nat(1) << 20), "theta tally caps at a = 2^20");

  const auto size = a.convert_to<std::size_t>();
  struct Acc {
    std::vector<std::uint64_t> hist;
    void merge(const Acc& other) {
      if (hist.empty()) hist = other.hist;
      else
        for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += other.hist[i];
    }
  };

  const Nat top = Nat(1) << 64;
  Acc acc = run_trials<Acc>(modulus_count, workers, [&](Acc& t, std::uint64_t i) {
    if (t.hist.empty()) t.hist.assign(size, 0);
    RngStream rng(seed, i);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Nat n = rng.range(2, top);
      if (gcd(n, a) != 1) continue;
      ++t.hist[theta_residue(n, a).convert_to<std::size_t>()];
      return;
    }
    throw std::runtime_error("theta sampling kept drawing non-units");
  });
  if (acc.hist.empty()) acc.hist.assign(size, 0);

  const Nat phi = totient_from_factors(a, distinct_prime_factors(a));
  const double uniform = 1.0 / phi.convert_to<double>();
  const double expected =
      static_cast<double>(modulus_count) / phi.convert_to<double>();

  double chi_square = 0.0, max_gap = 0.0;
  for (std::size_t t = 1; t < size; ++t) {
    if (gcd(Nat(t), a) != 1) {
      if (acc.hist[t] != 0) {
        throw std::runtime_error("theta residue landed on a non-unit");
      }
      continue;
    }
    const double count = static_cast<double>(acc.hist[t]);
    chi_square += (count - expected) * (count - expected) / expected;
    max_gap = std::max(
        max_gap, std::fabs(count / static_cast<double>(modulus_count) - uniform));
  }

  ExperimentReport rep;
  rep.name = "theta-uniformity";
  rep.parameters = {{"a", a.str()},
                    {"modulus_count", std::to_string(modulus_count)}};
  rep.trials = modulus_count;
  rep.seed = seed;
  if (a <= 40) {
    for (std::size_t t = 1; t < size; ++t) {
      if (gcd(Nat(t), a) != 1) continue;
      rep.observed.push_back(
          {std::to_string(t),
           static_cast<double>(acc.hist[t]) / static_cast<double>(modulus_count)});
      rep.reference.push_back({std::to_string(t), uniform});
    }
  }
  rep.observed.push_back({"chi_square", chi_square});
  rep.reference.push_back(
      {"chi_square_dof", phi.convert_to<double>() - 1.0});
  rep.deviation = max_gap;
  return rep;
}

ExperimentReport product_coverage(std::uint64_t p) {
  require(p >= 11 && p <= 100000, "prime must lie in [11, 10^5]");
  require(p % 2 == 1 && is_probable_prime(Nat(p)), "p must be an odd prime");

  const double pd = static_cast<double>(p);
  const auto scaled = static_cast<std::uint64_t>(
      std::sqrt(pd) * std::pow(std::log10(pd), 2.5));
  const std::uint64_t cap = std::min(p - 1, scaled);

  std::vector<bool> seen(p, false);
  std::uint64_t distinct = 0;
  for (std::uint64_t x = 1; x <= cap; ++x) {
    for (std::uint64_t y = x; y <= cap; ++y) {
      std::uint64_t residue = x * y % p;
      if (!seen[residue]) {
        seen[residue] = true;
        ++distinct;
      }
    }
  }

  ExperimentReport rep;
  rep.name = "product-coverage";
  rep.parameters = {{"p", std::to_string(p)}, {"cap", std::to_string(cap)}};
  rep.trials = cap * cap;
  rep.observed = {{"distinct_products", static_cast<double>(distinct)},
                  {"coverage_fraction", static_cast<double>(distinct) / pd}};
  rep.reference = {{"coverage_fraction", 1.0}};
  rep.deviation = max_label_gap(rep.observed, rep.reference);
  return rep;
}

ExperimentReport near_square_representability(const Nat& r, const Nat& s, unsigned b,
                                              std::uint64_t trials, std::uint64_t seed,
                                              unsigned workers) {
  check_trial_args(trials, workers);
  require(r >= 16, "sampler needs r >= 16");
  require(s >= 1 && gcd(r, s) == 1, "r and s must be coprime, s >= 1");
  const Nat offset_bound = near_square_offset_bound(r, b);
  require(offset_bound >= 1, "r too small for this b");
  require(s < r - offset_bound, "s must sit below r minus the offset bound");

  const Nat cap = isqrt(r);

  struct Acc {
    std::uint64_t representable = 0;
    void merge(const Acc& other) { representable += other.representable; }
  };

  Acc acc = run_trials<Acc>(trials, workers, [&](Acc& a, std::uint64_t i) {
    RngStream rng(seed, i);
    Nat n = sample_near_square_constant(r, b, rng).n;
    // Bounded scan: walk x upward, peeling r each step, and test whether the
    // remainder splits as s*y with y inside the same square-root box.
    Nat rem = n;
    for (Nat x = 0; x <= cap && rem >= 0; ++x, rem -= r) {
      if (rem % s == 0 && rem / s <= cap) {
        assert(r * x + s * (rem / s) == n);
        ++a.representable;
        break;
      }
    }
  });

  const double rate =
      static_cast<double>(acc.representable) / static_cast<double>(trials);
  const double predicted =
      1.0 / (2.0 * std::pow(std::log(r.convert_to<double>()), 2.0 * b));

  ExperimentReport rep;
  rep.name = "near-square-repr";
  rep.parameters = {{"r", r.str()}, {"s", s.str()}, {"b", std::to_string(b)}};
  rep.trials = trials;
  rep.seed = seed;
  rep.observed = {{"representable_fraction", rate}};
  rep.reference = {{"representable_fraction", predicted}};
  rep.deviation = max_label_gap(rep.observed, rep.reference);
  return rep;
}

}  // namespace lindio
