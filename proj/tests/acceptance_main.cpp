// SPDX-License-Identifier: Apache-2.0
//
// Acceptance battery: one PASS/FAIL line per shipping promise, nonzero exit
// when anything fails. Each criterion re-derives its expected values from an
// independent route (direct enumeration, closed forms, or the real
// command-line binary) rather than trusting the code under test.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lindio/arith.hpp"
#include "lindio/congruence.hpp"
#include "lindio/contfrac.hpp"
#include "lindio/diophantine.hpp"
#include "lindio/factor.hpp"
#include "lindio/report_io.hpp"
#include "lindio/stats.hpp"

using namespace lindio;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const char* name, bool pass, double elapsed,
            const std::string& detail = "") {
  std::printf("%s %2d %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", index, name, elapsed,
              detail.empty() ? "" : " — ", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string run_cli_capture(const std::string& args, int* exit_code) {
  std::string cmd = std::string(LINDIO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *exit_code = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

// Independent modular inverse for oracle duty: plain extended Euclid on
// signed machine words (inputs stay far below 2^31 here).
std::int64_t inverse_i64(std::int64_t a, std::int64_t n) {
  std::int64_t old_r = a % n, r = n, old_t = 1, t = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return ((old_t % n) + n) % n;
}

// ---------------------------------------------------------------------------
// 1: worked key-recovery example through the real binary
// ---------------------------------------------------------------------------

void criterion_1() {
  auto start = Clock::now();
  int exit_code = -1;
  std::string out =
      run_cli_capture("keyrec --n 2257 --e 2431 --strategy consecutive-squares --json",
                      &exit_code);
  double elapsed = seconds_since(start);
  bool pass = exit_code == 0;
  std::string detail;
  try {
    Json env = Json::parse(out);
    const Json& result = env.at("result");
    pass = pass && result.at("d") == "271" && result.at("c1_hit") == "18080" &&
           result.at("s_hit") == "271" && result.at("p") == "37" && result.at("q") == "61" &&
           result.at("thue_x") == Json({"1", "-2", "7", "-16", "263", "-542"});
    // The winning residue's discriminant, recomputed in-process.
    auto hits = discriminant_roots(2257, 271, Nat(2431));
    bool disc_ok = false;
    for (const auto& hit : hits) {
      disc_ok = disc_ok || (hit.d == 576 && hit.root == 24 && hit.p == 37 && hit.q == 61);
    }
    pass = pass && disc_ok;
  } catch (const std::exception& e) {
    pass = false;
    detail = e.what();
  }
  pass = pass && elapsed < 1.0;
  report(1, "worked key-recovery example end to end via the CLI", pass, elapsed, detail);
}

// ---------------------------------------------------------------------------
// 2: the totient residue factors every balanced semiprime exactly
// ---------------------------------------------------------------------------

void criterion_2() {
  auto start = Clock::now();
  auto semiprimes = balanced_semiprimes_up_to(100000);
  bool pass = !semiprimes.empty();
  std::uint64_t first_bad = 0;
  for (const auto& sp : semiprimes) {
    Nat phi = Nat(sp.n) + 1 - sp.p - sp.q;

    bool direct = false;
    for (const auto& hit : discriminant_roots(Nat(sp.n), phi, std::nullopt)) {
      direct = direct || (hit.p == sp.p && hit.q == sp.q);
    }

    FactorConfig cfg;
    cfg.plant_s = phi;
    cfg.max_outer = 400;
    cfg.alg3_reps_per_n = 16;
    cfg.seed = kDefaultSeed;
    FactorReport rep = algorithm_III(Nat(sp.n), cfg);
    bool planted = rep.outcome == FactorOutcome::factored && rep.p && rep.q &&
                   *rep.p == sp.p && *rep.q == sp.q;

    if (!(direct && planted)) {
      pass = false;
      first_bad = sp.n;
      break;
    }
  }
  double elapsed = seconds_since(start);
  pass = pass && elapsed < 60.0;
  report(2, "totient residue factors every balanced semiprime below 100000", pass, elapsed,
         first_bad ? "first failure at n = " + std::to_string(first_bad) : "");
}

// ---------------------------------------------------------------------------
// 3: representation count formula vs enumeration, plus the zero-count census
// ---------------------------------------------------------------------------

void criterion_3() {
  auto start = Clock::now();
  bool pass = true;
  for (std::uint32_t r = 3; r <= 30 && pass; ++r) {
    for (std::uint32_t s = 2; s < r && pass; ++s) {
      if (gcd(Nat(r), Nat(s)) != 1) continue;
      std::uint64_t zero_count = 0;
      const std::uint32_t frob_bound = r * s - r - s;
      for (std::uint32_t n = 0; n <= 2 * r * s; ++n) {
        std::uint64_t direct = 0;
        for (std::uint32_t x = 0; x * r <= n; ++x) {
          if ((n - x * r) % s == 0) ++direct;
        }
        if (rep_count(Nat(r), Nat(s), Nat(n)) != direct) {
          pass = false;
          break;
        }
        if (n <= frob_bound && direct == 0) ++zero_count;
      }
      pass = pass && zero_count == std::uint64_t(r - 1) * (s - 1) / 2;
    }
  }
  report(3, "representation counts match enumeration; zero-count census is (r-1)(s-1)/2",
         pass, seconds_since(start));
}

// ---------------------------------------------------------------------------
// 4: two-coin closed form vs bitmap; three-coin lower bound
// ---------------------------------------------------------------------------

void criterion_4() {
  auto start = Clock::now();
  bool pass = true;
  for (std::uint32_t r = 2; r <= 30 && pass; ++r) {
    for (std::uint32_t s = r + 1; s <= 30 && pass; ++s) {
      if (gcd(Nat(r), Nat(s)) != 1) continue;
      auto brute = frobenius_brute({Nat(r), Nat(s)}, Nat(r) * s);
      pass = brute && *brute == Nat(r) * s - r - s && *brute == frobenius_two(Nat(r), Nat(s));
    }
  }
  for (std::uint32_t a = 2; a <= 20 && pass; ++a) {
    for (std::uint32_t b = a + 1; b <= 20 && pass; ++b) {
      for (std::uint32_t c = b + 1; c <= 20 && pass; ++c) {
        if (gcd(gcd(Nat(a), Nat(b)), Nat(c)) != 1) continue;
        auto brute = frobenius_brute({Nat(a), Nat(b), Nat(c)}, Nat(a) * b * c);
        if (!brute) continue;  // every target representable: bound is vacuous
        double bound = std::sqrt(3.0 * a * b * c) - a - b - c;
        pass = brute->convert_to<double>() >= bound;
      }
    }
  }
  report(4, "coin-problem closed form matches search; triple lower bound holds", pass,
         seconds_since(start));
}

// ---------------------------------------------------------------------------
// 5: four inverse routes agree; a-priori bounds sandwich exhaustively
// ---------------------------------------------------------------------------

void criterion_5() {
  auto start = Clock::now();
  bool pass = true;
  RngStream rng(kDefaultSeed, 100);

  for (int i = 0; i < 100000 && pass; ++i) {
    Nat n = rng.range(3, Nat(1) << 256);
    Nat a = rng.range(2, n - 1);
    if (gcd(a, n) != 1) continue;
    pass = inverse_formula(a, n) == inverse_euclid(a, n);
  }

  for (std::uint32_t a = 2; a <= 500 && pass; ++a) {
    Nat n = rng.range(Nat(a) + 1, 1000000);
    if (gcd(Nat(a), n) != 1) continue;
    pass = inverse_voronoi(Nat(a), n) == inverse_euclid(Nat(a), n);
  }

  for (std::uint32_t n = 3; n <= 500 && pass; ++n) {
    for (std::uint32_t a = 2; a < n && pass; ++a) {
      if (gcd(Nat(a), Nat(n)) != 1) continue;
      Nat inv = inverse_euclid(Nat(a), Nat(n));
      auto bounds = inverse_bounds(Nat(a), Nat(n));
      pass = bounds.lo <= inv && inv <= bounds.hi;
      // Independent recomputation on machine words.
      pass = pass && inv == Nat(inverse_i64(a, n));
    }
  }
  report(5, "modular-inverse routes agree; two-sided bounds sandwich exhaustively", pass,
         seconds_since(start));
}

// ---------------------------------------------------------------------------
// 6: small-solution guarantee of the remainder descent
// ---------------------------------------------------------------------------

void criterion_6() {
  auto start = Clock::now();
  bool pass = true;
  RngStream rng(kDefaultSeed, 101);
  for (int i = 0; i < 10000 && pass; ++i) {
    Nat r = rng.range(4, Nat(1) << 64);
    Nat a = rng.range(1, r - 1);
    if (gcd(a, r) != 1) continue;
    Nat bound = isqrt(r);
    auto pairs = thue_pairs(a, r);
    bool small_found = false;
    for (const auto& pair : pairs) {
      if (mod_floor(a * pair.x - Int(pair.y), r) != 0) {
        pass = false;
        break;
      }
      small_found = small_found || (abs(pair.x) <= bound && pair.y <= bound);
    }
    pass = pass && small_found;
    auto small = thue_small_pair(a, r);
    pass = pass && small.y <= bound && abs(small.x) <= bound;
  }
  report(6, "remainder descent always yields a doubly small congruence solution", pass,
         seconds_since(start));
}

// ---------------------------------------------------------------------------
// 7: minimal congruence solution vs the scan oracle
// ---------------------------------------------------------------------------

void criterion_7() {
  auto start = Clock::now();
  bool pass = true;

  // Exhaustive sweep: for each (n, a, c), x -> (a*x - c) mod n permutes the
  // residues, so position-of-residue plus a prefix minimum gives the scan
  // oracle for EVERY cap at once. The states of the reduction determine the
  // implementation's answer for every cap; the public entry point is also
  // called directly at each distinct answer segment.
  for (std::uint64_t n = 2; n <= 200 && pass; ++n) {
    for (std::uint64_t a = 1; a < n && pass; ++a) {
      if (gcd(Nat(a), Nat(n)) != 1) continue;
      for (std::uint64_t c = 0; c < n && pass; ++c) {
        std::vector<std::uint64_t> pos(n);
        std::uint64_t y = (n - c) % n;  // residue at x = 0
        for (std::uint64_t x = 0; x < n; ++x) {
          pos[y] = x;
          y += a;
          if (y >= n) y -= n;
        }
        // prefix_min[b] = min position among residues < b = oracle answer.
        std::uint64_t best = pos[0];
        std::uint64_t previous_answer = ~std::uint64_t{0};
        for (std::uint64_t b = 1; b < n && pass; ++b) {
          if (b > 1) best = std::min(best, pos[b - 1]);
          auto got = linear_congruence_min(Nat(a), Nat(c), Nat(n), Nat(b));
          if (got.x0 != best) {
            pass = false;
            break;
          }
          std::uint64_t expected_y = (a * (best % n) + (n - c)) % n;
          pass = got.y0 == expected_y;
          previous_answer = best;
        }
        (void)previous_answer;
      }
    }
  }

  // Random larger instances against a direct scan.
  RngStream rng(kDefaultSeed, 102);
  for (int i = 0; i < 10000 && pass; ++i) {
    std::uint64_t n = rng.range(3, 10000).convert_to<std::uint64_t>();
    std::uint64_t a = rng.range(1, n - 1).convert_to<std::uint64_t>();
    if (gcd(Nat(a), Nat(n)) != 1) continue;
    std::uint64_t c = rng.range(0, n - 1).convert_to<std::uint64_t>();
    std::uint64_t cap = rng.range(1, n - 1).convert_to<std::uint64_t>();
    std::uint64_t y = (n - c) % n, scan_x = 0;
    while (y >= cap) {
      y += a;
      if (y >= n) y -= n;
      ++scan_x;
    }
    auto got = linear_congruence_min(Nat(a), Nat(c), Nat(n), Nat(cap));
    pass = got.x0 == scan_x && got.y0 == y;
  }
  report(7, "minimal congruence solutions match the scan oracle for every cap", pass,
         seconds_since(start));
}

// ---------------------------------------------------------------------------
// 8: max inverse distance bound and its exact equality set
// ---------------------------------------------------------------------------

void criterion_8() {
  auto start = Clock::now();
  bool pass = true;

  // n = m^2 + l*m + 1 with l < 2*sqrt(m) + 1, i.e. l == 0 or (l-1)^2 < 4m.
  std::set<std::uint64_t> equality_set;
  for (std::uint64_t m = 1; m * m + 1 <= 2000; ++m) {
    for (std::uint64_t l = 0;; ++l) {
      if (l > 0 && (l - 1) * (l - 1) >= 4 * m) break;
      std::uint64_t n = m * m + l * m + 1;
      if (n > 2000) break;
      if (n >= 2) equality_set.insert(n);
    }
  }

  std::uint64_t first_bad = 0;
  for (std::uint32_t n = 2; n <= 2000; ++n) {
    std::uint64_t m_val = max_inverse_distance(n).m;
    // floor(n - 2*sqrt(n-1)) = n - ceil(2*sqrt(n-1)), computed exactly.
    std::uint64_t t = 4ULL * (n - 1);
    std::uint64_t s = isqrt(Nat(t)).convert_to<std::uint64_t>();
    std::uint64_t ceil_2root = (s * s == t) ? s : s + 1;
    std::uint64_t bound = n - ceil_2root;
    bool ok = m_val <= bound && (m_val == bound) == (equality_set.count(n) > 0);
    if (!ok) {
      pass = false;
      first_bad = n;
      break;
    }
  }
  report(8, "max inverse distance stays under its bound with the exact equality set", pass,
         seconds_since(start), first_bad ? "first failure at n = " + std::to_string(first_bad) : "");
}

// ---------------------------------------------------------------------------
// 9: statistical suite within stated tolerances
// ---------------------------------------------------------------------------

double row_value(const ExperimentReport& rep, const std::string& label, bool reference) {
  for (const auto& row : reference ? rep.reference : rep.observed) {
    if (row.label == label) return row.value;
  }
  return -1.0;
}

void criterion_9() {
  auto start = Clock::now();
  bool pass = true;
  std::string detail;

  {
    const std::uint64_t trials = 1000000;
    auto rep = coprime_density(trials, 32, kDefaultSeed);
    double ref = row_value(rep, "coprime_fraction", true);
    double tol = 3.0 * std::sqrt(ref * (1.0 - ref) / static_cast<double>(trials));
    if (std::fabs(row_value(rep, "coprime_fraction", false) - ref) > tol) {
      pass = false;
      detail = "coprime density off";
    }
  }
  {
    const std::uint64_t trials = 100000;
    auto rep = quotient_digit_distribution(trials, 1, kDefaultSeed);
    for (int k = 1; k <= 5; ++k) {
      double ref = row_value(rep, std::to_string(k), true);
      double tol = 3.0 * std::sqrt(ref * (1.0 - ref) / static_cast<double>(trials));
      if (std::fabs(row_value(rep, std::to_string(k), false) - ref) > tol) {
        pass = false;
        detail = "first-quotient law off at digit " + std::to_string(k);
      }
    }
  }
  {
    const std::uint64_t trials = 10000;
    auto rep = quotient_digit_distribution(trials, 10, kDefaultSeed);
    double ref = row_value(rep, "1", true);
    double tol = 3.0 * std::sqrt(ref * (1.0 - ref) / static_cast<double>(trials));
    if (std::fabs(row_value(rep, "1", false) - ref) > tol) {
      pass = false;
      detail = "deep quotient law off for digit 1";
    }
  }
  {
    auto rep = euclid_steps(100000, 64, kDefaultSeed);
    double mean = row_value(rep, "mean_divisions", false);
    double ref = row_value(rep, "mean_divisions", true);
    if (std::fabs(mean - ref) / ref > 0.03) {
      pass = false;
      detail = "division-count mean off by more than 3%";
    }
  }

  double elapsed = seconds_since(start);
  pass = pass && elapsed < 300.0;
  report(9, "statistics within tolerance: densities, quotient laws, division counts", pass,
         elapsed, detail);
}

// ---------------------------------------------------------------------------
// 10: factoring soundness + determinism + rate-vs-prediction reports
// ---------------------------------------------------------------------------

struct RateLine {
  std::string name;
  int hits = 0;
  int runs = 0;
};

void criterion_10() {
  auto start = Clock::now();
  bool pass = true;
  std::string detail;

  auto semiprimes = balanced_semiprimes_up_to(1000000);
  RngStream picker(kDefaultSeed, 200);
  std::vector<Semiprime> sample;
  for (int i = 0; i < 120; ++i) {
    std::size_t index =
        picker.below(Nat(semiprimes.size())).convert_to<std::size_t>();
    sample.push_back(semiprimes[index]);
  }

  RateLine rates[3] = {{"I", 0, 0}, {"II", 0, 0}, {"III", 0, 0}};
  std::vector<FactorReport> first_reports;
  for (int pass_index = 0; pass_index < 2; ++pass_index) {
    std::size_t report_slot = 0;
    for (const auto& sp : sample) {
      for (int alg = 0; alg < 3; ++alg) {
        FactorConfig cfg;
        cfg.max_outer = 150;
        cfg.seed = kDefaultSeed + static_cast<std::uint64_t>(sp.n);
        FactorReport rep = alg == 0   ? algorithm_I(Nat(sp.n), cfg)
                           : alg == 1 ? algorithm_II(Nat(sp.n), cfg)
                                      : algorithm_III(Nat(sp.n), cfg);
        // (a) soundness: every claimed factorization multiplies back.
        if (rep.outcome == FactorOutcome::factored) {
          if (!rep.p || !rep.q || *rep.p * *rep.q != sp.n || *rep.p <= 1 || *rep.q >= sp.n) {
            pass = false;
            detail = "unsound factorization of " + std::to_string(sp.n);
          }
          if (pass_index == 0) ++rates[alg].hits;
        }
        if (pass_index == 0) {
          ++rates[alg].runs;
          first_reports.push_back(rep);
        } else {
          // (b) determinism: the rerun must reproduce the first pass exactly.
          const FactorReport& first = first_reports[report_slot++];
          bool same = first.outcome == rep.outcome &&
                      first.work.outer_iterations == rep.work.outer_iterations &&
                      first.work.discriminants_tested == rep.work.discriminants_tested &&
                      first.winning_iteration == rep.winning_iteration;
          if (first.p || rep.p) same = same && first.p && rep.p && *first.p == *rep.p;
          if (!same) {
            pass = false;
            detail = "nondeterministic report for " + std::to_string(sp.n);
          }
        }
      }
    }
  }

  // (c) rate-vs-prediction reports (informational, never gated).
  for (const auto& rate : rates) {
    std::printf("  rate algorithm %-3s : %3d / %3d factored within budget\n",
                rate.name.c_str(), rate.hits, rate.runs);
  }
  auto near = near_square_representability(10007, 9901, 1, 10000, kDefaultSeed);
  std::printf("  rate near-square    : observed %.5f vs predicted %.5f (r=10007, s=9901)\n",
              row_value(near, "representable_fraction", false),
              row_value(near, "representable_fraction", true));
  std::fflush(stdout);

  double elapsed = seconds_since(start);
  pass = pass && elapsed < 600.0;
  report(10, "factoring is sound and deterministic; success rates reported, not gated", pass,
         elapsed, detail);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (failures) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
