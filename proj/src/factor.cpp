// SPDX-License-Identifier: Apache-2.0

#include "lindio/factor.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "lindio/congruence.hpp"
#include "lindio/contfrac.hpp"
#include "lindio/diophantine.hpp"

namespace lindio {

namespace bm = boost::multiprecision;

namespace {

void validate_n(const Nat& n) {
  if (n < 2) throw std::invalid_argument("N must be at least 2");
  if (n % 2 == 0) throw std::invalid_argument("N must be odd");
  if (is_probable_prime(n)) throw std::invalid_argument("N is prime; nothing to factor");
  if (perfect_power(n)) throw std::invalid_argument("N is a perfect power; factor its root instead");
}

void validate_config(const FactorConfig& cfg) {
  if (cfg.max_outer && *cfg.max_outer == 0)
    throw std::invalid_argument("max_outer must be at least 1");
  if (cfg.pairs_per_outer == 0) throw std::invalid_argument("pairs_per_outer must be at least 1");
  if (cfg.candidates_per_pair && *cfg.candidates_per_pair == 0)
    throw std::invalid_argument("candidates_per_pair must be at least 1");
  if (cfg.alg3_reps_per_n == 0) throw std::invalid_argument("alg3_reps_per_n must be at least 1");
  if (cfg.workers == 0 || cfg.workers > 256)
    throw std::invalid_argument("workers must be between 1 and 256");
}

std::uint64_t default_max_outer(const Nat& n) {
  std::uint64_t b = bit_length(n);
  return 4 * b * b * b * b;
}

// Smallest k with 2*k^2 >= 9*n, i.e. ceil(1.5 * sqrt(2n)) computed exactly.
Nat ceil_15_sqrt_2n(const Nat& n) {
  Nat k = isqrt(9 * n / 2);
  while (2 * k * k < 9 * n) ++k;
  return k;
}

// ceil(n^{1/4}).
Nat ceil_root4(const Nat& n) {
  Nat k = iroot(n, 4);
  if (k * k * k * k < n) ++k;
  return k;
}

void accumulate(WorkCounters& into, const WorkCounters& w) {
  into.outer_iterations += w.outer_iterations;
  into.pair_draws += w.pair_draws;
  into.rejected_draws += w.rejected_draws;
  into.candidates_generated += w.candidates_generated;
  into.discriminants_tested += w.discriminants_tested;
  into.square_hits += w.square_hits;
  into.approx_hits += w.approx_hits;
  into.scan_steps += w.scan_steps;
  into.t_candidates += w.t_candidates;
}

struct FoundFactors {
  Nat p, q;
};

// Probe every trace form of one residue. `squares` enables the exact path
// (perfect-square discriminant), `near` the effective-approximation path
// resolved by a bounded divisor scan.
std::optional<FoundFactors> probe_candidate(const Nat& n, const Nat& s,
                                            const std::optional<Nat>& r, bool squares, bool near,
                                            const Nat& radius, WorkCounters& work) {
  for (const Int& t : trace_forms(n, s, r)) {
    Int d = t * t - 4 * Int(n);
    ++work.discriminants_tested;
    if (d < 0) continue;
    Nat dn(d);
    if (auto root = exact_sqrt(dn)) {
      ++work.square_hits;
      if (!squares) continue;
      Nat ta = Nat(bm::abs(t));
      assert((ta - *root) % 2 == 0);
      Nat p = (ta - *root) / 2;
      Nat q = (ta + *root) / 2;
      if (p > 1 && q < n && p * q == n) return FoundFactors{p, q};
      continue;
    }
    if (!near) continue;
    Nat ta = Nat(bm::abs(t));
    Nat fl = isqrt(dn);
    if (Int(ta) <= Int(fl) + 1) continue;  // smaller root floor would be <= 0
    // Floors of the irrational roots (ta -/+ sqrt(d)) / 2.
    Int x0 = floor_div(Int(ta) - Int(fl) - 1, 2);
    Int x1 = floor_div(Int(ta) + Int(fl), 2);
    if (!effective_approx_test(n, x0, x1)) continue;
    ++work.approx_hits;
    if (auto f = small_divisor_scan(n, Nat(x0), radius, &work.scan_steps))
      return FoundFactors{f->first, f->second};
  }
  return std::nullopt;
}

struct IterationOutcome {
  std::uint64_t iteration = 0;
  WorkCounters work;
  std::vector<TraceEntry> trace;
  std::optional<FoundFactors> hit;
  std::optional<Nat> s_hit, c1_hit, r_hit;
};

// Run iteration bodies 0..total-1, stopping at the first (lowest-index)
// success. With several workers the index space is partitioned round-robin;
// every iteration at or below the winning index is still executed, so the
// merged report does not depend on the worker count.
template <typename Body>
std::vector<IterationOutcome> run_schedule(std::uint64_t total, unsigned workers, Body&& body) {
  std::vector<IterationOutcome> kept;
  if (workers <= 1 || total <= 1) {
    for (std::uint64_t j = 0; j < total; ++j) {
      kept.push_back(body(j));
      if (kept.back().hit) break;
    }
    return kept;
  }
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mu;
  std::vector<std::vector<IterationOutcome>> buckets(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t j = w; j < total && !failed.load(std::memory_order_acquire);
             j += workers) {
          if (j > best.load(std::memory_order_acquire)) break;
          IterationOutcome out = body(j);
          const bool hit = out.hit.has_value();
          buckets[w].push_back(std::move(out));
          if (hit) {
            std::uint64_t cur = best.load(std::memory_order_acquire);
            while (j < cur && !best.compare_exchange_weak(cur, j, std::memory_order_acq_rel)) {
            }
            break;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_release);
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
  for (auto& b : buckets)
    for (auto& o : b) kept.push_back(std::move(o));
  std::sort(kept.begin(), kept.end(),
            [](const IterationOutcome& a, const IterationOutcome& b) {
              return a.iteration < b.iteration;
            });
  return kept;
}

struct Merged {
  WorkCounters work;
  std::vector<TraceEntry> trace;
  std::optional<FoundFactors> factors;
  std::optional<Nat> s_hit, c1_hit, r_hit;
  std::uint64_t winning_iteration = 0;
};

// Keep only iterations up to the winning one so the report is identical to
// what a sequential run would have produced.
Merged merge_outcomes(std::vector<IterationOutcome>&& outs) {
  Merged m;
  std::uint64_t j_win = std::numeric_limits<std::uint64_t>::max();
  for (const auto& o : outs)
    if (o.hit && o.iteration < j_win) j_win = o.iteration;
  for (auto& o : outs) {
    if (o.iteration > j_win) continue;
    accumulate(m.work, o.work);
    for (auto& e : o.trace)
      if (m.trace.size() < kTraceEntryLimit) m.trace.push_back(std::move(e));
    if (o.hit && o.iteration == j_win) {
      m.factors = o.hit;
      m.s_hit = o.s_hit;
      m.c1_hit = o.c1_hit;
      m.r_hit = o.r_hit;
      m.winning_iteration = j_win;
    }
  }
  return m;
}

// Draw one constant pair per the configured strategy. The planted pair, when
// given, pins the very first draw (iteration 0, pair 0). Returns nothing if
// no invertible pair was found within the retry budget.
std::optional<std::pair<Nat, Nat>> draw_constants(const Nat& n, const Nat& r,
                                                  const FactorConfig& cfg, RngStream& rng,
                                                  std::uint64_t j, std::uint64_t k,
                                                  WorkCounters& work) {
  if (j == 0 && k == 0 && (cfg.plant_c0 || cfg.plant_c1)) {
    Nat c0 = cfg.plant_c0.value_or(Nat(1));
    Nat c1 = cfg.plant_c1.value_or(Nat(1));
    ++work.pair_draws;
    if (c0 == 0 || c1 == 0 || bm::gcd(c0, r) != 1 || bm::gcd(c1, r) != 1)
      throw std::invalid_argument("planted constants must be invertible modulo the modulus");
    return std::make_pair(c0, c1);
  }
  switch (cfg.constant_strategy) {
    case ConstantStrategy::uniform_random: {
      for (int tries = 0; tries < 64; ++tries) {
        ++work.pair_draws;
        Nat c0 = rng.range(1, r * r - 1);
        Nat c1 = rng.range(1, r * r - 1);
        if (bm::gcd(c0, r) == 1 && bm::gcd(c1, r) == 1) return std::make_pair(c0, c1);
        ++work.rejected_draws;
      }
      return std::nullopt;
    }
    case ConstantStrategy::random_square_differences: {
      for (int tries = 0; tries < 64; ++tries) {
        ++work.pair_draws;
        NearSquareSample smp = sample_near_square_constant(n + 1, 1, rng);
        if (bm::gcd(smp.n, r) == 1) return std::make_pair(Nat(1), smp.n);
        ++work.rejected_draws;
      }
      return std::nullopt;
    }
    case ConstantStrategy::consecutive_squares: {
      ++work.pair_draws;
      Nat idx = Nat(j) * cfg.pairs_per_outer + k + 1;
      Nat base = n + 1;
      Nat c1 = (base + idx) * (base + idx) - base * base;
      if (bm::gcd(c1, r) != 1) {
        ++work.rejected_draws;
        return std::nullopt;
      }
      return std::make_pair(Nat(1), c1);
    }
  }
  return std::nullopt;
}

// One outer turn of variants I/II: draw constant pairs, derive residue
// candidates, probe their trace forms.
IterationOutcome run_pair_iteration(const Nat& n, const Nat& r, std::uint64_t j,
                                    const FactorConfig& cfg, std::uint64_t cand_cap,
                                    const Nat& radius, bool near_miss) {
  IterationOutcome out;
  out.iteration = j;
  out.work.outer_iterations = 1;
  RngStream rng(cfg.seed, j + 1);
  for (std::uint64_t k = 0; k < cfg.pairs_per_outer && !out.hit; ++k) {
    auto picked = draw_constants(n, r, cfg, rng, j, k, out.work);
    if (!picked) continue;
    const Nat& c0 = picked->first;
    const Nat& c1 = picked->second;
    auto cands = candidate_s_values(r, c0, c1, static_cast<std::size_t>(cand_cap));
    out.work.candidates_generated += cands.size();
    TraceEntry* entry = nullptr;
    if (j * cfg.pairs_per_outer + k < kTraceEntryLimit) {
      out.trace.emplace_back();
      entry = &out.trace.back();
      entry->iteration = j;
      entry->r = r;
      entry->c0 = c0;
      entry->c1 = c1;
      entry->candidates = cands;
    }
    const std::uint64_t squares_before = out.work.square_hits;
    for (const auto& cand : cands) {
      if (entry && entry->discriminants.size() < kTraceListLimit)
        for (const Int& t : trace_forms(n, cand.s, r))
          if (entry->discriminants.size() < kTraceListLimit)
            entry->discriminants.push_back(t * t - 4 * Int(n));
      auto hit = probe_candidate(n, cand.s, r, true, near_miss, radius, out.work);
      if (hit) {
        out.hit = hit;
        out.s_hit = cand.s;
        out.c1_hit = c1;
        out.r_hit = r;
        break;
      }
    }
    if (entry) entry->square_hits = out.work.square_hits - squares_before;
  }
  return out;
}

struct TierBounds {
  Nat b34, b23, b12;  // N^{3/4}, N^{2/3}, N^{1/2} floors
};

// One outer turn of variant III: draw a coprime pair near N, walk the
// convergents of r/s, and probe trace candidates derived from small solutions
// of z*p_{n+1} - z'*p_n = (-1)^n r.
IterationOutcome run_pair3_iteration(const Nat& n, std::uint64_t j, const FactorConfig& cfg,
                                     const Nat& lo, const Nat& hi, const TierBounds& tb) {
  IterationOutcome out;
  out.iteration = j;
  out.work.outer_iterations = 1;
  RngStream rng(cfg.seed, j + 1);
  Nat r, s;
  bool ok = false;
  for (int tries = 0; tries < 64 && !ok; ++tries) {
    ++out.work.pair_draws;
    r = cfg.plant_r ? *cfg.plant_r : rng.range(lo, hi);
    s = cfg.plant_s ? *cfg.plant_s : rng.range(lo, hi);
    if (bm::gcd(r, s) == 1) {
      ok = true;
    } else {
      ++out.work.rejected_draws;
      if (cfg.plant_r && cfg.plant_s) break;  // a pinned pair cannot change
    }
  }
  if (!ok) return out;

  auto cs = convergents(cf_expand(r, s));
  TraceEntry* entry = nullptr;
  if (j < kTraceEntryLimit) {
    out.trace.emplace_back();
    entry = &out.trace.back();
    entry->iteration = j;
    entry->r = r;
    entry->s = s;
  }
  const std::uint64_t n_hi = 5 * static_cast<std::uint64_t>(bit_length(r));
  for (std::size_t idx = 1; idx + 1 < cs.size() && idx < n_hi && !out.hit; ++idx) {
    const Nat& pn = cs[idx].p;
    const Nat& qn = cs[idx].q;
    const Nat& qn1 = cs[idx + 1].q;
    // Denominator tier q_n < N^a <= q_{n+1} fixes the allowed solution size
    // N^{1-a}; the widest matching tier wins.
    Nat bound = 0;
    if (qn * qn < n && n <= qn1 * qn1) bound = tb.b12;
    if (qn * qn * qn < n && n <= qn1 * qn1 * qn1) bound = tb.b23;
    {
      Nat q4 = qn * qn, q14 = qn1 * qn1;
      if (q4 * q4 < n && n <= q14 * q14) bound = tb.b34;
    }
    if (bound == 0) continue;
    Int rhs = (idx % 2 == 1) ? Int(-Int(r)) : Int(r);
    auto sol = solve_linear(cs[idx + 1].p, pn, rhs);
    if (!sol) throw std::runtime_error("consecutive convergent numerators must be coprime");
    const Int z_lo = Int(sol->x0);  // least nonnegative member of the family
    const Int step(pn);
    bool plus_open = true, minus_open = true;
    std::uint64_t emitted = 0;
    for (std::uint64_t m = 0; emitted < cfg.alg3_reps_per_n && (plus_open || minus_open); ++m) {
      Int z;
      if (m % 2 == 0) {
        if (!plus_open) continue;
        z = z_lo + Int(m / 2) * step;
        if (bm::abs(z) > Int(bound)) {
          plus_open = false;
          continue;
        }
      } else {
        if (!minus_open) continue;
        z = z_lo - Int((m + 1) / 2) * step;
        if (bm::abs(z) > Int(bound)) {
          minus_open = false;
          continue;
        }
      }
      Int numer = z + (Int(n) + 1) * Int(pn) - Int(r) * Int(qn);
      if (numer % Int(pn) != 0)
        throw std::runtime_error("trace candidate lost integrality; family drifted");
      Int t = numer / Int(pn);
      ++emitted;
      ++out.work.t_candidates;
      if (entry && entry->t_values.size() < kTraceListLimit) entry->t_values.push_back(t);
      if (t < 3) continue;
      Int d = t * t - 4 * Int(n);
      ++out.work.discriminants_tested;
      if (entry && entry->discriminants.size() < kTraceListLimit)
        entry->discriminants.push_back(d);
      if (d < 0) continue;
      auto root = exact_sqrt(Nat(d));
      if (!root) continue;
      ++out.work.square_hits;
      Nat ta = Nat(t);
      Nat p = (ta - *root) / 2;
      Nat q = (ta + *root) / 2;
      if (p > 1 && q < n && p * q == n) {
        out.hit = FoundFactors{p, q};
        out.s_hit = s;
        out.r_hit = r;
        break;
      }
    }
    if (entry) entry->square_hits = out.work.square_hits;
  }
  return out;
}

void fill_factor_report(FactorReport& rep, Merged&& m, const FactorConfig& cfg, const Nat& n) {
  rep.n = n;
  rep.seed = cfg.seed;
  rep.workers_used = cfg.workers;
  rep.work = m.work;
  rep.trace = std::move(m.trace);
  if (m.factors) {
    rep.outcome = FactorOutcome::factored;
    rep.p = m.factors->p;
    rep.q = m.factors->q;
    rep.s_hit = m.s_hit;
    rep.c1_hit = m.c1_hit;
    rep.winning_iteration = m.winning_iteration;
    if (*rep.p < 2 || *rep.q >= n || *rep.p > *rep.q || *rep.p * *rep.q != n)
      throw std::runtime_error("factored report failed its product invariant");
  }
}

std::uint64_t elapsed_since(std::chrono::steady_clock::time_point t0) {
  return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - t0)
                                        .count());
}

FactorReport run_variant_pair(const Nat& n, const FactorConfig& cfg, bool near_miss) {
  validate_n(n);
  validate_config(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  Nat r;
  if (cfg.plant_r) {
    r = *cfg.plant_r;
    if (r < 2) throw std::invalid_argument("planted modulus must be at least 2");
  } else {
    auto [lo, hi] = modulus_window(n);
    RngStream rng0(cfg.seed, 0);
    r = rng0.range(lo, hi);
  }
  const std::uint64_t total = cfg.max_outer.value_or(default_max_outer(n));
  const std::uint64_t cand_cap =
      cfg.candidates_per_pair.value_or(5 * static_cast<std::uint64_t>(bit_length(r)));
  const Nat radius = near_miss ? ceil_root4(n) : Nat(0);
  auto outs = run_schedule(total, cfg.workers, [&](std::uint64_t j) {
    return run_pair_iteration(n, r, j, cfg, cand_cap, radius, near_miss);
  });
  Merged m = merge_outcomes(std::move(outs));
  FactorReport rep;
  rep.algorithm = near_miss ? "II" : "I";
  rep.r_used = r;
  fill_factor_report(rep, std::move(m), cfg, n);
  rep.elapsed_ms = cfg.timings ? elapsed_since(t0) : 0;
  return rep;
}

}  // namespace

std::vector<SCandidate> candidate_s_values(const Nat& r, const Nat& c0, const Nat& c1,
                                           std::size_t max_candidates) {
  if (r < 2) throw std::invalid_argument("candidate_s_values: modulus must be at least 2");
  if (c0 == 0 || c1 == 0)
    throw std::invalid_argument("candidate_s_values: constants must be positive");
  if (bm::gcd(c0, r) != 1 || bm::gcd(c1, r) != 1)
    throw std::invalid_argument(
        "candidate_s_values: constants must be invertible modulo the modulus");
  std::vector<SCandidate> out;
  if (max_candidates == 0) return out;
  const Nat c0m = c0 % r;
  const Nat c1m = c1 % r;
  const Nat a = mod_floor(Int(mod_inverse(c0m, r)) * Int(c1m), r);
  const auto pairs = thue_pairs(a, r);
  for (std::size_t i = 0; i < pairs.size() && out.size() < max_candidates; ++i) {
    const auto push = [&](const Nat& base, SOrigin origin) {
      if (out.size() < max_candidates)
        out.push_back(SCandidate{base, origin, 0, i});
      if (out.size() < max_candidates)
        out.push_back(SCandidate{r - base, origin, 1, i});
    };
    const Nat xm = mod_floor(pairs[i].x, r);
    if (xm != 0 && bm::gcd(xm, r) == 1) {
      const Nat xinv = mod_inverse(xm, r);
      push(mod_floor(Int(c0m) * Int(xinv), r), SOrigin::c0_x_inv);
      push(mod_floor(Int(c1m) * Int(xinv), r), SOrigin::c1_x_inv);
    }
    const Nat& ym = pairs[i].y;
    if (ym != 0 && bm::gcd(ym, r) == 1) {
      const Nat yinv = mod_inverse(ym, r);
      push(mod_floor(Int(c0m) * Int(yinv), r), SOrigin::c0_y_inv);
      push(mod_floor(Int(c1m) * Int(yinv), r), SOrigin::c1_y_inv);
    }
  }
  return out;
}

std::vector<Int> trace_forms(const Nat& n, const Nat& s, const std::optional<Nat>& r) {
  if (n < 2) throw std::invalid_argument("trace_forms: N must be at least 2");
  std::vector<Int> out;
  out.reserve(r ? 6 : 2);
  const Int np1 = Int(n) + 1;
  const Int si(s);
  const auto add = [&](const Int& t) {
    const Int key = bm::abs(t);
    for (const Int& u : out)
      if (bm::abs(u) == key) return;  // same quadratic: D depends on T^2 only
    out.push_back(t);
  };
  add(np1 - si);
  add(np1 + si);
  if (r) {
    const Int ri(*r);
    add(np1 - ri - si);
    add(np1 - ri + si);
    add(np1 + ri - si);
    add(np1 + ri + si);
  }
  return out;
}

std::vector<DiscriminantHit> discriminant_roots(const Nat& n, const Nat& s,
                                                const std::optional<Nat>& r,
                                                DiscriminantStats* stats) {
  std::vector<DiscriminantHit> hits;
  for (const Int& t : trace_forms(n, s, r)) {
    const Int d = t * t - 4 * Int(n);
    if (stats) ++stats->evaluated;
    if (d < 0) continue;
    const auto root = exact_sqrt(Nat(d));
    if (!root) continue;
    if (stats) ++stats->squares;
    const Nat ta = Nat(bm::abs(t));
    assert((ta - *root) % 2 == 0);
    const Nat p = (ta - *root) / 2;
    const Nat q = (ta + *root) / 2;
    if (p > 1 && q < n && p * q == n) hits.push_back(DiscriminantHit{t, Nat(d), *root, p, q});
  }
  return hits;
}

bool effective_approx_test(const Nat& n, const Int& x0, const Int& x1) {
  if (n < 2) throw std::invalid_argument("effective_approx_test: N must be at least 2");
  if (x0 <= 0) return false;
  if (!(x0 < x1 && x1 < 2 * x0)) return false;
  const Int gap = Int(n) - x0 * x1;
  const Int g2 = gap * gap;
  return g2 * g2 < 81 * Int(n) * Int(n) * Int(n);
}

std::optional<std::pair<Nat, Nat>> small_divisor_scan(const Nat& n, const Nat& center,
                                                      const Nat& radius, std::uint64_t* steps) {
  if (n < 2) throw std::invalid_argument("small_divisor_scan: N must be at least 2");
  for (Nat u = 0; u <= radius; ++u) {
    const int arms = (u == 0) ? 1 : 2;
    for (int arm = 0; arm < arms; ++arm) {
      const Int cand = (arm == 0) ? Int(center) + Int(u) : Int(center) - Int(u);
      if (steps) ++*steps;
      if (cand < 2 || cand >= Int(n)) continue;
      const Nat c = Nat(cand);
      if (n % c == 0) {
        const Nat other = n / c;
        return std::make_pair(std::min(c, other), std::max(c, other));
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Nat, Nat>> approx_probe(const Nat& n, const Nat& s,
                                                const std::optional<Nat>& r, const Nat& radius,
                                                WorkCounters* work) {
  WorkCounters local;
  WorkCounters& w = work ? *work : local;
  const auto hit = probe_candidate(n, s, r, /*squares=*/false, /*near=*/true, radius, w);
  if (!hit) return std::nullopt;
  return std::make_pair(hit->p, hit->q);
}

FactorReport algorithm_I(const Nat& n, const FactorConfig& cfg) {
  return run_variant_pair(n, cfg, /*near_miss=*/false);
}

FactorReport algorithm_II(const Nat& n, const FactorConfig& cfg) {
  return run_variant_pair(n, cfg, /*near_miss=*/true);
}

FactorReport algorithm_III(const Nat& n, const FactorConfig& cfg) {
  validate_n(n);
  validate_config(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.plant_r && *cfg.plant_r < 2)
    throw std::invalid_argument("planted modulus must be at least 2");
  if (cfg.plant_s && *cfg.plant_s < 2)
    throw std::invalid_argument("planted pair component must be at least 2");
  if (cfg.plant_r && cfg.plant_s && bm::gcd(*cfg.plant_r, *cfg.plant_s) != 1)
    throw std::invalid_argument("planted pair must be coprime");
  const auto [lo, hi] = pair_window(n);
  const TierBounds tb{iroot(n * n * n, 4), iroot(n * n, 3), isqrt(n)};
  const std::uint64_t total = cfg.max_outer.value_or(default_max_outer(n));
  auto outs = run_schedule(total, cfg.workers, [&](std::uint64_t j) {
    return run_pair3_iteration(n, j, cfg, lo, hi, tb);
  });
  Merged m = merge_outcomes(std::move(outs));
  FactorReport rep;
  rep.algorithm = "III";
  rep.r_used = m.r_hit ? m.r_hit : cfg.plant_r;
  fill_factor_report(rep, std::move(m), cfg, n);
  rep.elapsed_ms = cfg.timings ? elapsed_since(t0) : 0;
  return rep;
}

KeyRecoveryReport key_recovery(const Nat& n, const Nat& e, const FactorConfig& cfg) {
  validate_n(n);
  validate_config(cfg);
  if (e < 2) throw std::invalid_argument("public exponent must be at least 2");
  FactorConfig inner = cfg;
  inner.plant_r = e;  // the public exponent is the working modulus
  const FactorReport rep = run_variant_pair(n, inner, /*near_miss=*/false);
  KeyRecoveryReport kr;
  kr.n = n;
  kr.e = e;
  kr.work = rep.work;
  kr.trace = rep.trace;
  kr.winning_iteration = rep.winning_iteration;
  kr.elapsed_ms = rep.elapsed_ms;
  kr.seed = rep.seed;
  kr.workers_used = rep.workers_used;
  if (rep.outcome == FactorOutcome::factored) {
    kr.factored = true;
    kr.p = rep.p;
    kr.q = rep.q;
    kr.c1_hit = rep.c1_hit;
    kr.s_hit = rep.s_hit;
    const Nat phi = (*rep.p - 1) * (*rep.q - 1);
    kr.phi = phi;
    if (const auto d = try_mod_inverse(Int(e), phi)) {
      kr.d = *d;
      if (mod_floor(Int(e) * Int(*d), phi) != 1)
        throw std::runtime_error("recovered exponent failed its congruence invariant");
    }
  }
  return kr;
}

std::pair<Nat, Nat> modulus_window(const Nat& n) {
  if (n < 15) throw std::invalid_argument("modulus_window: N must be at least 15");
  return {n - ceil_15_sqrt_2n(n), n};
}

std::pair<Nat, Nat> pair_window(const Nat& n) {
  if (n < 15) throw std::invalid_argument("pair_window: N must be at least 15");
  return {n - ceil_15_sqrt_2n(n), n - isqrt(4 * n)};
}

std::vector<Semiprime> balanced_semiprimes_up_to(std::uint64_t bound) {
  if (bound > 100000000ULL)
    throw std::invalid_argument("balanced_semiprimes_up_to: bound must be at most 1e8");
  std::vector<Semiprime> out;
  if (bound < 15) return out;
  const auto primes = primes_up_to(static_cast<std::uint32_t>(bound / 3 + 1));
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (p < 3) continue;  // the algorithms want odd N, so odd primes only
    if (p * p > bound) break;
    for (std::size_t k = i + 1; k < primes.size(); ++k) {
      const std::uint64_t q = primes[k];
      if (q >= 2 * p || p * q > bound) break;
      out.push_back(Semiprime{p * q, p, q});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Semiprime& a, const Semiprime& b) { return a.n < b.n; });
  return out;
}

}  // namespace lindio
