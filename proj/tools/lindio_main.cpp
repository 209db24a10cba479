// SPDX-License-Identifier: Apache-2.0
//
// lindio — command-line surface over the library: one verb per module, seeded
// deterministic runs, reports as JSON (sorted keys, byte-reproducible), a
// human listing of the same tree, or CSV for the row-shaped parts.
//
// Exit codes: 0 success, 1 no result (search exhausted / key not recovered),
// 2 usage error. Definitive negative answers (an unsolvable congruence, a
// fully representable coin range) are answers, and exit 0.
//
// Numbers cross the command line as decimal strings of arbitrary length.
// The seed comes from --seed, else the DIOPH_SEED environment variable, else
// a fixed constant; `--seed random` draws one and echoes it in the report.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "lindio/arith.hpp"
#include "lindio/congruence.hpp"
#include "lindio/contfrac.hpp"
#include "lindio/diophantine.hpp"
#include "lindio/factor.hpp"
#include "lindio/report_io.hpp"
#include "lindio/stats.hpp"

namespace {

using namespace lindio;

enum class OutputMode { human, json, csv };

struct GlobalOpts {
  std::uint64_t seed = kDefaultSeed;
  OutputMode mode = OutputMode::human;
  unsigned workers = 1;
  bool verbose = false;
  bool timings = false;
};

// ---------------------------------------------------------------------------
// argument parsing helpers
// ---------------------------------------------------------------------------

bool is_decimal(const std::string& text, bool allow_sign) {
  std::size_t start = (allow_sign && !text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

Nat parse_nat(const std::string& text, const char* flag) {
  if (!is_decimal(text, false)) {
    throw CLI::ValidationError(std::string(flag) + ": expected a decimal integer, got '" +
                               text + "'");
  }
  return Nat(text);
}

Int parse_int(const std::string& text, const char* flag) {
  if (!is_decimal(text, true)) {
    throw CLI::ValidationError(std::string(flag) + ": expected a decimal integer, got '" +
                               text + "'");
  }
  return Int(text);
}

std::uint64_t resolve_seed(const std::string& flag_text) {
  std::string text = flag_text;
  if (text.empty()) {
    if (const char* env = std::getenv("DIOPH_SEED")) text = env;
  }
  if (text.empty()) return kDefaultSeed;
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  if (!is_decimal(text, false) || text.size() > 20) {
    throw CLI::ValidationError("--seed: expected a decimal 64-bit value or 'random'");
  }
  errno = 0;
  char* end = nullptr;
  std::uint64_t value = std::strtoull(text.c_str(), &end, 10);
  if (errno != 0 || end == text.c_str() || *end != '\0') {
    throw CLI::ValidationError("--seed: value does not fit in 64 bits");
  }
  return value;
}

// ---------------------------------------------------------------------------
// output
// ---------------------------------------------------------------------------

void emit(const GlobalOpts& g, const Json& envelope, const std::string& csv) {
  if (g.mode == OutputMode::json) {
    std::fputs((envelope.dump(2) + "\n").c_str(), stdout);
  } else if (g.mode == OutputMode::csv) {
    // The grain rows carry no header fields, so the seed goes to stderr.
    std::fprintf(stderr, "seed=%s\n", envelope.at("seed").get<std::string>().c_str());
    std::fputs(csv.c_str(), stdout);
  } else {
    std::fputs(render_human(envelope).c_str(), stdout);
  }
  if (g.verbose) {
    std::fprintf(stderr, "subcommand=%s seed=%s\n",
                 envelope.at("subcommand").get<std::string>().c_str(),
                 envelope.at("seed").get<std::string>().c_str());
  }
}

// ---------------------------------------------------------------------------
// factor / keyrec
// ---------------------------------------------------------------------------

ConstantStrategy parse_strategy(const std::string& name) {
  if (name == "uniform") return ConstantStrategy::uniform_random;
  if (name == "square-differences") return ConstantStrategy::random_square_differences;
  if (name == "consecutive-squares") return ConstantStrategy::consecutive_squares;
  throw CLI::ValidationError("--strategy: expected uniform, square-differences or "
                             "consecutive-squares");
}

struct FactorArgs {
  std::string n;
  std::string algorithm = "I";
  std::string strategy = "uniform";
  std::uint64_t max_outer = 0;  // 0: library default budget
  std::uint64_t pairs_per_outer = 1;
  std::uint64_t candidates_per_pair = 0;  // 0: library default
  std::uint64_t reps_per_n = 8;
};

FactorConfig make_factor_config(const FactorArgs& args, const GlobalOpts& g) {
  FactorConfig cfg;
  if (args.max_outer) cfg.max_outer = args.max_outer;
  cfg.pairs_per_outer = args.pairs_per_outer;
  if (args.candidates_per_pair) cfg.candidates_per_pair = args.candidates_per_pair;
  cfg.alg3_reps_per_n = args.reps_per_n;
  cfg.constant_strategy = parse_strategy(args.strategy);
  cfg.seed = g.seed;
  cfg.workers = g.workers;
  cfg.timings = g.timings;
  return cfg;
}

Json factor_config_json(const FactorArgs& args, const GlobalOpts& g) {
  return Json{{"n", args.n},
              {"algorithm", args.algorithm},
              {"strategy", args.strategy},
              {"max_outer", args.max_outer ? Json(args.max_outer) : Json("auto")},
              {"pairs_per_outer", args.pairs_per_outer},
              {"candidates_per_pair",
               args.candidates_per_pair ? Json(args.candidates_per_pair) : Json("auto")},
              {"reps_per_n", args.reps_per_n},
              {"workers", g.workers}};
}

int run_factor(const FactorArgs& args, const GlobalOpts& g) {
  Nat n = parse_nat(args.n, "--n");
  FactorConfig cfg = make_factor_config(args, g);
  FactorReport rep;
  if (args.algorithm == "I") {
    rep = algorithm_I(n, cfg);
  } else if (args.algorithm == "II") {
    rep = algorithm_II(n, cfg);
  } else if (args.algorithm == "III") {
    rep = algorithm_III(n, cfg);
  } else {
    throw CLI::ValidationError("--algorithm: expected I, II or III");
  }
  Json envelope = make_envelope("factor", factor_config_json(args, g), g.seed,
                                factor_result_json(rep), work_counters_json(rep.work),
                                rep.elapsed_ms);
  emit(g, envelope, trace_csv(rep.trace));
  return rep.outcome == FactorOutcome::factored ? 0 : 1;
}

int run_keyrec(const FactorArgs& args, const std::string& e_text, const GlobalOpts& g) {
  Nat n = parse_nat(args.n, "--n");
  Nat e = parse_nat(e_text, "--e");
  FactorConfig cfg = make_factor_config(args, g);
  KeyRecoveryReport rep = key_recovery(n, e, cfg);
  Json result = keyrec_result_json(rep);
  // For the fixed-first-constant strategies the winning congruence is
  // c1 * x ≡ y (mod e); its remainder descent is small enough to re-derive,
  // and the solution columns are the interesting part of the certificate.
  if (rep.factored && rep.c1_hit && args.strategy != "uniform") {
    Nat a = *rep.c1_hit % e;
    if (a > 0 && gcd(a, e) == 1) {
      Json xs = Json::array(), ys = Json::array();
      for (const auto& pair : thue_pairs(a, e)) {
        xs.push_back(dec_str(pair.x));
        ys.push_back(dec_str(pair.y));
      }
      result["thue_x"] = std::move(xs);
      result["thue_y"] = std::move(ys);
    }
  }
  Json config = factor_config_json(args, g);
  config["e"] = e_text;
  config.erase("algorithm");
  Json envelope = make_envelope("keyrec", std::move(config), g.seed, std::move(result),
                                work_counters_json(rep.work), rep.elapsed_ms);
  emit(g, envelope, trace_csv(rep.trace));
  return rep.d ? 0 : 1;
}

// ---------------------------------------------------------------------------
// cf / dioph / congruence / frobenius / repcount
// ---------------------------------------------------------------------------

int run_cf(const std::string& num_text, const std::string& den_text,
           const std::string& check_p, const std::string& check_q, const GlobalOpts& g) {
  Nat num = parse_nat(num_text, "--num");
  Nat den = parse_nat(den_text, "--den");
  auto quotients = cf_expand(num, den);
  auto table = convergents(quotients);
  Json qs = Json::array();
  for (const auto& q : quotients) qs.push_back(dec_str(q));
  Json convs = Json::array();
  for (const auto& c : table) convs.push_back({{"p", dec_str(c.p)}, {"q", dec_str(c.q)}});
  Json result{{"quotients", std::move(qs)}, {"convergents", std::move(convs)}};
  if (!check_p.empty()) {
    auto check = is_convergent_of(parse_nat(check_p, "--check-p"),
                                  parse_nat(check_q, "--check-q"), num, den);
    result["check"] = Json{{"approximation_inequality", check.approximation_inequality},
                           {"in_convergent_table", check.in_convergent_table}};
  }
  Json config{{"num", num_text}, {"den", den_text}};
  if (!check_p.empty()) {
    config["check_p"] = check_p;
    config["check_q"] = check_q;
  }
  emit(g, make_envelope("cf", std::move(config), g.seed, std::move(result), Json::object(), 0),
       "");
  return 0;
}

int run_dioph_linear(const std::string& r_text, const std::string& s_text,
                     const std::string& n_text, const GlobalOpts& g) {
  Nat r = parse_nat(r_text, "--r");
  Nat s = parse_nat(s_text, "--s");
  Int n = parse_int(n_text, "--n");
  auto sol = solve_linear(r, s, n);
  Json result;
  if (sol) {
    result = Json{{"solvable", true},
                  {"x0", dec_str(sol->x0)},
                  {"y0", dec_str(sol->y0)},
                  {"x_step", dec_str(sol->x_step)},
                  {"y_step", dec_str(sol->y_step)},
                  {"gcd", dec_str(sol->d)}};
  } else {
    result = Json{{"solvable", false}};
  }
  Json config{{"r", r_text}, {"s", s_text}, {"n", n_text}};
  emit(g, make_envelope("dioph-linear", std::move(config), g.seed, std::move(result),
                        Json::object(), 0),
       "");
  return 0;
}

int run_dioph_congruence(const std::string& a_text, const std::string& b_text,
                         const std::string& n_text, const GlobalOpts& g) {
  Nat a = parse_nat(a_text, "--a");
  Nat b = parse_nat(b_text, "--b");
  Nat n = parse_nat(n_text, "--n");
  auto solutions = solve_congruence(a, b, n);
  Json list = Json::array();
  for (const auto& x : solutions) list.push_back(dec_str(x));
  Json result{{"count", solutions.size()}, {"solutions", std::move(list)}};
  Json config{{"a", a_text}, {"b", b_text}, {"n", n_text}};
  emit(g, make_envelope("dioph-congruence", std::move(config), g.seed, std::move(result),
                        Json::object(), 0),
       "");
  return 0;
}

int run_congruence_thue(const std::string& a_text, const std::string& r_text,
                        const GlobalOpts& g) {
  Nat a = parse_nat(a_text, "--a");
  Nat r = parse_nat(r_text, "--r");
  auto pairs = thue_pairs(a, r);
  auto small = thue_small_pair(a, r);
  Json list = Json::array();
  for (const auto& pair : pairs) {
    list.push_back({{"x", dec_str(pair.x)}, {"y", dec_str(pair.y)}});
  }
  Json result{{"pairs", std::move(list)},
              {"small", Json{{"x", dec_str(small.x)}, {"y", dec_str(small.y)}}}};
  Json config{{"a", a_text}, {"r", r_text}};
  emit(g, make_envelope("congruence-thue", std::move(config), g.seed, std::move(result),
                        Json::object(), 0),
       "");
  return 0;
}

int run_congruence_lincong(const std::string& a_text, const std::string& c_text,
                           const std::string& n_text, const std::string& b_text,
                           const GlobalOpts& g) {
  auto res = linear_congruence_min(parse_nat(a_text, "--a"), parse_nat(c_text, "--c"),
                                   parse_nat(n_text, "--n"), parse_nat(b_text, "--b"));
  Json result{{"x0", dec_str(res.x0)}, {"y0", dec_str(res.y0)}};
  Json config{{"a", a_text}, {"c", c_text}, {"n", n_text}, {"b", b_text}};
  emit(g, make_envelope("congruence-lincong", std::move(config), g.seed, std::move(result),
                        Json::object(), 0),
       "");
  return 0;
}

int run_congruence_inverse(const std::string& a_text, const std::string& n_text,
                           const std::string& method, const GlobalOpts& g) {
  Nat a = parse_nat(a_text, "--a");
  Nat n = parse_nat(n_text, "--n");
  Json result;
  if (method == "euclid") {
    result["inverse"] = dec_str(inverse_euclid(a, n));
  } else if (method == "formula") {
    result["inverse"] = dec_str(inverse_formula(a, n));
  } else if (method == "voronoi") {
    result["inverse"] = dec_str(inverse_voronoi(a, n));
  } else if (method == "bounds") {
    auto bounds = inverse_bounds(a, n);
    result["bounds"] = Json{{"lo", dec_str(bounds.lo)}, {"hi", dec_str(bounds.hi)}};
  } else if (method == "all") {
    Nat value = inverse_euclid(a, n);
    bool agree = inverse_formula(a, n) == value;
    if (a <= 10000) agree = agree && inverse_voronoi(a, n) == value;
    auto bounds = inverse_bounds(a, n);
    agree = agree && bounds.lo <= value && value <= bounds.hi;
    result = Json{{"inverse", dec_str(value)},
                  {"bounds", Json{{"lo", dec_str(bounds.lo)}, {"hi", dec_str(bounds.hi)}}},
                  {"methods_agree", agree}};
    if (!agree) throw std::runtime_error("inverse methods disagree");
  } else {
    throw CLI::ValidationError("--method: expected euclid, formula, voronoi, bounds or all");
  }
  Json config{{"a", a_text}, {"n", n_text}, {"method", method}};
  emit(g, make_envelope("congruence-inverse", std::move(config), g.seed, std::move(result),
                        Json::object(), 0),
       "");
  return 0;
}

int run_congruence_maxdist(std::uint32_t n, const GlobalOpts& g) {
  auto res = max_inverse_distance(n);
  Json result{{"m", res.m}, {"a", res.a}, {"b", res.b}};
  Json config{{"n", n}};
  emit(g, make_envelope("congruence-maxdist", std::move(config), g.seed, std::move(result),
                        Json::object(), 0),
       "");
  return 0;
}

int run_frobenius(const std::string& r_text, const std::string& s_text,
                  const std::vector<std::string>& coin_texts, const std::string& cap_text,
                  const GlobalOpts& g) {
  Json result, config;
  if (!coin_texts.empty()) {
    if (cap_text.empty()) throw CLI::ValidationError("--coins requires --cap");
    std::vector<Nat> coins;
    for (const auto& text : coin_texts) coins.push_back(parse_nat(text, "--coins"));
    auto frob = frobenius_brute(coins, parse_nat(cap_text, "--cap"));
    result = frob ? Json{{"frobenius", dec_str(*frob)}, {"all_representable", false}}
                  : Json{{"frobenius", nullptr}, {"all_representable", true}};
    config = Json{{"coins", coin_texts}, {"cap", cap_text}};
  } else {
    if (r_text.empty() || s_text.empty()) {
      throw CLI::ValidationError("frobenius needs either --r/--s or --coins/--cap");
    }
    result = Json{{"frobenius",
                   dec_str(frobenius_two(parse_nat(r_text, "--r"), parse_nat(s_text, "--s")))}};
    config = Json{{"r", r_text}, {"s", s_text}};
  }
  emit(g, make_envelope("frobenius", std::move(config), g.seed, std::move(result),
                        Json::object(), 0),
       "");
  return 0;
}

int run_repcount(const std::string& r_text, const std::string& s_text,
                 const std::string& n_text, bool density, const std::string& m_text,
                 const std::vector<std::string>& r_coeff_texts,
                 const std::vector<std::string>& s_coeff_texts, const GlobalOpts& g) {
  Json result, config;
  std::string subcommand = "repcount";
  if (!r_coeff_texts.empty() || !s_coeff_texts.empty()) {
    if (m_text.empty()) throw CLI::ValidationError("--r-coeffs/--s-coeffs require --m");
    std::vector<Nat> r_coeffs, s_coeffs;
    for (const auto& text : r_coeff_texts) r_coeffs.push_back(parse_nat(text, "--r-coeffs"));
    for (const auto& text : s_coeff_texts) s_coeffs.push_back(parse_nat(text, "--s-coeffs"));
    Nat count = rep_count_system(r_coeffs, s_coeffs, parse_nat(n_text, "--n"),
                                 parse_nat(m_text, "--m"));
    result = Json{{"count", dec_str(count)}};
    config = Json{{"r_coeffs", r_coeff_texts},
                  {"s_coeffs", s_coeff_texts},
                  {"n", n_text},
                  {"m", m_text}};
  } else if (density) {
    auto dens = representability_density(parse_nat(r_text, "--r"), parse_nat(s_text, "--s"));
    result = Json{{"representable", dec_str(dens.representable)},
                  {"total", dec_str(dens.total)}};
    config = Json{{"r", r_text}, {"s", s_text}, {"density", true}};
  } else {
    Nat count = rep_count(parse_nat(r_text, "--r"), parse_nat(s_text, "--s"),
                          parse_nat(n_text, "--n"));
    result = Json{{"count", dec_str(count)}};
    config = Json{{"r", r_text}, {"s", s_text}, {"n", n_text}};
  }
  emit(g, make_envelope(subcommand, std::move(config), g.seed, std::move(result),
                        Json::object(), 0),
       "");
  return 0;
}

// ---------------------------------------------------------------------------
// stats
// ---------------------------------------------------------------------------

int emit_experiment(const char* subcommand, Json config, const ExperimentReport& rep,
                    const GlobalOpts& g) {
  config["workers"] = g.workers;
  Json envelope = make_envelope(subcommand, std::move(config), rep.seed,
                                experiment_json(rep), Json::object(), 0);
  emit(g, envelope, stats_csv(rep));
  return 0;
}

// ---------------------------------------------------------------------------
// selftest: quick cross-checks of one implementation against another
// ---------------------------------------------------------------------------

int run_selftest(const GlobalOpts& g) {
  std::vector<std::pair<std::string, bool>> checks;
  auto record = [&](const std::string& name, bool pass) { checks.emplace_back(name, pass); };

  {  // closed-form Frobenius number against the bitmap search
    bool pass = true;
    for (std::uint32_t r = 2; r <= 12; ++r) {
      for (std::uint32_t s = r + 1; s <= 13; ++s) {
        if (gcd(Nat(r), Nat(s)) != 1) continue;
        auto brute = frobenius_brute({Nat(r), Nat(s)}, Nat(r) * s);
        pass = pass && brute && *brute == frobenius_two(Nat(r), Nat(s));
      }
    }
    record("frobenius_closed_form_vs_bitmap", pass);
  }
  {  // representation counts against direct enumeration
    bool pass = true;
    for (std::uint32_t r = 2; r <= 7 && pass; ++r) {
      for (std::uint32_t s = r + 1; s <= 8 && pass; ++s) {
        if (gcd(Nat(r), Nat(s)) != 1) continue;
        for (std::uint32_t n = 0; n <= 2 * r * s; ++n) {
          std::uint32_t direct = 0;
          for (std::uint32_t x = 0; x * r <= n; ++x) {
            if ((n - x * r) % s == 0) ++direct;
          }
          pass = pass && rep_count(Nat(r), Nat(s), Nat(n)) == direct;
        }
      }
    }
    record("rep_count_vs_enumeration", pass);
  }
  {  // four inverse routes agree
    bool pass = true;
    RngStream rng(g.seed, 0);
    for (int i = 0; i < 200; ++i) {
      Nat n = rng.range(3, 1000000);
      Nat a = rng.range(2, 500);
      if (a >= n || gcd(a, n) != 1) continue;
      Nat inv = inverse_euclid(a, n);
      auto bounds = inverse_bounds(a, n);
      pass = pass && inverse_formula(a, n) == inv && inverse_voronoi(a, n) == inv &&
             bounds.lo <= inv && inv <= bounds.hi;
    }
    record("inverse_methods_agree", pass);
  }
  {  // small-solution guarantee of the remainder descent
    bool pass = true;
    RngStream rng(g.seed, 1);
    for (int i = 0; i < 200; ++i) {
      Nat r = rng.range(4, Nat(1) << 48);
      Nat a = rng.range(1, r - 1);
      if (gcd(a, r) != 1) continue;
      auto pair = thue_small_pair(a, r);
      Nat bound = isqrt(r);
      pass = pass && pair.y <= bound && abs(pair.x) <= bound &&
             mod_floor(a * pair.x - Int(pair.y), r) == 0;
    }
    record("thue_small_pair_bounds", pass);
  }
  {  // congruence minimizer against a direct x-scan
    bool pass = true;
    RngStream rng(g.seed, 2);
    for (int i = 0; i < 100 && pass; ++i) {
      Nat n = rng.range(3, 60);
      Nat a = rng.range(1, n - 1);
      if (gcd(a, n) != 1) continue;
      Nat c = rng.range(0, n - 1);
      Nat cap = rng.range(1, n - 1);
      auto res = linear_congruence_min(a, c, n, cap);
      Nat best_x = 0;
      for (Nat x = 0;; ++x) {
        if (mod_floor(a * x - Int(c), n) < cap) {
          best_x = x;
          break;
        }
      }
      pass = pass && res.x0 == best_x && mod_floor(a * best_x - Int(c), n) == res.y0;
    }
    record("linear_congruence_min_vs_scan", pass);
  }
  {  // totient residue factors every balanced semiprime exactly
    bool pass = true;
    for (const auto& sp : balanced_semiprimes_up_to(3000)) {
      Nat phi = Nat(sp.n) + 1 - sp.p - sp.q;
      auto hits = discriminant_roots(Nat(sp.n), phi, std::nullopt);
      bool found = false;
      for (const auto& hit : hits) found = found || (hit.p == sp.p && hit.q == sp.q);
      pass = pass && found;
    }
    record("totient_residue_factors_semiprimes", pass);
  }
  {  // convergents satisfy the best-approximation inequality test
    bool pass = true;
    RngStream rng(g.seed, 3);
    for (int i = 0; i < 100; ++i) {
      Nat den = rng.range(2, 1000000);
      Nat num = rng.range(1, den - 1);
      auto table = convergents(cf_expand(num, den));
      if (table.size() < 2) continue;
      const auto& last = table[table.size() - 2];
      auto check = is_convergent_of(last.p, last.q, num, den);
      pass = pass && check.in_convergent_table;
    }
    record("convergents_in_own_table", pass);
  }

  bool all_pass = true;
  Json rows = Json::array();
  for (const auto& [name, pass] : checks) {
    rows.push_back({{"name", name}, {"pass", pass}});
    all_pass = all_pass && pass;
  }
  Json result{{"checks", std::move(rows)}, {"all_pass", all_pass}};
  emit(g, make_envelope("selftest", Json::object(), g.seed, std::move(result), Json::object(),
                        0),
       "");
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lindio: linear-Diophantine factoring methods and the congruence toolbox "
               "around them"};
  app.require_subcommand(1);
  app.fallthrough();
  app.failure_message(CLI::FailureMessage::help);

  std::string seed_text;
  bool want_json = false, want_csv = false;
  GlobalOpts g;
  app.add_option("--seed", seed_text,
                 "decimal 64-bit seed, or 'random' (env DIOPH_SEED supplies a default)");
  auto* json_flag = app.add_flag("--json", want_json, "emit the JSON report envelope");
  auto* csv_flag = app.add_flag("--csv", want_csv, "emit CSV rows (seed goes to stderr)");
  json_flag->excludes(csv_flag);
  csv_flag->excludes(json_flag);
  app.add_option("--workers", g.workers, "worker threads for factor/stats fan-out")
      ->check(CLI::Range(1u, 256u));
  app.add_flag("--verbose", g.verbose, "diagnostics on stderr");
  app.add_flag("--timings", g.timings, "fill elapsed_ms (off keeps output byte-identical)");

  FactorArgs fargs;
  std::string e_text;
  auto* factor_cmd = app.add_subcommand("factor", "factor an odd composite by trace search");
  factor_cmd->add_option("--n", fargs.n, "the integer to factor")->required();
  factor_cmd->add_option("--algorithm", fargs.algorithm, "I, II or III (default I)");
  factor_cmd->add_option("--strategy", fargs.strategy,
                         "constant choice: uniform, square-differences, consecutive-squares");
  factor_cmd->add_option("--max-outer", fargs.max_outer, "outer budget (default: auto)");
  factor_cmd->add_option("--pairs-per-outer", fargs.pairs_per_outer, "draws per outer turn");
  factor_cmd->add_option("--candidates-per-pair", fargs.candidates_per_pair,
                         "residue candidates per constant pair (default: auto)");
  factor_cmd->add_option("--reps-per-n", fargs.reps_per_n,
                         "variant III family members per convergent index");

  FactorArgs kargs;
  kargs.strategy = "consecutive-squares";
  auto* keyrec_cmd =
      app.add_subcommand("keyrec", "recover a private exponent from (n, e) by factoring n");
  keyrec_cmd->add_option("--n", kargs.n, "the modulus")->required();
  keyrec_cmd->add_option("--e", e_text, "the public exponent (also the search modulus)")
      ->required();
  keyrec_cmd->add_option("--strategy", kargs.strategy,
                         "constant choice (default consecutive-squares)");
  keyrec_cmd->add_option("--max-outer", kargs.max_outer, "outer budget (default: auto)");
  keyrec_cmd->add_option("--pairs-per-outer", kargs.pairs_per_outer, "draws per outer turn");
  keyrec_cmd->add_option("--candidates-per-pair", kargs.candidates_per_pair,
                         "residue candidates per constant pair (default: auto)");

  std::string num_text, den_text, check_p, check_q;
  auto* cf_cmd = app.add_subcommand("cf", "continued fraction of num/den with convergents");
  cf_cmd->add_option("--num", num_text, "numerator")->required();
  cf_cmd->add_option("--den", den_text, "denominator")->required();
  auto* check_p_opt = cf_cmd->add_option("--check-p", check_p, "test p/q for membership");
  cf_cmd->add_option("--check-q", check_q, "test p/q for membership")->needs(check_p_opt);

  auto* dioph_cmd = app.add_subcommand("dioph", "linear Diophantine equations");
  dioph_cmd->require_subcommand(1);
  std::string dl_r, dl_s, dl_n;
  auto* dioph_linear = dioph_cmd->add_subcommand("linear", "general solution of r*x + s*y = n");
  dioph_linear->add_option("--r", dl_r, "coefficient of x")->required();
  dioph_linear->add_option("--s", dl_s, "coefficient of y")->required();
  dioph_linear->add_option("--n", dl_n, "target (may be negative)")->required();
  std::string dc_a, dc_b, dc_n;
  auto* dioph_cong =
      dioph_cmd->add_subcommand("congruence", "all solutions of a*x ≡ b (mod n)");
  dioph_cong->add_option("--a", dc_a, "coefficient")->required();
  dioph_cong->add_option("--b", dc_b, "target residue")->required();
  dioph_cong->add_option("--n", dc_n, "modulus")->required();

  auto* cong_cmd = app.add_subcommand("congruence", "small solutions and modular inverses");
  cong_cmd->require_subcommand(1);
  std::string ct_a, ct_r;
  auto* cong_thue = cong_cmd->add_subcommand("thue", "remainder-descent pairs a*x ≡ y (mod r)");
  cong_thue->add_option("--a", ct_a, "residue")->required();
  cong_thue->add_option("--r", ct_r, "modulus")->required();
  std::string cl_a, cl_c, cl_n, cl_b;
  auto* cong_lincong =
      cong_cmd->add_subcommand("lincong", "minimal x with (a*x - c) mod n below a cap");
  cong_lincong->add_option("--a", cl_a, "coefficient")->required();
  cong_lincong->add_option("--c", cl_c, "offset")->required();
  cong_lincong->add_option("--n", cl_n, "modulus")->required();
  cong_lincong->add_option("--b", cl_b, "residue cap")->required();
  std::string ci_a, ci_n, ci_method = "all";
  auto* cong_inverse = cong_cmd->add_subcommand("inverse", "modular inverse, four ways");
  cong_inverse->add_option("--a", ci_a, "value to invert")->required();
  cong_inverse->add_option("--n", ci_n, "modulus")->required();
  cong_inverse->add_option("--method", ci_method, "euclid, formula, voronoi, bounds or all");
  std::uint32_t cm_n = 0;
  auto* cong_maxdist =
      cong_cmd->add_subcommand("maxdist", "max |a - a^{-1}| over the units of Z/n");
  cong_maxdist->add_option("--n", cm_n, "modulus (2..100000)")->required();

  std::string fr_r, fr_s, fr_cap;
  std::vector<std::string> fr_coins;
  auto* frob_cmd = app.add_subcommand("frobenius", "largest non-representable target");
  frob_cmd->add_option("--r", fr_r, "first coin (closed form)");
  frob_cmd->add_option("--s", fr_s, "second coin (closed form)");
  frob_cmd->add_option("--coins", fr_coins, "coin list (bitmap search)");
  frob_cmd->add_option("--cap", fr_cap, "search bound for --coins");

  std::string rc_r, rc_s, rc_n, rc_m;
  std::vector<std::string> rc_rc, rc_sc;
  bool rc_density = false;
  auto* rep_cmd = app.add_subcommand("repcount", "number of nonnegative representations");
  rep_cmd->add_option("--r", rc_r, "first coefficient");
  rep_cmd->add_option("--s", rc_s, "second coefficient");
  rep_cmd->add_option("--n", rc_n, "target");
  rep_cmd->add_flag("--density", rc_density, "representable fraction of [s, (r-1)(s-1)]");
  rep_cmd->add_option("--r-coeffs", rc_rc, "system mode: first equation coefficients");
  rep_cmd->add_option("--s-coeffs", rc_sc, "system mode: second equation coefficients");
  rep_cmd->add_option("--m", rc_m, "system mode: second target");

  auto* stats_cmd = app.add_subcommand("stats", "statistics experiments");
  stats_cmd->require_subcommand(1);
  std::uint64_t st_trials = 10000;
  unsigned st_depth = 1, st_magnitude = 64, st_bins = 10, st_b = 1;
  std::uint64_t st_x = 1000, st_p = 101;
  std::string st_n, st_lo, st_hi, st_a, st_r, st_s;
  auto* st_quot = stats_cmd->add_subcommand("quotient-digits", "quotient digit frequencies");
  st_quot->add_option("--trials", st_trials, "sample count");
  st_quot->add_option("--depth", st_depth, "which quotient to tally (1-based)");
  auto* st_euclid = stats_cmd->add_subcommand("euclid-steps", "division counts of gcd");
  st_euclid->add_option("--trials", st_trials, "sample count");
  st_euclid->add_option("--magnitude", st_magnitude, "operand bits (16..4096)");
  auto* st_coprime = stats_cmd->add_subcommand("coprime-density", "P(gcd = 1) estimate");
  st_coprime->add_option("--trials", st_trials, "sample count");
  st_coprime->add_option("--magnitude", st_magnitude, "operand bits");
  auto* st_phi = stats_cmd->add_subcommand("phi-sums", "exact totient sums vs asymptotics");
  st_phi->add_option("--x", st_x, "sum bound (1..10^7)");
  auto* st_interval =
      stats_cmd->add_subcommand("coprime-interval", "exact coprime count on [x, y]");
  st_interval->add_option("--n", st_n, "modulus")->required();
  st_interval->add_option("--x", st_lo, "interval start (>= 1)")->required();
  st_interval->add_option("--y", st_hi, "interval end (<= n)")->required();
  auto* st_inverse =
      stats_cmd->add_subcommand("inverse-uniformity", "grid tally of (x, x^{-1}) pairs");
  st_inverse->add_option("--n", st_n, "modulus (3..10^7)")->required();
  st_inverse->add_option("--bins", st_bins, "grid side");
  auto* st_theta =
      stats_cmd->add_subcommand("theta-uniformity", "negated-inverse residue distribution");
  st_theta->add_option("--a", st_a, "modulus (3..2^20)")->required();
  st_theta->add_option("--trials", st_trials, "sample count");
  auto* st_product =
      stats_cmd->add_subcommand("product-coverage", "distinct x*y mod p below the root bound");
  st_product->add_option("--p", st_p, "odd prime (11..10^5)");
  auto* st_near = stats_cmd->add_subcommand("near-square-repr",
                                            "representability rate of near-square constants");
  st_near->add_option("--r", st_r, "first coefficient (>= 16)")->required();
  st_near->add_option("--s", st_s, "second coefficient")->required();
  st_near->add_option("--b", st_b, "log-power shrinking the draw window");
  st_near->add_option("--trials", st_trials, "sample count");

  auto* selftest_cmd =
      app.add_subcommand("selftest", "cross-check the solvers against each other");
  (void)selftest_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    g.seed = resolve_seed(seed_text);
    if (want_json) g.mode = OutputMode::json;
    if (want_csv) g.mode = OutputMode::csv;

    if (app.got_subcommand("factor")) return run_factor(fargs, g);
    if (app.got_subcommand("keyrec")) return run_keyrec(kargs, e_text, g);
    if (app.got_subcommand("cf")) return run_cf(num_text, den_text, check_p, check_q, g);
    if (app.got_subcommand("dioph")) {
      if (dioph_cmd->got_subcommand("linear")) return run_dioph_linear(dl_r, dl_s, dl_n, g);
      return run_dioph_congruence(dc_a, dc_b, dc_n, g);
    }
    if (app.got_subcommand("congruence")) {
      if (cong_cmd->got_subcommand("thue")) return run_congruence_thue(ct_a, ct_r, g);
      if (cong_cmd->got_subcommand("lincong"))
        return run_congruence_lincong(cl_a, cl_c, cl_n, cl_b, g);
      if (cong_cmd->got_subcommand("inverse"))
        return run_congruence_inverse(ci_a, ci_n, ci_method, g);
      return run_congruence_maxdist(cm_n, g);
    }
    if (app.got_subcommand("frobenius")) return run_frobenius(fr_r, fr_s, fr_coins, fr_cap, g);
    if (app.got_subcommand("repcount"))
      return run_repcount(rc_r, rc_s, rc_n, rc_density, rc_m, rc_rc, rc_sc, g);
    if (app.got_subcommand("stats")) {
      if (stats_cmd->got_subcommand("quotient-digits")) {
        auto rep = quotient_digit_distribution(st_trials, st_depth, g.seed, g.workers);
        return emit_experiment("stats-quotient-digits",
                               Json{{"trials", st_trials}, {"depth", st_depth}}, rep, g);
      }
      if (stats_cmd->got_subcommand("euclid-steps")) {
        auto rep = euclid_steps(st_trials, st_magnitude, g.seed, g.workers);
        return emit_experiment("stats-euclid-steps",
                               Json{{"trials", st_trials}, {"magnitude", st_magnitude}}, rep,
                               g);
      }
      if (stats_cmd->got_subcommand("coprime-density")) {
        auto rep = coprime_density(st_trials, st_magnitude, g.seed, g.workers);
        return emit_experiment("stats-coprime-density",
                               Json{{"trials", st_trials}, {"magnitude", st_magnitude}}, rep,
                               g);
      }
      if (stats_cmd->got_subcommand("phi-sums")) {
        auto rep = phi_sums(st_x);
        return emit_experiment("stats-phi-sums", Json{{"x", st_x}}, rep, g);
      }
      if (stats_cmd->got_subcommand("coprime-interval")) {
        auto rep = coprime_interval(parse_nat(st_n, "--n"), parse_nat(st_lo, "--x"),
                                    parse_nat(st_hi, "--y"));
        return emit_experiment("stats-coprime-interval",
                               Json{{"n", st_n}, {"x", st_lo}, {"y", st_hi}}, rep, g);
      }
      if (stats_cmd->got_subcommand("inverse-uniformity")) {
        auto rep = inverse_uniformity(parse_nat(st_n, "--n"), st_bins);
        return emit_experiment("stats-inverse-uniformity",
                               Json{{"n", st_n}, {"bins", st_bins}}, rep, g);
      }
      if (stats_cmd->got_subcommand("theta-uniformity")) {
        auto rep = theta_uniformity(parse_nat(st_a, "--a"), st_trials, g.seed, g.workers);
        return emit_experiment("stats-theta-uniformity",
                               Json{{"a", st_a}, {"trials", st_trials}}, rep, g);
      }
      if (stats_cmd->got_subcommand("product-coverage")) {
        auto rep = product_coverage(st_p);
        return emit_experiment("stats-product-coverage", Json{{"p", st_p}}, rep, g);
      }
      auto rep = near_square_representability(parse_nat(st_r, "--r"), parse_nat(st_s, "--s"),
                                              st_b, st_trials, g.seed, g.workers);
      return emit_experiment(
          "stats-near-square-repr",
          Json{{"r", st_r}, {"s", st_s}, {"b", st_b}, {"trials", st_trials}}, rep, g);
    }
    return run_selftest(g);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    std::fputs(app.help().c_str(), stderr);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid argument: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
