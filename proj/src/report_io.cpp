// SPDX-License-Identifier: Apache-2.0

#include "lindio/report_io.hpp"

#include <stdexcept>
#include <utility>

namespace lindio {

namespace {

const char* origin_name(SOrigin origin) {
  switch (origin) {
    case SOrigin::c0_x_inv: return "c0_x_inv";
    case SOrigin::c1_x_inv: return "c1_x_inv";
    case SOrigin::c0_y_inv: return "c0_y_inv";
    case SOrigin::c1_y_inv: return "c1_y_inv";
  }
  throw std::runtime_error("unmapped residue-candidate origin");
}

Json candidates_json(const std::vector<SCandidate>& cands) {
  Json out = Json::array();
  for (const auto& cand : cands) {
    out.push_back({{"s", dec_str(cand.s)},
                   {"origin", origin_name(cand.origin)},
                   {"variant", cand.variant},
                   {"pair_index", cand.pair_index}});
  }
  return out;
}

// "key: value" lines; nested levels indent by two spaces. Object arrays use
// "- " item markers so the element boundaries stay visible.
void render_node(const Json& node, int indent, std::string& out);

std::string scalar_text(const Json& node) {
  if (node.is_string()) return node.get<std::string>();
  return node.dump();
}

bool all_scalars(const Json& arr) {
  for (const auto& item : arr) {
    if (item.is_object() || item.is_array()) return false;
  }
  return true;
}

void render_array(const Json& arr, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& item : arr) {
    if (item.is_object() || item.is_array()) {
      std::string block;
      render_node(item, indent + 2, block);
      // Replace the first element line's indentation with the item marker.
      if (block.size() > pad.size() + 2) {
        out += pad + "- " + block.substr(pad.size() + 2);
      } else {
        out += pad + "-\n";
      }
    } else {
      out += pad + "- " + scalar_text(item) + "\n";
    }
  }
}

void render_node(const Json& node, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      const Json& value = it.value();
      if (value.is_object() && !value.empty()) {
        out += pad + it.key() + ":\n";
        render_node(value, indent + 2, out);
      } else if (value.is_array() && !value.empty() && !all_scalars(value)) {
        out += pad + it.key() + ":\n";
        render_array(value, indent + 2, out);
      } else if (value.is_array() && !value.empty()) {
        out += pad + it.key() + ": [";
        for (std::size_t i = 0; i < value.size(); ++i) {
          if (i) out += ", ";
          out += scalar_text(value[i]);
        }
        out += "]\n";
      } else if (value.is_object() || value.is_array()) {
        out += pad + it.key() + ": " + (value.is_object() ? "{}" : "[]") + "\n";
      } else {
        out += pad + it.key() + ": " + scalar_text(value) + "\n";
      }
    }
  } else if (node.is_array()) {
    render_array(node, indent, out);
  } else {
    out += pad + scalar_text(node) + "\n";
  }
}

void append_csv_row(std::string& out, std::initializer_list<std::string> cells) {
  bool first = true;
  for (const auto& cell : cells) {
    if (!first) out += ',';
    out += cell;
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string dec_str(const Int& v) { return v.str(); }

Json work_counters_json(const WorkCounters& w) {
  return Json{{"outer_iterations", w.outer_iterations},
              {"pair_draws", w.pair_draws},
              {"rejected_draws", w.rejected_draws},
              {"candidates_generated", w.candidates_generated},
              {"discriminants_tested", w.discriminants_tested},
              {"square_hits", w.square_hits},
              {"approx_hits", w.approx_hits},
              {"scan_steps", w.scan_steps},
              {"t_candidates", w.t_candidates}};
}

Json trace_json(const std::vector<TraceEntry>& trace) {
  Json out = Json::array();
  for (const auto& entry : trace) {
    Json item{{"iteration", entry.iteration},
              {"r", dec_str(entry.r)},
              {"square_hits", entry.square_hits},
              {"candidates", candidates_json(entry.candidates)}};
    if (entry.s) item["s"] = dec_str(*entry.s);
    if (entry.c0) item["c0"] = dec_str(*entry.c0);
    if (entry.c1) item["c1"] = dec_str(*entry.c1);
    Json discs = Json::array();
    for (const auto& d : entry.discriminants) discs.push_back(dec_str(d));
    item["discriminants"] = std::move(discs);
    Json ts = Json::array();
    for (const auto& t : entry.t_values) ts.push_back(dec_str(t));
    item["t_values"] = std::move(ts);
    out.push_back(std::move(item));
  }
  return out;
}

Json factor_result_json(const FactorReport& rep) {
  Json out{{"outcome", rep.outcome == FactorOutcome::factored ? "factored" : "exhausted"},
           {"algorithm", rep.algorithm},
           {"n", dec_str(rep.n)},
           {"winning_iteration", rep.winning_iteration},
           {"workers_used", rep.workers_used},
           {"trace", trace_json(rep.trace)}};
  if (rep.p) out["p"] = dec_str(*rep.p);
  if (rep.q) out["q"] = dec_str(*rep.q);
  if (rep.r_used) out["r_used"] = dec_str(*rep.r_used);
  if (rep.s_hit) out["s_hit"] = dec_str(*rep.s_hit);
  if (rep.c1_hit) out["c1_hit"] = dec_str(*rep.c1_hit);
  return out;
}

Json keyrec_result_json(const KeyRecoveryReport& rep) {
  Json out{{"factored", rep.factored},
           {"n", dec_str(rep.n)},
           {"e", dec_str(rep.e)},
           {"winning_iteration", rep.winning_iteration},
           {"workers_used", rep.workers_used},
           {"trace", trace_json(rep.trace)}};
  if (rep.p) out["p"] = dec_str(*rep.p);
  if (rep.q) out["q"] = dec_str(*rep.q);
  if (rep.phi) out["phi"] = dec_str(*rep.phi);
  if (rep.d) out["d"] = dec_str(*rep.d);
  if (rep.c1_hit) out["c1_hit"] = dec_str(*rep.c1_hit);
  if (rep.s_hit) out["s_hit"] = dec_str(*rep.s_hit);
  return out;
}

Json experiment_json(const ExperimentReport& rep) {
  Json params = Json::array();
  for (const auto& [key, value] : rep.parameters) params.push_back({key, value});
  Json observed = Json::array();
  for (const auto& row : rep.observed)
    observed.push_back({{"label", row.label}, {"value", row.value}});
  Json reference = Json::array();
  for (const auto& row : rep.reference)
    reference.push_back({{"label", row.label}, {"value", row.value}});
  return Json{{"name", rep.name},         {"parameters", std::move(params)},
              {"trials", rep.trials},     {"observed", std::move(observed)},
              {"reference", std::move(reference)}, {"deviation", rep.deviation},
              {"seed", rep.seed}};
}

ExperimentReport experiment_from_json(const Json& j) {
  ExperimentReport rep;
  rep.name = j.at("name").get<std::string>();
  for (const auto& pair : j.at("parameters")) {
    rep.parameters.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
  }
  rep.trials = j.at("trials").get<std::uint64_t>();
  for (const auto& row : j.at("observed")) {
    rep.observed.push_back({row.at("label").get<std::string>(), row.at("value").get<double>()});
  }
  for (const auto& row : j.at("reference")) {
    rep.reference.push_back({row.at("label").get<std::string>(), row.at("value").get<double>()});
  }
  rep.deviation = j.at("deviation").get<double>();
  rep.seed = j.at("seed").get<std::uint64_t>();
  return rep;
}

Json make_envelope(const std::string& subcommand, Json config, std::uint64_t seed,
                   Json result, Json work_counters, std::uint64_t elapsed_ms) {
  return Json{{"tool_version", kToolVersion},
              {"subcommand", subcommand},
              {"config", std::move(config)},
              {"seed", std::to_string(seed)},
              {"result", std::move(result)},
              {"work_counters", std::move(work_counters)},
              {"elapsed_ms", elapsed_ms}};
}

std::string render_human(const Json& tree) {
  std::string out;
  render_node(tree, 0, out);
  return out;
}

std::string stats_csv(const ExperimentReport& rep) {
  std::string out;
  append_csv_row(out, {"section", "label", "value"});
  for (const auto& [key, value] : rep.parameters) append_csv_row(out, {"parameter", key, value});
  for (const auto& row : rep.observed)
    append_csv_row(out, {"observed", row.label, Json(row.value).dump()});
  for (const auto& row : rep.reference)
    append_csv_row(out, {"reference", row.label, Json(row.value).dump()});
  return out;
}

std::string trace_csv(const std::vector<TraceEntry>& trace) {
  std::string out;
  append_csv_row(out, {"iteration", "kind", "r", "s", "c0", "c1", "index", "value", "origin",
                       "variant", "pair_index"});
  for (const auto& entry : trace) {
    const std::string iter = std::to_string(entry.iteration);
    const std::string r = dec_str(entry.r);
    const std::string s = entry.s ? dec_str(*entry.s) : "";
    const std::string c0 = entry.c0 ? dec_str(*entry.c0) : "";
    const std::string c1 = entry.c1 ? dec_str(*entry.c1) : "";
    for (std::size_t i = 0; i < entry.candidates.size(); ++i) {
      const auto& cand = entry.candidates[i];
      append_csv_row(out, {iter, "candidate", r, s, c0, c1, std::to_string(i), dec_str(cand.s),
                           origin_name(cand.origin), std::to_string(cand.variant),
                           std::to_string(cand.pair_index)});
    }
    for (std::size_t i = 0; i < entry.discriminants.size(); ++i) {
      append_csv_row(out, {iter, "discriminant", r, s, c0, c1, std::to_string(i),
                           dec_str(entry.discriminants[i]), "", "", ""});
    }
    for (std::size_t i = 0; i < entry.t_values.size(); ++i) {
      append_csv_row(out, {iter, "t_value", r, s, c0, c1, std::to_string(i),
                           dec_str(entry.t_values[i]), "", "", ""});
    }
  }
  return out;
}

}  // namespace lindio
