#include "hetnet/config_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hetnet/errors.hpp"
#include "json.hpp"

namespace hetnet {
namespace {

using nlohmann::json;

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("config", std::string("malformed JSON: ") + e.what());
  }
}

double number(const json& j, const std::string& key) {
  if (!j.is_number()) throw ValidationError(key, "expected a number");
  return j.get<double>();
}

std::vector<double> numbers(const json& j, const std::string& key) {
  if (!j.is_array()) throw ValidationError(key, "expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, key));
  return out;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [k, v] : obj.items()) {
    if (!known.count(k)) throw ValidationError(where + k, "unknown key");
  }
}

// Reads `key` (linear) or `key_db`; both at once is an error.
template <class Assign>
void read_threshold(const json& doc, const std::string& key, Assign&& assign) {
  const bool lin = doc.contains(key);
  const bool db = doc.contains(key + "_db");
  if (lin && db) throw ValidationError(key, "give either " + key + " or " + key + "_db, not both");
  if (lin) assign(doc.at(key), false);
  if (db) assign(doc.at(key + "_db"), true);
}

SpectrumPolicy parse_policy(const json& j) {
  if (j.is_string()) {
    const auto t = j.get<std::string>();
    if (t == "csa") return CoChannelSpectrum{};
    throw ValidationError("policy", "policy '" + t + "' needs parameters; use an object");
  }
  if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
    throw ValidationError("policy.type", "expected {\"type\": \"ssa\"|\"csa\"|\"osa\", ...}");
  }
  const auto t = j.at("type").get<std::string>();
  if (t == "ssa") {
    reject_unknown(j, {"type", "p_m"}, "policy.");
    if (!j.contains("p_m")) throw ValidationError("policy.p_m", "required under shared allocation");
    return SharedSpectrum{number(j.at("p_m"), "policy.p_m")};
  }
  if (t == "csa") {
    reject_unknown(j, {"type"}, "policy.");
    return CoChannelSpectrum{};
  }
  if (t == "osa") {
    reject_unknown(j, {"type", "p_o"}, "policy.");
    if (!j.contains("p_o")) throw ValidationError("policy.p_o", "required under orthogonal allocation");
    return OrthogonalSpectrum{number(j.at("p_o"), "policy.p_o")};
  }
  throw ValidationError("policy.type", "unknown policy '" + t + "'");
}

json policy_json(const SpectrumPolicy& p) {
  json j;
  j["type"] = policy_name(p);
  if (const auto* s = std::get_if<SharedSpectrum>(&p)) j["p_m"] = s->p_m;
  if (const auto* o = std::get_if<OrthogonalSpectrum>(&p)) j["p_o"] = o->p_o;
  return j;
}

json estimate_json(const SimEstimate& e) {
  return {{"mean", e.mean}, {"std_error", e.std_error}, {"trials", e.trials}, {"seed", e.seed}};
}

}  // namespace

ScenarioConfig parse_scenario_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw ValidationError("config", "top level must be an object");
  reject_unknown(doc,
                 {"lambda_b_per_m2", "lambda_f_per_m2", "lambda_m_per_min_m2", "mu_per_min", "alpha",
                  "p_b_watts", "p_f_watts", "channels", "channel_bandwidth_hz",
                  "rate_requirement_bps", "region_threshold", "beta", "beta_db", "policy",
                  "mcs_thresholds", "mcs_thresholds_db", "solver", "seed", "sweep"},
                 "");
  ScenarioConfig c;
  auto num = [&](const char* key, double& dst) {
    if (doc.contains(key)) dst = number(doc.at(key), key);
  };
  num("lambda_b_per_m2", c.lambda_b);
  num("lambda_f_per_m2", c.lambda_f);
  num("lambda_m_per_min_m2", c.lambda_m);
  num("mu_per_min", c.mu);
  num("alpha", c.alpha);
  num("p_b_watts", c.p_b);
  num("p_f_watts", c.p_f);
  num("channel_bandwidth_hz", c.bandwidth_hz);
  num("rate_requirement_bps", c.rate_bps);
  num("region_threshold", c.region);
  if (doc.contains("channels")) {
    const auto& j = doc.at("channels");
    if (!j.is_number_integer()) throw ValidationError("channels", "expected an integer");
    c.channels = j.get<int>();
  }
  if (doc.contains("seed")) {
    const auto& j = doc.at("seed");
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
      throw ValidationError("seed", "expected a nonnegative integer");
    }
    c.seed = j.get<std::uint64_t>();
  }
  read_threshold(doc, "beta", [&](const json& j, bool db) {
    const double v = number(j, db ? "beta_db" : "beta");
    c.beta = db ? db_to_linear(v) : v;
  });
  read_threshold(doc, "mcs_thresholds", [&](const json& j, bool db) {
    auto v = numbers(j, db ? "mcs_thresholds_db" : "mcs_thresholds");
    if (db) {
      for (auto& x : v) x = db_to_linear(x);
    }
    c.mcs_thresholds = std::move(v);
  });
  if (doc.contains("policy")) c.policy = parse_policy(doc.at("policy"));
  if (doc.contains("solver")) {
    const auto& s = doc.at("solver");
    if (!s.is_object()) throw ValidationError("solver", "expected an object");
    reject_unknown(s,
                   {"fixed_point_tolerance", "fixed_point_max_iterations", "series_tolerance",
                    "series_max_terms", "blocking_rel_tolerance", "area_tail"},
                   "solver.");
    auto snum = [&](const char* key, double& dst) {
      if (s.contains(key)) dst = number(s.at(key), std::string("solver.") + key);
    };
    auto sint = [&](const char* key, int& dst) {
      if (!s.contains(key)) return;
      if (!s.at(key).is_number_integer()) throw ValidationError(std::string("solver.") + key, "expected an integer");
      dst = s.at(key).get<int>();
    };
    snum("fixed_point_tolerance", c.solver.fixed_point_tol);
    sint("fixed_point_max_iterations", c.solver.fixed_point_max_iter);
    snum("series_tolerance", c.solver.series_tol);
    sint("series_max_terms", c.solver.series_max_terms);
    snum("blocking_rel_tolerance", c.solver.blocking_rel_tol);
    snum("area_tail", c.solver.area_tail);
  }
  c.validate();
  return c;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario_json(ss.str());
}

std::optional<SweepSpec> parse_sweep_json(std::string_view text) {
  const json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("sweep")) return std::nullopt;
  const auto& s = doc.at("sweep");
  if (!s.is_object()) throw ValidationError("sweep", "expected an object");
  reject_unknown(s, {"variable", "values", "outputs"}, "sweep.");
  if (!s.contains("variable") || !s.at("variable").is_string()) {
    throw ValidationError("sweep.variable", "required string");
  }
  if (!s.contains("values")) throw ValidationError("sweep.values", "required");
  SweepSpec spec;
  auto name = s.at("variable").get<std::string>();
  spec.values = numbers(s.at("values"), "sweep.values");
  if (name == "beta_db") {
    name = "beta";
    for (auto& v : spec.values) v = db_to_linear(v);
  }
  spec.variable = parse_sweep_variable(name);
  if (s.contains("outputs")) {
    const auto& o = s.at("outputs");
    if (!o.is_array()) throw ValidationError("sweep.outputs", "expected an array of names");
    for (const auto& x : o) {
      if (!x.is_string()) throw ValidationError("sweep.outputs", "expected strings");
      spec.outputs.push_back(x.get<std::string>());
    }
  }
  spec.validate();
  return spec;
}

std::string scenario_to_json(const ScenarioConfig& c, int indent) {
  json j;
  j["lambda_b_per_m2"] = c.lambda_b;
  j["lambda_f_per_m2"] = c.lambda_f;
  j["lambda_m_per_min_m2"] = c.lambda_m;
  j["mu_per_min"] = c.mu;
  j["alpha"] = c.alpha;
  j["p_b_watts"] = c.p_b;
  j["p_f_watts"] = c.p_f;
  j["channels"] = c.channels;
  j["channel_bandwidth_hz"] = c.bandwidth_hz;
  j["rate_requirement_bps"] = c.rate_bps;
  j["region_threshold"] = c.region;
  j["beta"] = c.beta;
  j["policy"] = policy_json(c.policy);
  j["mcs_thresholds"] = c.mcs_thresholds;
  j["solver"] = {{"fixed_point_tolerance", c.solver.fixed_point_tol},
                 {"fixed_point_max_iterations", c.solver.fixed_point_max_iter},
                 {"series_tolerance", c.solver.series_tol},
                 {"series_max_terms", c.solver.series_max_terms},
                 {"blocking_rel_tolerance", c.solver.blocking_rel_tol},
                 {"area_tail", c.solver.area_tail}};
  j["seed"] = c.seed;
  return j.dump(indent);
}

std::string report_to_json(const ScenarioReport& r, int indent) {
  json j;
  j["config"] = json::parse(scenario_to_json(r.config));
  j["load"] = {{"zeta_center", r.load.zeta_center},
               {"zeta_edge", r.load.zeta_edge},
               {"zeta_overall", r.load.zeta_overall()},
               {"nbar_center_channels", r.load.nbar_c},
               {"nbar_edge_channels", r.load.nbar_e},
               {"residual", r.load.residual},
               {"iterations", r.load.iterations},
               {"mcs_coverage",
                {{"thresholds", r.load.mcs_coverage.thresholds},
                 {"ccu", r.load.mcs_coverage.ccu},
                 {"ceu", r.load.mcs_coverage.ceu}}}};
  j["coverage"] = {{"beta", r.config.beta}, {"ccu", r.coverage_ccu}, {"ceu", r.coverage_ceu}};
  j["blocking"] = {{"policy", policy_name(r.blocking.policy)},
                   {"ccu", r.blocking.b_ccu},
                   {"ceu", r.blocking.b_ceu},
                   {"network", r.blocking.b_network}};
  if (r.blocking.servers_center >= 0) {
    j["blocking"]["servers_center"] = r.blocking.servers_center;
    j["blocking"]["servers_edge"] = r.blocking.servers_edge;
  }
  j["energy"] = {{"zeta_overall", r.energy.zeta_overall},
                 {"eta_bps_per_joule_m2", r.energy.eta ? json(*r.energy.eta) : json(nullptr)}};
  if (r.montecarlo) {
    json mc;
    mc["window_radius_m"] = r.montecarlo->window_radius;
    mc["ccu_fraction"] = estimate_json(r.montecarlo->ccu_fraction);
    json rows = json::array();
    for (std::size_t i = 0; i < r.montecarlo->thresholds.size(); ++i) {
      rows.push_back({{"beta", r.montecarlo->thresholds[i]},
                      {"ccu_outage", estimate_json(r.montecarlo->ccu_outage[i])},
                      {"ceu_outage", estimate_json(r.montecarlo->ceu_outage[i])}});
    }
    mc["outage"] = rows;
    j["montecarlo"] = mc;
  }
  return j.dump(indent);
}

}  // namespace hetnet
