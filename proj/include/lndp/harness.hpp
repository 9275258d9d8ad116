// Copyright 2026 The LNDP Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Declarative experiments: a config names a task, a graph family, privacy
// parameters and a trial count; run_experiment executes the trials with
// per-trial seeds and returns one record per trial.
//
// Config files are INI (sections [privacy], [graph], [estimator], [sweep])
// or the equivalent nested JSON object.

#ifndef LNDP_HARNESS_HPP_
#define LNDP_HARNESS_HPP_

#include <algorithm>
#include <atomic>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lndp/blur.hpp"
#include "lndp/distinguisher.hpp"
#include "lndp/errors.hpp"
#include "lndp/estimators.hpp"
#include "lndp/graph.hpp"
#include "lndp/linquery.hpp"
#include "lndp/mechanisms.hpp"
#include "lndp/random.hpp"
#include "lndp/verify.hpp"

namespace lndp {

// A config problem, tagged with the dotted name of the offending field.
class SpecError : public ParameterError {
 public:
  SpecError(std::string field, const std::string& message)
      : ParameterError(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Task { kEdges, kEr, kClique, kPmf, kCdf, kDistinguish, kVerify };

inline const std::map<std::string, Task>& task_names() {
  static const std::map<std::string, Task> names = {
      {"edges", Task::kEdges}, {"er", Task::kEr},   {"clique", Task::kClique},
      {"pmf", Task::kPmf},     {"cdf", Task::kCdf}, {"distinguish", Task::kDistinguish},
      {"verify", Task::kVerify}};
  return names;
}

inline std::string to_string(Task t) {
  for (const auto& [name, task] : task_names()) {
    if (task == t) return name;
  }
  return "?";
}

struct GraphSpec {
  // er | regular | star | clique | bounded | empty | file
  std::string family = "empty";
  std::size_t n = 0;
  double p = 0.0;
  std::size_t d = 0;
  std::size_t t = 0;
  std::size_t k = 0;
  std::size_t max_degree = 0;
  double density = 1.0;
  std::string path;

  friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct ExperimentSpec {
  Task task = Task::kVerify;
  GraphSpec graph;
  double eps = 1.0;
  double delta = 1e-6;
  std::size_t s = 0;
  std::size_t degree_bound = 0;
  bool debug_noiseless = false;
  double noise_scale = 1.0;
  std::size_t trials = 1;
  Seed master_seed = 0;
  std::string output_path;
  std::string sweep_key;
  std::vector<std::string> sweep_values;

  PrivacyParams privacy() const { return PrivacyParams(eps, delta); }

  friend bool operator==(const ExperimentSpec&, const ExperimentSpec&) = default;
};

struct TrialRecord {
  std::size_t trial = 0;
  Seed seed = 0;
  double truth = 0.0;
  double estimate = 0.0;
  double abs_error = 0.0;
  double wall_time_ms = 0.0;
  bool certified = false;
  std::string sweep_value;  // empty unless the spec has a sweep
};

namespace internal {

using Json = nlohmann::json;

// Allowed keys per section. Anything else is rejected.
inline const std::map<std::string, std::set<std::string>>& spec_schema() {
  static const std::map<std::string, std::set<std::string>> schema = {
      {"", {"task", "trials", "seed", "output"}},
      {"privacy", {"eps", "delta"}},
      {"graph", {"family", "n", "p", "d", "t", "k", "max_degree", "density", "path"}},
      {"estimator", {"s", "degree_bound", "debug_noiseless", "noise_scale"}},
      {"sweep", {"key", "values"}},
  };
  return schema;
}

inline const Json* lookup(const Json& j, const std::string& section, const std::string& key) {
  const Json* node = &j;
  if (!section.empty()) {
    auto it = j.find(section);
    if (it == j.end()) return nullptr;
    node = &*it;
  }
  auto it = node->find(key);
  return it == node->end() ? nullptr : &*it;
}

inline std::string dotted(const std::string& section, const std::string& key) {
  return section.empty() ? key : section + "." + key;
}

inline double as_number(const Json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    try {
      std::size_t used = 0;
      const double x = std::stod(s, &used);
      if (used == s.size()) return x;
    } catch (const std::exception&) {
    }
  }
  throw SpecError(field, "expected a number");
}

inline std::size_t as_count(const Json& v, const std::string& field) {
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) {
      return static_cast<std::size_t>(std::stoull(s));
    }
  }
  const double x = v.is_number() ? v.get<double>() : -1.0;
  if (x >= 0.0 && x == std::floor(x) && x < 1.8e19) return static_cast<std::size_t>(x);
  throw SpecError(field, "expected a nonnegative integer");
}

inline bool as_bool(const Json& v, const std::string& field) {
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
  }
  throw SpecError(field, "expected true or false");
}

inline std::string as_string(const Json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  throw SpecError(field, "expected a string");
}

inline Json ini_to_json(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw SpecError("config", e.message() + " at line " + std::to_string(e.line()));
  }
  Json j = Json::object();
  for (const auto& [key, child] : tree) {
    if (child.empty()) {
      j[key] = child.data();
      continue;
    }
    Json section = Json::object();
    for (const auto& [k2, leaf] : child) {
      if (!leaf.empty()) throw SpecError(key + "." + k2, "nesting too deep");
      section[k2] = leaf.data();
    }
    j[key] = section;
  }
  // INI lists are comma separated.
  if (j.contains("sweep") && j["sweep"].contains("values") && j["sweep"]["values"].is_string()) {
    Json list = Json::array();
    std::stringstream ss(j["sweep"]["values"].get<std::string>());
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (!item.empty()) list.push_back(item);
    }
    j["sweep"]["values"] = list;
  }
  return j;
}

inline std::string value_to_string(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void check_graph(const GraphSpec& g) {
  static const std::set<std::string> families = {"er",     "regular", "star", "clique",
                                                 "bounded", "empty",  "file"};
  if (!families.contains(g.family)) throw SpecError("graph.family", "unknown family '" + g.family + "'");
  if (g.family == "file") {
    if (g.path.empty()) throw SpecError("graph.path", "required for family 'file'");
    return;
  }
  if (g.n == 0) throw SpecError("graph.n", "required and positive");
  if (g.family == "er" && !(g.p >= 0.0 && g.p <= 1.0)) throw SpecError("graph.p", "must lie in [0, 1]");
  if (g.family == "regular" && (g.d >= g.n || (g.n * g.d) % 2 != 0)) {
    throw SpecError("graph.d", "needs d < n and n * d even");
  }
  if (g.family == "star" && g.t > g.n) throw SpecError("graph.t", "must not exceed n");
  if (g.family == "clique" && g.k > g.n) throw SpecError("graph.k", "must not exceed n");
  if (g.family == "bounded" && g.max_degree >= g.n) {
    throw SpecError("graph.max_degree", "must be below n");
  }
}

}  // namespace internal

// Builds a spec from a JSON object, validating keys, types and task-specific
// completeness.
inline ExperimentSpec parse_spec_json(const nlohmann::json& j) {
  using internal::Json;
  if (!j.is_object()) throw SpecError("config", "top level must be an object");
  const auto& schema = internal::spec_schema();
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      auto it = schema.find(key);
      if (it == schema.end() || key.empty()) throw SpecError(key, "unknown section");
      for (const auto& [k2, v2] : value.items()) {
        if (!it->second.contains(k2)) throw SpecError(key + "." + k2, "unknown key");
      }
    } else if (!schema.at("").contains(key)) {
      throw SpecError(key, "unknown key");
    }
  }
  auto get = [&](const std::string& section, const std::string& key) {
    return internal::lookup(j, section, key);
  };
  ExperimentSpec spec;
  const Json* task = get("", "task");
  if (!task) throw SpecError("task", "required");
  const std::string task_name = internal::as_string(*task, "task");
  auto tit = task_names().find(task_name);
  if (tit == task_names().end()) throw SpecError("task", "unknown task '" + task_name + "'");
  spec.task = tit->second;

  if (const Json* v = get("", "trials")) spec.trials = internal::as_count(*v, "trials");
  if (const Json* v = get("", "seed")) spec.master_seed = internal::as_count(*v, "seed");
  if (const Json* v = get("", "output")) spec.output_path = internal::as_string(*v, "output");

  const bool needs_privacy = spec.task != Task::kVerify;
  for (const char* key : {"eps", "delta"}) {
    const Json* v = get("privacy", key);
    if (!v) {
      if (needs_privacy) throw SpecError(internal::dotted("privacy", key), "required");
      continue;
    }
    const double x = internal::as_number(*v, internal::dotted("privacy", key));
    (std::string(key) == "eps" ? spec.eps : spec.delta) = x;
  }
  if (!(spec.eps > 0.0)) throw SpecError("privacy.eps", "must be positive");
  if (!(spec.delta >= 0.0 && spec.delta <= 1.0)) throw SpecError("privacy.delta", "must lie in [0, 1]");

  GraphSpec& g = spec.graph;
  if (const Json* v = get("graph", "family")) g.family = internal::as_string(*v, "graph.family");
  if (const Json* v = get("graph", "path")) g.path = internal::as_string(*v, "graph.path");
  if (const Json* v = get("graph", "p")) g.p = internal::as_number(*v, "graph.p");
  if (const Json* v = get("graph", "density")) g.density = internal::as_number(*v, "graph.density");
  for (auto [key, field] : {std::pair{"n", &g.n}, std::pair{"d", &g.d}, std::pair{"t", &g.t},
                            std::pair{"k", &g.k}, std::pair{"max_degree", &g.max_degree}}) {
    if (const Json* v = get("graph", key)) *field = internal::as_count(*v, internal::dotted("graph", key));
  }
  if (const Json* v = get("estimator", "s")) spec.s = internal::as_count(*v, "estimator.s");
  if (const Json* v = get("estimator", "degree_bound")) {
    spec.degree_bound = internal::as_count(*v, "estimator.degree_bound");
  }
  if (const Json* v = get("estimator", "debug_noiseless")) {
    spec.debug_noiseless = internal::as_bool(*v, "estimator.debug_noiseless");
  }
  if (const Json* v = get("estimator", "noise_scale")) {
    spec.noise_scale = internal::as_number(*v, "estimator.noise_scale");
    if (!(spec.noise_scale > 0.0)) throw SpecError("estimator.noise_scale", "must be positive");
  }
  if (const Json* v = get("sweep", "key")) spec.sweep_key = internal::as_string(*v, "sweep.key");
  if (const Json* v = get("sweep", "values")) {
    if (!v->is_array()) throw SpecError("sweep.values", "expected a list");
    for (const auto& item : *v) spec.sweep_values.push_back(internal::value_to_string(item));
  }
  if (!spec.sweep_key.empty()) {
    const auto dot = spec.sweep_key.find('.');
    const std::string sec = dot == std::string::npos ? "" : spec.sweep_key.substr(0, dot);
    const std::string key = dot == std::string::npos ? spec.sweep_key : spec.sweep_key.substr(dot + 1);
    auto it = schema.find(sec);
    if (sec.empty() || sec == "sweep" || it == schema.end() || !it->second.contains(key)) {
      throw SpecError("sweep.key", "cannot sweep '" + spec.sweep_key + "'");
    }
    if (spec.sweep_values.empty()) throw SpecError("sweep.values", "required with sweep.key");
  } else if (!spec.sweep_values.empty()) {
    throw SpecError("sweep.key", "required with sweep.values");
  }

  switch (spec.task) {
    case Task::kVerify:
      return spec;
    case Task::kEdges:
      if (spec.degree_bound == 0) throw SpecError("estimator.degree_bound", "required for task edges");
      break;
    case Task::kClique:
      if (g.family != "clique") throw SpecError("graph.family", "task clique needs family 'clique'");
      break;
    case Task::kPmf:
    case Task::kCdf:
      if (spec.s == 0) throw SpecError("estimator.s", "required for task " + task_name);
      break;
    case Task::kDistinguish:
      if (g.family != "star" && g.family != "regular") {
        throw SpecError("graph.family", "task distinguish needs family 'star' or 'regular'");
      }
      if (g.t == 0) throw SpecError("graph.t", "required for task distinguish");
      if (g.family == "regular") g.d = g.t;
      break;
    case Task::kEr:
      break;
  }
  if (!(spec.delta > 0.0)) throw SpecError("privacy.delta", "must be positive for this task");
  internal::check_graph(g);
  return spec;
}

// Parses INI or JSON text (JSON when the first non-blank character is '{').
inline ExperimentSpec parse_spec(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw SpecError("config", e.what());
    }
    return parse_spec_json(j);
  }
  return parse_spec_json(internal::ini_to_json(text));
}

inline nlohmann::json spec_to_json(const ExperimentSpec& spec) {
  nlohmann::json j;
  j["task"] = to_string(spec.task);
  j["trials"] = spec.trials;
  j["seed"] = spec.master_seed;
  if (!spec.output_path.empty()) j["output"] = spec.output_path;
  j["privacy"] = {{"eps", spec.eps}, {"delta", spec.delta}};
  const GraphSpec& g = spec.graph;
  j["graph"] = {{"family", g.family}, {"n", g.n}, {"p", g.p}, {"d", g.d}, {"t", g.t},
                {"k", g.k}, {"max_degree", g.max_degree}, {"density", g.density}};
  if (!g.path.empty()) j["graph"]["path"] = g.path;
  j["estimator"] = {{"s", spec.s},
                    {"degree_bound", spec.degree_bound},
                    {"debug_noiseless", spec.debug_noiseless},
                    {"noise_scale", spec.noise_scale}};
  if (!spec.sweep_key.empty()) {
    j["sweep"] = {{"key", spec.sweep_key}, {"values", spec.sweep_values}};
  }
  return j;
}

// INI rendering of spec_to_json; doubles use 17 significant digits so the
// text parses back to the same values.
inline std::string spec_to_ini(const ExperimentSpec& spec) {
  const nlohmann::json j = spec_to_json(spec);
  auto render = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_number_float()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
      return buf;
    }
    if (v.is_array()) {
      std::string out;
      for (const auto& item : v) out += (out.empty() ? "" : ", ") + internal::value_to_string(item);
      return out;
    }
    return v.dump();
  };
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_object()) out << key << " = " << render(value) << '\n';
  }
  for (const auto& [key, value] : j.items()) {
    if (!value.is_object()) continue;
    out << '\n' << '[' << key << "]\n";
    for (const auto& [k2, v2] : value.items()) out << k2 << " = " << render(v2) << '\n';
  }
  return out.str();
}

struct ExperimentResult {
  std::vector<TrialRecord> records;
  std::vector<std::string> warnings;
  bool has_sweep = false;
};

namespace internal {

inline Graph build_graph(const GraphSpec& g, Seed seed) {
  if (g.family == "er") return generate_er(g.n, g.p, seed);
  if (g.family == "regular") return generate_regular(g.n, g.d, seed);
  if (g.family == "star") return generate_starpartite(g.n, g.t, seed);
  if (g.family == "clique") return generate_clique_plus_isolated(g.n, g.k, seed);
  if (g.family == "bounded") return generate_bounded(g.n, g.max_degree, g.density, seed);
  if (g.family == "empty") return Graph(g.n);
  std::ifstream in(g.path);
  if (!in) throw SpecError("graph.path", "cannot open '" + g.path + "'");
  return read_edge_list(in);
}

inline double linf(const Vector& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    worst = std::max(worst, std::abs(a(static_cast<Eigen::Index>(k)) - b[k]));
  }
  return worst;
}

// Runs every trial of one (already swept) spec.
inline void run_block(const ExperimentSpec& spec, const std::string& sweep_value,
                      ExperimentResult& result) {
  const bool certified_noise = !spec.debug_noiseless && spec.noise_scale == 1.0;
  if (spec.task == Task::kVerify) {
    const auto checks = run_verify_suite(spec.master_seed);
    for (std::size_t k = 0; k < checks.size(); ++k) {
      TrialRecord r;
      r.trial = k;
      r.seed = spec.master_seed;
      r.truth = 1.0;
      r.estimate = checks[k].passed ? 1.0 : 0.0;
      r.abs_error = 1.0 - r.estimate;
      r.sweep_value = sweep_value;
      result.records.push_back(r);
    }
    return;
  }
  const PrivacyParams privacy = spec.privacy();
  const NoiseOptions options{.debug_noiseless = spec.debug_noiseless};
  std::optional<Graph> fixed;
  if (spec.graph.family == "file") fixed = build_graph(spec.graph, 0);
  const std::size_t n = fixed ? fixed->n() : spec.graph.n;
  if (spec.task == Task::kEr || spec.task == Task::kClique) {
    if (auto w = small_eps_warning(n, privacy)) result.warnings.push_back(*w);
  }
  std::optional<DistinguisherParams> dparams;
  if (spec.task == Task::kDistinguish) {
    dparams = DistinguisherParams::make(n, spec.graph.t, privacy, spec.noise_scale);
    for (const auto& w : dparams->warnings) result.warnings.push_back(w);
  }
  if (spec.debug_noiseless) result.warnings.push_back("debug_noiseless: output not private");

  const std::size_t offset = result.records.size();
  result.records.resize(offset + spec.trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t trial = next++; trial < spec.trials; trial = next++) {
      try {
        TrialRecord r;
        r.trial = trial;
        r.seed = derive_seed(spec.master_seed, StreamLabel::kTrial, trial);
        r.sweep_value = sweep_value;
        r.certified = certified_noise;
        const auto start = std::chrono::steady_clock::now();
        const Graph g = fixed ? *fixed : build_graph(spec.graph, r.seed);
        switch (spec.task) {
          case Task::kEdges:
            r.truth = static_cast<double>(g.edge_count());
            r.estimate = est_edges(g, spec.degree_bound, privacy, r.seed, options);
            break;
          case Task::kEr:
            r.truth = spec.graph.family == "er"
                          ? spec.graph.p
                          : 2.0 * static_cast<double>(g.edge_count()) /
                                (static_cast<double>(g.n()) * static_cast<double>(g.n() - 1));
            r.estimate = est_er_p(g, privacy, r.seed, options);
            break;
          case Task::kClique:
            r.truth = static_cast<double>(spec.graph.k);
            r.estimate = est_clique(g, privacy, r.seed, options);
            break;
          case Task::kPmf:
          case Task::kCdf: {
            // Estimate column holds the l_inf error against the exact vector.
            auto exact = compressed_blurry(degree_pmf(g), spec.s).probs;
            Vector est;
            if (spec.task == Task::kPmf) {
              est = pmf_estimate(g, privacy, spec.s, r.seed, options);
            } else {
              est = cdf_estimate(g, privacy, spec.s, r.seed, options);
              for (std::size_t k = 1; k < exact.size(); ++k) exact[k] += exact[k - 1];
            }
            r.truth = 0.0;
            r.estimate = linf(est, exact);
            break;
          }
          case Task::kDistinguish: {
            const DistinguishResult d = distinguish(g, *dparams, r.seed);
            r.truth = spec.graph.family == "regular" ? 1.0 : 0.0;
            r.estimate = d.label == GraphFamily::kRegular ? 1.0 : 0.0;
            r.certified = r.certified && dparams->certified();
            break;
          }
          case Task::kVerify:
            break;
        }
        r.abs_error = std::abs(r.estimate - r.truth);
        r.wall_time_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        result.records[offset + trial] = r;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = spec.trials;
      }
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(spec.trials, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace internal

// Runs spec.trials trials (per sweep value, when a sweep is configured).
// Trial k uses seed derive_seed(master_seed, kTrial, k); records come back
// in trial order regardless of scheduling.
inline ExperimentResult run_experiment(const ExperimentSpec& spec) {
  ExperimentResult result;
  if (spec.sweep_key.empty()) {
    internal::run_block(spec, "", result);
    return result;
  }
  result.has_sweep = true;
  for (const std::string& value : spec.sweep_values) {
    nlohmann::json j = spec_to_json(spec);
    j.erase("sweep");
    const auto dot = spec.sweep_key.find('.');
    j[spec.sweep_key.substr(0, dot)][spec.sweep_key.substr(dot + 1)] = value;
    const ExperimentSpec block = parse_spec_json(j);
    internal::run_block(block, spec.sweep_key + "=" + value, result);
  }
  return result;
}

inline constexpr const char* kRecordHeader =
    "trial,seed,truth,estimate,abs_error,wall_time_ms,certified";

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_records_csv(std::ostream& out, const ExperimentResult& result) {
  if (result.has_sweep) out << "sweep_key,";
  out << kRecordHeader << '\n';
  for (const TrialRecord& r : result.records) {
    if (result.has_sweep) out << r.sweep_value << ',';
    out << r.trial << ',' << r.seed << ',' << format_double(r.truth) << ','
        << format_double(r.estimate) << ',' << format_double(r.abs_error) << ','
        << format_double(r.wall_time_ms) << ',' << (r.certified ? "true" : "false") << '\n';
  }
}

inline nlohmann::json records_to_json(const ExperimentResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TrialRecord& r : result.records) {
    nlohmann::json row = {{"trial", r.trial},         {"seed", r.seed},
                          {"truth", r.truth},         {"estimate", r.estimate},
                          {"abs_error", r.abs_error}, {"wall_time_ms", r.wall_time_ms},
                          {"certified", r.certified}};
    if (result.has_sweep) row["sweep_key"] = r.sweep_value;
    rows.push_back(row);
  }
  return {{"records", rows}, {"warnings", result.warnings}};
}

}  // namespace lndp

#endif  // LNDP_HARNESS_HPP_
