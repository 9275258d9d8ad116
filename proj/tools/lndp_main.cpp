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

// lndp command-line harness.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lndp/harness.hpp"
#include "lndp/lndp.hpp"
#include "lndp/verify.hpp"

namespace {

using lndp::ExperimentSpec;
using lndp::GraphSpec;
using nlohmann::json;

constexpr int kExitSpecError = 2;
constexpr int kExitInvariant = 3;

struct GlobalFlags {
  lndp::Seed seed = 0;
  std::string out;
  std::string format = "csv";
};

struct GraphFlags {
  std::string file;
  GraphSpec spec;
};

void add_graph_flags(CLI::App* cmd, GraphFlags& f) {
  cmd->add_option("--graph", f.file, "Edge-list file (overrides --family)");
  cmd->add_option("--family", f.spec.family, "er|regular|star|clique|bounded|empty")
      ->check(CLI::IsMember({"er", "regular", "star", "clique", "bounded", "empty"}));
  cmd->add_option("--n", f.spec.n, "Number of nodes");
  cmd->add_option("--p", f.spec.p, "Edge probability (er)");
  cmd->add_option("--d", f.spec.d, "Degree (regular)");
  cmd->add_option("--t", f.spec.t, "Centers (star)");
  cmd->add_option("--k", f.spec.k, "Clique size (clique)");
  cmd->add_option("--max-degree", f.spec.max_degree, "Degree cap (bounded)");
  cmd->add_option("--density", f.spec.density, "Edge density before truncation (bounded)");
}

GraphSpec resolve_graph(const GraphFlags& f) {
  GraphSpec g = f.spec;
  if (!f.file.empty()) {
    g.family = "file";
    g.path = f.file;
  }
  return g;
}

json graph_to_json(const GraphSpec& g) {
  if (g.family == "file") return {{"family", "file"}, {"path", g.path}};
  return {{"family", g.family}, {"n", g.n},         {"p", g.p},
          {"d", g.d},           {"t", g.t},         {"k", g.k},
          {"max_degree", g.max_degree}, {"density", g.density}};
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw lndp::SpecError("out", "cannot open '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void emit_records(const GlobalFlags& g, const lndp::ExperimentResult& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  Output out(g.out);
  if (g.format == "json") {
    out.stream() << lndp::records_to_json(r).dump(2) << '\n';
  } else {
    lndp::write_records_csv(out.stream(), r);
  }
}

// Runs a harness task built from subcommand flags.
void run_task(const GlobalFlags& g, const std::string& task, const GraphFlags& graph, double eps,
              double delta, std::size_t trials, bool noiseless, std::size_t degree_bound) {
  json j = {{"task", task},
            {"trials", trials},
            {"seed", g.seed},
            {"privacy", {{"eps", eps}, {"delta", delta}}},
            {"graph", graph_to_json(resolve_graph(graph))},
            {"estimator", {{"debug_noiseless", noiseless}}}};
  if (degree_bound > 0) j["estimator"]["degree_bound"] = degree_bound;
  emit_records(g, lndp::run_experiment(lndp::parse_spec_json(j)));
}

void run_gen(const GlobalFlags& g, const GraphFlags& f) {
  GraphSpec spec = resolve_graph(f);
  const lndp::Graph graph = lndp::internal::build_graph(spec, g.seed);
  Output out(g.out);
  if (g.format == "json") {
    json edges = json::array();
    for (const auto& [a, b] : graph.edges()) edges.push_back({a, b});
    out.stream() << json{{"n", graph.n()}, {"edges", edges}}.dump() << '\n';
  } else {
    lndp::write_edge_list(out.stream(), graph);
  }
}

void run_degdist(const GlobalFlags& g, const GraphFlags& f, std::size_t s, double eps,
                 double delta, const std::string& workload, bool noiseless) {
  if (s == 0) throw lndp::SpecError("s", "required and positive");
  const lndp::Graph graph = lndp::internal::build_graph(resolve_graph(f), g.seed);
  const lndp::PrivacyParams params(eps, delta);
  const lndp::NoiseOptions options{.debug_noiseless = noiseless};
  const lndp::Seed seed = lndp::derive_seed(g.seed, lndp::StreamLabel::kTrial, 0);
  auto truth = lndp::compressed_blurry(lndp::degree_pmf(graph), s).probs;
  lndp::Vector est;
  if (workload == "cdf") {
    est = lndp::cdf_estimate(graph, params, s, seed, options);
    for (std::size_t k = 1; k < truth.size(); ++k) truth[k] += truth[k - 1];
  } else {
    est = lndp::pmf_estimate(graph, params, s, seed, options);
  }
  if (noiseless) std::cerr << "warning: debug_noiseless: output not private\n";
  Output out(g.out);
  if (g.format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k < truth.size(); ++k) {
      rows.push_back({{"index", k}, {"degree_value", k * s}, {"estimate", est(k)}, {"truth", truth[k]}});
    }
    out.stream() << json{{"rows", rows}}.dump(2) << '\n';
    return;
  }
  out.stream() << "index,degree_value,estimate,truth\n";
  for (std::size_t k = 0; k < truth.size(); ++k) {
    out.stream() << k << ',' << k * s << ',' << lndp::format_double(est(k)) << ','
                 << lndp::format_double(truth[k]) << '\n';
  }
}

void run_distinguish(const GlobalFlags& g, std::size_t n, std::size_t t, double eps, double delta,
                     std::size_t trials, const std::string& family, double noise_scale) {
  const auto params = lndp::DistinguisherParams::make(n, t, lndp::PrivacyParams(eps, delta), noise_scale);
  for (const auto& w : params.warnings) std::cerr << "warning: " << w << '\n';
  const lndp::GraphFamily truth =
      family == "regular" ? lndp::GraphFamily::kRegular : lndp::GraphFamily::kStarpartite;
  json rows = json::array();
  std::ostringstream csv;
  csv << "trial,family,label,correct,fraction_Yj,tau\n";
  for (std::size_t k = 0; k < trials; ++k) {
    const lndp::Seed seed = lndp::derive_seed(g.seed, lndp::StreamLabel::kTrial, k);
    const lndp::Graph graph = truth == lndp::GraphFamily::kRegular
                                  ? lndp::generate_regular(n, t, seed)
                                  : lndp::generate_starpartite(n, t, seed);
    const auto r = lndp::distinguish(graph, params, seed);
    const bool correct = r.label == truth;
    csv << k << ',' << family << ',' << lndp::to_string(r.label) << ','
        << (correct ? "true" : "false") << ',' << lndp::format_double(r.fraction) << ','
        << lndp::format_double(r.tau) << '\n';
    rows.push_back({{"trial", k}, {"family", family}, {"label", lndp::to_string(r.label)},
                    {"correct", correct}, {"fraction_Yj", r.fraction}, {"tau", r.tau}});
  }
  Output out(g.out);
  if (g.format == "json") {
    out.stream() << json{{"rows", rows}, {"certified", params.certified()}}.dump(2) << '\n';
  } else {
    out.stream() << csv.str();
  }
}

int run_verify(const GlobalFlags& g) {
  const auto checks = lndp::run_verify_suite(g.seed);
  Output out(g.out);
  bool all = true;
  if (g.format == "json") {
    json rows = json::array();
    for (const auto& c : checks) rows.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out.stream() << rows.dump(2) << '\n';
  } else {
    out.stream() << "check,passed,detail\n";
    for (const auto& c : checks) {
      out.stream() << c.name << ',' << (c.passed ? "true" : "false") << ',' << csv_field(c.detail) << '\n';
    }
  }
  for (const auto& c : checks) all = all && c.passed;
  return all ? 0 : 1;
}

void run_config(GlobalFlags g, const std::string& path, bool seed_given) {
  std::ifstream in(path);
  if (!in) throw lndp::SpecError("config", "cannot open '" + path + "'");
  std::stringstream text;
  text << in.rdbuf();
  ExperimentSpec spec = lndp::parse_spec(text.str());
  if (seed_given) spec.master_seed = g.seed;
  if (g.out.empty()) g.out = spec.output_path;
  emit_records(g, lndp::run_experiment(spec));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local node differential privacy toolkit"};
  app.require_subcommand(1);
  GlobalFlags global;
  auto* seed_opt = app.add_option("--seed", global.seed, "Master seed")->capture_default_str();
  app.add_option("--out", global.out, "Output path (default stdout)");
  app.add_option("--format", global.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.fallthrough();

  double eps = 1.0;
  double delta = 1e-6;
  std::size_t trials = 1;
  bool noiseless = false;
  auto add_privacy = [&](CLI::App* cmd) {
    cmd->add_option("--eps", eps, "Privacy epsilon")->capture_default_str();
    cmd->add_option("--delta", delta, "Privacy delta")->capture_default_str();
  };

  GraphFlags gen_graph;
  auto* gen = app.add_subcommand("gen", "Generate a graph and write its edge list");
  add_graph_flags(gen, gen_graph);

  GraphFlags dd_graph;
  std::size_t dd_s = 0;
  std::string workload = "pmf";
  auto* degdist = app.add_subcommand("degdist", "Private degree distribution (pmf or cdf)");
  add_graph_flags(degdist, dd_graph);
  add_privacy(degdist);
  degdist->add_option("--s", dd_s, "Blur width")->required();
  degdist->add_option("--workload", workload, "pmf or cdf")->check(CLI::IsMember({"pmf", "cdf"}));
  degdist->add_flag("--debug-noiseless", noiseless, "Disable noise (not private)");

  GraphFlags task_graph;
  std::size_t degree_bound = 0;
  std::vector<std::pair<std::string, CLI::App*>> tasks;
  for (const char* name : {"edges", "er", "clique"}) {
    auto* cmd = app.add_subcommand(name, std::string("Run the ") + name + " estimator");
    add_graph_flags(cmd, task_graph);
    add_privacy(cmd);
    cmd->add_option("--trials", trials, "Trials")->capture_default_str();
    cmd->add_flag("--debug-noiseless", noiseless, "Disable noise (not private)");
    if (std::string(name) == "edges") cmd->add_option("--degree-bound", degree_bound, "Degree bound D")->required();
    tasks.emplace_back(name, cmd);
  }

  std::size_t dn = 0;
  std::size_t dt = 0;
  std::string family = "star";
  double noise_scale = 1.0;
  auto* dist = app.add_subcommand("distinguish", "Starpartite versus regular distinguisher");
  dist->add_option("--n", dn, "Number of nodes")->required();
  dist->add_option("--t", dt, "Centers / degree")->required();
  add_privacy(dist);
  dist->add_option("--trials", trials, "Trials")->capture_default_str();
  dist->add_option("--family", family, "star or regular")->check(CLI::IsMember({"star", "regular"}));
  dist->add_option("--debug-noise-scale", noise_scale, "Scale the noise (not certified unless 1)");

  auto* verify = app.add_subcommand("verify", "Run the invariant and inequality suite");

  std::string config;
  auto* experiment = app.add_subcommand("experiment", "Run a config file (INI or JSON)");
  experiment->add_option("config", config, "Config path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitSpecError;
  }

  try {
    if (gen->parsed()) run_gen(global, gen_graph);
    if (degdist->parsed()) run_degdist(global, dd_graph, dd_s, eps, delta, workload, noiseless);
    for (const auto& [name, cmd] : tasks) {
      if (cmd->parsed()) run_task(global, name, task_graph, eps, delta, trials, noiseless, degree_bound);
    }
    if (dist->parsed()) run_distinguish(global, dn, dt, eps, delta, trials, family, noise_scale);
    if (verify->parsed()) return run_verify(global);
    if (experiment->parsed()) run_config(global, config, seed_opt->count() > 0);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSpecError;
  } catch (const lndp::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
