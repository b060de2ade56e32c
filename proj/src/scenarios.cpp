#include "qarena/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "qarena/density.hpp"
#include "qarena/divergence.hpp"
#include "qarena/ensembles.hpp"
#include "qarena/errors.hpp"
#include "qarena/game.hpp"
#include "qarena/noise_budget.hpp"
#include "qarena/parallel.hpp"
#include "qarena/serialize.hpp"
#include "qarena/stab.hpp"
#include "qarena/statevector.hpp"
#include "qarena/strategies.hpp"
#include "qarena/xhog.hpp"

namespace qarena {

namespace {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << content;
}

void write_json(const std::filesystem::path& path, const Json& j) {
  write_text(path, j.dump(2) + "\n");
}

// Typed access over the raw key/value map with unknown-key rejection.
class KeyReader {
 public:
  explicit KeyReader(const ScenarioConfig& cfg) : cfg_(cfg) {}

  std::string get_string(const std::string& key, const std::string& fallback) {
    used_.insert(key);
    const auto it = cfg_.values.find(key);
    return it == cfg_.values.end() ? fallback : it->second;
  }

  std::int64_t get_int(const std::string& key, std::int64_t fallback) {
    used_.insert(key);
    const auto it = cfg_.values.find(key);
    if (it == cfg_.values.end()) return fallback;
    try {
      return std::stoll(it->second);
    } catch (...) {
      throw UsageError(where(key) + "expected an integer for '" + key + "'");
    }
  }

  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) {
    used_.insert(key);
    const auto it = cfg_.values.find(key);
    if (it == cfg_.values.end()) return fallback;
    try {
      return std::stoull(it->second);
    } catch (...) {
      throw UsageError(where(key) + "expected an unsigned integer for '" + key + "'");
    }
  }

  double get_double(const std::string& key, double fallback) {
    used_.insert(key);
    const auto it = cfg_.values.find(key);
    if (it == cfg_.values.end()) return fallback;
    try {
      return std::stod(it->second);
    } catch (...) {
      throw UsageError(where(key) + "expected a number for '" + key + "'");
    }
  }

  bool get_bool(const std::string& key, bool fallback) {
    used_.insert(key);
    const auto it = cfg_.values.find(key);
    if (it == cfg_.values.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw UsageError(where(key) + "expected true/false for '" + key + "'");
  }

  std::vector<double> get_double_list(const std::string& key, const std::string& fallback) {
    const std::string raw = get_string(key, fallback);
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        out.push_back(std::stod(item));
      } catch (...) {
        throw UsageError(where(key) + "expected a comma-separated number list for '" + key + "'");
      }
    }
    if (out.empty()) throw UsageError(where(key) + "empty list for '" + key + "'");
    return out;
  }

  /// Rejects keys nobody asked for.
  void finish() const {
    for (const auto& [key, value] : cfg_.values) {
      if (!used_.count(key)) {
        throw UsageError(where(key) + "unknown key '" + key + "' for scenario '" + cfg_.scenario +
                         "'");
      }
    }
  }

 private:
  std::string where(const std::string& key) const {
    const auto it = cfg_.lines.find(key);
    if (it == cfg_.lines.end() || it->second <= 0) return "";
    return cfg_.source_path + ":" + std::to_string(it->second) + ": ";
  }

  const ScenarioConfig& cfg_;
  std::set<std::string> used_;
};

struct CommonParams {
  std::uint64_t seed = 1;
  double eps = 0.3;
  double delta = 0.05;
};

CommonParams read_common(KeyReader& r) {
  CommonParams p;
  p.seed = r.get_u64("seed", 1);
  p.eps = r.get_double("eps", 0.3);
  p.delta = r.get_double("delta", 0.05);
  const int threads = static_cast<int>(r.get_int("threads", 0));
  if (threads > 0) set_max_threads(threads);
  r.get_string("out", "");  // consumed by the caller before dispatch
  return p;
}

std::string rounds_csv(const GameTranscript& t) {
  std::string csv = "round,samples_per_side,gap_new,accepted,verdict,divergence_nats,tv_exact\n";
  for (const RoundRecord& r : t.rounds) {
    const double gap = r.empirical_gaps.empty() ? 0.0 : r.empirical_gaps.front();
    const bool accepted = !r.accepted_flags.empty() && r.accepted_flags.front();
    csv += std::to_string(r.t) + "," + std::to_string(r.samples_per_side) + "," + format_g17(gap) +
           "," + (accepted ? "1" : "0") + "," + to_string(r.verdict) + "," +
           format_g17(r.exact_divergence_nats) + "," + format_g17(r.exact_tv) + "\n";
  }
  return csv;
}

GameConfig game_config_from(KeyReader& r, const CommonParams& common) {
  GameConfig config;
  config.eps = common.eps;
  config.delta = common.delta;
  config.round_cap = static_cast<int>(r.get_int("round_cap", 1000));
  config.sample_schedule_scale = r.get_double("schedule_scale", 1.0);
  config.trial_cap_factor = r.get_double("trial_cap_factor", 20.0);
  config.recheck_history = r.get_bool("recheck_history", true);
  config.exact_diagnostics = r.get_bool("exact_diagnostics", true);
  config.embed_samples = r.get_bool("embed_samples", false);
  config.validate();
  return config;
}

int run_game_scenario(const ScenarioConfig& cfg) {
  KeyReader r(cfg);
  const CommonParams common = read_common(r);
  const GameConfig config = game_config_from(r, common);

  const int n = static_cast<int>(r.get_int("n", 8));
  const int depth = static_cast<int>(r.get_int("depth", 12));
  const std::uint64_t target_seed = r.get_u64("target_seed", common.seed);
  const std::string target_kind = r.get_string("target", "brickwork");
  const std::string pmf_file = r.get_string("pmf_file", "");
  const std::string alice_kind = r.get_string("alice", "mirror");
  const std::string alice_pmf_file = r.get_string("alice_pmf_file", "");
  const std::string bob_kind = r.get_string("bob", "optimal");
  const double theta = r.get_double("theta", -1.0);
  r.finish();

  std::optional<DensePmf> target;
  std::string target_label;
  std::vector<Gate> clifford_gates;
  if (target_kind == "brickwork") {
    target = output_distribution(random_brickwork(n, depth, target_seed));
    target_label = "brickwork(n=" + std::to_string(n) + ",depth=" + std::to_string(depth) +
                   ",seed=" + std::to_string(target_seed) + ")";
  } else if (target_kind == "clifford") {
    clifford_gates = random_clifford(n, target_seed);
    target = output_distribution(circuit_from_gates(n, clifford_gates));
    target_label = "clifford(n=" + std::to_string(n) + ",seed=" + std::to_string(target_seed) + ")";
  } else if (target_kind == "pmf") {
    if (pmf_file.empty()) throw UsageError("target = pmf requires pmf_file");
    std::ifstream in(pmf_file);
    if (!in) throw UsageError("cannot read pmf_file " + pmf_file);
    Json j;
    in >> j;
    target = pmf_from_json(j);
    target_label = "pmf:" + pmf_file;
  } else {
    throw UsageError("unknown target '" + target_kind + "'");
  }

  std::unique_ptr<AliceStrategy> alice;
  if (alice_kind == "mirror") {
    alice = std::make_unique<MirrorDescentAlice>();
  } else if (alice_kind == "uniform") {
    alice = std::make_unique<StaticAlice>();
  } else if (alice_kind == "pmf") {
    if (alice_pmf_file.empty()) throw UsageError("alice = pmf requires alice_pmf_file");
    std::ifstream in(alice_pmf_file);
    if (!in) throw UsageError("cannot read alice_pmf_file " + alice_pmf_file);
    Json j;
    in >> j;
    alice = std::make_unique<StaticAlice>(pmf_from_json(j), "pmf:" + alice_pmf_file);
  } else {
    throw UsageError("unknown alice '" + alice_kind + "'");
  }

  std::unique_ptr<BobStrategy> bob;
  if (bob_kind == "optimal") {
    bob = std::make_unique<OptimalIndicatorBob>();
  } else if (bob_kind == "heavy-set") {
    bob = std::make_unique<HeavySetBob>(theta >= 0.0 ? std::optional<double>(theta)
                                                     : std::nullopt);
  } else if (bob_kind == "clifford") {
    if (target_kind != "clifford") throw UsageError("bob = clifford requires target = clifford");
    bob = std::make_unique<CliffordBob>(clifford_gates);
  } else {
    throw UsageError("unknown bob '" + bob_kind + "'");
  }

  const GameTranscript t = run_game(config, *alice, *bob, *target, common.seed, target_label);

  const std::filesystem::path out(cfg.out_dir);
  write_json(out / "transcript.json", to_json(t));
  write_text(out / "rounds.csv", rounds_csv(t));
  return 0;
}

int run_clifford_scenario(const ScenarioConfig& cfg) {
  KeyReader r(cfg);
  const CommonParams common = read_common(r);
  const int n = static_cast<int>(r.get_int("n", 6));
  const std::string method_name = r.get_string("method", "sweep");
  const std::int64_t samples = r.get_int("samples", sample_schedule(1, common.eps, common.delta));
  r.finish();

  const CliffordSampling method = method_name == "walk" ? CliffordSampling::kRandomWalk
                                                        : CliffordSampling::kUniformSweep;
  const auto gates = random_clifford(n, common.seed, method);
  const Circuit circuit = circuit_from_gates(n, gates);
  const DensePmf nu = output_distribution(circuit);
  const auto z = find_z_string(tableau_from_clifford(gates, n));

  Json report{{"n", n},
              {"seed", common.seed},
              {"method", method_name},
              {"gate_count", gates.size()},
              {"circuit", to_json(circuit)},
              {"z_string", nullptr},
              {"exact_gap", 0.0},
              {"empirical_gap", 0.0},
              {"samples", samples}};
  if (z.has_value()) {
    const Witness f = z_string_witness(n, *z);
    report["z_string"] = to_json(*z);
    report["exact_gap"] = exact_gap(f, nu, DensePmf::uniform(n));

    SplitRng rng = SplitRng(common.seed).derive(0x636c69ULL);
    const CdfSampler device(nu);
    double device_mean = 0.0;
    double uniform_mean = 0.0;
    const std::uint64_t space = nu.size();
    for (std::int64_t i = 0; i < samples; ++i) {
      device_mean += f(device(rng));
      uniform_mean += f(static_cast<std::uint32_t>(rng.next_below(space)));
    }
    report["empirical_gap"] = (device_mean - uniform_mean) / static_cast<double>(samples);
  }

  write_json(std::filesystem::path(cfg.out_dir) / "clifford_report.json", report);
  return 0;
}

int run_maxcut_scenario(const ScenarioConfig& cfg) {
  KeyReader r(cfg);
  const CommonParams common = read_common(r);
  GameConfig config = game_config_from(r, common);
  if (!cfg.values.count("round_cap")) config.round_cap = 60;

  const int n = static_cast<int>(r.get_int("n", 12));
  const int degree = static_cast<int>(r.get_int("graph_degree", 3));
  const std::uint64_t graph_seed = r.get_u64("graph_seed", common.seed);
  r.finish();

  const MaxCutGraph graph = random_regular_graph(n, degree, graph_seed);
  const Witness cut_value = maxcut_witness(graph);

  // The prover's device is a perfect solver: uniform over the argmax set.
  double best = 0.0;
  for (std::uint32_t x = 0; x < (1u << n); ++x) best = std::max(best, cut_value(x));
  std::vector<double> argmax(std::size_t{1} << n, 0.0);
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (cut_value(x) >= best - 1e-12) argmax[x] = 1.0;
  }
  const DensePmf target = DensePmf::from_weights(n, argmax);

  MirrorDescentAlice alice;
  MaxCutBob bob(graph);
  const GameTranscript t = run_game(config, alice, bob, target, common.seed,
                                    "maxcut-argmax(n=" + std::to_string(n) + ",degree=" +
                                        std::to_string(degree) + ")");

  // Annealing view: the t-th disclosure weights exp((t eps/4) f_G), so its
  // expected cut value should climb toward the optimum.
  std::string csv = "disclosure_t,beta,alice_expected_value,target_expected_value,gap_new,verdict\n";
  const double target_value = exact_mean(cut_value, target);
  for (const RoundRecord& round : t.rounds) {
    if (!round.alice_guess.has_value()) continue;
    const int disclosed_t = round.alice_guess->rounds();
    const double beta = 0.25 * config.eps * static_cast<double>(disclosed_t);
    const double value = exact_mean(cut_value, exact_pmf(*round.alice_guess).pmf);
    const double gap = round.empirical_gaps.empty() ? 0.0 : round.empirical_gaps.front();
    csv += std::to_string(disclosed_t) + "," + format_g17(beta) + "," + format_g17(value) + "," +
           format_g17(target_value) + "," + format_g17(gap) + "," + to_string(round.verdict) +
           "\n";
  }

  const std::filesystem::path out(cfg.out_dir);
  write_json(out / "transcript.json", to_json(t));
  write_text(out / "maxcut_rounds.csv", csv);
  write_json(out / "maxcut_graph.json", to_json(graph));
  return 0;
}

int run_xhog_spoof_scenario(const ScenarioConfig& cfg) {
  KeyReader r(cfg);
  const CommonParams common = read_common(r);
  const int n = static_cast<int>(r.get_int("n", 10));
  const int depth = static_cast<int>(r.get_int("depth", 16));
  const std::uint64_t target_seed = r.get_u64("target_seed", common.seed);
  const std::int64_t k = r.get_int("k", 50);
  const double b = r.get_double("b", 1.0 + common.eps);
  const double theta = r.get_double("theta", -1.0);
  r.finish();

  const DensePmf nu = output_distribution(random_brickwork(n, depth, target_seed));
  const Witness f = theta >= 0.0 ? heavy_set_witness(nu, theta) : heavy_set_witness(nu);
  const double gap = exact_gap(f, nu, DensePmf::uniform(n));
  if (gap < common.eps) {
    throw ParameterError("heavy-set witness gap " + std::to_string(gap) +
                         " is below the requested eps");
  }

  SplitRng rng = SplitRng(common.seed).derive(0x78686f67ULL);
  SpoofResult result = spoof_xhog(f, nu, k, rng, common.eps);
  result.score.passes_b = result.score.mean_prob >= b / static_cast<double>(nu.size());

  // Measured acceptance cost against the geometric expectation 2^n/|L| and
  // the coarser eps^-4 reading of the spoofing cost.
  std::int64_t set_size = 0;
  for (std::uint32_t x = 0; x < nu.size(); ++x) {
    if (f(x) == 1.0) ++set_size;
  }
  const double trials_per_accept =
      static_cast<double>(result.total_trials) / static_cast<double>(result.accepted_draws);
  const Json report{{"n", n},
                    {"b", b},
                    {"k", k},
                    {"mean_prob", result.score.mean_prob},
                    {"xeb", result.score.xeb},
                    {"passes_b", result.score.passes_b},
                    {"trials", result.total_trials},
                    {"seed", common.seed},
                    {"exact_gap", gap},
                    {"accepted_draws", result.accepted_draws},
                    {"trials_per_accept", trials_per_accept},
                    {"geometric_expectation",
                     static_cast<double>(nu.size()) / static_cast<double>(set_size)},
                    {"quartic_bound", 1.0 / std::pow(common.eps, 4)}};
  write_json(std::filesystem::path(cfg.out_dir) / "xhog_report.json", report);
  return 0;
}

int run_entropy_survey_scenario(const ScenarioConfig& cfg) {
  KeyReader r(cfg);
  const CommonParams common = read_common(r);
  const int n = static_cast<int>(r.get_int("n", 8));
  const int depth = static_cast<int>(r.get_int("depth", 24));
  const int circuits = static_cast<int>(r.get_int("circuits", 500));
  const std::vector<double> deltas = r.get_double_list("deltas", "0.1,0.2");
  r.finish();

  std::vector<double> shannon(static_cast<std::size_t>(circuits));
  std::vector<double> renyi2(static_cast<std::size_t>(circuits));
  std::vector<double> collision(static_cast<std::size_t>(circuits));
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(circuits));
  const SplitRng root(common.seed);
  parallel_for(circuits, [&](std::int64_t i) {
    SplitRng stream = root.derive(static_cast<std::uint64_t>(i));
    const std::uint64_t circuit_seed = stream.next_u64();
    seeds[static_cast<std::size_t>(i)] = circuit_seed;
    const DensePmf nu = output_distribution(random_brickwork(n, depth, circuit_seed));
    shannon[static_cast<std::size_t>(i)] = shannon_entropy(nu);
    renyi2[static_cast<std::size_t>(i)] = renyi2_entropy(nu);
    collision[static_cast<std::size_t>(i)] = collision_probability(nu);
  });

  std::string csv = "index,seed,collision,shannon_nats,renyi2_nats\n";
  for (int i = 0; i < circuits; ++i) {
    csv += std::to_string(i) + "," + std::to_string(seeds[static_cast<std::size_t>(i)]) + "," +
           format_g17(collision[static_cast<std::size_t>(i)]) + "," +
           format_g17(shannon[static_cast<std::size_t>(i)]) + "," +
           format_g17(renyi2[static_cast<std::size_t>(i)]) + "\n";
  }

  double mean_collision = 0.0;
  for (double c : collision) mean_collision += c;
  mean_collision /= circuits;

  const double n_ln2 = n * std::log(2.0);
  Json thresholds = Json::array();
  for (double delta : deltas) {
    const double threshold = n_ln2 - std::log(3.0) - std::log(1.0 / delta);
    int below = 0;
    for (double s2 : renyi2) {
      if (s2 < threshold) ++below;
    }
    thresholds.push_back(Json{{"delta", delta},
                              {"threshold_nats", threshold},
                              {"fraction_below", static_cast<double>(below) / circuits}});
  }

  const Json summary{{"n", n},
                     {"depth", depth},
                     {"circuits", circuits},
                     {"seed", common.seed},
                     {"mean_collision", mean_collision},
                     {"haar_collision", 2.0 / (std::pow(2.0, n) + 1.0)},
                     {"thresholds", thresholds}};

  const std::filesystem::path out(cfg.out_dir);
  write_text(out / "survey.csv", csv);
  write_json(out / "survey_summary.json", summary);
  return 0;
}

int run_noise_grid_scenario(const ScenarioConfig& cfg) {
  KeyReader r(cfg);
  const CommonParams common = read_common(r);
  const int n = static_cast<int>(r.get_int("n", 6));
  const int depth_min = static_cast<int>(r.get_int("depth_min", 1));
  const int depth_max = static_cast<int>(r.get_int("depth_max", 5));
  const std::vector<double> p_list = r.get_double_list("p_list", "0.05,0.1,0.2");
  r.finish();
  if (depth_min < 0 || depth_max < depth_min) throw UsageError("bad depth range");

  std::string csv =
      "seed,n,depth,p,alpha,budget_nats,exact_divergence_nats,holds,iteration_bound,"
      "sampling_cost_bound,beta_from_rounds,beta_budget_over_eps\n";
  for (int depth = depth_min; depth <= depth_max; ++depth) {
    const Circuit c = random_brickwork(n, depth, SplitRng(common.seed).derive(
                                                     static_cast<std::uint64_t>(depth)).next_u64());
    for (double p : p_list) {
      const ChainCheckReport rep = noisy_chain_check(c, NoiseSpec::local_depolarizing(p),
                                                     common.eps);
      // Two readings of the annealing temperature reached under the budget.
      const double beta_rounds =
          0.25 * common.eps * static_cast<double>(rep.budget_iteration_cap);
      const double beta_direct = rep.budget_nats / common.eps;
      csv += std::to_string(common.seed) + "," +
             std::to_string(n) + "," + std::to_string(depth) + "," + format_g17(p) + "," +
             format_g17(rep.alpha) + "," + format_g17(rep.budget_nats) + "," +
             format_g17(rep.exact_divergence_nats) + "," + (rep.holds ? "1" : "0") + "," +
             std::to_string(rep.budget_iteration_cap) + "," +
             format_g17(sampling_cost_bound(common.eps, rep.budget_nats)) + "," +
             format_g17(beta_rounds) + "," + format_g17(beta_direct) + "\n";
    }
  }
  write_text(std::filesystem::path(cfg.out_dir) / "noise_grid.csv", csv);
  return 0;
}

}  // namespace

void ScenarioConfig::set(const std::string& key, const std::string& value, int line) {
  values[key] = value;
  lines[key] = line;
}

ScenarioConfig load_scenario_config(const std::string& scenario, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  ScenarioConfig cfg;
  cfg.scenario = scenario;
  cfg.source_path = path;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto trim = [](std::string s) {
      const auto begin = s.find_first_not_of(" \t\r");
      const auto end = s.find_last_not_of(" \t\r");
      return begin == std::string::npos ? std::string{} : s.substr(begin, end - begin + 1);
    };
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    if (cfg.values.count(key)) {
      throw UsageError(path + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    cfg.set(key, value, line_no);
  }

  // A scenario named in the file must agree with the command line.
  const auto it = cfg.values.find("scenario");
  if (it != cfg.values.end()) {
    if (it->second != scenario) {
      throw UsageError(path + ":" + std::to_string(cfg.lines["scenario"]) +
                       ": config scenario '" + it->second + "' differs from requested '" +
                       scenario + "'");
    }
    cfg.values.erase("scenario");
    cfg.lines.erase("scenario");
  }
  const auto out_it = cfg.values.find("out");
  if (out_it != cfg.values.end()) cfg.out_dir = out_it->second;
  return cfg;
}

int run_scenario(const ScenarioConfig& cfg) {
  if (cfg.scenario == "game") return run_game_scenario(cfg);
  if (cfg.scenario == "clifford") return run_clifford_scenario(cfg);
  if (cfg.scenario == "maxcut") return run_maxcut_scenario(cfg);
  if (cfg.scenario == "xhog-spoof") return run_xhog_spoof_scenario(cfg);
  if (cfg.scenario == "entropy-survey") return run_entropy_survey_scenario(cfg);
  if (cfg.scenario == "noise-grid") return run_noise_grid_scenario(cfg);
  throw UsageError("unknown scenario '" + cfg.scenario + "'");
}

}  // namespace qarena
