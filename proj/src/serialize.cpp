#include "qarena/serialize.hpp"

#include <string>

#include "qarena/errors.hpp"

namespace qarena {

namespace {

Json complex_list(const std::vector<Complex>& m) {
  Json out = Json::array();
  for (const Complex& z : m) out.push_back(Json::array({z.real(), z.imag()}));
  return out;
}

std::vector<Complex> complex_list_from(const Json& j) {
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& pair : j) out.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
  return out;
}

std::string mask_hex(const std::vector<bool>& members) {
  std::string hex;
  hex.reserve(members.size() / 4 + 1);
  for (std::size_t base = 0; base < members.size(); base += 4) {
    int nibble = 0;
    for (std::size_t k = 0; k < 4 && base + k < members.size(); ++k) {
      if (members[base + k]) nibble |= 1 << k;
    }
    hex.push_back("0123456789abcdef"[nibble]);
  }
  return hex;
}

std::vector<bool> mask_from_hex(const std::string& hex, std::size_t size) {
  std::vector<bool> members(size, false);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const char c = hex[i];
    const int nibble = c <= '9' ? c - '0' : c - 'a' + 10;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t idx = 4 * i + k;
      if (idx < size && (nibble & (1 << k))) members[idx] = true;
    }
  }
  return members;
}

std::string kind_name(GateKind k) {
  switch (k) {
    case GateKind::kUnitary1: return "u1";
    case GateKind::kUnitary2: return "u2";
    case GateKind::kH: return "h";
    case GateKind::kS: return "s";
    case GateKind::kCnot: return "cnot";
    case GateKind::kX: return "x";
    case GateKind::kZ: return "z";
  }
  throw ParameterError("unknown gate kind");
}

GateKind kind_from_name(const std::string& name) {
  if (name == "u1") return GateKind::kUnitary1;
  if (name == "u2") return GateKind::kUnitary2;
  if (name == "h") return GateKind::kH;
  if (name == "s") return GateKind::kS;
  if (name == "cnot") return GateKind::kCnot;
  if (name == "x") return GateKind::kX;
  if (name == "z") return GateKind::kZ;
  throw ParameterError("unknown gate kind: " + name);
}

}  // namespace

Json to_json(const DensePmf& pmf) {
  return Json{{"width", pmf.width()}, {"probs", pmf.probs()}};
}

DensePmf pmf_from_json(const Json& j) {
  return DensePmf(j.at("width").get<int>(), j.at("probs").get<std::vector<double>>());
}

Json to_json(const Gate& g) {
  Json out{{"kind", kind_name(g.kind)}};
  Json targets = Json::array({g.targets[0]});
  if (g.arity() == 2) targets.push_back(g.targets[1]);
  out["targets"] = targets;
  if (!g.matrix.empty()) out["matrix"] = complex_list(g.matrix);
  return out;
}

Gate gate_from_json(const Json& j) {
  Gate g;
  g.kind = kind_from_name(j.at("kind").get<std::string>());
  const auto& targets = j.at("targets");
  g.targets[0] = targets.at(0).get<int>();
  g.targets[1] = targets.size() > 1 ? targets.at(1).get<int>() : -1;
  if (j.contains("matrix")) g.matrix = complex_list_from(j.at("matrix"));
  return g;
}

Json to_json(const Circuit& c) {
  Json layers = Json::array();
  for (const auto& layer : c.layers()) {
    Json gates = Json::array();
    for (const Gate& g : layer) gates.push_back(to_json(g));
    layers.push_back(std::move(gates));
  }
  return Json{{"width", c.width()}, {"layers", std::move(layers)}};
}

Circuit circuit_from_json(const Json& j) {
  Circuit c(j.at("width").get<int>());
  for (const auto& layer : j.at("layers")) {
    std::vector<Gate> gates;
    for (const auto& g : layer) gates.push_back(gate_from_json(g));
    c.add_layer(std::move(gates));
  }
  return c;
}

Json to_json(const MaxCutGraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  return Json{{"vertices", g.vertices}, {"edges", std::move(edges)}};
}

MaxCutGraph graph_from_json(const Json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return MaxCutGraph::validated(j.at("vertices").get<int>(), std::move(edges));
}

Json to_json(const Witness& w) {
  struct Visitor {
    int width;
    Json operator()(const DenseTableForm& b) const {
      return Json{{"kind", "dense"}, {"values", b.values}};
    }
    Json operator()(const IndicatorForm& b) const {
      return Json{{"kind", "indicator"}, {"mask_hex", mask_hex(b.members)}};
    }
    Json operator()(const ParityForm& b) const {
      return Json{{"kind", "parity"}, {"z_mask", b.z_mask}, {"sign", b.sign}};
    }
    Json operator()(const MaxCutForm& b) const {
      return Json{{"kind", "maxcut"}, {"graph", to_json(b.graph)}, {"complemented", b.complemented}};
    }
    Json operator()(const HeavySetForm& b) const {
      return Json{{"kind", "heavy_set"},
                  {"reference", b.reference},
                  {"threshold", b.threshold},
                  {"complemented", b.complemented}};
    }
  };
  Json out = std::visit(Visitor{w.width()}, w.body());
  out["width"] = w.width();
  return out;
}

Witness witness_from_json(const Json& j) {
  const int width = j.at("width").get<int>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "dense") {
    return Witness(width, DenseTableForm{j.at("values").get<std::vector<double>>()});
  }
  if (kind == "indicator") {
    return Witness(width, IndicatorForm{mask_from_hex(j.at("mask_hex").get<std::string>(),
                                                      std::size_t{1} << width)});
  }
  if (kind == "parity") {
    return Witness(width,
                   ParityForm{j.at("z_mask").get<std::uint32_t>(), j.at("sign").get<int>()});
  }
  if (kind == "maxcut") {
    return Witness(width,
                   MaxCutForm{graph_from_json(j.at("graph")), j.at("complemented").get<bool>()});
  }
  if (kind == "heavy_set") {
    return Witness(width, HeavySetForm{j.at("reference").get<std::vector<double>>(),
                                       j.at("threshold").get<double>(),
                                       j.at("complemented").get<bool>()});
  }
  throw ParameterError("unknown witness kind: " + kind);
}

Json to_json(const GibbsGuess& g) {
  Json witnesses = Json::array();
  for (const Witness& f : g.witnesses()) witnesses.push_back(to_json(f));
  return Json{{"width", g.width()}, {"eps", g.eps()}, {"witnesses", std::move(witnesses)}};
}

GibbsGuess gibbs_from_json(const Json& j) {
  GibbsGuess g(j.at("width").get<int>(), j.at("eps").get<double>());
  for (const auto& w : j.at("witnesses")) g = g.updated(witness_from_json(w));
  return g;
}

Json to_json(const PauliZString& p) {
  return Json{{"z_mask", p.z_mask}, {"sign", p.sign}};
}

PauliZString z_string_from_json(const Json& j) {
  return PauliZString{j.at("z_mask").get<std::uint32_t>(), j.at("sign").get<int>()};
}

Json to_json(const GameConfig& c) {
  return Json{{"eps", c.eps},
              {"delta", c.delta},
              {"round_cap", c.round_cap},
              {"sample_schedule_scale", c.sample_schedule_scale},
              {"trial_cap_factor", c.trial_cap_factor},
              {"recheck_history", c.recheck_history},
              {"exact_diagnostics", c.exact_diagnostics},
              {"embed_samples", c.embed_samples}};
}

GameConfig game_config_from_json(const Json& j) {
  GameConfig c;
  c.eps = j.at("eps").get<double>();
  c.delta = j.at("delta").get<double>();
  c.round_cap = j.at("round_cap").get<int>();
  c.sample_schedule_scale = j.value("sample_schedule_scale", 1.0);
  c.trial_cap_factor = j.value("trial_cap_factor", 20.0);
  c.recheck_history = j.value("recheck_history", true);
  c.exact_diagnostics = j.value("exact_diagnostics", true);
  c.embed_samples = j.value("embed_samples", false);
  c.validate();
  return c;
}

Json to_json(const RoundRecord& r) {
  Json out{{"t", r.t},
           {"alice", r.alice_label},
           {"claim_rejected", r.claim_rejected},
           {"samples_per_side", r.samples_per_side},
           {"empirical_gaps", r.empirical_gaps},
           {"verdict", to_string(r.verdict)},
           {"alice_sample_hash", r.alice_sample_hash},
           {"bob_sample_hash", r.bob_sample_hash},
           {"exact_divergence_nats", r.exact_divergence_nats},
           {"exact_tv", r.exact_tv}};
  Json accepted = Json::array();
  for (bool flag : r.accepted_flags) accepted.push_back(flag);
  out["accepted_flags"] = std::move(accepted);
  if (r.alice_guess.has_value()) out["alice_guess"] = to_json(*r.alice_guess);
  if (r.bob_witness.has_value()) out["bob_witness"] = to_json(*r.bob_witness);
  if (!r.alice_samples.empty()) out["alice_samples"] = r.alice_samples;
  if (!r.bob_samples.empty()) out["bob_samples"] = r.bob_samples;
  return out;
}

Json to_json(const GameTranscript& t) {
  Json rounds = Json::array();
  for (const RoundRecord& r : t.rounds) rounds.push_back(to_json(r));
  Json ledger = Json::array();
  for (const ProgressEntry& e : t.ledger.entries) {
    ledger.push_back(Json{{"round", e.round},
                          {"claimed_gap", e.claimed_gap},
                          {"divergence_nats", e.divergence_nats},
                          {"divergence_bound_nats", e.divergence_bound_nats},
                          {"tv_bound", e.tv_bound},
                          {"bound_satisfied", e.bound_satisfied}});
  }
  return Json{{"version", t.version},
              {"config", to_json(t.config)},
              {"width", t.width},
              {"seed", t.seed},
              {"target", t.target_label},
              {"alice", t.alice_name},
              {"bob", t.bob_name},
              {"rounds", std::move(rounds)},
              {"outcome", to_string(t.outcome)},
              {"initial_divergence_nats", t.initial_divergence_nats},
              {"final_tv", t.final_tv},
              {"ledger", {{"initial_divergence_nats", t.ledger.initial_divergence_nats},
                          {"entries", std::move(ledger)}}}};
}

}  // namespace qarena
