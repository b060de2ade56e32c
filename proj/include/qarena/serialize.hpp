#pragma once

#include <json.hpp>

#include "qarena/circuit.hpp"
#include "qarena/game.hpp"
#include "qarena/mirror.hpp"
#include "qarena/pmf.hpp"
#include "qarena/stab.hpp"
#include "qarena/witness.hpp"

namespace qarena {

using Json = nlohmann::json;

// Pmfs serialize as a flat probability array keyed by width. Circuits carry
// their layer structure with row-major complex matrices as [re, im] pairs.
// Witnesses are a tagged union over the body forms; indicator members are a
// hex bitmask to keep transcripts compact. Gibbs guesses serialize as
// (eps, witness list), never as probability tables.

Json to_json(const DensePmf& pmf);
DensePmf pmf_from_json(const Json& j);

Json to_json(const Gate& g);
Gate gate_from_json(const Json& j);

Json to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

Json to_json(const MaxCutGraph& g);
MaxCutGraph graph_from_json(const Json& j);

Json to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json to_json(const GibbsGuess& g);
GibbsGuess gibbs_from_json(const Json& j);

Json to_json(const PauliZString& p);
PauliZString z_string_from_json(const Json& j);

Json to_json(const GameConfig& c);
GameConfig game_config_from_json(const Json& j);

Json to_json(const RoundRecord& r);
Json to_json(const GameTranscript& t);

}  // namespace qarena
