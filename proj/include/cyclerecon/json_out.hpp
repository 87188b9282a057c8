#ifndef CYCLERECON_JSON_OUT_HPP
#define CYCLERECON_JSON_OUT_HPP

#include <json.hpp>

#include "cyclerecon/engine.hpp"
#include "cyclerecon/hom.hpp"
#include "cyclerecon/hom_graph.hpp"

namespace cyclerecon {

// All serializers use ordered_json so the key order (and therefore the
// rendered bytes) is stable across runs.

nlohmann::ordered_json to_json(const Decision& d);
nlohmann::ordered_json to_json(const ComponentReport& rep);
nlohmann::ordered_json to_json(const VerifyReport& rep);

// One row per map for the enumerate subcommand.
nlohmann::ordered_json hom_row(const CycleHom& h);

// Component summary of an explicit Hom graph for the oracle subcommand.
nlohmann::ordered_json hom_graph_summary(const HomGraph& g);

}  // namespace cyclerecon

#endif
