#pragma once

#include <json.hpp>
#include <string>

#include "dmc/flowaug.hpp"
#include "dmc/multicut.hpp"
#include "dmc/permcsp.hpp"
#include "dmc/reductions.hpp"

namespace dmc {

using nlohmann::json;

// Graph schema (shared repo-wide):
//   {"vertices":[{"id":str,"deletable":bool,"weight":int?}],
//    "arcs":[{"from":str,"to":str,"deletable":bool?}]}
// Arc deletable defaults to true, weight to 1.
json graph_to_json(const Digraph& g);
Digraph graph_from_json(const json& j);

// Instance schema extends the graph schema with "terminal_pairs", "k",
// "undeletable" and optionally "W" (which selects the weighted two-pair
// reading).
json dmc_to_json(const DmcInstance& inst);
DmcInstance dmc_from_json(const json& j);
json wdmc_to_json(const WdmcInstance& inst);
WdmcInstance wdmc_from_json(const json& j);
bool json_is_weighted_instance(const json& j);

// CSP schema: variables with ordered domains (value arrays); constraints
// typed "downclosed" (pairs of positions, or a frontier array) and
// "permutation" (pairs of positions).
json csp_to_json(const PermCspInstance& inst);
PermCspInstance csp_from_json(const json& j);

// PSI schema: {"pattern_edges":[[i,j]],"parts":{"0":[...]},"host_edges":[[u,v]]}
json psi_to_json(const PsiInstance& psi);
PsiInstance psi_from_json(const json& j);
// Clique schema: {"parts":{"0":[...]},"edges":[[u,v]]}
json clique_to_json(const CliqueInstance& cl);
CliqueInstance clique_from_json(const json& j);

// Augmentation schema:
//   {"added_arcs":[[u,v],...],"flow":[[v,...],...],"partition":[[v,...],...]}
json augmentation_to_json(const Digraph& g, const Augmentation& aug);
Augmentation augmentation_from_json(const Digraph& g, const json& j);

json vertex_set_to_json(const Digraph& g, const std::vector<int>& s);
std::vector<int> vertex_set_from_json(const Digraph& g, const json& j);

} // namespace dmc
