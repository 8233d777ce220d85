#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "dmc/flowaug.hpp"
#include "dmc/multicut.hpp"
#include "dmc/permcsp.hpp"
#include "dmc/shadowrm.hpp"

namespace dmc {

struct IrrelevantVertexConfig {
    int zeta = 2;
    int rho = 8;
    bool brute_check = true;

    void validate() const {
        if (zeta < 1 || rho < 2 * zeta)
            throw InputError("irrelevant-vertex config requires rho >= 2*zeta >= 2");
    }
};

struct PipelineConfig {
    IrrelevantVertexConfig iv;
    CoveringStrategy covering = CoveringStrategy::Oracle;
    int soybean_q = 2;
    int soybean_p = 1;
};

/// The rule declined to fire: no rho-grid minor (or no monochromatic
/// refinement / failed verification) at the configured division size.
struct GridRankCertificate {
    int rho = 0;
};

/// CSP built from a triple of per-pair augmented flows. Forward variables
/// come first (pair-major, path-minor), mirrors follow in the same order;
/// mirror of forward variable f is f + forward_count.
struct FlowCsp {
    struct VarInfo {
        int pair = 0;
        int path = 0;
        bool mirror = false;
    };
    PermCspInstance csp;
    std::vector<VarInfo> vars;
    std::vector<std::vector<int>> domain_vertices; // per var, per position
    int forward_count = 0;
    bool overflow = false; // some flow value exceeded k
    // cross-pair consistency constraints: (index into csp.permutations,
    // forward var a, forward var b)
    std::vector<std::array<int, 3>> consistency;

    int mirror_of(int fwd) const { return fwd + forward_count; }
};

using ConsistencyPartition = std::vector<std::vector<int>>; // parts of forward vars

FlowCsp build_csp_c1(const DmcInstance& inst,
                     const std::array<const Augmentation*, 3>& augs);

/// All partitions of the forward variables into at most k parts of size at
/// most three with no two variables of the same terminal pair in one part.
/// Finest-first deterministic order.
std::vector<ConsistencyPartition> enumerate_consistency_partitions(const FlowCsp& c1,
                                                                   int k);

/// C2: domains restricted to shared vertices within each part, constraints
/// pruned accordingly, identity permutation constraints added per part pair.
/// `removed` drops additional vertices from a forward variable's domain (and
/// its mirror's).
FlowCsp build_csp_c2(const FlowCsp& c1, const ConsistencyPartition& partition,
                     const std::map<int, std::vector<int>>& removed = {});

/// Union of the forward variables' assigned vertices.
std::vector<int> extract_solution(const FlowCsp& c2, const Valuation& val);

/// True iff no shadowless solution contains v with the four reachability
/// split conditions on both paths.
bool check_irrelevance(const DmcInstance& inst, int v, int pair_a,
                       const std::vector<int>& path_a, int pair_b,
                       const std::vector<int>& path_b, bool override_guard = false);

/// Either certifies the constraint matrix holds no rho-grid minor (grid rank
/// small at this configuration) or returns a vertex to drop from both
/// domains: the (zeta, zeta)-representative of a monochromatic (by block
/// pair) 2*zeta-division refined from a rho-division.
std::variant<GridRankCertificate, int> irrelevant_vertex(
    const PermutationConstraint& pi, const std::vector<int>& domain_a_vertices,
    const std::vector<int>& domain_b_vertices, const std::vector<int>& path_a,
    const std::vector<int>& path_b, const std::vector<std::vector<int>>& blocks_a,
    const std::vector<std::vector<int>>& blocks_b, const IrrelevantVertexConfig& cfg,
    const DmcInstance* brute_check_inst, int pair_a, int pair_b);

/// Full driver: shadow removal, exhaustive augmentation per pair, separator
/// triples (union <= k), consistency partitions, irrelevant-vertex loop,
/// CSP solving, extraction; every candidate is validated by is_solution on
/// the original instance before being returned.
std::optional<std::vector<int>> solve_dmc(const DmcInstance& inst,
                                          const PipelineConfig& cfg = {},
                                          std::uint64_t seed = 0);

} // namespace dmc
