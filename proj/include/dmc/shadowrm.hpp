#pragma once

#include <cstdint>
#include <vector>

#include "dmc/multicut.hpp"

namespace dmc {

enum class CoveringStrategy { Oracle, Randomized };

/// Family of candidate sets Z: bypassing one of them should leave an
/// instance with a shadowless solution. The Oracle strategy guarantees it;
/// the Randomized one samples and is judged empirically.
struct CoveringFamily {
    std::vector<std::vector<int>> sets; // each disjoint from the undeletable set
    CoveringStrategy strategy = CoveringStrategy::Oracle;
    std::uint64_t seed = 0;
};

/// w is thin: no v in w lies in the reverse shadow of w minus v, i.e. every
/// v in w still reaches some sink once only the others are removed.
bool is_thin(const Digraph& g, const std::vector<int>& terminals_t,
             const std::vector<int>& w);

/// Oracle: computes a best shadow-maximal solution S* by brute force
/// (maximize |r u f u S|, then |r|, then lexicographic) and emits the single
/// set r(S*) u f(S*); empty family on a no-instance. Randomized: seeded
/// sampling over important-separator unions, two passes (sink side on g,
/// source side on the reversed graph).
CoveringFamily covering_family(const DmcInstance& inst, CoveringStrategy strategy,
                               std::uint64_t seed = 0, int trials = 16,
                               bool override_guard = false);

/// One bypassed instance per family member: graph bypass(g, Z), undeletable
/// set minus Z.
std::vector<DmcInstance> shadow_removal(const DmcInstance& inst,
                                        CoveringStrategy strategy,
                                        std::uint64_t seed = 0,
                                        bool override_guard = false);

DmcInstance bypass_instance(const DmcInstance& inst, const std::vector<int>& z);

} // namespace dmc
