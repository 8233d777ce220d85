#include "dmc/shadowrm.hpp"

#include <algorithm>
#include <set>

#include "dmc/rng.hpp"

namespace dmc {

bool is_thin(const Digraph& g, const std::vector<int>& terminals_t,
             const std::vector<int>& w) {
    for (int v : w) {
        auto rest = set_minus(w, {v});
        auto from_v = reach(g, {v}, rest);
        bool reaches_sink = false;
        for (int t : terminals_t)
            if (set_contains(from_v, t)) {
                reaches_sink = true;
                break;
            }
        if (!reaches_sink)
            return false; // v sits in the reverse shadow of w minus v
    }
    return true;
}

namespace {

// reverse-shadow covering pass: sample unions of important separators
// towards the sinks, collect the shadow they cast
std::vector<std::vector<int>> sampling_pass(const Digraph& g,
                                            const std::vector<int>& sinks,
                                            const std::vector<int>& undeletable,
                                            int k, Rng& rng, int trials) {
    std::vector<std::vector<int>> sep_pool;
    std::set<std::vector<int>> seen;
    for (int v = 0; v < g.n(); ++v) {
        if (set_contains(undeletable, v) || set_contains(sinks, v))
            continue;
        for (auto& s : enumerate_important_separators(g, {v}, sinks, k))
            if (seen.insert(s).second)
                sep_pool.push_back(s);
    }
    std::vector<std::vector<int>> out;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> fake;
        for (const auto& s : sep_pool)
            if (rng.coin())
                fake = set_union(fake, s);
        // vertices cast into the sink-side shadow by the sampled union
        std::vector<int> z;
        auto to_sinks = reach(g.reversed(), sinks, fake);
        for (int v = 0; v < g.n(); ++v)
            if (!set_contains(fake, v) && !set_contains(undeletable, v) &&
                !set_contains(to_sinks, v))
                z.push_back(v);
        out.push_back(z);
    }
    return out;
}

} // namespace

CoveringFamily covering_family(const DmcInstance& inst, CoveringStrategy strategy,
                               std::uint64_t seed, int trials, bool override_guard) {
    inst.validate();
    CoveringFamily family;
    family.strategy = strategy;
    family.seed = seed;
    if (strategy == CoveringStrategy::Oracle) {
        auto minimal = enumerate_minimal_solutions(inst, override_guard);
        if (minimal.empty())
            return family; // no-instance: empty family
        // best shadow-maximal: maximize |r u f u S|, then |r|, then lex-first
        std::vector<int> best;
        std::vector<int> best_shadow;
        long long best_total = -1, best_rev = -1;
        for (const auto& s : minimal) {
            auto rep = shadows(inst, s);
            auto total_set = set_union(set_union(rep.forward, rep.reverse), s);
            long long total = static_cast<long long>(total_set.size());
            long long rev = static_cast<long long>(rep.reverse.size());
            if (total > best_total || (total == best_total && rev > best_rev)) {
                best = s;
                best_total = total;
                best_rev = rev;
                best_shadow = set_union(rep.forward, rep.reverse);
            }
        }
        family.sets.push_back(best_shadow);
        return family;
    }
    // Randomized: sink-side pass on g, source-side pass on the reversed graph
    Rng rng_r = Rng::stream(seed, 0x72657631); // documented stream ids
    Rng rng_f = Rng::stream(seed, 0x666f7277);
    auto rev_parts = sampling_pass(inst.g, inst.sinks(), inst.undeletable, inst.k,
                                   rng_r, trials);
    auto fwd_parts = sampling_pass(inst.g.reversed(), inst.sources(), inst.undeletable,
                                   inst.k, rng_f, trials);
    std::set<std::vector<int>> dedup;
    dedup.insert({}); // the empty set covers the already-shadowless case
    for (std::size_t i = 0; i < rev_parts.size() && i < fwd_parts.size(); ++i)
        dedup.insert(set_union(rev_parts[i], fwd_parts[i]));
    family.sets.assign(dedup.begin(), dedup.end());
    return family;
}

DmcInstance bypass_instance(const DmcInstance& inst, const std::vector<int>& z) {
    DmcInstance out;
    out.g = bypass(inst.g, z);
    out.k = inst.k;
    for (int i = 0; i < 3; ++i)
        out.pairs[i] = {out.g.index(inst.g.id(inst.pairs[i].first)),
                        out.g.index(inst.g.id(inst.pairs[i].second))};
    std::vector<int> und;
    for (int v : set_minus(inst.undeletable, z))
        und.push_back(out.g.index(inst.g.id(v)));
    std::sort(und.begin(), und.end());
    out.undeletable = und;
    out.validate();
    return out;
}

std::vector<DmcInstance> shadow_removal(const DmcInstance& inst,
                                        CoveringStrategy strategy, std::uint64_t seed,
                                        bool override_guard) {
    auto family = covering_family(inst, strategy, seed, 16, override_guard);
    std::vector<DmcInstance> out;
    for (const auto& z : family.sets)
        out.push_back(bypass_instance(inst, z));
    return out;
}

} // namespace dmc
