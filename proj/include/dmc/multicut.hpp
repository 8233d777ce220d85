#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dmc/digraph.hpp"

namespace dmc {

/// Directed multicut with three terminal pairs. Terminals live in the
/// undeletable set; solutions are sets of deletable non-terminal vertices.
/// The graph's per-vertex deletable flags and `undeletable` agree by
/// construction (normalize() enforces it).
struct DmcInstance {
    Digraph g;
    std::array<std::pair<int, int>, 3> pairs; // (s_i, t_i) indices into g
    int k = 0;
    std::vector<int> undeletable; // sorted; contains all six terminals

    std::vector<int> terminals() const;
    std::vector<int> sources() const;
    std::vector<int> sinks() const;
    std::vector<int> deletable_vertices() const;
    void validate() const; // throws InputError on broken invariants
};

/// Weighted directed multicut with two terminal pairs. Weights come from the
/// graph's per-vertex weight field; wt(v) > budget means effectively
/// undeletable.
struct WdmcInstance {
    Digraph g;
    std::array<std::pair<int, int>, 2> pairs;
    int k = 0;
    long long budget = 0; // weight budget W

    std::vector<int> deletable_vertices() const; // wt <= budget, non-terminal
    long long weight_of(const std::vector<int>& s) const;
    void validate() const;
};

struct ShadowReport {
    std::vector<int> forward; // f_G(X): unreachable from every source
    std::vector<int> reverse; // r_G(X): reaching no sink
};

bool is_solution(const DmcInstance& inst, const std::vector<int>& s);
bool is_solution(const WdmcInstance& inst, const std::vector<int>& s);

/// Minimum-cardinality solution of size <= k, lexicographically first among
/// those, or nullopt. Plain subset enumeration; refuses above the guard.
std::optional<std::vector<int>> brute_force_dmc(const DmcInstance& inst,
                                                bool override_guard = false);

/// Exact search for a solution with |S| <= k and wt(S) <= W, minimizing
/// (weight, size) with deterministic exploration order. Branch and bound on
/// uncut terminal paths; node-count guard (overridable).
std::optional<std::vector<int>> brute_force_wdmc(const WdmcInstance& inst,
                                                 bool override_guard = false,
                                                 long long node_limit = 50'000'000);

ShadowReport shadows(const DmcInstance& inst, const std::vector<int>& x);
bool is_shadowless(const DmcInstance& inst, const std::vector<int>& s);

/// All shadowless solutions of size <= k (not only minimal ones).
std::vector<std::vector<int>> enumerate_shadowless_solutions(const DmcInstance& inst,
                                                             bool override_guard = false);

/// All solutions of size <= k; helper shared by the oracle layer.
std::vector<std::vector<int>> enumerate_solutions(const DmcInstance& inst,
                                                  bool override_guard = false);

/// Inclusion-wise minimal solutions only.
std::vector<std::vector<int>> enumerate_minimal_solutions(const DmcInstance& inst,
                                                          bool override_guard = false);

} // namespace dmc
