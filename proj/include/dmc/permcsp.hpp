#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmc/errors.hpp"
#include "dmc/matrixgrid.hpp"

namespace dmc {

/// Totally ordered domain: order is list order. Values are opaque labels;
/// the solver itself works with positions 0..size-1.
struct OrderedDomain {
    std::vector<std::string> values;

    int size() const { return static_cast<int>(values.size()); }
};

/// Downclosed binary relation between two ordered domains, canonicalized as
/// a non-increasing frontier: R = {(a,b) : b <= frontier[a]}, with -1
/// standing for "no b at all" (bottom).
struct DownclosedRelation {
    int var_a = 0, var_b = 0; // ordered variable pair (a, b)
    std::vector<int> frontier;

    /// Downward closure of an arbitrary pair set (positions).
    static std::vector<int> close_pairs(const std::vector<std::pair<int, int>>& pairs,
                                        int na, int nb);

    bool contains(int a, int b) const { return b <= frontier.at(a); }
    std::vector<std::pair<int, int>> pairs() const;
    void validate(int na, int nb) const; // frontier non-increasing, in range
};

/// Permutation constraint: bijection between domain subsets, satisfied only
/// by matched pairs (values outside the support are forbidden).
struct PermutationConstraint {
    int var_a = 0, var_b = 0;
    std::vector<std::pair<int, int>> mapping; // (pos in D_a, pos in D_b)

    void validate(int na, int nb) const; // bijection, in range
};

struct PermCspInstance {
    std::vector<OrderedDomain> domains; // one per variable
    std::vector<DownclosedRelation> downclosed;
    std::vector<PermutationConstraint> permutations;

    int variables() const { return static_cast<int>(domains.size()); }
    void validate() const;
};

/// Total assignment: position per variable.
using Valuation = std::vector<int>;

bool is_satisfied(const PermCspInstance& inst, const Valuation& val);

/// Backtracking with downclosed threshold propagation and permutation
/// channeling; smallest-domain-first, values in domain order.
std::optional<Valuation> solve(const PermCspInstance& inst);

/// Lexicographically first satisfying valuation by full Cartesian
/// enumeration; guarded by the product of domain sizes.
std::optional<Valuation> brute_force_csp(const PermCspInstance& inst,
                                         bool override_guard = false);

/// Ordered, vertex- and edge-colored graph encoding the instance: one vertex
/// per domain value, boundary-maximal pairs of each downclosed relation as
/// edges of that relation's color, permutation pairs as matching edges.
struct ColoredOrderedGraph {
    struct EdgeSet {
        enum class Kind { Downclosed, Permutation };
        Kind kind;
        int constraint_index; // into the instance's respective list
        std::vector<std::pair<int, int>> edges; // global vertex indices
    };
    std::vector<int> vertex_color;   // variable index per vertex
    std::vector<int> variable_start; // first global vertex index per variable
    std::vector<EdgeSet> edge_sets;

    int vertices() const { return static_cast<int>(vertex_color.size()); }
    /// Adjacency over the global order restricted to one edge set (symmetric).
    ZeroOneMatrix padded_adjacency(const EdgeSet& es) const;
    /// The D_i x D_j bipartite submatrix of one edge set.
    ZeroOneMatrix bipartite_adjacency(const EdgeSet& es, int var_a, int var_b) const;
};

ColoredOrderedGraph build_fo_encoding(const PermCspInstance& inst);

} // namespace dmc
