#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <utility>
#include <vector>

#include "dmc/digraph.hpp"

namespace dmc {

/// Element of a path: a vertex (arc_to < 0) or an arc (u, arc_to).
struct PathElem {
    int u = -1;
    int arc_to = -1;

    bool is_arc() const { return arc_to >= 0; }
    static PathElem vertex(int v) { return {v, -1}; }
    static PathElem arc(int a, int b) { return {a, b}; }
    auto operator<=>(const PathElem&) const = default;
};

/// Unordered pair of walks with common start and common end.
struct Soybean {
    std::vector<int> walk1, walk2;

    std::vector<int> vertex_union() const;
};

/// Edge-regime st-flow: paths pairwise share no deletable arc. `infinite`
/// marks an st-path of undeletable arcs.
struct EdgeFlow {
    bool infinite = false;
    std::vector<std::vector<int>> paths;

    int value() const {
        if (infinite)
            throw InputError("value() on infinite flow");
        return static_cast<int>(paths.size());
    }
};

/// Output contract of the flow-augmentation interface: arcs A, a witnessing
/// maxflow in g+A, and a partition of the deletable flow vertices whose
/// blocks carry verified soybean connectivity at the (q, p) configuration.
struct Augmentation {
    std::vector<std::pair<int, int>> added_arcs;
    VertexFlow flow;
    std::vector<std::vector<int>> partition;
    int k = 0;
    int q = 2;
    int p = 1;

    int c_cap() const { return static_cast<int>(partition.size()); }
};

struct SeparatorAugmentation {
    std::vector<int> separator;
    Augmentation aug;
};

/// Reachability with arcs removed instead of vertices.
std::vector<int> reach_minus_arcs(const Digraph& g, const std::vector<int>& sources,
                                  const std::vector<std::pair<int, int>>& removed_arcs);

/// A is compatible with the separator z: the s-reachable set in g-z and in
/// (g+A)-z coincide.
bool is_compatible_vertex(const Digraph& g,
                          const std::vector<std::pair<int, int>>& a,
                          const std::vector<int>& z, int s, int t);

EdgeFlow max_edge_flow(const Digraph& g, int s, int t);

/// Star st-cut: z is an st-cut and every cut arc leaves the s-reachable side.
bool is_star_cut(const Digraph& g, const std::vector<std::pair<int, int>>& z, int s,
                 int t);

/// Cut arcs whose head still reaches t in g-z.
std::vector<std::pair<int, int>> corecut(const Digraph& g,
                                         const std::vector<std::pair<int, int>>& z,
                                         int s, int t);

/// Maxflow meeting z exactly in its core cut. Requires corecut(z) to be an
/// st-mincut (InputError otherwise).
bool is_witnessing_flow(const Digraph& g, const std::vector<std::pair<int, int>>& z,
                        const EdgeFlow& flow, int s, int t);

/// Edge regime -> vertex regime: one deletable vertex per deletable arc.
struct VertexizeMap {
    std::vector<std::pair<int, int>> arc_of_vertex; // by new-graph vertex index; (-1,-1) for originals
};
std::pair<Digraph, VertexizeMap> vertexize(const Digraph& g_edge);

/// Vertex regime -> edge regime: v -> v:1, v:2 with the split arc deletable
/// iff v is. Mapping: separator vertex <-> its split arc.
struct EdgeizeMap {
    std::vector<std::pair<int, int>> split_arc_of_vertex; // by old-graph vertex index
};
std::pair<Digraph, EdgeizeMap> edgeize(const Digraph& g_vertex);

/// c and d alternate strictly along p starting with c, with |c| = |d|.
bool interlaced(const Digraph& g, const std::vector<int>& path,
                const std::vector<PathElem>& c, const std::vector<PathElem>& d);

/// p pairwise vertex-disjoint soybeans, one walk meeting c, the other d;
/// walks live in g (never in an augmented supergraph). Exact for p = 1;
/// for p >= 2 the search runs over shortest-path-composed candidates.
std::optional<std::vector<Soybean>> find_soybeans(const Digraph& g,
                                                  const std::vector<PathElem>& c,
                                                  const std::vector<PathElem>& d, int p);

/// For every flow path, block, and interlaced pair C, D of size q drawn from
/// the block's vertices on that path: p disjoint CD-soybeans exist in g.
bool verify_soybean_partition(const Digraph& g, const Augmentation& aug, int q, int p);

/// One entry per minimal st-separator of size <= k. Each augmentation is
/// compatible, has flow value |Z| with Z meeting every path exactly once,
/// and carries a partition built by greedy merging gated on
/// verify_soybean_partition at (q, p).
std::vector<SeparatorAugmentation> augment_exhaustive(const Digraph& g, int s, int t,
                                                      int k, int q = 2, int p = 1);

/// q_i(p) of the depth recurrence f_p(x) = 1 + 2px, q_0(p) = 2p.
boost::multiprecision::cpp_int soybean_recurrence(int p, int i);

/// Depth recurrence behind the soybean guarantees: f_p(x) = 1 + 2px,
/// q_0(p) = 2p, q_{i+1}(p) = f_p(q_i(p)), evaluated up to a configured
/// depth bound (the true bound is a non-explicit function of k). The
/// values overflow 64 bits quickly, hence the big integers.
struct RecurrenceTable {
    int depth_bound = 8;

    boost::multiprecision::cpp_int f(int p, const boost::multiprecision::cpp_int& x) const {
        return 1 + 2 * p * x;
    }
    boost::multiprecision::cpp_int q(int p, int i) const {
        if (i > depth_bound)
            throw InputError("recurrence table: depth above the configured bound");
        return soybean_recurrence(p, i);
    }
    boost::multiprecision::cpp_int q_max(int p) const { return q(p, depth_bound); }
};

} // namespace dmc
