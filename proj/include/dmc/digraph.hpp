#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmc/errors.hpp"

namespace dmc {

/// Directed graph with per-vertex and per-arc deletable flags (the vertex-
/// and edge-deletion regimes share this one type). Vertices carry string ids
/// at the API boundary; internally they are indexed 0..n-1 in ascending id
/// order, so index order doubles as the deterministic iteration order.
/// A Digraph is immutable after construction; derived graphs are new values.
class Digraph {
public:
    struct VertexSpec {
        std::string id;
        bool deletable = true;
        long long weight = 1;
    };
    struct ArcSpec {
        std::string from, to;
        bool deletable = true;
    };

    Digraph() = default;
    Digraph(std::vector<VertexSpec> vertices, const std::vector<ArcSpec>& arcs);

    int n() const { return static_cast<int>(verts_.size()); }
    const std::string& id(int v) const { return verts_.at(v).id; }
    int index(const std::string& id) const; // throws InputError on unknown id
    std::optional<int> find(const std::string& id) const;
    bool deletable(int v) const { return verts_.at(v).deletable; }
    long long weight(int v) const { return verts_.at(v).weight; }

    bool has_arc(int u, int v) const;
    bool arc_deletable(int u, int v) const; // throws InputError if absent
    const std::vector<int>& out(int v) const { return out_.at(v); }
    const std::vector<int>& in(int v) const { return in_.at(v); }
    std::vector<std::pair<int, int>> arcs() const; // lexicographic by index
    int arc_count() const { return n_arcs_; }

    std::vector<std::string> ids_of(const std::vector<int>& vs) const;
    std::vector<int> indices_of(const std::vector<std::string>& ids) const;

    // Derived graphs. Ids survive; indices generally do not.
    Digraph with_arcs(const std::vector<std::pair<int, int>>& add,
                      bool added_deletable) const;
    Digraph without_vertices(const std::vector<int>& drop) const;
    Digraph reversed() const;

    VertexSpec vertex_spec(int v) const;
    std::vector<ArcSpec> arc_specs() const;

private:
    struct Vertex {
        std::string id;
        bool deletable;
        long long weight;
    };
    std::vector<Vertex> verts_;
    std::vector<std::vector<int>> out_, in_;
    std::vector<std::vector<char>> out_del_; // parallel to out_
    int n_arcs_ = 0;
};

/// An s->t flow in the vertex-capacitated sense: paths pairwise share no
/// deletable vertex. `infinite` is the distinguished value for the case of
/// an s->t path of undeletable vertices; `paths` then holds one such witness.
struct VertexFlow {
    bool infinite = false;
    std::vector<std::vector<int>> paths;

    int value() const {
        if (infinite)
            throw InputError("value() on infinite flow");
        return static_cast<int>(paths.size());
    }
};

bool is_path(const Digraph& g, const std::vector<int>& seq);
bool is_walk(const Digraph& g, const std::vector<int>& seq);

/// Vertices reachable from `sources` in g - removed, sources included.
std::vector<int> reach(const Digraph& g, const std::vector<int>& sources,
                       const std::vector<int>& removed);

bool reaches(const Digraph& g, int from, int to, const std::vector<int>& removed);

/// Maximum vertex-capacitated s->t flow; infinite iff an undeletable
/// s->t path exists. s and t must be undeletable.
VertexFlow max_vertex_flow(const Digraph& g, int s, int t);

/// All inclusion-wise minimal st-separators (sets of deletable vertices)
/// of size <= k, sorted by (size, lexicographic).
std::vector<std::vector<int>> enumerate_minimal_separators(const Digraph& g,
                                                           int s, int t, int k);

/// Multi-source/multi-sink variant used by the important-separator machinery.
std::vector<std::vector<int>> enumerate_minimal_separators(
    const Digraph& g, const std::vector<int>& a, const std::vector<int>& b, int k);

/// All (a,b)-important separators of size <= k: minimal separators S with no
/// separator S' with |S'| <= |S| and a strictly larger a-side reachable set.
std::vector<std::vector<int>> enumerate_important_separators(
    const Digraph& g, const std::vector<int>& a, const std::vector<int>& b, int k);

/// Short-circuit every vertex of x: in/out arc pairs induce direct arcs,
/// then the vertex is deleted. Self-loops are discarded. Order-independent.
Digraph bypass(const Digraph& g, const std::vector<int>& x);

// set helpers (sorted int vectors as sets)
std::vector<int> set_union(std::vector<int> a, const std::vector<int>& b);
std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b);
bool set_contains(const std::vector<int>& a, int v);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);

} // namespace dmc
