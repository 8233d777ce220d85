#pragma once

// Shared fixtures and independent brute-force oracles for the test suite.
// The oracles here deliberately avoid the library's algorithms: separators
// by subset enumeration, divisions by full composition enumeration, and so
// on, so they can stand as ground truth against the implementation path.

#include <algorithm>
#include <string>
#include <vector>

#include "dmc/digraph.hpp"
#include "dmc/flowaug.hpp"
#include "dmc/matrixgrid.hpp"
#include "dmc/multicut.hpp"

namespace dmctest {

using dmc::Digraph;

inline Digraph graph(std::vector<std::string> ids,
                     std::vector<std::pair<std::string, std::string>> arcs,
                     std::vector<std::string> undeletable = {}) {
    std::vector<Digraph::VertexSpec> vs;
    for (auto& id : ids) {
        bool del = std::find(undeletable.begin(), undeletable.end(), id) ==
                   undeletable.end();
        vs.push_back({id, del, 1});
    }
    std::vector<Digraph::ArcSpec> as;
    for (auto& [u, v] : arcs)
        as.push_back({u, v, true});
    return Digraph(std::move(vs), as);
}

inline std::vector<int> ids(const Digraph& g, std::vector<std::string> names) {
    return g.indices_of(names);
}

inline std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// every subset of the deletable non-endpoint vertices, sizes 0..k
template <typename F>
inline void for_each_separator_candidate(const Digraph& g, const std::vector<int>& a,
                                         const std::vector<int>& b, int k, F&& fn) {
    std::vector<int> cands;
    for (int v = 0; v < g.n(); ++v)
        if (g.deletable(v) && !dmc::set_contains(a, v) && !dmc::set_contains(b, v))
            cands.push_back(v);
    int d = static_cast<int>(cands.size());
    for (long long mask = 0; mask < (1LL << d); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < d; ++i)
            if (mask & (1LL << i))
                subset.push_back(cands[i]);
        if (static_cast<int>(subset.size()) <= k)
            fn(subset);
    }
}

inline bool oracle_separates(const Digraph& g, const std::vector<int>& a,
                             const std::vector<int>& b, const std::vector<int>& z) {
    auto r = dmc::reach(g, a, z);
    for (int v : b)
        if (dmc::set_contains(r, v))
            return false;
    return true;
}

// ground truth: all inclusion-minimal separators of size <= k, by subsets
inline std::vector<std::vector<int>> oracle_minimal_separators(
    const Digraph& g, const std::vector<int>& a, const std::vector<int>& b, int k) {
    std::vector<std::vector<int>> seps;
    for_each_separator_candidate(g, a, b, k, [&](const std::vector<int>& z) {
        if (oracle_separates(g, a, b, z))
            seps.push_back(z);
    });
    std::vector<std::vector<int>> minimal;
    for (const auto& z : seps) {
        bool keep = true;
        for (int v : z)
            if (oracle_separates(g, a, b, dmc::set_minus(z, {v}))) {
                keep = false;
                break;
            }
        if (keep)
            minimal.push_back(z);
    }
    std::sort(minimal.begin(), minimal.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  if (x.size() != y.size())
                      return x.size() < y.size();
                  return x < y;
              });
    return minimal;
}

// smallest separator cardinality, or -1 when none of size <= k exists
inline int oracle_min_separator_size(const Digraph& g, int s, int t, int k) {
    int best = -1;
    for_each_separator_candidate(g, {s}, {t}, k, [&](const std::vector<int>& z) {
        if (oracle_separates(g, {s}, {t}, z))
            if (best < 0 || static_cast<int>(z.size()) < best)
                best = static_cast<int>(z.size());
    });
    return best;
}

// definition check for important separators over the subset space
inline std::vector<std::vector<int>> oracle_important_separators(
    const Digraph& g, const std::vector<int>& a, const std::vector<int>& b, int k) {
    auto minimal = oracle_minimal_separators(g, a, b, k);
    std::vector<std::vector<int>> important;
    for (const auto& s : minimal) {
        auto rs = dmc::reach(g, a, s);
        bool dominated = false;
        for (const auto& s2 : minimal) {
            if (s2 == s || s2.size() > s.size())
                continue;
            auto rs2 = dmc::reach(g, a, s2);
            if (rs != rs2 && dmc::is_subset(rs, rs2)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            important.push_back(s);
    }
    return important;
}

// all minimal edge-regime st-cuts of size <= k over deletable-arc subsets
inline std::vector<std::vector<std::pair<int, int>>> oracle_minimal_edge_cuts(
    const Digraph& g, int s, int t, int k) {
    std::vector<std::pair<int, int>> cands;
    for (auto [u, v] : g.arcs())
        if (g.arc_deletable(u, v))
            cands.emplace_back(u, v);
    auto cut = [&](const std::vector<std::pair<int, int>>& z) {
        auto r = dmc::reach_minus_arcs(g, {s}, z);
        return !dmc::set_contains(r, t);
    };
    std::vector<std::vector<std::pair<int, int>>> out;
    int d = static_cast<int>(cands.size());
    for (long long mask = 0; mask < (1LL << d); ++mask) {
        std::vector<std::pair<int, int>> z;
        for (int i = 0; i < d; ++i)
            if (mask & (1LL << i))
                z.push_back(cands[i]);
        if (static_cast<int>(z.size()) > k || !cut(z))
            continue;
        bool minimal = true;
        for (std::size_t i = 0; i < z.size() && minimal; ++i) {
            auto less = z;
            less.erase(less.begin() + i);
            minimal = !cut(less);
        }
        if (minimal)
            out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// exhaustive column-division search for a fixed row division (grid minors)
inline bool oracle_column_division_exists(const dmc::ZeroOneMatrix& m,
                                          const std::vector<int>& row_bounds, int k) {
    std::vector<int> cuts(k - 1);
    for (int i = 0; i < k - 1; ++i)
        cuts[i] = i + 1;
    if (k == 1) {
        dmc::Division d{row_bounds, {0, m.cols()}};
        return dmc::division_is_grid_minor(m, d);
    }
    if (k > m.cols())
        return false;
    while (true) {
        std::vector<int> cb{0};
        for (int c : cuts)
            cb.push_back(c);
        cb.push_back(m.cols());
        if (dmc::division_is_grid_minor(m, dmc::Division{row_bounds, cb}))
            return true;
        int i = k - 2;
        while (i >= 0 && cuts[i] == m.cols() - (k - 1 - i))
            --i;
        if (i < 0)
            return false;
        ++cuts[i];
        for (int j = i + 1; j < k - 1; ++j)
            cuts[j] = cuts[j - 1] + 1;
    }
}

// full two-axis enumeration for grid minors
inline bool oracle_grid_minor_exists(const dmc::ZeroOneMatrix& m, int k) {
    if (k > std::min(m.rows(), m.cols()))
        return false;
    std::vector<int> cuts(k - 1);
    for (int i = 0; i < k - 1; ++i)
        cuts[i] = i + 1;
    if (k == 1)
        return oracle_column_division_exists(m, {0, m.rows()}, 1);
    while (true) {
        std::vector<int> rb{0};
        for (int c : cuts)
            rb.push_back(c);
        rb.push_back(m.rows());
        if (oracle_column_division_exists(m, rb, k))
            return true;
        int i = k - 2;
        while (i >= 0 && cuts[i] == m.rows() - (k - 1 - i))
            --i;
        if (i < 0)
            return false;
        ++cuts[i];
        for (int j = i + 1; j < k - 1; ++j)
            cuts[j] = cuts[j - 1] + 1;
    }
}

inline dmc::DmcInstance three_disjoint_paths(int k = 3) {
    // s_i -> a_i -> t_i for i = 1, 2, 3
    auto g = graph({"s1", "s2", "s3", "t1", "t2", "t3", "a1", "a2", "a3"},
                   {{"s1", "a1"}, {"a1", "t1"}, {"s2", "a2"}, {"a2", "t2"},
                    {"s3", "a3"}, {"a3", "t3"}},
                   {"s1", "s2", "s3", "t1", "t2", "t3"});
    dmc::DmcInstance inst;
    inst.g = g;
    inst.pairs = {{{g.index("s1"), g.index("t1")},
                   {g.index("s2"), g.index("t2")},
                   {g.index("s3"), g.index("t3")}}};
    inst.k = k;
    inst.undeletable = ids(g, {"s1", "s2", "s3", "t1", "t2", "t3"});
    return inst;
}

inline dmc::DmcInstance shared_vertex_instance() {
    // s_i -> c -> t_i for all three pairs; {c} is the unique solution
    auto g = graph({"s1", "s2", "s3", "t1", "t2", "t3", "c"},
                   {{"s1", "c"}, {"s2", "c"}, {"s3", "c"}, {"c", "t1"}, {"c", "t2"},
                    {"c", "t3"}},
                   {"s1", "s2", "s3", "t1", "t2", "t3"});
    dmc::DmcInstance inst;
    inst.g = g;
    inst.pairs = {{{g.index("s1"), g.index("t1")},
                   {g.index("s2"), g.index("t2")},
                   {g.index("s3"), g.index("t3")}}};
    inst.k = 1;
    inst.undeletable = ids(g, {"s1", "s2", "s3", "t1", "t2", "t3"});
    return inst;
}

// three disjoint paths plus a vertex c hanging off a1 (in both shadows of
// {a1, a2, a3})
inline dmc::DmcInstance dangling_vertex_instance() {
    auto g = graph({"s1", "s2", "s3", "t1", "t2", "t3", "a1", "a2", "a3", "c"},
                   {{"s1", "a1"}, {"a1", "t1"}, {"s2", "a2"}, {"a2", "t2"},
                    {"s3", "a3"}, {"a3", "t3"}, {"a1", "c"}},
                   {"s1", "s2", "s3", "t1", "t2", "t3"});
    dmc::DmcInstance inst;
    inst.g = g;
    inst.pairs = {{{g.index("s1"), g.index("t1")},
                   {g.index("s2"), g.index("t2")},
                   {g.index("s3"), g.index("t3")}}};
    inst.k = 3;
    inst.undeletable = ids(g, {"s1", "s2", "s3", "t1", "t2", "t3"});
    return inst;
}

// Firing fixture for the domain-reduction rule: one chain u0..u{m-1} carries
// both terminal pairs (both enter at u0 and exit at the last vertex), so
// every single chain vertex is a common cut. Pair 2 additionally gets a
// hand-built augmentation whose flow path visits the s2-side in the order
// 0,4,2,3,1,5,6,7: the added arcs keep their heads on the s2-side of the
// {u8} separator, so the augmentation stays compatible while the constraint
// matrix picks up a crossing pattern.
struct FiringFixture {
    dmc::DmcInstance inst;
    dmc::Augmentation aug2;          // hand-built, contract-complete
    std::vector<int> z2;             // the separator the augmentation targets
};

/// Chain u0..u{m-1} carrying both pairs; pair 2's flow path swaps the visit
/// order of positions `swap_a` and `swap_b` on the s2-side of the separator
/// {u_zpos}. Requires 1 <= swap_a, swap_a + 1 < swap_b, swap_b + 1 < zpos < m.
inline FiringFixture firing_fixture(int m = 16, int zpos = 8, int swap_a = 1,
                                    int swap_b = 4) {
    std::vector<std::string> names{"s1", "t1", "s2", "t2", "s3", "t3"};
    auto u = [&](int r) {
        return "u" + std::string(r < 10 ? "0" : "") + std::to_string(r);
    };
    for (int r = 0; r < m; ++r)
        names.push_back(u(r));
    std::vector<Digraph::VertexSpec> vs;
    for (auto& id : names)
        vs.push_back({id, id[0] == 'u', 1});
    std::vector<Digraph::ArcSpec> as;
    as.push_back({"s1", u(0), true});
    for (int r = 0; r + 1 < m; ++r)
        as.push_back({u(r), u(r + 1), true});
    as.push_back({u(m - 1), "t1", true});
    as.push_back({"s2", u(0), true});
    as.push_back({u(m - 1), "t2", true});

    FiringFixture fx;
    fx.inst.g = Digraph(std::move(vs), as);
    fx.inst.pairs = {{{fx.inst.g.index("s1"), fx.inst.g.index("t1")},
                      {fx.inst.g.index("s2"), fx.inst.g.index("t2")},
                      {fx.inst.g.index("s3"), fx.inst.g.index("t3")}}};
    fx.inst.k = 1;
    fx.inst.undeletable = fx.inst.g.indices_of({"s1", "t1", "s2", "t2", "s3", "t3"});

    auto U = [&](int r) { return fx.inst.g.index(u(r)); };
    fx.z2 = {U(zpos)};
    // prefix visit order: identity with swap_a and swap_b exchanged
    std::vector<int> order;
    for (int r = 0; r < zpos; ++r)
        order.push_back(r == swap_a ? swap_b : (r == swap_b ? swap_a : r));
    std::vector<int> path{fx.inst.g.index("s2")};
    for (int r : order)
        path.push_back(U(r));
    for (int r = zpos; r < m; ++r)
        path.push_back(U(r));
    path.push_back(fx.inst.g.index("t2"));
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (!fx.inst.g.has_arc(path[i], path[i + 1]) && path[i + 1] != fx.inst.g.index("t2"))
            fx.aug2.added_arcs.emplace_back(path[i], path[i + 1]);
    fx.aug2.flow.paths = {path};
    std::vector<int> block;
    for (int r = 0; r < m; ++r)
        block.push_back(U(r));
    std::sort(block.begin(), block.end());
    fx.aug2.partition = {block};
    fx.aug2.k = 1;
    return fx;
}

} // namespace dmctest
