#include "dmc/flowaug.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace dmc {

std::vector<int> Soybean::vertex_union() const {
    std::vector<int> r = walk1;
    r.insert(r.end(), walk2.begin(), walk2.end());
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::vector<int> reach_minus_arcs(const Digraph& g, const std::vector<int>& sources,
                                  const std::vector<std::pair<int, int>>& removed_arcs) {
    std::set<std::pair<int, int>> dead(removed_arcs.begin(), removed_arcs.end());
    std::vector<char> seen(g.n(), 0);
    std::deque<int> queue;
    for (int v : sources)
        if (!seen.at(v)) {
            seen[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.out(u))
            if (!seen[w] && !dead.count({u, w})) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    std::vector<int> r;
    for (int v = 0; v < g.n(); ++v)
        if (seen[v])
            r.push_back(v);
    return r;
}

bool is_compatible_vertex(const Digraph& g, const std::vector<std::pair<int, int>>& a,
                          const std::vector<int>& z, int s, int t) {
    if (set_contains(z, s) || set_contains(z, t))
        throw InputError("is_compatible_vertex: z must avoid s and t");
    auto before = reach(g, {s}, z);
    auto after = reach(g.with_arcs(a, false), {s}, z);
    return before == after;
}

namespace {

struct ArcFlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;
    explicit ArcFlowNet(int nodes) : adj(nodes) {}

    void add(int u, int v, int cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> par(adj.size(), {-1, -1});
        std::deque<int> queue{s};
        par[s] = {s, -1};
        while (!queue.empty() && par[t].first < 0) {
            int u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < adj[u].size(); ++i)
                if (adj[u][i].cap > 0 && par[adj[u][i].to].first < 0) {
                    par[adj[u][i].to] = {u, static_cast<int>(i)};
                    queue.push_back(adj[u][i].to);
                }
        }
        if (par[t].first < 0)
            return false;
        for (int v = t; v != s;) {
            auto [u, i] = par[v];
            adj[u][i].cap -= 1;
            adj[adj[u][i].to][adj[u][i].rev].cap += 1;
            v = u;
        }
        return true;
    }
};

const int kBigCap = 1 << 28;

std::optional<std::vector<int>> undeletable_arc_path(const Digraph& g, int s, int t) {
    std::vector<int> par(g.n(), -1);
    std::deque<int> queue{s};
    par[s] = s;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == t)
            break;
        for (int w : g.out(u))
            if (par[w] < 0 && !g.arc_deletable(u, w)) {
                par[w] = u;
                queue.push_back(w);
            }
    }
    if (par[t] < 0)
        return std::nullopt;
    std::vector<int> path;
    for (int v = t; v != s; v = par[v])
        path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
}

// drop cycles so the vertex sequence becomes simple
std::vector<int> shortcut(const std::vector<int>& walk) {
    std::vector<int> out;
    for (int v : walk) {
        auto it = std::find(out.begin(), out.end(), v);
        if (it != out.end())
            out.erase(it + 1, out.end());
        else
            out.push_back(v);
    }
    return out;
}

} // namespace

EdgeFlow max_edge_flow(const Digraph& g, int s, int t) {
    if (s == t)
        throw InputError("max_edge_flow: s == t");
    if (auto p = undeletable_arc_path(g, s, t))
        return EdgeFlow{true, {*p}};

    ArcFlowNet net(g.n());
    std::vector<std::vector<int>> init_cap(g.n());
    for (auto [u, v] : g.arcs())
        net.add(u, v, g.arc_deletable(u, v) ? 1 : kBigCap);
    for (int u = 0; u < g.n(); ++u)
        for (const auto& a : net.adj[u])
            init_cap[u].push_back(a.cap);

    int value = 0;
    while (net.augment(s, t))
        ++value;

    std::vector<std::vector<int>> flow_out(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (std::size_t i = 0; i < net.adj[u].size(); ++i) {
            int carried = init_cap[u][i] - net.adj[u][i].cap;
            for (int c = 0; c < carried; ++c)
                flow_out[u].push_back(net.adj[u][i].to);
        }
    for (auto& row : flow_out)
        std::sort(row.begin(), row.end());

    EdgeFlow result;
    for (int k = 0; k < value; ++k) {
        std::vector<int> par(g.n(), -1);
        std::deque<int> queue{s};
        par[s] = s;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (u == t)
                break;
            for (int w : flow_out[u])
                if (par[w] < 0) {
                    par[w] = u;
                    queue.push_back(w);
                }
        }
        std::vector<int> walk;
        for (int v = t; v != s; v = par[v])
            walk.push_back(v);
        walk.push_back(s);
        std::reverse(walk.begin(), walk.end());
        for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
            auto& row = flow_out[walk[i]];
            row.erase(std::find(row.begin(), row.end(), walk[i + 1]));
        }
        result.paths.push_back(shortcut(walk));
    }
    return result;
}

bool is_star_cut(const Digraph& g, const std::vector<std::pair<int, int>>& z, int s,
                 int t) {
    for (auto [u, v] : z)
        if (!g.arc_deletable(u, v))
            throw InputError("is_star_cut: cut contains an undeletable arc");
    auto r = reach_minus_arcs(g, {s}, z);
    if (set_contains(r, t))
        return false;
    for (auto [u, v] : z)
        if (!set_contains(r, u) || set_contains(r, v))
            return false;
    return true;
}

std::vector<std::pair<int, int>> corecut(const Digraph& g,
                                         const std::vector<std::pair<int, int>>& z,
                                         int s, int t) {
    (void)s;
    // vertices that reach t in g - z
    std::vector<std::pair<int, int>> rev_removed;
    for (auto [u, v] : z)
        rev_removed.emplace_back(v, u);
    auto to_t = reach_minus_arcs(g.reversed(), {t}, rev_removed);
    std::vector<std::pair<int, int>> core;
    for (auto [u, v] : z)
        if (set_contains(to_t, v))
            core.emplace_back(u, v);
    return core;
}

bool is_witnessing_flow(const Digraph& g, const std::vector<std::pair<int, int>>& z,
                        const EdgeFlow& flow, int s, int t) {
    auto core = corecut(g, z, s, t);
    auto after_core = reach_minus_arcs(g, {s}, core);
    auto lambda = max_edge_flow(g, s, t);
    if (set_contains(after_core, t) || lambda.infinite ||
        static_cast<int>(core.size()) != lambda.value())
        throw InputError("is_witnessing_flow: corecut(z) is not an st-mincut");
    if (flow.infinite || flow.value() != lambda.value())
        return false;
    std::set<std::pair<int, int>> used_deletable;
    for (const auto& path : flow.paths) {
        if (path.empty() || path.front() != s || path.back() != t ||
            !is_path(g, path))
            return false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (g.arc_deletable(path[i], path[i + 1]))
                if (!used_deletable.insert({path[i], path[i + 1]}).second)
                    return false; // deletable arc shared between paths
    }
    std::set<std::pair<int, int>> zset(z.begin(), z.end());
    std::set<std::pair<int, int>> coreset(core.begin(), core.end());
    std::set<std::pair<int, int>> hit;
    for (const auto& path : flow.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (zset.count({path[i], path[i + 1]}))
                hit.insert({path[i], path[i + 1]});
    return hit == coreset;
}

std::pair<Digraph, VertexizeMap> vertexize(const Digraph& g_edge) {
    std::vector<Digraph::VertexSpec> vs;
    std::vector<Digraph::ArcSpec> as;
    for (int v = 0; v < g_edge.n(); ++v)
        vs.push_back({g_edge.id(v), false, g_edge.weight(v)});
    for (auto [u, v] : g_edge.arcs()) {
        if (g_edge.arc_deletable(u, v)) {
            std::string mid = "e:" + g_edge.id(u) + ">" + g_edge.id(v);
            vs.push_back({mid, true, 1});
            as.push_back({g_edge.id(u), mid, false});
            as.push_back({mid, g_edge.id(v), false});
        } else {
            as.push_back({g_edge.id(u), g_edge.id(v), false});
        }
    }
    Digraph g(std::move(vs), as);
    VertexizeMap map;
    map.arc_of_vertex.assign(g.n(), {-1, -1});
    for (auto [u, v] : g_edge.arcs())
        if (g_edge.arc_deletable(u, v)) {
            std::string mid = "e:" + g_edge.id(u) + ">" + g_edge.id(v);
            map.arc_of_vertex[g.index(mid)] = {u, v};
        }
    return {std::move(g), std::move(map)};
}

std::pair<Digraph, EdgeizeMap> edgeize(const Digraph& g_vertex) {
    std::vector<Digraph::VertexSpec> vs;
    std::vector<Digraph::ArcSpec> as;
    for (int v = 0; v < g_vertex.n(); ++v) {
        vs.push_back({g_vertex.id(v) + ":1", false, g_vertex.weight(v)});
        vs.push_back({g_vertex.id(v) + ":2", false, g_vertex.weight(v)});
        as.push_back({g_vertex.id(v) + ":1", g_vertex.id(v) + ":2",
                      g_vertex.deletable(v)});
    }
    for (auto [u, v] : g_vertex.arcs())
        as.push_back({g_vertex.id(u) + ":2", g_vertex.id(v) + ":1", false});
    Digraph g(std::move(vs), as);
    EdgeizeMap map;
    map.split_arc_of_vertex.assign(g_vertex.n(), {-1, -1});
    for (int v = 0; v < g_vertex.n(); ++v)
        map.split_arc_of_vertex[v] = {g.index(g_vertex.id(v) + ":1"),
                                      g.index(g_vertex.id(v) + ":2")};
    return {std::move(g), std::move(map)};
}

namespace {

// position along the path: vertex i -> 2i, arc (p[i], p[i+1]) -> 2i+1
std::optional<int> elem_position(const Digraph&, const std::vector<int>& path,
                                 const PathElem& e) {
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!e.is_arc() && path[i] == e.u)
            return static_cast<int>(2 * i);
        if (e.is_arc() && i + 1 < path.size() && path[i] == e.u &&
            path[i + 1] == e.arc_to)
            return static_cast<int>(2 * i + 1);
    }
    return std::nullopt;
}

} // namespace

bool interlaced(const Digraph& g, const std::vector<int>& path,
                const std::vector<PathElem>& c, const std::vector<PathElem>& d) {
    if (!is_path(g, path))
        throw InputError("interlaced: not a path of the host graph");
    if (c.size() != d.size())
        return false;
    std::vector<std::pair<int, int>> tagged; // (position, 0=c 1=d)
    for (const auto& e : c) {
        auto pos = elem_position(g, path, e);
        if (!pos)
            throw InputError("interlaced: element not on path");
        tagged.emplace_back(*pos, 0);
    }
    for (const auto& e : d) {
        auto pos = elem_position(g, path, e);
        if (!pos)
            throw InputError("interlaced: element not on path");
        tagged.emplace_back(*pos, 1);
    }
    std::sort(tagged.begin(), tagged.end());
    for (std::size_t i = 0; i + 1 < tagged.size(); ++i)
        if (tagged[i].first == tagged[i + 1].first)
            throw InputError("interlaced: c and d must be disjoint");
    for (std::size_t i = 0; i < tagged.size(); ++i)
        if (tagged[i].second != static_cast<int>(i % 2))
            return false;
    return true;
}

namespace {

struct ReachMatrix {
    std::vector<std::vector<char>> at;

    explicit ReachMatrix(const Digraph& g) {
        at.assign(g.n(), std::vector<char>(g.n(), 0));
        for (int v = 0; v < g.n(); ++v)
            for (int w : reach(g, {v}, {}))
                at[v][w] = 1;
    }
};

// can a walk from x to y pass through element e?
bool via(const ReachMatrix& r, const Digraph& g, int x, int y, const PathElem& e) {
    if (!e.is_arc())
        return r.at[x][e.u] && r.at[e.u][y];
    return g.has_arc(e.u, e.arc_to) && r.at[x][e.u] && r.at[e.arc_to][y];
}

std::optional<std::vector<int>> shortest_path(const Digraph& g, int s, int t) {
    std::vector<int> par(g.n(), -1);
    std::deque<int> queue{s};
    par[s] = s;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == t)
            break;
        for (int w : g.out(u))
            if (par[w] < 0) {
                par[w] = u;
                queue.push_back(w);
            }
    }
    if (par[t] < 0)
        return std::nullopt;
    std::vector<int> path;
    for (int v = t; v != s; v = par[v])
        path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
}

std::optional<std::vector<int>> walk_via(const Digraph& g, int x, int y,
                                         const PathElem& e) {
    if (!e.is_arc()) {
        auto a = shortest_path(g, x, e.u);
        auto b = shortest_path(g, e.u, y);
        if (!a || !b)
            return std::nullopt;
        std::vector<int> walk = *a;
        walk.insert(walk.end(), b->begin() + 1, b->end());
        return walk;
    }
    if (!g.has_arc(e.u, e.arc_to))
        return std::nullopt;
    auto a = shortest_path(g, x, e.u);
    auto b = shortest_path(g, e.arc_to, y);
    if (!a || !b)
        return std::nullopt;
    std::vector<int> walk = *a;
    walk.insert(walk.end(), b->begin(), b->end());
    return walk;
}

bool backtrack_soybeans(const Digraph& g, const std::vector<Soybean>& candidates,
                        std::size_t from, int need, std::vector<char>& used,
                        std::vector<Soybean>& chosen) {
    if (need == 0)
        return true;
    for (std::size_t i = from; i < candidates.size(); ++i) {
        auto verts = candidates[i].vertex_union();
        bool clash = false;
        for (int v : verts)
            if (used[v]) {
                clash = true;
                break;
            }
        if (clash)
            continue;
        for (int v : verts)
            used[v] = 1;
        chosen.push_back(candidates[i]);
        if (backtrack_soybeans(g, candidates, i + 1, need - 1, used, chosen))
            return true;
        chosen.pop_back();
        for (int v : verts)
            used[v] = 0;
    }
    return false;
}

} // namespace

std::optional<std::vector<Soybean>> find_soybeans(const Digraph& g,
                                                  const std::vector<PathElem>& c,
                                                  const std::vector<PathElem>& d,
                                                  int p) {
    if (p < 1)
        throw InputError("find_soybeans: p must be >= 1");
    ReachMatrix r(g);
    if (p == 1) {
        // existence is a pure reachability question: find any (x, y, ce, de)
        // with walks x->ce->y and x->de->y
        for (const auto& ce : c)
            for (const auto& de : d)
                for (int x = 0; x < g.n(); ++x)
                    for (int y = 0; y < g.n(); ++y)
                        if (via(r, g, x, y, ce) && via(r, g, x, y, de)) {
                            auto w1 = walk_via(g, x, y, ce);
                            auto w2 = walk_via(g, x, y, de);
                            if (w1 && w2)
                                return std::vector<Soybean>{{*w1, *w2}};
                        }
        return std::nullopt;
    }
    std::vector<Soybean> candidates;
    for (const auto& ce : c)
        for (const auto& de : d)
            for (int x = 0; x < g.n(); ++x)
                for (int y = 0; y < g.n(); ++y)
                    if (via(r, g, x, y, ce) && via(r, g, x, y, de)) {
                        auto w1 = walk_via(g, x, y, ce);
                        auto w2 = walk_via(g, x, y, de);
                        if (w1 && w2)
                            candidates.push_back({*w1, *w2});
                    }
    std::vector<char> used(g.n(), 0);
    std::vector<Soybean> chosen;
    if (backtrack_soybeans(g, candidates, 0, p, used, chosen))
        return chosen;
    return std::nullopt;
}

namespace {

// p = 1 soybean feasibility for a vertex pair, shared by the verifier and
// the partition builder
bool pair_soybean_feasible(const ReachMatrix& r, int n, int a, int b) {
    for (int x = 0; x < n; ++x) {
        if (!r.at[x][a] || !r.at[x][b])
            continue;
        for (int y = 0; y < n; ++y)
            if (r.at[a][y] && r.at[b][y])
                return true;
    }
    return false;
}

bool block_ok_on_path(const Digraph& g, const ReachMatrix& r,
                      const std::vector<int>& elems, int q, int p) {
    int m = static_cast<int>(elems.size());
    if (m < 2 * q)
        return true; // no interlaced pair of size q fits
    std::vector<int> idx(2 * q);
    for (int i = 0; i < 2 * q; ++i)
        idx[i] = i;
    while (true) {
        // alternating split: positions 0,2,... form C; 1,3,... form D
        bool ok = false;
        if (p == 1) {
            for (int i = 0; i < 2 * q && !ok; i += 2)
                for (int j = 1; j < 2 * q && !ok; j += 2)
                    ok = pair_soybean_feasible(r, g.n(), elems[idx[i]], elems[idx[j]]);
        } else {
            std::vector<PathElem> c, d;
            for (int i = 0; i < 2 * q; ++i)
                (i % 2 == 0 ? c : d).push_back(PathElem::vertex(elems[idx[i]]));
            ok = find_soybeans(g, c, d, p).has_value();
        }
        if (!ok)
            return false;
        int i = 2 * q - 1;
        while (i >= 0 && idx[i] == m - 2 * q + i)
            --i;
        if (i < 0)
            return true;
        ++idx[i];
        for (int j = i + 1; j < 2 * q; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

bool verify_soybean_partition(const Digraph& g, const Augmentation& aug, int q, int p) {
    if (aug.flow.infinite)
        return false;
    ReachMatrix r(g);
    for (const auto& path : aug.flow.paths) {
        for (const auto& block : aug.partition) {
            std::vector<int> elems;
            for (int v : path)
                if (set_contains(block, v))
                    elems.push_back(v); // kept in path order
            if (!block_ok_on_path(g, r, elems, q, p))
                return false;
        }
    }
    return true;
}

namespace {

std::optional<std::vector<int>> bfs_within(const Digraph& g, int s, int t,
                                           const std::vector<char>& allowed) {
    if (!allowed[s] || !allowed[t])
        return std::nullopt;
    std::vector<int> par(g.n(), -1);
    std::deque<int> queue{s};
    par[s] = s;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == t)
            break;
        for (int w : g.out(u))
            if (allowed[w] && par[w] < 0) {
                par[w] = u;
                queue.push_back(w);
            }
    }
    if (par[t] < 0)
        return std::nullopt;
    std::vector<int> path;
    for (int v = t; v != s; v = par[v])
        path.push_back(v);
    path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;
}

// greedy interval merging of the per-path singleton blocks, gated on the
// (q, p) soybean check
std::vector<std::vector<int>> build_partition(const Digraph& g, const ReachMatrix& r,
                                              const std::vector<std::vector<int>>& paths,
                                              int q, int p) {
    std::vector<std::vector<int>> blocks;
    for (const auto& path : paths) {
        std::vector<int> dels;
        for (int v : path)
            if (g.deletable(v))
                dels.push_back(v); // path order
        std::vector<std::vector<int>> intervals;
        for (int v : dels)
            intervals.push_back({v});
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
                std::vector<int> merged = intervals[i];
                merged.insert(merged.end(), intervals[i + 1].begin(),
                              intervals[i + 1].end());
                if (block_ok_on_path(g, r, merged, q, p)) {
                    intervals[i] = merged;
                    intervals.erase(intervals.begin() + i + 1);
                    changed = true;
                    break;
                }
            }
        }
        for (auto& iv : intervals) {
            std::sort(iv.begin(), iv.end());
            blocks.push_back(std::move(iv));
        }
    }
    return blocks;
}

} // namespace

std::vector<SeparatorAugmentation> augment_exhaustive(const Digraph& g, int s, int t,
                                                      int k, int q, int p) {
    if (g.deletable(s) || g.deletable(t))
        throw InputError("augment_exhaustive: s and t must be undeletable");
    std::vector<SeparatorAugmentation> result;
    ReachMatrix reach_g(g);
    for (const auto& z : enumerate_minimal_separators(g, s, t, k)) {
        auto r_side = reach(g, {s}, z);
        std::vector<std::pair<int, int>> added;
        std::vector<char> used(g.n(), 0); // deletable vertices claimed by a path
        std::vector<std::vector<int>> paths;
        Digraph cur = g;
        for (int zv : z) {
            // prefix: s -> zv within the s-side, avoiding claimed vertices
            std::vector<char> allowed(g.n(), 0);
            for (int v : r_side)
                if (!used[v])
                    allowed[v] = 1;
            allowed[zv] = 1;
            auto prefix = bfs_within(cur, s, zv, allowed);
            if (!prefix) {
                // attach zv behind a reachable s-side vertex, preferring a
                // non-terminal one
                allowed[zv] = 0;
                int hook = s;
                auto reachable_now = reach(cur, {s}, {}); // within allowed handled below
                for (int v : reachable_now) {
                    if (!allowed[v] || v == s || v == t)
                        continue;
                    // v must be reachable from s through allowed vertices
                    if (bfs_within(cur, s, v, allowed)) {
                        hook = v;
                        break;
                    }
                }
                added.emplace_back(hook, zv);
                cur = cur.with_arcs({{hook, zv}}, false);
                auto base = bfs_within(cur, s, hook, allowed);
                prefix = *base;
                prefix->push_back(zv);
            }
            // suffix: zv -> t avoiding the rest of z and claimed vertices
            std::vector<char> allowed2(g.n(), 1);
            for (int v : z)
                allowed2[v] = 0;
            for (int v = 0; v < g.n(); ++v)
                if (used[v])
                    allowed2[v] = 0;
            allowed2[zv] = 1;
            auto suffix = bfs_within(cur, zv, t, allowed2);
            if (!suffix) {
                allowed2[zv] = 0;
                int hook = t;
                for (int v = 0; v < g.n(); ++v) {
                    if (!allowed2[v] || v == s || v == t)
                        continue;
                    if (bfs_within(cur, v, t, allowed2)) {
                        hook = v;
                        break;
                    }
                }
                added.emplace_back(zv, hook);
                cur = cur.with_arcs({{zv, hook}}, false);
                auto tail = hook == t ? std::optional<std::vector<int>>(std::vector<int>{t})
                                      : bfs_within(cur, hook, t, allowed2);
                suffix = std::vector<int>{zv};
                suffix->insert(suffix->end(), tail->begin(), tail->end());
            }
            std::vector<int> path = *prefix;
            path.insert(path.end(), suffix->begin() + 1, suffix->end());
            for (int v : path)
                if (g.deletable(v))
                    used[v] = 1;
            paths.push_back(std::move(path));
        }
        Augmentation aug;
        aug.added_arcs = added;
        aug.flow.infinite = false;
        aug.flow.paths = paths;
        aug.partition = build_partition(g, reach_g, paths, q, p);
        aug.k = k;
        aug.q = q;
        aug.p = p;
        result.push_back({z, std::move(aug)});
    }
    return result;
}

boost::multiprecision::cpp_int soybean_recurrence(int p, int i) {
    if (p < 1 || i < 0)
        throw InputError("soybean_recurrence: p >= 1 and i >= 0 required");
    boost::multiprecision::cpp_int q = 2 * p;
    for (int j = 0; j < i; ++j)
        q = 1 + 2 * p * q;
    return q;
}

} // namespace dmc
