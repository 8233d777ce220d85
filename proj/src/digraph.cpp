#include "dmc/digraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace dmc {

Digraph::Digraph(std::vector<VertexSpec> vertices, const std::vector<ArcSpec>& arcs) {
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexSpec& a, const VertexSpec& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
        if (vertices[i].id == vertices[i + 1].id)
            throw InputError("duplicate vertex id: " + vertices[i].id);
    verts_.reserve(vertices.size());
    for (auto& v : vertices)
        verts_.push_back({v.id, v.deletable, v.weight});
    out_.assign(verts_.size(), {});
    in_.assign(verts_.size(), {});
    out_del_.assign(verts_.size(), {});

    // (u,v) -> deletable; duplicates collapse, keeping the first flag
    std::map<std::pair<int, int>, bool> arcmap;
    for (const auto& a : arcs) {
        int u = index(a.from), v = index(a.to);
        if (u == v)
            throw InputError("self-loop at vertex: " + a.from);
        arcmap.emplace(std::make_pair(u, v), a.deletable);
    }
    for (const auto& [uv, del] : arcmap) {
        out_[uv.first].push_back(uv.second);
        out_del_[uv.first].push_back(del ? 1 : 0);
        in_[uv.second].push_back(uv.first);
        ++n_arcs_;
    }
    for (auto& row : in_)
        std::sort(row.begin(), row.end());
}

int Digraph::index(const std::string& id) const {
    auto r = find(id);
    if (!r)
        throw InputError("unknown vertex id: " + id);
    return *r;
}

std::optional<int> Digraph::find(const std::string& id) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), id,
                               [](const Vertex& v, const std::string& s) { return v.id < s; });
    if (it == verts_.end() || it->id != id)
        return std::nullopt;
    return static_cast<int>(it - verts_.begin());
}

bool Digraph::has_arc(int u, int v) const {
    const auto& row = out_.at(u);
    return std::binary_search(row.begin(), row.end(), v);
}

bool Digraph::arc_deletable(int u, int v) const {
    const auto& row = out_.at(u);
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v)
        throw InputError("no such arc: " + id(u) + " -> " + id(v));
    return out_del_[u][it - row.begin()] != 0;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> r;
    r.reserve(n_arcs_);
    for (int u = 0; u < n(); ++u)
        for (int v : out_[u])
            r.emplace_back(u, v);
    return r;
}

std::vector<std::string> Digraph::ids_of(const std::vector<int>& vs) const {
    std::vector<std::string> r;
    r.reserve(vs.size());
    for (int v : vs)
        r.push_back(id(v));
    return r;
}

std::vector<int> Digraph::indices_of(const std::vector<std::string>& ids) const {
    std::vector<int> r;
    r.reserve(ids.size());
    for (const auto& s : ids)
        r.push_back(index(s));
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

Digraph::VertexSpec Digraph::vertex_spec(int v) const {
    return {id(v), deletable(v), weight(v)};
}

std::vector<Digraph::ArcSpec> Digraph::arc_specs() const {
    std::vector<ArcSpec> r;
    r.reserve(n_arcs_);
    for (int u = 0; u < n(); ++u)
        for (std::size_t i = 0; i < out_[u].size(); ++i)
            r.push_back({id(u), id(out_[u][i]), out_del_[u][i] != 0});
    return r;
}

Digraph Digraph::with_arcs(const std::vector<std::pair<int, int>>& add,
                           bool added_deletable) const {
    std::vector<VertexSpec> vs;
    for (int v = 0; v < n(); ++v)
        vs.push_back(vertex_spec(v));
    auto as = arc_specs();
    for (auto [u, v] : add) {
        if (u == v)
            continue;
        if (!has_arc(u, v))
            as.push_back({id(u), id(v), added_deletable});
    }
    return Digraph(std::move(vs), as);
}

Digraph Digraph::without_vertices(const std::vector<int>& drop) const {
    std::vector<char> gone(n(), 0);
    for (int v : drop)
        gone.at(v) = 1;
    std::vector<VertexSpec> vs;
    for (int v = 0; v < n(); ++v)
        if (!gone[v])
            vs.push_back(vertex_spec(v));
    std::vector<ArcSpec> as;
    for (auto [u, v] : arcs())
        if (!gone[u] && !gone[v])
            as.push_back({id(u), id(v), arc_deletable(u, v)});
    return Digraph(std::move(vs), as);
}

Digraph Digraph::reversed() const {
    std::vector<VertexSpec> vs;
    for (int v = 0; v < n(); ++v)
        vs.push_back(vertex_spec(v));
    std::vector<ArcSpec> as;
    for (auto [u, v] : arcs())
        as.push_back({id(v), id(u), arc_deletable(u, v)});
    return Digraph(std::move(vs), as);
}

bool is_path(const Digraph& g, const std::vector<int>& seq) {
    if (seq.empty())
        return false;
    std::set<int> seen;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!seen.insert(seq[i]).second)
            return false;
        if (i + 1 < seq.size() && !g.has_arc(seq[i], seq[i + 1]))
            return false;
    }
    return true;
}

bool is_walk(const Digraph& g, const std::vector<int>& seq) {
    if (seq.empty())
        return false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.has_arc(seq[i], seq[i + 1]))
            return false;
    return true;
}

std::vector<int> reach(const Digraph& g, const std::vector<int>& sources,
                       const std::vector<int>& removed) {
    std::vector<char> dead(g.n(), 0), seen(g.n(), 0);
    for (int v : removed) {
        if (v < 0 || v >= g.n())
            throw InputError("reach: vertex index out of range");
        dead[v] = 1;
    }
    std::deque<int> queue;
    for (int v : sources) {
        if (v < 0 || v >= g.n())
            throw InputError("reach: vertex index out of range");
        if (dead[v])
            throw InputError("reach: removed set intersects sources");
        if (!seen[v]) {
            seen[v] = 1;
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.out(u))
            if (!dead[w] && !seen[w]) {
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

bool reaches(const Digraph& g, int from, int to, const std::vector<int>& removed) {
    if (set_contains(removed, from) || set_contains(removed, to))
        return false;
    auto r = reach(g, {from}, removed);
    return set_contains(r, to);
}

namespace {

// Unit-capacity max flow on the split network. Node 2v is v-in, 2v+1 is
// v-out; deletable split arcs have capacity 1, everything else is
// effectively unbounded. Deterministic: BFS scans residual arcs in the
// order they were added, which follows vertex index order.
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int nodes) : adj(nodes) {}

    void add(int u, int v, int cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    }

    // one BFS augmentation of value 1; returns false when sink unreachable
    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> par(adj.size(), {-1, -1});
        std::deque<int> queue{s};
        par[s] = {s, -1};
        while (!queue.empty() && par[t].first < 0) {
            int u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < adj[u].size(); ++i) {
                const Arc& a = adj[u][i];
                if (a.cap > 0 && par[a.to].first < 0) {
                    par[a.to] = {u, static_cast<int>(i)};
                    queue.push_back(a.to);
                }
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

std::optional<std::vector<int>> undeletable_path(const Digraph& g, int s, int t) {
    std::vector<int> par(g.n(), -1);
    std::deque<int> queue{s};
    par[s] = s;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == t)
            break;
        for (int w : g.out(u))
            if (!g.deletable(w) && par[w] < 0) {
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

} // namespace

VertexFlow max_vertex_flow(const Digraph& g, int s, int t) {
    if (s == t)
        throw InputError("max_vertex_flow: s == t");
    if (g.deletable(s) || g.deletable(t))
        throw InputError("max_vertex_flow: s and t must be undeletable");

    if (auto p = undeletable_path(g, s, t))
        return VertexFlow{true, {*p}};

    FlowNet net(2 * g.n());
    for (int v = 0; v < g.n(); ++v)
        net.add(2 * v, 2 * v + 1, g.deletable(v) ? 1 : kBigCap);
    for (auto [u, v] : g.arcs())
        net.add(2 * u + 1, 2 * v, kBigCap);

    // remember initial capacities to recover the flow afterwards
    std::vector<std::vector<int>> init_cap(2 * g.n());
    for (int u = 0; u < 2 * g.n(); ++u)
        for (const auto& a : net.adj[u])
            init_cap[u].push_back(a.cap);

    int value = 0;
    while (net.augment(2 * s + 1, 2 * t))
        ++value;

    // flow graph: forward arcs whose residual capacity dropped
    std::vector<std::vector<int>> flow_out(2 * g.n());
    for (int u = 0; u < 2 * g.n(); ++u)
        for (std::size_t i = 0; i < net.adj[u].size(); ++i) {
            int carried = init_cap[u][i] - net.adj[u][i].cap;
            for (int c = 0; c < carried; ++c)
                flow_out[u].push_back(net.adj[u][i].to);
        }
    for (auto& row : flow_out)
        std::sort(row.begin(), row.end());

    VertexFlow result;
    result.infinite = false;
    for (int p = 0; p < value; ++p) {
        // BFS in the flow graph from s-out to t-in, then consume the path
        std::vector<int> par(2 * g.n(), -1);
        std::deque<int> queue{2 * s + 1};
        par[2 * s + 1] = 2 * s + 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (u == 2 * t)
                break;
            for (int w : flow_out[u])
                if (par[w] < 0) {
                    par[w] = u;
                    queue.push_back(w);
                }
        }
        std::vector<int> nodes;
        for (int v = 2 * t; v != 2 * s + 1; v = par[v])
            nodes.push_back(v);
        nodes.push_back(2 * s + 1);
        std::reverse(nodes.begin(), nodes.end());
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
            auto& row = flow_out[nodes[i]];
            row.erase(std::find(row.begin(), row.end(), nodes[i + 1]));
        }
        std::vector<int> path{s};
        for (int u : nodes)
            if (u % 2 == 0) // v-in nodes mark vertex visits
                path.push_back(u / 2);
        result.paths.push_back(std::move(path));
    }
    return result;
}

namespace {

void minimal_separators_rec(const Digraph& g, const std::vector<int>& a,
                            const std::vector<int>& b, int k, std::vector<int>& z,
                            std::set<std::vector<int>>& found) {
    // BFS from a in g - z; stop early if some b-vertex is reached
    std::vector<int> par(g.n(), -1);
    std::vector<char> dead(g.n(), 0);
    for (int v : z)
        dead[v] = 1;
    std::deque<int> queue;
    for (int v : a)
        if (par[v] < 0) {
            par[v] = v;
            queue.push_back(v);
        }
    int hit = -1;
    while (!queue.empty() && hit < 0) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.out(u)) {
            if (dead[w] || par[w] >= 0)
                continue;
            par[w] = u;
            if (set_contains(b, w)) {
                hit = w;
                break;
            }
            queue.push_back(w);
        }
    }
    if (hit < 0) {
        found.insert(z);
        return;
    }
    if (static_cast<int>(z.size()) == k)
        return;
    std::vector<int> path;
    for (int v = hit; par[v] != v; v = par[v])
        path.push_back(v);
    std::reverse(path.begin(), path.end());
    for (int v : path) {
        if (set_contains(b, v) || set_contains(a, v) || !g.deletable(v))
            continue;
        z.push_back(v);
        std::sort(z.begin(), z.end());
        minimal_separators_rec(g, a, b, k, z, found);
        z.erase(std::find(z.begin(), z.end(), v));
    }
}

bool separates(const Digraph& g, const std::vector<int>& a, const std::vector<int>& b,
               const std::vector<int>& z) {
    auto r = reach(g, a, z);
    for (int v : b)
        if (set_contains(r, v))
            return false;
    return true;
}

} // namespace

std::vector<std::vector<int>> enumerate_minimal_separators(const Digraph& g,
                                                           const std::vector<int>& a,
                                                           const std::vector<int>& b,
                                                           int k) {
    if (k < 0)
        throw InputError("enumerate_minimal_separators: k < 0");
    if (!set_intersect(a, b).empty())
        throw InputError("enumerate_minimal_separators: overlapping endpoint sets");
    std::set<std::vector<int>> found;
    std::vector<int> z;
    minimal_separators_rec(g, a, b, k, z, found);
    std::vector<std::vector<int>> result;
    for (const auto& cand : found) {
        bool minimal = true;
        for (int v : cand) {
            auto less = set_minus(cand, {v});
            if (separates(g, a, b, less)) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            result.push_back(cand);
    }
    std::sort(result.begin(), result.end(),
              [](const std::vector<int>& x, const std::vector<int>& y) {
                  if (x.size() != y.size())
                      return x.size() < y.size();
                  return x < y;
              });
    return result;
}

std::vector<std::vector<int>> enumerate_minimal_separators(const Digraph& g, int s,
                                                           int t, int k) {
    return enumerate_minimal_separators(g, std::vector<int>{s}, std::vector<int>{t}, k);
}

std::vector<std::vector<int>> enumerate_important_separators(const Digraph& g,
                                                             const std::vector<int>& a,
                                                             const std::vector<int>& b,
                                                             int k) {
    auto candidates = enumerate_minimal_separators(g, a, b, k);
    std::vector<std::vector<int>> reaches_of;
    reaches_of.reserve(candidates.size());
    for (const auto& s : candidates)
        reaches_of.push_back(reach(g, a, s));
    std::vector<std::vector<int>> result;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < candidates.size() && !dominated; ++j) {
            if (i == j || candidates[j].size() > candidates[i].size())
                continue;
            if (reaches_of[i] != reaches_of[j] && is_subset(reaches_of[i], reaches_of[j]))
                dominated = true;
        }
        if (!dominated)
            result.push_back(candidates[i]);
    }
    return result;
}

Digraph bypass(const Digraph& g, const std::vector<int>& x) {
    for (int v : x)
        if (!g.deletable(v))
            throw InputError("bypass: vertex not deletable: " + g.id(v));
    // adjacency as sets of ids; bypass one vertex at a time
    std::map<std::string, std::set<std::string>> succ;
    std::map<std::string, std::set<std::string>> pred;
    std::map<std::pair<std::string, std::string>, bool> del;
    for (int v = 0; v < g.n(); ++v) {
        succ[g.id(v)];
        pred[g.id(v)];
    }
    for (auto [u, v] : g.arcs()) {
        succ[g.id(u)].insert(g.id(v));
        pred[g.id(v)].insert(g.id(u));
        del[{g.id(u), g.id(v)}] = g.arc_deletable(u, v);
    }
    for (int vi : x) {
        const std::string v = g.id(vi);
        for (const auto& u : pred[v])
            for (const auto& w : succ[v]) {
                if (u == w || u == v || w == v)
                    continue;
                if (succ[u].insert(w).second) {
                    pred[w].insert(u);
                    del[{u, w}] = true;
                }
            }
        for (const auto& u : pred[v])
            if (u != v)
                succ[u].erase(v);
        for (const auto& w : succ[v])
            if (w != v)
                pred[w].erase(v);
        succ.erase(v);
        pred.erase(v);
    }
    std::vector<Digraph::VertexSpec> vs;
    for (int v = 0; v < g.n(); ++v)
        if (!set_contains(x, v))
            vs.push_back(g.vertex_spec(v));
    std::vector<Digraph::ArcSpec> as;
    for (const auto& [u, outs] : succ)
        for (const auto& w : outs)
            as.push_back({u, w, del[{u, w}]});
    return Digraph(std::move(vs), as);
}

std::vector<int> set_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool set_contains(const std::vector<int>& a, int v) {
    return std::binary_search(a.begin(), a.end(), v);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace dmc
