#include "dmc/multicut.hpp"

#include <algorithm>
#include <deque>

namespace dmc {

namespace {

// combinations of `candidates` of size `size` in lexicographic order
template <typename F>
bool for_each_subset(const std::vector<int>& candidates, int size, F&& fn) {
    int d = static_cast<int>(candidates.size());
    if (size > d)
        return false;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i)
        idx[i] = i;
    std::vector<int> subset(size);
    while (true) {
        for (int i = 0; i < size; ++i)
            subset[i] = candidates[idx[i]];
        if (fn(subset))
            return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == d - size + i)
            --i;
        if (i < 0)
            return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

double subset_count(int d, int k) {
    double total = 0, c = 1;
    for (int size = 0; size <= k; ++size) {
        total += c;
        c = c * (d - size) / (size + 1);
        if (total > 1e18)
            break;
    }
    return total;
}

const double kSubsetGuard = 2e7;

} // namespace

std::vector<int> DmcInstance::terminals() const {
    std::vector<int> t;
    for (const auto& [s, tt] : pairs) {
        t.push_back(s);
        t.push_back(tt);
    }
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

std::vector<int> DmcInstance::sources() const {
    std::vector<int> r{pairs[0].first, pairs[1].first, pairs[2].first};
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::vector<int> DmcInstance::sinks() const {
    std::vector<int> r{pairs[0].second, pairs[1].second, pairs[2].second};
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    return r;
}

std::vector<int> DmcInstance::deletable_vertices() const {
    std::vector<int> r;
    for (int v = 0; v < g.n(); ++v)
        if (!set_contains(undeletable, v))
            r.push_back(v);
    return r;
}

void DmcInstance::validate() const {
    if (k < 0)
        throw InputError("instance: k < 0");
    for (int v : undeletable)
        if (v < 0 || v >= g.n())
            throw InputError("instance: undeletable vertex out of range");
    if (!is_subset(terminals(), undeletable))
        throw InputError("instance: terminals must be undeletable");
    for (int v = 0; v < g.n(); ++v)
        if (g.deletable(v) == set_contains(undeletable, v))
            throw InputError("instance: graph deletable flags disagree with undeletable set");
    for (const auto& [s, t] : pairs)
        if (s == t)
            throw InputError("instance: terminal pair with s == t");
}

std::vector<int> WdmcInstance::deletable_vertices() const {
    std::vector<int> terms{pairs[0].first, pairs[0].second, pairs[1].first,
                           pairs[1].second};
    std::sort(terms.begin(), terms.end());
    std::vector<int> r;
    for (int v = 0; v < g.n(); ++v)
        if (g.weight(v) <= budget && !set_contains(terms, v))
            r.push_back(v);
    return r;
}

long long WdmcInstance::weight_of(const std::vector<int>& s) const {
    long long w = 0;
    for (int v : s)
        w += g.weight(v);
    return w;
}

void WdmcInstance::validate() const {
    if (k < 0 || budget < 0)
        throw InputError("weighted instance: negative budget");
    for (const auto& [s, t] : pairs) {
        if (s == t)
            throw InputError("weighted instance: terminal pair with s == t");
        if (g.weight(s) <= budget || g.weight(t) <= budget)
            throw InputError("weighted instance: terminals must have weight > W");
    }
    for (int v = 0; v < g.n(); ++v)
        if (g.weight(v) < 0)
            throw InputError("weighted instance: negative vertex weight");
}

bool is_solution(const DmcInstance& inst, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= inst.g.n())
            throw InputError("is_solution: vertex out of range");
    if (!set_intersect(s, inst.undeletable).empty())
        return false;
    if (static_cast<int>(s.size()) > inst.k)
        return false;
    for (const auto& [src, snk] : inst.pairs)
        if (reaches(inst.g, src, snk, s))
            return false;
    return true;
}

bool is_solution(const WdmcInstance& inst, const std::vector<int>& s) {
    for (int v : s)
        if (v < 0 || v >= inst.g.n())
            throw InputError("is_solution: vertex out of range");
    if (static_cast<int>(s.size()) > inst.k || inst.weight_of(s) > inst.budget)
        return false;
    for (const auto& [src, snk] : inst.pairs)
        if (reaches(inst.g, src, snk, s))
            return false;
    return true;
}

std::optional<std::vector<int>> brute_force_dmc(const DmcInstance& inst,
                                                bool override_guard) {
    inst.validate();
    auto cands = inst.deletable_vertices();
    if (!override_guard &&
        subset_count(static_cast<int>(cands.size()), inst.k) > kSubsetGuard)
        throw CapacityError("brute_force_dmc: subset space too large");
    for (int size = 0; size <= inst.k; ++size) {
        std::optional<std::vector<int>> found;
        for_each_subset(cands, size, [&](const std::vector<int>& s) {
            if (is_solution(inst, s)) {
                found = s;
                return true;
            }
            return false;
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

namespace {

// weighted vertex-capacitated max flow on the split network, bottleneck
// augmenting paths; removed vertices carry capacity 0, frozen ones are
// uncuttable (treated like terminals)
long long weighted_vertex_mincut(const Digraph& g, int s, int t,
                                 const std::vector<int>& removed,
                                 const std::vector<char>& frozen,
                                 long long budget) {
    const long long inf = 4 * (budget + 1);
    struct Arc {
        int to;
        long long cap;
        int rev;
    };
    std::vector<std::vector<Arc>> adj(2 * g.n());
    auto add = [&](int u, int v, long long cap) {
        adj[u].push_back({v, cap, static_cast<int>(adj[v].size())});
        adj[v].push_back({u, 0, static_cast<int>(adj[u].size()) - 1});
    };
    for (int v = 0; v < g.n(); ++v) {
        long long cap;
        if (set_contains(removed, v))
            cap = 0;
        else if (v == s || v == t || frozen[v] || g.weight(v) > budget)
            cap = inf;
        else
            cap = g.weight(v);
        add(2 * v, 2 * v + 1, cap);
    }
    for (auto [u, v] : g.arcs())
        add(2 * u + 1, 2 * v, inf);
    long long flow = 0;
    while (flow < inf) {
        std::vector<std::pair<int, int>> par(adj.size(), {-1, -1});
        std::deque<int> queue{2 * s + 1};
        par[2 * s + 1] = {2 * s + 1, -1};
        while (!queue.empty() && par[2 * t].first < 0) {
            int u = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < adj[u].size(); ++i)
                if (adj[u][i].cap > 0 && par[adj[u][i].to].first < 0) {
                    par[adj[u][i].to] = {u, static_cast<int>(i)};
                    queue.push_back(adj[u][i].to);
                }
        }
        if (par[2 * t].first < 0)
            break;
        long long bottleneck = inf;
        for (int v = 2 * t; v != 2 * s + 1;) {
            auto [u, i] = par[v];
            bottleneck = std::min(bottleneck, adj[u][i].cap);
            v = u;
        }
        for (int v = 2 * t; v != 2 * s + 1;) {
            auto [u, i] = par[v];
            adj[u][i].cap -= bottleneck;
            adj[adj[u][i].to][adj[u][i].rev].cap += bottleneck;
            v = u;
        }
        flow += bottleneck;
    }
    return flow;
}

struct WdmcSearch {
    const WdmcInstance& inst;
    long long node_limit;
    long long nodes = 0;
    std::optional<std::vector<int>> best;
    long long best_wt = 0;

    explicit WdmcSearch(const WdmcInstance& i, long long limit)
        : inst(i), node_limit(limit) {}

    // shortest surviving path for the first uncut pair, or empty if all cut
    std::vector<int> uncut_path(const std::vector<int>& s) const {
        for (const auto& [src, snk] : inst.pairs) {
            std::vector<int> par(inst.g.n(), -1);
            std::deque<int> queue{src};
            par[src] = src;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop_front();
                if (u == snk)
                    break;
                for (int w : inst.g.out(u))
                    if (par[w] < 0 && !set_contains(s, w)) {
                        par[w] = u;
                        queue.push_back(w);
                    }
            }
            if (par[snk] >= 0) {
                std::vector<int> path;
                for (int v = snk; v != src; v = par[v])
                    path.push_back(v);
                path.push_back(src);
                std::reverse(path.begin(), path.end());
                return path;
            }
        }
        return {};
    }

    // `excluded` carries the sibling-exclusion rule: each child forbids the
    // vertices its earlier siblings branched on, so the subtrees partition
    // the solution space and no set is explored twice.
    void run(std::vector<int>& s, long long wt, std::vector<char>& excluded) {
        if (++nodes > node_limit)
            throw CapacityError("brute_force_wdmc: node limit exceeded");
        if (best) {
            if (wt > best_wt)
                return;
            if (wt == best_wt && s.size() > best->size())
                return;
        }
        auto path = uncut_path(s);
        if (path.empty()) {
            if (!best || wt < best_wt ||
                (wt == best_wt && (s.size() < best->size() ||
                                   (s.size() == best->size() && s < *best)))) {
                best = s;
                best_wt = wt;
            }
            return;
        }
        if (static_cast<int>(s.size()) == inst.k)
            return;
        // admissible bound: any completion pays at least the weighted
        // vertex min-cut of each still-connected pair
        long long cap = best ? std::min(inst.budget, best_wt) : inst.budget;
        for (const auto& [src, snk] : inst.pairs) {
            long long need =
                weighted_vertex_mincut(inst.g, src, snk, s, excluded, inst.budget);
            if (wt + need > cap)
                return;
        }
        std::vector<int> tried;
        for (int v : path) {
            if (excluded[v])
                continue;
            long long w = inst.g.weight(v);
            if (w > inst.budget - wt)
                continue;
            bool terminal = false;
            for (const auto& [a, b] : inst.pairs)
                terminal |= (v == a || v == b);
            if (terminal)
                continue;
            auto pos = std::lower_bound(s.begin(), s.end(), v);
            s.insert(pos, v);
            run(s, wt + w, excluded);
            s.erase(std::find(s.begin(), s.end(), v));
            excluded[v] = 1;
            tried.push_back(v);
        }
        for (int v : tried)
            excluded[v] = 0;
    }
};

} // namespace

std::optional<std::vector<int>> brute_force_wdmc(const WdmcInstance& inst,
                                                 bool override_guard,
                                                 long long node_limit) {
    inst.validate();
    WdmcSearch search(inst, override_guard ? (1LL << 62) : node_limit);
    std::vector<int> s;
    std::vector<char> excluded(inst.g.n(), 0);
    search.run(s, 0, excluded);
    return search.best;
}

ShadowReport shadows(const DmcInstance& inst, const std::vector<int>& x) {
    if (!set_intersect(x, inst.undeletable).empty())
        throw InputError("shadows: x intersects undeletable set");
    auto from_sources = reach(inst.g, inst.sources(), x);
    auto to_sinks = reach(inst.g.reversed(), inst.sinks(), x);
    ShadowReport r;
    for (int v = 0; v < inst.g.n(); ++v) {
        if (set_contains(x, v) || set_contains(inst.undeletable, v))
            continue;
        if (!set_contains(from_sources, v))
            r.forward.push_back(v);
        if (!set_contains(to_sinks, v))
            r.reverse.push_back(v);
    }
    return r;
}

bool is_shadowless(const DmcInstance& inst, const std::vector<int>& s) {
    auto rep = shadows(inst, s);
    return rep.forward.empty() && rep.reverse.empty();
}

std::vector<std::vector<int>> enumerate_solutions(const DmcInstance& inst,
                                                  bool override_guard) {
    inst.validate();
    auto cands = inst.deletable_vertices();
    if (!override_guard &&
        subset_count(static_cast<int>(cands.size()), inst.k) > kSubsetGuard)
        throw CapacityError("enumerate_solutions: subset space too large");
    std::vector<std::vector<int>> r;
    for (int size = 0; size <= inst.k; ++size)
        for_each_subset(cands, size, [&](const std::vector<int>& s) {
            if (is_solution(inst, s))
                r.push_back(s);
            return false;
        });
    return r;
}

std::vector<std::vector<int>> enumerate_shadowless_solutions(const DmcInstance& inst,
                                                             bool override_guard) {
    std::vector<std::vector<int>> r;
    for (auto& s : enumerate_solutions(inst, override_guard))
        if (is_shadowless(inst, s))
            r.push_back(std::move(s));
    return r;
}

std::vector<std::vector<int>> enumerate_minimal_solutions(const DmcInstance& inst,
                                                          bool override_guard) {
    std::vector<std::vector<int>> r;
    for (auto& s : enumerate_solutions(inst, override_guard)) {
        bool minimal = true;
        for (int v : s) {
            if (is_solution(inst, set_minus(s, {v}))) {
                minimal = false;
                break;
            }
        }
        if (minimal)
            r.push_back(std::move(s));
    }
    return r;
}

} // namespace dmc
