#include "dmc/pipeline.hpp"

#include <algorithm>
#include <set>

namespace dmc {

namespace {

// Q-relation for one pair's augmented graph: q_exists(u, v) iff some path
// from u to v in g_i is internally vertex-disjoint from every flow path.
struct DetourIndex {
    const Digraph& gi;
    std::vector<char> on_flow;           // vertex lies on some flow path
    std::vector<std::vector<char>> hreach; // reachability inside the off-flow region
    std::vector<std::vector<char>> from_u; // per flow vertex: off-flow vertices reachable
                                           // from its out-neighbors within the region

    DetourIndex(const Digraph& g, const std::vector<std::vector<int>>& paths)
        : gi(g), on_flow(g.n(), 0) {
        for (const auto& p : paths)
            for (int v : p)
                on_flow[v] = 1;
        hreach.assign(gi.n(), std::vector<char>(gi.n(), 0));
        for (int v = 0; v < gi.n(); ++v) {
            if (on_flow[v])
                continue;
            std::vector<int> stack{v};
            hreach[v][v] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : gi.out(u))
                    if (!on_flow[w] && !hreach[v][w]) {
                        hreach[v][w] = 1;
                        stack.push_back(w);
                    }
            }
        }
        from_u.assign(gi.n(), {});
        for (int u = 0; u < gi.n(); ++u) {
            if (!on_flow[u])
                continue;
            from_u[u].assign(gi.n(), 0);
            for (int w : gi.out(u)) {
                if (on_flow[w])
                    continue;
                for (int x = 0; x < gi.n(); ++x)
                    if (hreach[w][x])
                        from_u[u][x] = 1;
            }
        }
    }

    bool q_exists(int u, int v) const {
        if (gi.has_arc(u, v))
            return true;
        for (int w : gi.in(v))
            if (!on_flow[w] && from_u[u][w])
                return true;
        return false;
    }
};

} // namespace

FlowCsp build_csp_c1(const DmcInstance& inst,
                     const std::array<const Augmentation*, 3>& augs) {
    FlowCsp out;
    for (int i = 0; i < 3; ++i)
        if (static_cast<int>(augs[i]->flow.paths.size()) > inst.k) {
            out.overflow = true;
            return out;
        }
    // forward variables, pair-major
    for (int i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < augs[i]->flow.paths.size(); ++j) {
            out.vars.push_back({i, static_cast<int>(j), false});
            std::vector<int> dom;
            for (int v : augs[i]->flow.paths[j])
                if (!set_contains(inst.undeletable, v))
                    dom.push_back(v); // path order; terminals sit in V-infinity
            out.domain_vertices.push_back(dom);
        }
    out.forward_count = static_cast<int>(out.vars.size());
    for (int f = 0; f < out.forward_count; ++f) {
        out.vars.push_back({out.vars[f].pair, out.vars[f].path, true});
        auto dom = out.domain_vertices[f];
        std::reverse(dom.begin(), dom.end());
        out.domain_vertices.push_back(dom);
    }
    for (const auto& dom : out.domain_vertices) {
        OrderedDomain d;
        for (int v : dom)
            d.values.push_back(inst.g.id(v));
        out.csp.domains.push_back(std::move(d));
    }
    // identity constraints between forward variables and their mirrors
    for (int f = 0; f < out.forward_count; ++f) {
        PermutationConstraint rho;
        rho.var_a = f;
        rho.var_b = out.mirror_of(f);
        int m = static_cast<int>(out.domain_vertices[f].size());
        for (int a = 0; a < m; ++a)
            rho.mapping.emplace_back(a, m - 1 - a);
        out.csp.permutations.push_back(std::move(rho));
    }
    // separator constraints per pair: ordered path pairs (j, j')
    for (int i = 0; i < 3; ++i) {
        const auto& aug = *augs[i];
        Digraph gi = inst.g.with_arcs(aug.added_arcs, false);
        DetourIndex detours(gi, aug.flow.paths);
        int base = 0;
        while (base < out.forward_count && out.vars[base].pair != i)
            ++base;
        int ki = static_cast<int>(aug.flow.paths.size());
        for (int j = 0; j < ki; ++j)
            for (int jp = 0; jp < ki; ++jp) {
                int var_x = base + j;
                int var_y = out.mirror_of(base + jp);
                const auto& pj = aug.flow.paths[j];
                const auto& pjp = aug.flow.paths[jp];
                std::vector<int> fullpos_j(inst.g.n(), -1), fullpos_jp(inst.g.n(), -1);
                for (std::size_t a = 0; a < pj.size(); ++a)
                    fullpos_j[pj[a]] = static_cast<int>(a);
                for (std::size_t a = 0; a < pjp.size(); ++a)
                    fullpos_jp[pjp[a]] = static_cast<int>(a);
                const auto& dx = out.domain_vertices[var_x];
                const auto& dy = out.domain_vertices[var_y];
                std::vector<std::vector<char>> allowed(
                    dx.size(), std::vector<char>(dy.size(), 1));
                for (int u : pj)
                    for (int v : pjp) {
                        if (!detours.q_exists(u, v))
                            continue;
                        // drop (x, y) with u strictly before x and y strictly
                        // before v along the respective paths
                        for (std::size_t a = 0; a < dx.size(); ++a) {
                            if (fullpos_j[dx[a]] <= fullpos_j[u])
                                continue;
                            for (std::size_t b = 0; b < dy.size(); ++b)
                                if (fullpos_jp[dy[b]] < fullpos_jp[v])
                                    allowed[a][b] = 0;
                        }
                    }
                std::vector<std::pair<int, int>> pairs;
                for (std::size_t a = 0; a < dx.size(); ++a)
                    for (std::size_t b = 0; b < dy.size(); ++b)
                        if (allowed[a][b])
                            pairs.emplace_back(static_cast<int>(a),
                                               static_cast<int>(b));
                DownclosedRelation r;
                r.var_a = var_x;
                r.var_b = var_y;
                r.frontier = DownclosedRelation::close_pairs(
                    pairs, static_cast<int>(dx.size()), static_cast<int>(dy.size()));
                out.csp.downclosed.push_back(std::move(r));
            }
    }
    return out;
}

namespace {

void partitions_rec(const FlowCsp& c1, int k, int var,
                    std::vector<std::vector<int>>& parts,
                    std::vector<ConsistencyPartition>& out) {
    if (var == c1.forward_count) {
        out.push_back(parts);
        return;
    }
    // finest-first: open a new part before joining existing ones
    if (static_cast<int>(parts.size()) < k) {
        parts.push_back({var});
        partitions_rec(c1, k, var + 1, parts, out);
        parts.pop_back();
    }
    for (auto& part : parts) {
        if (static_cast<int>(part.size()) >= 3)
            continue;
        bool same_pair = false;
        for (int other : part)
            same_pair |= (c1.vars[other].pair == c1.vars[var].pair);
        if (same_pair)
            continue;
        part.push_back(var);
        partitions_rec(c1, k, var + 1, parts, out);
        part.pop_back();
    }
}

} // namespace

std::vector<ConsistencyPartition> enumerate_consistency_partitions(const FlowCsp& c1,
                                                                   int k) {
    std::vector<ConsistencyPartition> out;
    std::vector<std::vector<int>> parts;
    partitions_rec(c1, k, 0, parts, out);
    return out;
}

FlowCsp build_csp_c2(const FlowCsp& c1, const ConsistencyPartition& partition,
                     const std::map<int, std::vector<int>>& removed) {
    FlowCsp out;
    out.vars = c1.vars;
    out.forward_count = c1.forward_count;
    // new domain per forward var: its order restricted to the part's shared
    // vertex set minus explicit removals
    std::vector<std::vector<int>> keep(c1.vars.size());
    for (int f = 0; f < c1.forward_count; ++f)
        keep[f] = c1.domain_vertices[f];
    for (const auto& part : partition) {
        std::vector<int> shared;
        bool first = true;
        for (int f : part) {
            std::vector<int> sorted = c1.domain_vertices[f];
            std::sort(sorted.begin(), sorted.end());
            shared = first ? sorted : set_intersect(shared, sorted);
            first = false;
        }
        for (int f : part) {
            std::vector<int> dom;
            for (int v : c1.domain_vertices[f])
                if (set_contains(shared, v))
                    dom.push_back(v);
            keep[f] = dom;
        }
    }
    for (const auto& [f, drop] : removed) {
        std::vector<int> dom;
        for (int v : keep.at(f))
            if (!std::count(drop.begin(), drop.end(), v))
                dom.push_back(v);
        keep[f] = dom;
    }
    for (int f = 0; f < c1.forward_count; ++f) {
        auto dom = keep[f];
        keep[c1.mirror_of(f)] = dom;
        std::reverse(keep[c1.mirror_of(f)].begin(), keep[c1.mirror_of(f)].end());
    }
    // position remap old -> new
    std::vector<std::vector<int>> new_pos(c1.vars.size());
    for (std::size_t v = 0; v < c1.vars.size(); ++v) {
        new_pos[v].assign(c1.domain_vertices[v].size(), -1);
        for (std::size_t np = 0; np < keep[v].size(); ++np) {
            auto it = std::find(c1.domain_vertices[v].begin(),
                                c1.domain_vertices[v].end(), keep[v][np]);
            new_pos[v][it - c1.domain_vertices[v].begin()] = static_cast<int>(np);
        }
    }
    out.domain_vertices = keep;
    for (std::size_t v = 0; v < c1.vars.size(); ++v) {
        OrderedDomain d;
        for (std::size_t np = 0; np < keep[v].size(); ++np) {
            auto it = std::find(c1.domain_vertices[v].begin(),
                                c1.domain_vertices[v].end(), keep[v][np]);
            d.values.push_back(
                c1.csp.domains[v].values[it - c1.domain_vertices[v].begin()]);
        }
        out.csp.domains.push_back(std::move(d));
    }
    for (const auto& p : c1.csp.permutations) {
        PermutationConstraint q;
        q.var_a = p.var_a;
        q.var_b = p.var_b;
        for (auto [a, b] : p.mapping)
            if (new_pos[p.var_a][a] >= 0 && new_pos[p.var_b][b] >= 0)
                q.mapping.emplace_back(new_pos[p.var_a][a], new_pos[p.var_b][b]);
        out.csp.permutations.push_back(std::move(q));
    }
    for (const auto& r : c1.csp.downclosed) {
        std::vector<std::pair<int, int>> pairs;
        int na = static_cast<int>(c1.domain_vertices[r.var_a].size());
        for (int a = 0; a < na; ++a)
            for (int b = 0; b <= r.frontier[a]; ++b)
                if (new_pos[r.var_a][a] >= 0 && new_pos[r.var_b][b] >= 0)
                    pairs.emplace_back(new_pos[r.var_a][a], new_pos[r.var_b][b]);
        DownclosedRelation q;
        q.var_a = r.var_a;
        q.var_b = r.var_b;
        q.frontier = DownclosedRelation::close_pairs(
            pairs, static_cast<int>(keep[r.var_a].size()),
            static_cast<int>(keep[r.var_b].size()));
        out.csp.downclosed.push_back(std::move(q));
    }
    // consistency constraints: identity on the (now equal) vertex sets
    for (const auto& part : partition)
        for (std::size_t x = 0; x < part.size(); ++x)
            for (std::size_t y = x + 1; y < part.size(); ++y) {
                int fa = part[x], fb = part[y];
                PermutationConstraint pi;
                pi.var_a = fa;
                pi.var_b = fb;
                for (std::size_t a = 0; a < keep[fa].size(); ++a) {
                    auto it = std::find(keep[fb].begin(), keep[fb].end(), keep[fa][a]);
                    if (it != keep[fb].end())
                        pi.mapping.emplace_back(static_cast<int>(a),
                                                static_cast<int>(it - keep[fb].begin()));
                }
                out.csp.permutations.push_back(pi);
                out.consistency.push_back(
                    {static_cast<int>(out.csp.permutations.size()) - 1, fa, fb});
            }
    return out;
}

std::vector<int> extract_solution(const FlowCsp& c2, const Valuation& val) {
    std::vector<int> s;
    for (int f = 0; f < c2.forward_count; ++f)
        s.push_back(c2.domain_vertices[f].at(val.at(f)));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool check_irrelevance(const DmcInstance& inst, int v, int pair_a,
                       const std::vector<int>& path_a, int pair_b,
                       const std::vector<int>& path_b, bool override_guard) {
    auto split_ok = [&](const std::vector<int>& path, int pair,
                        const std::vector<int>& sol) {
        auto it = std::find(path.begin(), path.end(), v);
        if (it == path.end())
            return false; // v not on the path: the stated split cannot hold
        int s = inst.pairs[pair].first, t = inst.pairs[pair].second;
        auto from_s = reach(inst.g, {s}, sol);
        auto to_t = reach(inst.g.reversed(), {t}, sol);
        for (auto jt = path.begin(); jt != it; ++jt) {
            if (set_contains(sol, *jt))
                continue;
            if (set_contains(to_t, *jt))
                return false; // a vertex before v still reaches t
        }
        for (auto jt = it + 1; jt != path.end(); ++jt) {
            if (set_contains(sol, *jt))
                continue;
            if (set_contains(from_s, *jt))
                return false; // a vertex after v still reachable from s
        }
        return true;
    };
    for (const auto& sol : enumerate_shadowless_solutions(inst, override_guard)) {
        if (!set_contains(sol, v))
            continue;
        if (split_ok(path_a, pair_a, sol) && split_ok(path_b, pair_b, sol))
            return false; // witness: v can play the split role
    }
    return true;
}

std::variant<GridRankCertificate, int> irrelevant_vertex(
    const PermutationConstraint& pi, const std::vector<int>& domain_a_vertices,
    const std::vector<int>& domain_b_vertices, const std::vector<int>& path_a,
    const std::vector<int>& path_b, const std::vector<std::vector<int>>& blocks_a,
    const std::vector<std::vector<int>>& blocks_b, const IrrelevantVertexConfig& cfg,
    const DmcInstance* brute_check_inst, int pair_a, int pair_b) {
    cfg.validate();
    int na = static_cast<int>(domain_a_vertices.size());
    int nb = static_cast<int>(domain_b_vertices.size());
    if (na < 1 || nb < 1 || cfg.rho > std::min(na, nb))
        return GridRankCertificate{cfg.rho};
    auto matrix = adj_of_permutation(pi.mapping, na, nb);
    auto division = find_grid_minor(matrix, cfg.rho);
    if (!division)
        return GridRankCertificate{cfg.rho};

    // one representative 1-entry per cell (row-major first)
    int rho = cfg.rho;
    std::vector<std::vector<int>> rep(rho, std::vector<int>(rho, -1));
    std::vector<std::vector<std::pair<int, int>>> color(
        rho, std::vector<std::pair<int, int>>(rho, {-1, -1}));
    auto block_of = [](const std::vector<std::vector<int>>& blocks, int v) {
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (set_contains(blocks[b], v))
                return static_cast<int>(b);
        return -1;
    };
    for (int p = 0; p < rho; ++p)
        for (int q = 0; q < rho; ++q) {
            for (int r = division->row_bounds[p];
                 r < division->row_bounds[p + 1] && rep[p][q] < 0; ++r)
                for (int c = division->col_bounds[q];
                     c < division->col_bounds[q + 1] && rep[p][q] < 0; ++c)
                    if (matrix.nonzero(r, c))
                        rep[p][q] = domain_a_vertices[r];
            color[p][q] = {block_of(blocks_a, rep[p][q]),
                           block_of(blocks_b, rep[p][q])};
        }

    // monochromatic 2*zeta x 2*zeta selection of cell rows/columns
    int m = 2 * cfg.zeta;
    std::vector<int> rows(m), cols(m);
    std::vector<int> ridx(m), cidx(m);
    for (int i = 0; i < m; ++i)
        ridx[i] = i;
    bool found = false;
    while (!found) {
        std::vector<int> cidx2(m);
        for (int i = 0; i < m; ++i)
            cidx2[i] = i;
        while (true) {
            auto c0 = color[ridx[0]][cidx2[0]];
            bool mono = c0.first >= 0 && c0.second >= 0;
            for (int i = 0; i < m && mono; ++i)
                for (int j = 0; j < m && mono; ++j)
                    mono = color[ridx[i]][cidx2[j]] == c0;
            if (mono) {
                rows = ridx;
                cols = cidx2;
                found = true;
                break;
            }
            int i = m - 1;
            while (i >= 0 && cidx2[i] == rho - m + i)
                --i;
            if (i < 0)
                break;
            ++cidx2[i];
            for (int j = i + 1; j < m; ++j)
                cidx2[j] = cidx2[j - 1] + 1;
        }
        if (found)
            break;
        int i = m - 1;
        while (i >= 0 && ridx[i] == rho - m + i)
            --i;
        if (i < 0)
            return GridRankCertificate{cfg.rho}; // no monochromatic refinement
        ++ridx[i];
        for (int j = i + 1; j < m; ++j)
            ridx[j] = ridx[j - 1] + 1;
    }

    int v = rep[rows[cfg.zeta - 1]][cols[cfg.zeta - 1]];
    if (cfg.brute_check && brute_check_inst &&
        !check_irrelevance(*brute_check_inst, v, pair_a, path_a, pair_b, path_b))
        return GridRankCertificate{cfg.rho};
    return v;
}

namespace {

std::optional<std::vector<int>> solve_bypassed(const DmcInstance& b,
                                               const PipelineConfig& cfg) {
    std::array<std::vector<SeparatorAugmentation>, 3> entries;
    for (int i = 0; i < 3; ++i)
        entries[i] = augment_exhaustive(b.g, b.pairs[i].first, b.pairs[i].second, b.k,
                                        cfg.soybean_q, cfg.soybean_p);
    for (const auto& e1 : entries[0]) {
        for (const auto& e2 : entries[1]) {
            auto u12 = set_union(e1.separator, e2.separator);
            if (static_cast<int>(u12.size()) > b.k)
                continue; // no solution can contain this pair of witnesses
            for (const auto& e3 : entries[2]) {
                auto u123 = set_union(u12, e3.separator);
                if (static_cast<int>(u123.size()) > b.k)
                    continue;
                std::array<const Augmentation*, 3> augs{&e1.aug, &e2.aug, &e3.aug};
                auto c1 = build_csp_c1(b, augs);
                if (c1.overflow)
                    continue;
                for (const auto& partition :
                     enumerate_consistency_partitions(c1, b.k)) {
                    std::map<int, std::vector<int>> removed;
                    while (true) {
                        auto c2 = build_csp_c2(c1, partition, removed);
                        bool empty_domain = false;
                        for (const auto& d : c2.csp.domains)
                            empty_domain |= (d.size() == 0);
                        if (empty_domain)
                            break;
                        int dropped = -1;
                        for (const auto& [ci, fa, fb] : c2.consistency) {
                            std::variant<GridRankCertificate, int> res =
                                GridRankCertificate{cfg.iv.rho};
                            try {
                                res = irrelevant_vertex(
                                    c2.csp.permutations[ci], c2.domain_vertices[fa],
                                    c2.domain_vertices[fb],
                                    augs[c2.vars[fa].pair]->flow.paths[c2.vars[fa].path],
                                    augs[c2.vars[fb].pair]->flow.paths[c2.vars[fb].path],
                                    augs[c2.vars[fa].pair]->partition,
                                    augs[c2.vars[fb].pair]->partition, cfg.iv,
                                    cfg.iv.brute_check ? &b : nullptr,
                                    c2.vars[fa].pair, c2.vars[fb].pair);
                            } catch (const CapacityError&) {
                                // verification out of reach: the rule stays quiet
                            }
                            if (std::holds_alternative<int>(res)) {
                                int v = std::get<int>(res);
                                removed[fa].push_back(v);
                                removed[fb].push_back(v);
                                dropped = v;
                                break;
                            }
                        }
                        if (dropped >= 0)
                            continue; // domains changed: rebuild and rescan
                        auto val = solve(c2.csp);
                        if (val) {
                            auto s = extract_solution(c2, *val);
                            if (is_solution(b, s))
                                return s;
                        }
                        break;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<int>> solve_dmc(const DmcInstance& inst,
                                          const PipelineConfig& cfg,
                                          std::uint64_t seed) {
    inst.validate();
    cfg.iv.validate();
    for (const auto& b : shadow_removal(inst, cfg.covering, seed)) {
        auto s = solve_bypassed(b, cfg);
        if (!s)
            continue;
        // map back to the original instance and validate there
        std::vector<int> mapped;
        for (int v : *s)
            mapped.push_back(inst.g.index(b.g.id(v)));
        std::sort(mapped.begin(), mapped.end());
        if (is_solution(inst, mapped))
            return mapped;
    }
    return std::nullopt;
}

} // namespace dmc
