#include "dmc/permcsp.hpp"

#include <algorithm>
#include <set>

namespace dmc {

std::vector<int> DownclosedRelation::close_pairs(
    const std::vector<std::pair<int, int>>& pairs, int na, int nb) {
    std::vector<int> frontier(na, -1);
    for (auto [a, b] : pairs) {
        if (a < 0 || a >= na || b < 0 || b >= nb)
            throw InputError("downclosed relation: pair out of range");
        frontier[a] = std::max(frontier[a], b);
    }
    // suffix max: membership of (a,b) must survive decreasing a
    for (int a = na - 2; a >= 0; --a)
        frontier[a] = std::max(frontier[a], frontier[a + 1]);
    return frontier;
}

std::vector<std::pair<int, int>> DownclosedRelation::pairs() const {
    std::vector<std::pair<int, int>> r;
    for (int a = 0; a < static_cast<int>(frontier.size()); ++a)
        for (int b = 0; b <= frontier[a]; ++b)
            r.emplace_back(a, b);
    return r;
}

void DownclosedRelation::validate(int na, int nb) const {
    if (static_cast<int>(frontier.size()) != na)
        throw InputError("downclosed relation: frontier size mismatch");
    for (int a = 0; a < na; ++a) {
        if (frontier[a] < -1 || frontier[a] >= nb)
            throw InputError("downclosed relation: frontier out of range");
        if (a > 0 && frontier[a] > frontier[a - 1])
            throw InputError("downclosed relation: frontier must be non-increasing");
    }
}

void PermutationConstraint::validate(int na, int nb) const {
    std::set<int> from, to;
    for (auto [a, b] : mapping) {
        if (a < 0 || a >= na || b < 0 || b >= nb)
            throw InputError("permutation constraint: pair out of range");
        if (!from.insert(a).second || !to.insert(b).second)
            throw InputError("permutation constraint: not a bijection");
    }
}

void PermCspInstance::validate() const {
    for (const auto& r : downclosed) {
        if (r.var_a < 0 || r.var_a >= variables() || r.var_b < 0 ||
            r.var_b >= variables() || r.var_a == r.var_b)
            throw InputError("csp: constraint variable pair out of range");
        r.validate(domains[r.var_a].size(), domains[r.var_b].size());
    }
    for (const auto& p : permutations) {
        if (p.var_a < 0 || p.var_a >= variables() || p.var_b < 0 ||
            p.var_b >= variables() || p.var_a == p.var_b)
            throw InputError("csp: constraint variable pair out of range");
        p.validate(domains[p.var_a].size(), domains[p.var_b].size());
    }
}

bool is_satisfied(const PermCspInstance& inst, const Valuation& val) {
    if (static_cast<int>(val.size()) != inst.variables())
        throw InputError("is_satisfied: valuation must be total");
    for (int i = 0; i < inst.variables(); ++i)
        if (val[i] < 0 || val[i] >= inst.domains[i].size())
            throw InputError("is_satisfied: value out of domain");
    for (const auto& r : inst.downclosed)
        if (!r.contains(val[r.var_a], val[r.var_b]))
            return false;
    for (const auto& p : inst.permutations) {
        bool matched = false;
        for (auto [a, b] : p.mapping)
            if (a == val[p.var_a] && b == val[p.var_b]) {
                matched = true;
                break;
            }
        if (!matched)
            return false;
    }
    return true;
}

namespace {

struct Search {
    const PermCspInstance& inst;
    std::vector<std::vector<char>> live; // per variable, per position

    explicit Search(const PermCspInstance& i) : inst(i) {
        for (const auto& d : inst.domains)
            live.emplace_back(d.size(), 1);
    }

    int count(int var) const {
        int c = 0;
        for (char b : live[var])
            c += b;
        return c;
    }

    int min_live(int var) const {
        for (int p = 0; p < static_cast<int>(live[var].size()); ++p)
            if (live[var][p])
                return p;
        return -1;
    }

    // prune to arc consistency; false on a wiped-out domain
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& r : inst.downclosed) {
                int amin = min_live(r.var_a);
                if (amin < 0)
                    return false;
                // b is supported iff b <= frontier[min live a]
                int bcap = r.frontier[amin];
                for (int b = bcap + 1; b < static_cast<int>(live[r.var_b].size()); ++b)
                    if (live[r.var_b][b]) {
                        live[r.var_b][b] = 0;
                        changed = true;
                    }
                int bmin = min_live(r.var_b);
                if (bmin < 0)
                    return false;
                // a is supported iff frontier[a] >= min live b
                for (int a = 0; a < static_cast<int>(live[r.var_a].size()); ++a)
                    if (live[r.var_a][a] && r.frontier[a] < bmin) {
                        live[r.var_a][a] = 0;
                        changed = true;
                    }
            }
            for (const auto& p : inst.permutations) {
                std::vector<char> asup(live[p.var_a].size(), 0);
                std::vector<char> bsup(live[p.var_b].size(), 0);
                for (auto [a, b] : p.mapping) {
                    if (live[p.var_a][a] && live[p.var_b][b]) {
                        asup[a] = 1;
                        bsup[b] = 1;
                    }
                }
                for (std::size_t a = 0; a < asup.size(); ++a)
                    if (live[p.var_a][a] && !asup[a]) {
                        live[p.var_a][a] = 0;
                        changed = true;
                    }
                for (std::size_t b = 0; b < bsup.size(); ++b)
                    if (live[p.var_b][b] && !bsup[b]) {
                        live[p.var_b][b] = 0;
                        changed = true;
                    }
            }
        }
        for (int v = 0; v < inst.variables(); ++v)
            if (count(v) == 0)
                return false;
        return true;
    }

    std::optional<Valuation> run() {
        if (!propagate())
            return std::nullopt;
        // smallest live domain > 1; all-singletons means solved
        int pick = -1, pick_count = 0;
        for (int v = 0; v < inst.variables(); ++v) {
            int c = count(v);
            if (c > 1 && (pick < 0 || c < pick_count)) {
                pick = v;
                pick_count = c;
            }
        }
        if (pick < 0) {
            Valuation val(inst.variables());
            for (int v = 0; v < inst.variables(); ++v)
                val[v] = min_live(v);
            return is_satisfied(inst, val) ? std::optional<Valuation>(val) : std::nullopt;
        }
        auto saved = live;
        for (int p = 0; p < static_cast<int>(live[pick].size()); ++p) {
            if (!saved[pick][p])
                continue;
            live = saved;
            std::fill(live[pick].begin(), live[pick].end(), 0);
            live[pick][p] = 1;
            if (auto r = run())
                return r;
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<Valuation> solve(const PermCspInstance& inst) {
    inst.validate();
    for (const auto& d : inst.domains)
        if (d.size() == 0)
            return std::nullopt;
    Search s(inst);
    return s.run();
}

std::optional<Valuation> brute_force_csp(const PermCspInstance& inst,
                                         bool override_guard) {
    inst.validate();
    double product = 1;
    for (const auto& d : inst.domains) {
        if (d.size() == 0)
            return std::nullopt;
        product *= d.size();
        if (!override_guard && product > 5e7)
            throw CapacityError("brute_force_csp: domain product too large");
    }
    Valuation val(inst.variables(), 0);
    while (true) {
        if (is_satisfied(inst, val))
            return val;
        int i = inst.variables() - 1;
        while (i >= 0 && val[i] + 1 == inst.domains[i].size()) {
            val[i] = 0;
            --i;
        }
        if (i < 0)
            return std::nullopt;
        ++val[i];
    }
}

ZeroOneMatrix ColoredOrderedGraph::padded_adjacency(const EdgeSet& es) const {
    ZeroOneMatrix m(vertices(), vertices());
    for (auto [u, v] : es.edges) {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    return m;
}

ZeroOneMatrix ColoredOrderedGraph::bipartite_adjacency(const EdgeSet& es, int var_a,
                                                       int var_b) const {
    int a0 = variable_start.at(var_a);
    int b0 = variable_start.at(var_b);
    int na = (var_a + 1 < static_cast<int>(variable_start.size())
                  ? variable_start[var_a + 1]
                  : vertices()) -
             a0;
    int nb = (var_b + 1 < static_cast<int>(variable_start.size())
                  ? variable_start[var_b + 1]
                  : vertices()) -
             b0;
    ZeroOneMatrix m(std::max(na, 1), std::max(nb, 1));
    for (auto [u, v] : es.edges) {
        int a = u, b = v;
        if (vertex_color[a] != var_a)
            std::swap(a, b);
        m.set(a - a0, b - b0, 1);
    }
    return m;
}

ColoredOrderedGraph build_fo_encoding(const PermCspInstance& inst) {
    inst.validate();
    ColoredOrderedGraph g;
    for (int v = 0; v < inst.variables(); ++v) {
        g.variable_start.push_back(g.vertices());
        for (int p = 0; p < inst.domains[v].size(); ++p)
            g.vertex_color.push_back(v);
    }
    for (std::size_t i = 0; i < inst.downclosed.size(); ++i) {
        const auto& r = inst.downclosed[i];
        ColoredOrderedGraph::EdgeSet es;
        es.kind = ColoredOrderedGraph::EdgeSet::Kind::Downclosed;
        es.constraint_index = static_cast<int>(i);
        int na = inst.domains[r.var_a].size();
        // boundary-maximal pairs: (a, frontier[a]) at the last a of each
        // frontier level
        for (int a = 0; a < na; ++a) {
            if (r.frontier[a] < 0)
                continue;
            if (a + 1 < na && r.frontier[a + 1] == r.frontier[a])
                continue;
            es.edges.emplace_back(g.variable_start[r.var_a] + a,
                                  g.variable_start[r.var_b] + r.frontier[a]);
        }
        g.edge_sets.push_back(std::move(es));
    }
    for (std::size_t i = 0; i < inst.permutations.size(); ++i) {
        const auto& p = inst.permutations[i];
        ColoredOrderedGraph::EdgeSet es;
        es.kind = ColoredOrderedGraph::EdgeSet::Kind::Permutation;
        es.constraint_index = static_cast<int>(i);
        for (auto [a, b] : p.mapping)
            es.edges.emplace_back(g.variable_start[p.var_a] + a,
                                  g.variable_start[p.var_b] + b);
        g.edge_sets.push_back(std::move(es));
    }
    return g;
}

} // namespace dmc
