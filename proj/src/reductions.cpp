#include "dmc/reductions.hpp"

#include <algorithm>

namespace dmc {

namespace {

std::pair<std::string, std::string> norm_edge(const std::string& u,
                                              const std::string& v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

} // namespace

int PsiInstance::n() const {
    int m = 0;
    for (const auto& p : parts)
        m = std::max(m, static_cast<int>(p.size()));
    return m;
}

bool PsiInstance::host_adjacent(const std::string& u, const std::string& v) const {
    return host_edges.count(norm_edge(u, v)) > 0;
}

PsiInstance PsiInstance::normalized() const {
    PsiInstance out = *this;
    int target = out.n();
    for (int i = 0; i < out.h(); ++i) {
        std::sort(out.parts[i].begin(), out.parts[i].end());
        int pad = 0;
        while (static_cast<int>(out.parts[i].size()) < target)
            out.parts[i].push_back("_pad:" + std::to_string(i) + ":" +
                                   std::to_string(pad++));
    }
    out.validate();
    return out;
}

void PsiInstance::validate() const {
    if (parts.empty())
        throw InputError("psi: no pattern vertices");
    for (const auto& p : parts)
        if (static_cast<int>(p.size()) != n())
            throw InputError("psi: parts must have equal size (normalize first)");
    std::vector<char> touched(h(), 0);
    for (auto [u, v] : pattern_edges) {
        if (u < 0 || v < 0 || u >= h() || v >= h() || u >= v)
            throw InputError("psi: bad pattern edge");
        touched[u] = touched[v] = 1;
    }
    for (int i = 0; i < h(); ++i)
        if (!touched[i])
            throw InputError("psi: pattern has an isolated vertex");
}

int CliqueInstance::n() const {
    int m = 0;
    for (const auto& p : parts)
        m = std::max(m, static_cast<int>(p.size()));
    return m;
}

bool CliqueInstance::adjacent(const std::string& u, const std::string& v) const {
    return edges.count(norm_edge(u, v)) > 0;
}

CliqueInstance CliqueInstance::normalized() const {
    CliqueInstance out = *this;
    int target = out.n();
    for (int i = 0; i < out.k(); ++i) {
        std::sort(out.parts[i].begin(), out.parts[i].end());
        int pad = 0;
        while (static_cast<int>(out.parts[i].size()) < target)
            out.parts[i].push_back("_pad:" + std::to_string(i) + ":" +
                                   std::to_string(pad++));
    }
    out.validate();
    return out;
}

void CliqueInstance::validate() const {
    if (parts.empty())
        throw InputError("clique: no parts");
    for (const auto& p : parts) {
        if (static_cast<int>(p.size()) != n())
            throw InputError("clique: parts must have equal size (normalize first)");
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = a + 1; b < p.size(); ++b)
                if (adjacent(p[a], p[b]))
                    throw InputError("clique: parts must be independent sets");
    }
}

std::string psi_vertex_z(int i, int a) {
    return "z:" + std::to_string(i) + ":" + std::to_string(a);
}
std::string psi_vertex_zh(int i, int a) {
    return "zh:" + std::to_string(i) + ":" + std::to_string(a);
}
std::string psi_vertex_x(int i, int j, int a) {
    return "x:" + std::to_string(i) + ":" + std::to_string(j) + ":" + std::to_string(a);
}
std::string psi_vertex_xh(int i, int j, int a) {
    return "xh:" + std::to_string(i) + ":" + std::to_string(j) + ":" +
           std::to_string(a);
}
std::string psi_vertex_y(int i, int j, int a) {
    return "y:" + std::to_string(i) + ":" + std::to_string(j) + ":" + std::to_string(a);
}
std::string psi_vertex_yh(int i, int j, int a) {
    return "yh:" + std::to_string(i) + ":" + std::to_string(j) + ":" +
           std::to_string(a);
}
std::string psi_vertex_grid(int i, int j, int a, int b) {
    return "p:" + std::to_string(i) + ":" + std::to_string(j) + ":" +
           std::to_string(a) + ":" + std::to_string(b);
}

namespace {

std::vector<std::pair<int, int>> ordered_pattern_pairs(const PsiInstance& psi) {
    std::vector<std::pair<int, int>> out;
    for (auto [i, j] : psi.pattern_edges) {
        out.emplace_back(i, j);
        out.emplace_back(j, i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

WdmcInstance psi_to_wdmc(const PsiInstance& input) {
    PsiInstance psi = input.normalized();
    int n = psi.n(), h = psi.h(), k = psi.k();
    long long m = k + 1;
    long long budget = m * (2LL * k * (n + 1) + h) + k;

    std::vector<Digraph::VertexSpec> vs;
    std::vector<Digraph::ArcSpec> as;
    auto add_vertex = [&](const std::string& id, long long wt) {
        vs.push_back({id, wt <= budget, wt});
    };
    auto add_alternating_path = [&](auto name, auto name_hat, auto hat_weight) {
        // (v_n, vh_n, v_{n-1}, ..., v_1, vh_1, v_0)
        for (int a = 0; a <= n; ++a)
            add_vertex(name(a), budget + 1);
        for (int a = 1; a <= n; ++a)
            add_vertex(name_hat(a), hat_weight(a));
        for (int a = n; a >= 1; --a) {
            as.push_back({name(a), name_hat(a), true});
            as.push_back({name_hat(a), name(a - 1), true});
        }
    };

    for (int i = 0; i < h; ++i)
        add_alternating_path([&](int a) { return psi_vertex_z(i, a); },
                             [&](int a) { return psi_vertex_zh(i, a); },
                             [&](int) { return m; });
    for (auto [i, j] : ordered_pattern_pairs(psi)) {
        add_alternating_path([&](int a) { return psi_vertex_x(i, j, a); },
                             [&](int a) { return psi_vertex_xh(i, j, a); },
                             [&](int a) { return m * a; });
        add_alternating_path([&](int a) { return psi_vertex_y(i, j, a); },
                             [&](int a) { return psi_vertex_yh(i, j, a); },
                             [&](int a) { return m * (n + 1 - a); });
        for (int a = 0; a <= n; ++a) {
            as.push_back({psi_vertex_x(i, j, a), psi_vertex_z(i, a), true});
            as.push_back({psi_vertex_z(i, a), psi_vertex_y(i, j, a), true});
        }
    }
    for (const auto& id : {"s1", "t1", "s2", "t2"})
        add_vertex(id, budget + 1);
    for (auto [i, j] : psi.pattern_edges) {
        // i < j by pattern-edge normalization
        as.push_back({"s1", psi_vertex_x(i, j, n), true});
        as.push_back({psi_vertex_x(i, j, 0), "t1", true});
        as.push_back({"s1", psi_vertex_y(i, j, n), true});
        as.push_back({psi_vertex_y(i, j, 0), "t1", true});
        as.push_back({"s2", psi_vertex_x(j, i, n), true});
        as.push_back({psi_vertex_x(j, i, 0), "t2", true});
        as.push_back({"s2", psi_vertex_y(j, i, n), true});
        as.push_back({psi_vertex_y(j, i, 0), "t2", true});
        // grid: row a selects v^i_a, column b selects v^j_b
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                bool host_ok =
                    psi.host_adjacent(psi.parts[i][a - 1], psi.parts[j][b - 1]);
                add_vertex(psi_vertex_grid(i, j, a, b), host_ok ? 1 : budget);
            }
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b) {
                if (a < n)
                    as.push_back({psi_vertex_grid(i, j, a, b),
                                  psi_vertex_grid(i, j, a + 1, b), true});
                if (b < n)
                    as.push_back({psi_vertex_grid(i, j, a, b),
                                  psi_vertex_grid(i, j, a, b + 1), true});
            }
        for (int a = 1; a <= n; ++a) {
            as.push_back({psi_vertex_x(i, j, a), psi_vertex_grid(i, j, a, 1), true});
            as.push_back({psi_vertex_grid(i, j, a, n), psi_vertex_y(i, j, a - 1), true});
            as.push_back({psi_vertex_x(j, i, a), psi_vertex_grid(i, j, 1, a), true});
            as.push_back({psi_vertex_grid(i, j, n, a), psi_vertex_y(j, i, a - 1), true});
        }
    }

    WdmcInstance out;
    out.g = Digraph(std::move(vs), as);
    out.pairs = {{{out.g.index("s1"), out.g.index("t1")},
                  {out.g.index("s2"), out.g.index("t2")}}};
    out.k = 5 * k + h;
    out.budget = budget;
    out.validate();
    return out;
}

std::vector<int> map_psi_solution(const PsiInstance& input, const WdmcInstance& wdmc,
                                  const std::vector<int>& phi) {
    PsiInstance psi = input.normalized();
    if (static_cast<int>(phi.size()) != psi.h())
        throw InputError("map_psi_solution: phi arity mismatch");
    for (int a : phi)
        if (a < 1 || a > psi.n())
            throw InputError("map_psi_solution: phi index out of range");
    if (!psi_homomorphism_valid(psi, phi))
        throw InputError("map_psi_solution: phi is not a valid homomorphism");
    std::vector<int> s;
    for (int i = 0; i < psi.h(); ++i)
        s.push_back(wdmc.g.index(psi_vertex_zh(i, phi[i])));
    for (auto [i, j] : ordered_pattern_pairs(psi)) {
        s.push_back(wdmc.g.index(psi_vertex_xh(i, j, phi[i])));
        s.push_back(wdmc.g.index(psi_vertex_yh(i, j, phi[i])));
    }
    for (auto [i, j] : psi.pattern_edges)
        s.push_back(wdmc.g.index(psi_vertex_grid(i, j, phi[i], phi[j])));
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<int> extract_psi_solution(const PsiInstance& input,
                                      const WdmcInstance& wdmc,
                                      const std::vector<int>& solution) {
    PsiInstance psi = input.normalized();
    auto on_path_hat = [&](auto name_hat) -> int {
        // the unique hat index of this path present in the solution
        int found = -1;
        for (int a = 1; a <= psi.n(); ++a) {
            auto idx = wdmc.g.find(name_hat(a));
            if (idx && set_contains(solution, *idx)) {
                if (found >= 0)
                    throw InputError("extract_psi_solution: two hats on one path");
                found = a;
            }
        }
        if (found < 0)
            throw InputError("extract_psi_solution: path not hit");
        return found;
    };
    std::vector<int> phi(psi.h(), 0);
    for (int i = 0; i < psi.h(); ++i)
        phi[i] = on_path_hat([&](int a) { return psi_vertex_zh(i, a); });
    for (auto [i, j] : ordered_pattern_pairs(psi)) {
        int ax = on_path_hat([&](int a) { return psi_vertex_xh(i, j, a); });
        int ay = on_path_hat([&](int a) { return psi_vertex_yh(i, j, a); });
        if (ax != phi[i] || ay != phi[i])
            throw InputError("extract_psi_solution: path indices out of sync");
    }
    if (!psi_homomorphism_valid(psi, phi))
        throw InputError("extract_psi_solution: decoded map is not a homomorphism");
    return phi;
}

bool psi_homomorphism_valid(const PsiInstance& psi, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != psi.h())
        return false;
    for (int a : phi)
        if (a < 1 || a > psi.n())
            return false;
    for (auto [i, j] : psi.pattern_edges)
        if (!psi.host_adjacent(psi.parts[i][phi[i] - 1], psi.parts[j][phi[j] - 1]))
            return false;
    return true;
}

bool clique_selection_valid(const CliqueInstance& cl, const std::vector<int>& phi) {
    if (static_cast<int>(phi.size()) != cl.k())
        return false;
    for (int a : phi)
        if (a < 0 || a >= cl.n())
            return false;
    for (int i = 0; i < cl.k(); ++i)
        for (int j = i + 1; j < cl.k(); ++j)
            if (!cl.adjacent(cl.parts[i][phi[i]], cl.parts[j][phi[j]]))
                return false;
    return true;
}

PermCspInstance clique_to_permcsp(const CliqueInstance& input) {
    CliqueInstance cl = input.normalized();
    int k = cl.k(), n = cl.n();
    int nn = n * n;
    std::vector<std::pair<int, int>> ordered_pairs;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j)
                ordered_pairs.emplace_back(i, j);

    PermCspInstance csp;
    // variable layout: x_0..x_{k-1}, y per ordered pair, then their mirrors
    auto x_var = [&](int i) { return i; };
    auto y_var = [&](int i, int j) {
        auto it = std::find(ordered_pairs.begin(), ordered_pairs.end(),
                            std::make_pair(i, j));
        return k + static_cast<int>(it - ordered_pairs.begin());
    };
    int forward = k + static_cast<int>(ordered_pairs.size());
    auto mirror = [&](int v) { return v + forward; };

    for (int i = 0; i < k; ++i) {
        OrderedDomain d;
        for (int a = 0; a < n; ++a)
            d.values.push_back(std::to_string(a));
        csp.domains.push_back(d);
        (void)i;
    }
    for (auto [i, j] : ordered_pairs) {
        OrderedDomain d;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                d.values.push_back("(" + std::to_string(a) + "," + std::to_string(b) +
                                   ")");
        csp.domains.push_back(d);
        (void)i;
        (void)j;
    }
    for (int v = 0; v < forward; ++v) {
        OrderedDomain d = csp.domains[v];
        std::reverse(d.values.begin(), d.values.end());
        csp.domains.push_back(d);
    }
    for (int v = 0; v < forward; ++v) {
        PermutationConstraint rho;
        rho.var_a = v;
        rho.var_b = mirror(v);
        int sz = csp.domains[v].size();
        for (int a = 0; a < sz; ++a)
            rho.mapping.emplace_back(a, sz - 1 - a);
        csp.permutations.push_back(std::move(rho));
    }

    for (auto [i, j] : ordered_pairs) {
        // clause set 1, against the mirrored pair variable:
        // for 0 <= a < n-1: (x_i <= a) or (y_{i,j} >= (a+1, 0))
        std::vector<std::pair<int, int>> pairs1;
        for (int u = 0; u < n; ++u)
            for (int w = 0; w < nn; ++w) {
                bool ok = true;
                for (int a = 0; a + 1 < n && ok; ++a)
                    ok = (u <= a) || (w >= (a + 1) * n);
                if (ok)
                    pairs1.emplace_back(u, nn - 1 - w); // mirror position of w
            }
        DownclosedRelation r1;
        r1.var_a = x_var(i);
        r1.var_b = mirror(y_var(i, j));
        r1.frontier = DownclosedRelation::close_pairs(pairs1, n, nn);
        csp.downclosed.push_back(std::move(r1));

        // clause set 2, against the mirrored selector:
        // for 0 < a < n: (y_{i,j} <= (a-1, n-1)) or (x_i >= a)
        std::vector<std::pair<int, int>> pairs2;
        for (int w = 0; w < nn; ++w)
            for (int u = 0; u < n; ++u) {
                bool ok = true;
                for (int a = 1; a < n && ok; ++a)
                    ok = (w <= a * n - 1) || (u >= a);
                if (ok)
                    pairs2.emplace_back(w, n - 1 - u);
            }
        DownclosedRelation r2;
        r2.var_a = y_var(i, j);
        r2.var_b = mirror(x_var(i));
        r2.frontier = DownclosedRelation::close_pairs(pairs2, nn, n);
        csp.downclosed.push_back(std::move(r2));
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            PermutationConstraint pi;
            pi.var_a = y_var(i, j);
            pi.var_b = y_var(j, i);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (cl.adjacent(cl.parts[i][a], cl.parts[j][b]))
                        pi.mapping.emplace_back(a * n + b, b * n + a);
            csp.permutations.push_back(std::move(pi));
        }
    csp.validate();
    return csp;
}

std::optional<std::vector<int>> brute_force_psi(const PsiInstance& input,
                                                bool override_guard) {
    PsiInstance psi = input.normalized();
    double space = 1;
    for (int i = 0; i < psi.h(); ++i)
        space *= psi.n();
    if (!override_guard && space > 2e7)
        throw CapacityError("brute_force_psi: search space too large");
    std::vector<int> phi(psi.h(), 1);
    while (true) {
        if (psi_homomorphism_valid(psi, phi))
            return phi;
        int i = psi.h() - 1;
        while (i >= 0 && phi[i] == psi.n()) {
            phi[i] = 1;
            --i;
        }
        if (i < 0)
            return std::nullopt;
        ++phi[i];
    }
}

std::optional<std::vector<int>> brute_force_clique(const CliqueInstance& input,
                                                   bool override_guard) {
    CliqueInstance cl = input.normalized();
    double space = 1;
    for (int i = 0; i < cl.k(); ++i)
        space *= cl.n();
    if (!override_guard && space > 2e7)
        throw CapacityError("brute_force_clique: search space too large");
    std::vector<int> phi(cl.k(), 0);
    while (true) {
        if (clique_selection_valid(cl, phi))
            return phi;
        int i = cl.k() - 1;
        while (i >= 0 && phi[i] == cl.n() - 1) {
            phi[i] = 0;
            --i;
        }
        if (i < 0)
            return std::nullopt;
        ++phi[i];
    }
}

} // namespace dmc
