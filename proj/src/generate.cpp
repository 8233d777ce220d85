#include "dmc/generate.hpp"

#include <string>

#include "dmc/rng.hpp"

namespace dmc {

DmcInstance gen_dmc(std::uint64_t seed, int internal, double density, int k) {
    Rng rng = Rng::stream(seed, 0x646d63);
    std::vector<Digraph::VertexSpec> vs;
    std::vector<std::string> terms{"s1", "s2", "s3", "t1", "t2", "t3"};
    for (const auto& t : terms)
        vs.push_back({t, false, 1});
    for (int i = 0; i < internal; ++i)
        vs.push_back({"v" + std::to_string(i), true, 1});
    std::vector<std::string> all;
    for (const auto& v : vs)
        all.push_back(v.id);
    std::sort(all.begin(), all.end());
    std::vector<Digraph::ArcSpec> as;
    for (const auto& u : all)
        for (const auto& v : all) {
            if (u == v)
                continue;
            bool forbidden = (u == "s1" && v == "t1") || (u == "s2" && v == "t2") ||
                             (u == "s3" && v == "t3");
            if (forbidden)
                continue;
            if (rng.coin(density))
                as.push_back({u, v, true});
        }
    DmcInstance inst;
    inst.g = Digraph(std::move(vs), as);
    inst.pairs = {{{inst.g.index("s1"), inst.g.index("t1")},
                   {inst.g.index("s2"), inst.g.index("t2")},
                   {inst.g.index("s3"), inst.g.index("t3")}}};
    inst.k = k;
    inst.undeletable = inst.g.indices_of(terms);
    inst.validate();
    return inst;
}

PsiInstance gen_psi(std::uint64_t seed, int h, int n, double density) {
    Rng rng = Rng::stream(seed, 0x707369);
    PsiInstance psi;
    if (h < 2)
        throw InputError("gen_psi: h must be >= 2");
    // pattern: start with a path covering all vertices, then extra edges
    for (int i = 0; i + 1 < h; ++i)
        psi.pattern_edges.emplace_back(i, i + 1);
    for (int i = 0; i < h; ++i)
        for (int j = i + 2; j < h; ++j)
            if (rng.coin(0.5))
                psi.pattern_edges.emplace_back(i, j);
    std::sort(psi.pattern_edges.begin(), psi.pattern_edges.end());
    psi.parts.resize(h);
    for (int i = 0; i < h; ++i)
        for (int a = 0; a < n; ++a)
            psi.parts[i].push_back("u" + std::to_string(i) + "_" + std::to_string(a));
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (rng.coin(density))
                        psi.host_edges.insert({psi.parts[i][a], psi.parts[j][b]});
    return psi.normalized();
}

ZeroOneMatrix gen_matrix(std::uint64_t seed, int rows, int cols, double density) {
    Rng rng = Rng::stream(seed, 0x6d7478);
    ZeroOneMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng.coin(density))
                m.set(r, c, 1);
    return m;
}

CliqueInstance gen_clique(std::uint64_t seed, int k, int n, double density) {
    Rng rng = Rng::stream(seed, 0x636c71);
    CliqueInstance cl;
    cl.parts.resize(k);
    for (int i = 0; i < k; ++i)
        for (int a = 0; a < n; ++a)
            cl.parts[i].push_back("w" + std::to_string(i) + "_" + std::to_string(a));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    if (rng.coin(density))
                        cl.edges.insert(cl.parts[i][a] < cl.parts[j][b]
                                            ? std::make_pair(cl.parts[i][a], cl.parts[j][b])
                                            : std::make_pair(cl.parts[j][b], cl.parts[i][a]));
    return cl.normalized();
}

} // namespace dmc
