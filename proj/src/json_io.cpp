#include "dmc/json_io.hpp"

#include <algorithm>

namespace dmc {

namespace {

void require(bool cond, const std::string& what) {
    if (!cond)
        throw InputError("json: " + what);
}

} // namespace

json graph_to_json(const Digraph& g) {
    json verts = json::array();
    for (int v = 0; v < g.n(); ++v) {
        json jv{{"id", g.id(v)}, {"deletable", g.deletable(v)}};
        if (g.weight(v) != 1)
            jv["weight"] = g.weight(v);
        verts.push_back(jv);
    }
    json arcs = json::array();
    for (auto [u, v] : g.arcs()) {
        json ja{{"from", g.id(u)}, {"to", g.id(v)}};
        if (!g.arc_deletable(u, v))
            ja["deletable"] = false;
        arcs.push_back(ja);
    }
    return json{{"vertices", verts}, {"arcs", arcs}};
}

Digraph graph_from_json(const json& j) {
    require(j.contains("vertices") && j["vertices"].is_array(), "missing vertices");
    std::vector<Digraph::VertexSpec> vs;
    for (const auto& jv : j["vertices"]) {
        require(jv.contains("id"), "vertex without id");
        Digraph::VertexSpec spec;
        spec.id = jv["id"].get<std::string>();
        spec.deletable = jv.value("deletable", true);
        spec.weight = jv.value("weight", 1LL);
        vs.push_back(spec);
    }
    std::vector<Digraph::ArcSpec> as;
    for (const auto& ja : j.value("arcs", json::array())) {
        require(ja.contains("from") && ja.contains("to"), "arc without endpoints");
        as.push_back({ja["from"].get<std::string>(), ja["to"].get<std::string>(),
                      ja.value("deletable", true)});
    }
    return Digraph(std::move(vs), as);
}

bool json_is_weighted_instance(const json& j) { return j.contains("W"); }

json dmc_to_json(const DmcInstance& inst) {
    json j = graph_to_json(inst.g);
    json pairs = json::array();
    for (const auto& [s, t] : inst.pairs)
        pairs.push_back(json::array({inst.g.id(s), inst.g.id(t)}));
    j["terminal_pairs"] = pairs;
    j["k"] = inst.k;
    j["undeletable"] = inst.g.ids_of(inst.undeletable);
    return j;
}

DmcInstance dmc_from_json(const json& j) {
    DmcInstance inst;
    Digraph raw = graph_from_json(j);
    require(j.contains("terminal_pairs") && j["terminal_pairs"].size() == 3,
            "instance needs exactly 3 terminal pairs");
    require(j.contains("k"), "instance needs k");
    // normalize: undeletable set = listed set, plus flag-carried, plus terminals
    std::vector<std::string> und;
    for (const auto& s : j.value("undeletable", json::array()))
        und.push_back(s.get<std::string>());
    for (int v = 0; v < raw.n(); ++v)
        if (!raw.deletable(v))
            und.push_back(raw.id(v));
    for (const auto& p : j["terminal_pairs"]) {
        require(p.size() == 2, "terminal pair must have two entries");
        und.push_back(p[0].get<std::string>());
        und.push_back(p[1].get<std::string>());
    }
    std::sort(und.begin(), und.end());
    und.erase(std::unique(und.begin(), und.end()), und.end());
    std::vector<Digraph::VertexSpec> vs;
    for (int v = 0; v < raw.n(); ++v) {
        auto spec = raw.vertex_spec(v);
        spec.deletable = !std::binary_search(und.begin(), und.end(), spec.id);
        vs.push_back(spec);
    }
    inst.g = Digraph(std::move(vs), raw.arc_specs());
    for (int i = 0; i < 3; ++i)
        inst.pairs[i] = {inst.g.index(j["terminal_pairs"][i][0].get<std::string>()),
                         inst.g.index(j["terminal_pairs"][i][1].get<std::string>())};
    inst.k = j["k"].get<int>();
    inst.undeletable = inst.g.indices_of(und);
    inst.validate();
    return inst;
}

json wdmc_to_json(const WdmcInstance& inst) {
    json j = graph_to_json(inst.g);
    json pairs = json::array();
    for (const auto& [s, t] : inst.pairs)
        pairs.push_back(json::array({inst.g.id(s), inst.g.id(t)}));
    j["terminal_pairs"] = pairs;
    j["k"] = inst.k;
    j["W"] = inst.budget;
    return j;
}

WdmcInstance wdmc_from_json(const json& j) {
    WdmcInstance inst;
    inst.g = graph_from_json(j);
    require(j.contains("terminal_pairs") && j["terminal_pairs"].size() == 2,
            "weighted instance needs exactly 2 terminal pairs");
    require(j.contains("k") && j.contains("W"), "weighted instance needs k and W");
    for (int i = 0; i < 2; ++i)
        inst.pairs[i] = {inst.g.index(j["terminal_pairs"][i][0].get<std::string>()),
                         inst.g.index(j["terminal_pairs"][i][1].get<std::string>())};
    inst.k = j["k"].get<int>();
    inst.budget = j["W"].get<long long>();
    inst.validate();
    return inst;
}

json csp_to_json(const PermCspInstance& inst) {
    json vars = json::array();
    for (const auto& d : inst.domains)
        vars.push_back(json{{"domain", d.values}});
    json cons = json::array();
    for (const auto& r : inst.downclosed)
        cons.push_back(json{{"type", "downclosed"},
                            {"vars", json::array({r.var_a, r.var_b})},
                            {"frontier", r.frontier}});
    for (const auto& p : inst.permutations) {
        json pairs = json::array();
        for (auto [a, b] : p.mapping)
            pairs.push_back(json::array({a, b}));
        cons.push_back(json{{"type", "permutation"},
                            {"vars", json::array({p.var_a, p.var_b})},
                            {"pairs", pairs}});
    }
    return json{{"variables", vars}, {"constraints", cons}};
}

PermCspInstance csp_from_json(const json& j) {
    PermCspInstance inst;
    require(j.contains("variables"), "csp needs variables");
    for (const auto& jv : j["variables"]) {
        OrderedDomain d;
        for (const auto& val : jv.value("domain", json::array()))
            d.values.push_back(val.is_string() ? val.get<std::string>() : val.dump());
        inst.domains.push_back(std::move(d));
    }
    for (const auto& jc : j.value("constraints", json::array())) {
        require(jc.contains("type") && jc.contains("vars") && jc["vars"].size() == 2,
                "constraint needs type and a variable pair");
        int a = jc["vars"][0].get<int>(), b = jc["vars"][1].get<int>();
        require(a >= 0 && a < inst.variables() && b >= 0 && b < inst.variables(),
                "constraint variable out of range");
        std::string type = jc["type"].get<std::string>();
        if (type == "downclosed") {
            DownclosedRelation r;
            r.var_a = a;
            r.var_b = b;
            if (jc.contains("frontier")) {
                r.frontier = jc["frontier"].get<std::vector<int>>();
            } else {
                std::vector<std::pair<int, int>> pairs;
                for (const auto& pr : jc.value("pairs", json::array()))
                    pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
                r.frontier = DownclosedRelation::close_pairs(
                    pairs, inst.domains[a].size(), inst.domains[b].size());
            }
            inst.downclosed.push_back(std::move(r));
        } else if (type == "permutation") {
            PermutationConstraint p;
            p.var_a = a;
            p.var_b = b;
            for (const auto& pr : jc.value("pairs", json::array()))
                p.mapping.emplace_back(pr[0].get<int>(), pr[1].get<int>());
            inst.permutations.push_back(std::move(p));
        } else {
            throw InputError("json: unknown constraint type: " + type);
        }
    }
    inst.validate();
    return inst;
}

json psi_to_json(const PsiInstance& psi) {
    json edges = json::array();
    for (auto [u, v] : psi.pattern_edges)
        edges.push_back(json::array({u, v}));
    json parts = json::object();
    for (int i = 0; i < psi.h(); ++i)
        parts[std::to_string(i)] = psi.parts[i];
    json host = json::array();
    for (const auto& [u, v] : psi.host_edges)
        host.push_back(json::array({u, v}));
    return json{{"pattern_edges", edges}, {"parts", parts}, {"host_edges", host}};
}

PsiInstance psi_from_json(const json& j) {
    PsiInstance psi;
    require(j.contains("pattern_edges") && j.contains("parts"), "psi needs edges+parts");
    for (const auto& e : j["pattern_edges"]) {
        int u = e[0].get<int>(), v = e[1].get<int>();
        psi.pattern_edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(psi.pattern_edges.begin(), psi.pattern_edges.end());
    psi.pattern_edges.erase(
        std::unique(psi.pattern_edges.begin(), psi.pattern_edges.end()),
        psi.pattern_edges.end());
    psi.parts.resize(j["parts"].size());
    for (const auto& [key, val] : j["parts"].items()) {
        int i = std::stoi(key);
        require(i >= 0 && i < static_cast<int>(psi.parts.size()),
                "psi parts must be indexed 0..h-1");
        for (const auto& s : val)
            psi.parts[i].push_back(s.get<std::string>());
    }
    for (const auto& e : j.value("host_edges", json::array())) {
        std::string u = e[0].get<std::string>(), v = e[1].get<std::string>();
        psi.host_edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }
    return psi.normalized();
}

json clique_to_json(const CliqueInstance& cl) {
    json parts = json::object();
    for (int i = 0; i < cl.k(); ++i)
        parts[std::to_string(i)] = cl.parts[i];
    json edges = json::array();
    for (const auto& [u, v] : cl.edges)
        edges.push_back(json::array({u, v}));
    return json{{"parts", parts}, {"edges", edges}};
}

CliqueInstance clique_from_json(const json& j) {
    CliqueInstance cl;
    require(j.contains("parts"), "clique needs parts");
    cl.parts.resize(j["parts"].size());
    for (const auto& [key, val] : j["parts"].items()) {
        int i = std::stoi(key);
        require(i >= 0 && i < static_cast<int>(cl.parts.size()),
                "clique parts must be indexed 0..k-1");
        for (const auto& s : val)
            cl.parts[i].push_back(s.get<std::string>());
    }
    for (const auto& e : j.value("edges", json::array())) {
        std::string u = e[0].get<std::string>(), v = e[1].get<std::string>();
        cl.edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }
    return cl.normalized();
}

json augmentation_to_json(const Digraph& g, const Augmentation& aug) {
    json arcs = json::array();
    for (auto [u, v] : aug.added_arcs)
        arcs.push_back(json::array({g.id(u), g.id(v)}));
    json flow = json::array();
    for (const auto& p : aug.flow.paths)
        flow.push_back(g.ids_of(p));
    json part = json::array();
    for (const auto& b : aug.partition)
        part.push_back(g.ids_of(b));
    return json{{"added_arcs", arcs}, {"flow", flow}, {"partition", part}};
}

Augmentation augmentation_from_json(const Digraph& g, const json& j) {
    Augmentation aug;
    for (const auto& e : j.value("added_arcs", json::array()))
        aug.added_arcs.emplace_back(g.index(e[0].get<std::string>()),
                                    g.index(e[1].get<std::string>()));
    for (const auto& p : j.value("flow", json::array())) {
        std::vector<int> path;
        for (const auto& s : p)
            path.push_back(g.index(s.get<std::string>()));
        aug.flow.paths.push_back(path);
    }
    for (const auto& b : j.value("partition", json::array())) {
        std::vector<int> block;
        for (const auto& s : b)
            block.push_back(g.index(s.get<std::string>()));
        std::sort(block.begin(), block.end());
        aug.partition.push_back(block);
    }
    return aug;
}

json vertex_set_to_json(const Digraph& g, const std::vector<int>& s) {
    return json(g.ids_of(s));
}

std::vector<int> vertex_set_from_json(const Digraph& g, const json& j) {
    std::vector<std::string> ids;
    for (const auto& s : j)
        ids.push_back(s.get<std::string>());
    return g.indices_of(ids);
}

} // namespace dmc
