// Command-line front end: solvers, oracles, reductions, matrix analysis,
// instance generation, and claim verification over the shared JSON/text
// formats. Exit codes: 0 success/true, 1 negative answer, 2 capacity
// exceeded, 3 input error.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dmc/generate.hpp"
#include "dmc/json_io.hpp"
#include "dmc/pipeline.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::string path; // empty: stdout
    void write(const dmc::json& j) const {
        std::string text = j.dump(2) + "\n";
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path);
            if (!out)
                throw dmc::InputError("cannot open output file: " + path);
            out << text;
        }
    }
    void write_text(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path);
            if (!out)
                throw dmc::InputError("cannot open output file: " + path);
            out << text;
        }
    }
};

dmc::json provenance(const std::string& subcommand, std::uint64_t seed,
                     const std::vector<std::string>& flags) {
    return dmc::json{{"tool", "dmc"},
                     {"version", kVersion},
                     {"subcommand", subcommand},
                     {"seed", seed},
                     {"flags", flags}};
}

dmc::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw dmc::InputError("cannot open input file: " + path);
    dmc::json j;
    in >> j;
    return j;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw dmc::InputError("cannot open input file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"directed multicut toolbox"};
    app.require_subcommand(1);
    std::vector<std::string> raw_flags(argv + 1, argv + argc);

    std::string in_path, out_path;
    std::uint64_t seed = 0;

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "run the pipeline (or brute) solver");
    std::string solve_strategy = "pipeline";
    std::string covering = "oracle";
    int zeta = 2, rho = 8;
    bool no_brute_check = false;
    solve_cmd->add_option("--in", in_path, "instance JSON")->required();
    solve_cmd->add_option("--out", out_path, "output path (default stdout)");
    solve_cmd->add_option("--strategy", solve_strategy, "pipeline|brute")
        ->check(CLI::IsMember({"pipeline", "brute"}));
    solve_cmd->add_option("--covering", covering, "oracle|randomized shadow removal")
        ->check(CLI::IsMember({"oracle", "randomized"}));
    solve_cmd->add_option("--seed", seed, "seed for randomized parts");
    solve_cmd->add_option("--zeta", zeta, "irrelevant-vertex half grid size");
    solve_cmd->add_option("--rho", rho, "irrelevant-vertex division size");
    solve_cmd->add_flag("--no-brute-check", no_brute_check,
                        "fire the reduction rule without verification");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force ground truth");
    bool override_guard = false;
    oracle_cmd->add_option("--in", in_path, "instance JSON")->required();
    oracle_cmd->add_option("--out", out_path, "output path");
    oracle_cmd->add_flag("--force", override_guard, "override the capacity guard");

    // shadowrm
    auto* shadow_cmd = app.add_subcommand("shadowrm", "shadow-removal family");
    std::string shadow_strategy = "oracle";
    shadow_cmd->add_option("--in", in_path, "instance JSON")->required();
    shadow_cmd->add_option("--out", out_path, "output path");
    shadow_cmd->add_option("--strategy", shadow_strategy, "oracle|randomized")
        ->check(CLI::IsMember({"oracle", "randomized"}));
    shadow_cmd->add_option("--seed", seed, "seed (randomized strategy)");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "gadget reductions");
    reduce_cmd->require_subcommand(1);
    auto* psi2wdmc = reduce_cmd->add_subcommand("psi2wdmc", "PSI to weighted 2-pair");
    psi2wdmc->add_option("--in", in_path, "PSI JSON")->required();
    psi2wdmc->add_option("--out", out_path, "output path");
    auto* clique2csp = reduce_cmd->add_subcommand("clique2csp", "clique to CSP");
    clique2csp->add_option("--in", in_path, "clique JSON")->required();
    clique2csp->add_option("--out", out_path, "output path");

    // matrix analyze
    auto* matrix_cmd = app.add_subcommand("matrix", "0-1 matrix analysis");
    matrix_cmd->require_subcommand(1);
    auto* analyze = matrix_cmd->add_subcommand("analyze", "grid minors and grid rank");
    int grid_minor_k = 0, contract_c = 0;
    bool want_grid_rank = false;
    analyze->add_option("--in", in_path, "matrix text file")->required();
    analyze->add_option("--out", out_path, "output path");
    analyze->add_option("--grid-minor", grid_minor_k, "search a k-grid minor");
    analyze->add_flag("--grid-rank", want_grid_rank, "compute the grid rank");
    analyze->add_option("--contract", contract_c,
                        "grid minor or contraction sequence at this density");

    // csp solve
    auto* csp_cmd = app.add_subcommand("csp", "permutation CSP");
    csp_cmd->require_subcommand(1);
    auto* csp_solve = csp_cmd->add_subcommand("solve", "solve a CSP instance");
    bool csp_brute = false;
    csp_solve->add_option("--in", in_path, "CSP JSON")->required();
    csp_solve->add_option("--out", out_path, "output path");
    csp_solve->add_flag("--brute", csp_brute, "use the enumeration oracle");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "seeded instance generators");
    gen_cmd->require_subcommand(1);
    int gen_n = 4, gen_h = 3, gen_rows = 8, gen_cols = 8, gen_k = 3;
    double gen_density = 0.18;
    auto* gen_dmc_cmd = gen_cmd->add_subcommand("dmc", "random 3-pair instance");
    gen_dmc_cmd->add_option("--seed", seed, "seed")->required();
    gen_dmc_cmd->add_option("--n", gen_n, "internal vertex count");
    gen_dmc_cmd->add_option("--k", gen_k, "budget");
    gen_dmc_cmd->add_option("--density", gen_density, "arc probability");
    gen_dmc_cmd->add_option("--out", out_path, "output path");
    auto* gen_psi_cmd = gen_cmd->add_subcommand("psi", "random PSI instance");
    double psi_density = 0.5;
    gen_psi_cmd->add_option("--seed", seed, "seed")->required();
    gen_psi_cmd->add_option("--pattern", gen_h, "pattern vertices");
    gen_psi_cmd->add_option("--n", gen_n, "part size");
    gen_psi_cmd->add_option("--density", psi_density, "host edge probability");
    gen_psi_cmd->add_option("--out", out_path, "output path");
    auto* gen_matrix_cmd = gen_cmd->add_subcommand("matrix", "random 0-1 matrix");
    double matrix_density = 0.3;
    gen_matrix_cmd->add_option("--seed", seed, "seed")->required();
    gen_matrix_cmd->add_option("--rows", gen_rows, "rows");
    gen_matrix_cmd->add_option("--cols", gen_cols, "columns");
    gen_matrix_cmd->add_option("--density", matrix_density, "one probability");
    gen_matrix_cmd->add_option("--out", out_path, "output path");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a claim JSON");
    verify_cmd->add_option("--in", in_path, "claim JSON")->required();
    verify_cmd->add_option("--out", out_path, "output path");

    // verify-reduction
    auto* vred_cmd =
        app.add_subcommand("verify-reduction", "oracle round trip of psi2wdmc");
    bool vred_oracle = false;
    vred_cmd->add_option("--in", in_path, "PSI JSON")->required();
    vred_cmd->add_option("--out", out_path, "output path");
    vred_cmd->add_flag("--oracle", vred_oracle, "run both brute-force oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    try {
        Output out{out_path};
        if (*solve_cmd) {
            auto j = read_json(in_path);
            dmc::json result;
            result["provenance"] = provenance("solve", seed, raw_flags);
            if (dmc::json_is_weighted_instance(j)) {
                if (solve_strategy != "brute")
                    throw dmc::InputError(
                        "solve: weighted instances support --strategy brute only");
                auto inst = dmc::wdmc_from_json(j);
                auto s = dmc::brute_force_wdmc(inst);
                result["satisfiable"] = s.has_value();
                result["solution"] =
                    s ? dmc::vertex_set_to_json(inst.g, *s) : dmc::json(nullptr);
                out.write(result);
                return s ? 0 : 1;
            }
            auto inst = dmc::dmc_from_json(j);
            std::optional<std::vector<int>> s;
            if (solve_strategy == "brute") {
                s = dmc::brute_force_dmc(inst);
            } else {
                dmc::PipelineConfig cfg;
                cfg.iv.zeta = zeta;
                cfg.iv.rho = rho;
                cfg.iv.brute_check = !no_brute_check;
                cfg.covering = covering == "oracle" ? dmc::CoveringStrategy::Oracle
                                                    : dmc::CoveringStrategy::Randomized;
                s = dmc::solve_dmc(inst, cfg, seed);
            }
            result["satisfiable"] = s.has_value();
            result["solution"] =
                s ? dmc::vertex_set_to_json(inst.g, *s) : dmc::json(nullptr);
            out.write(result);
            return s ? 0 : 1;
        }
        if (*oracle_cmd) {
            auto j = read_json(in_path);
            dmc::json result;
            result["provenance"] = provenance("oracle", seed, raw_flags);
            std::optional<std::vector<int>> s;
            if (dmc::json_is_weighted_instance(j)) {
                auto inst = dmc::wdmc_from_json(j);
                s = dmc::brute_force_wdmc(inst, override_guard);
                result["solution"] =
                    s ? dmc::vertex_set_to_json(inst.g, *s) : dmc::json(nullptr);
            } else {
                auto inst = dmc::dmc_from_json(j);
                s = dmc::brute_force_dmc(inst, override_guard);
                result["solution"] =
                    s ? dmc::vertex_set_to_json(inst.g, *s) : dmc::json(nullptr);
            }
            result["satisfiable"] = s.has_value();
            out.write(result);
            return s ? 0 : 1;
        }
        if (*shadow_cmd) {
            auto inst = dmc::dmc_from_json(read_json(in_path));
            auto strat = shadow_strategy == "oracle" ? dmc::CoveringStrategy::Oracle
                                                     : dmc::CoveringStrategy::Randomized;
            auto family = dmc::covering_family(inst, strat, seed);
            dmc::json result;
            result["provenance"] = provenance("shadowrm", seed, raw_flags);
            result["family"] = dmc::json::array();
            result["instances"] = dmc::json::array();
            for (const auto& z : family.sets) {
                result["family"].push_back(dmc::vertex_set_to_json(inst.g, z));
                result["instances"].push_back(
                    dmc::dmc_to_json(dmc::bypass_instance(inst, z)));
            }
            out.write(result);
            return 0;
        }
        if (*psi2wdmc) {
            auto psi = dmc::psi_from_json(read_json(in_path));
            auto inst = dmc::psi_to_wdmc(psi);
            auto result = dmc::wdmc_to_json(inst);
            result["provenance"] = provenance("reduce psi2wdmc", seed, raw_flags);
            out.write(result);
            return 0;
        }
        if (*clique2csp) {
            auto cl = dmc::clique_from_json(read_json(in_path));
            auto csp = dmc::clique_to_permcsp(cl);
            auto result = dmc::csp_to_json(csp);
            result["provenance"] = provenance("reduce clique2csp", seed, raw_flags);
            out.write(result);
            return 0;
        }
        if (*analyze) {
            auto m = dmc::ZeroOneMatrix::parse(read_text(in_path));
            dmc::json result;
            result["provenance"] = provenance("matrix analyze", seed, raw_flags);
            bool negative = false;
            if (grid_minor_k > 0) {
                auto div = dmc::find_grid_minor(m, grid_minor_k);
                if (div) {
                    result["grid_minor"] = dmc::json{{"k", grid_minor_k},
                                                     {"row_bounds", div->row_bounds},
                                                     {"col_bounds", div->col_bounds}};
                } else {
                    result["grid_minor"] = nullptr;
                    negative = true;
                }
            }
            if (want_grid_rank)
                result["grid_rank"] = dmc::grid_rank(m);
            if (contract_c > 0) {
                auto r = dmc::gridminor_or_contraction(m, std::max(grid_minor_k, 2),
                                                       contract_c);
                if (std::holds_alternative<dmc::Division>(r)) {
                    const auto& div = std::get<dmc::Division>(r);
                    result["contract"] = dmc::json{{"outcome", "grid_minor"},
                                                   {"row_bounds", div.row_bounds},
                                                   {"col_bounds", div.col_bounds}};
                } else {
                    const auto& seq = std::get<dmc::MatrixContraction>(r);
                    dmc::json steps = dmc::json::array();
                    for (const auto& st : seq.steps)
                        steps.push_back(dmc::json{
                            {"axis",
                             st.axis == dmc::ContractionStep::Axis::Row ? "row" : "col"},
                            {"index", st.index}});
                    result["contract"] = dmc::json{{"outcome", "contraction"},
                                                   {"width", seq.width},
                                                   {"steps", steps}};
                }
            }
            out.write(result);
            return negative ? 1 : 0;
        }
        if (*csp_solve) {
            auto inst = dmc::csp_from_json(read_json(in_path));
            auto val = csp_brute ? dmc::brute_force_csp(inst) : dmc::solve(inst);
            dmc::json result;
            result["provenance"] = provenance("csp solve", seed, raw_flags);
            result["satisfiable"] = val.has_value();
            if (val) {
                dmc::json assignment = dmc::json::array();
                for (int v = 0; v < inst.variables(); ++v)
                    assignment.push_back(inst.domains[v].values[(*val)[v]]);
                result["valuation"] = assignment;
            } else {
                result["valuation"] = nullptr;
            }
            out.write(result);
            return val ? 0 : 1;
        }
        if (*gen_dmc_cmd) {
            auto inst = dmc::gen_dmc(seed, gen_n, gen_density, gen_k);
            auto result = dmc::dmc_to_json(inst);
            result["provenance"] = provenance("gen dmc", seed, raw_flags);
            out.write(result);
            return 0;
        }
        if (*gen_psi_cmd) {
            auto psi = dmc::gen_psi(seed, gen_h, gen_n, psi_density);
            auto result = dmc::psi_to_json(psi);
            result["provenance"] = provenance("gen psi", seed, raw_flags);
            out.write(result);
            return 0;
        }
        if (*gen_matrix_cmd) {
            auto m = dmc::gen_matrix(seed, gen_rows, gen_cols, matrix_density);
            out.write_text(m.to_text());
            return 0;
        }
        if (*verify_cmd) {
            auto j = read_json(in_path);
            std::string kind = j.value("kind", "");
            bool ok = false;
            if (kind == "solution") {
                if (dmc::json_is_weighted_instance(j["instance"])) {
                    auto inst = dmc::wdmc_from_json(j["instance"]);
                    ok = dmc::is_solution(inst,
                                          dmc::vertex_set_from_json(inst.g, j["solution"]));
                } else {
                    auto inst = dmc::dmc_from_json(j["instance"]);
                    ok = dmc::is_solution(inst,
                                          dmc::vertex_set_from_json(inst.g, j["solution"]));
                }
            } else if (kind == "augmentation") {
                auto g = dmc::graph_from_json(j["graph"]);
                int s = g.index(j["s"].get<std::string>());
                int t = g.index(j["t"].get<std::string>());
                auto z = dmc::vertex_set_from_json(g, j["separator"]);
                auto aug = dmc::augmentation_from_json(g, j["augmentation"]);
                int q = j.value("q", 2), p = j.value("p", 1);
                bool compatible = dmc::is_compatible_vertex(g, aug.added_arcs, z, s, t);
                bool right_value =
                    !aug.flow.infinite &&
                    aug.flow.value() == static_cast<int>(z.size());
                bool hits = true;
                for (const auto& path : aug.flow.paths) {
                    int cnt = 0;
                    for (int v : path)
                        cnt += dmc::set_contains(z, v);
                    hits &= (cnt == 1);
                }
                ok = compatible && right_value && hits &&
                     dmc::verify_soybean_partition(g, aug, q, p);
            } else if (kind == "division") {
                auto m = dmc::ZeroOneMatrix::parse(j["matrix"].get<std::string>());
                dmc::Division div{j["division"]["row_bounds"].get<std::vector<int>>(),
                                  j["division"]["col_bounds"].get<std::vector<int>>()};
                if (j.contains("rank_k"))
                    ok = dmc::division_is_rank_division(m, div, j["rank_k"].get<int>());
                else
                    ok = dmc::division_is_grid_minor(m, div);
            } else {
                throw dmc::InputError("verify: unknown claim kind: " + kind);
            }
            dmc::json result;
            result["provenance"] = provenance("verify", seed, raw_flags);
            result["kind"] = kind;
            result["valid"] = ok;
            out.write(result);
            return ok ? 0 : 1;
        }
        if (*vred_cmd) {
            auto psi = dmc::psi_from_json(read_json(in_path));
            auto inst = dmc::psi_to_wdmc(psi);
            dmc::json result;
            result["provenance"] = provenance("verify-reduction", seed, raw_flags);
            result["k_prime"] = inst.k;
            result["W"] = inst.budget;
            bool ok = true;
            if (vred_oracle) {
                auto phi = dmc::brute_force_psi(psi);
                auto sol = dmc::brute_force_wdmc(inst);
                result["psi_satisfiable"] = phi.has_value();
                result["wdmc_satisfiable"] = sol.has_value();
                ok = phi.has_value() == sol.has_value();
                if (phi) {
                    auto mapped = dmc::map_psi_solution(psi, inst, *phi);
                    ok = ok && dmc::is_solution(inst, mapped);
                    ok = ok && dmc::extract_psi_solution(psi, inst, mapped) == *phi;
                }
                if (sol)
                    ok = ok && dmc::psi_homomorphism_valid(
                                   psi, dmc::extract_psi_solution(psi, inst, *sol));
            }
            result["equivalent"] = ok;
            out.write(result);
            return ok ? 0 : 1;
        }
        throw dmc::InputError("no subcommand handled");
    } catch (const dmc::CapacityError& e) {
        std::cerr << "capacity: " << e.what() << "\n";
        return 2;
    } catch (const dmc::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const dmc::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
