// End-to-end checks of the installed command-line surface: exit codes,
// output determinism, and the documented subcommands. The binary path
// arrives through the DMC_CLI_PATH compile definition.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef DMC_CLI_PATH
#error "DMC_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(DMC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

} // namespace

TEST_CASE("gen outputs are deterministic and loadable") {
    auto a = run("gen dmc --seed 42 --n 4");
    auto b = run("gen dmc --seed 42 --n 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    auto c = run("gen dmc --seed 43 --n 4");
    CHECK(a.out != c.out);

    auto m = run("gen matrix --seed 7 --rows 6 --cols 6");
    CHECK(m.exit_code == 0);
    CHECK(m.out == run("gen matrix --seed 7 --rows 6 --cols 6").out);
}

TEST_CASE("oracle and solve agree across the CLI on seeded instances") {
    for (int seed = 1; seed <= 6; ++seed) {
        auto gen = run("gen dmc --seed " + std::to_string(seed) + " --n 4 --out "
                       "cli_tmp_inst.json");
        REQUIRE(gen.exit_code == 0);
        auto oracle = run("oracle --in cli_tmp_inst.json");
        auto solve = run("solve --in cli_tmp_inst.json");
        CHECK(oracle.exit_code == solve.exit_code);
        CHECK((oracle.exit_code == 0 || oracle.exit_code == 1));
        // byte-identical reruns
        CHECK(run("solve --in cli_tmp_inst.json").out == solve.out);
    }
    std::remove("cli_tmp_inst.json");
}

TEST_CASE("oracle on the three-disjoint-paths fixture") {
    auto inst = temp_file("threepaths.json", R"({
      "vertices": [
        {"id":"s1"},{"id":"s2"},{"id":"s3"},{"id":"t1"},{"id":"t2"},{"id":"t3"},
        {"id":"a1"},{"id":"a2"},{"id":"a3"}],
      "arcs": [
        {"from":"s1","to":"a1"},{"from":"a1","to":"t1"},
        {"from":"s2","to":"a2"},{"from":"a2","to":"t2"},
        {"from":"s3","to":"a3"},{"from":"a3","to":"t3"}],
      "terminal_pairs": [["s1","t1"],["s2","t2"],["s3","t3"]],
      "k": 3,
      "undeletable": ["s1","s2","s3","t1","t2","t3"]})");
    auto res = run("oracle --in " + inst);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"a1\"") != std::string::npos);
    CHECK(res.out.find("\"a2\"") != std::string::npos);
    CHECK(res.out.find("\"a3\"") != std::string::npos);
    std::remove(inst.c_str());
}

TEST_CASE("matrix analyze exit codes") {
    std::string id8;
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c)
            id8.push_back(r == c ? '1' : '0');
        id8.push_back('\n');
    }
    auto path = temp_file("id8.txt", id8);
    auto res = run("matrix analyze --in " + path + " --grid-minor 2");
    CHECK(res.exit_code == 1); // absent
    auto res2 = run("matrix analyze --in " + path + " --grid-rank");
    CHECK(res2.exit_code == 0);
    CHECK(res2.out.find("\"grid_rank\": 1") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("csp solve and reduce clique2csp chain through files") {
    auto clique = temp_file("clique.json", R"({
      "parts": {"0": ["a0", "a1"], "1": ["b0", "b1"]},
      "edges": [["a0", "b1"]]})");
    auto red = run("reduce clique2csp --in " + clique + " --out cli_tmp_csp.json");
    REQUIRE(red.exit_code == 0);
    auto solve = run("csp solve --in cli_tmp_csp.json");
    CHECK(solve.exit_code == 0);
    auto brute = run("csp solve --in cli_tmp_csp.json --brute");
    CHECK(brute.exit_code == 0);
    std::remove(clique.c_str());
    std::remove("cli_tmp_csp.json");
}

TEST_CASE("verify subcommand on a solution claim") {
    auto gen = run("gen dmc --seed 5 --n 4 --out cli_tmp_v.json");
    REQUIRE(gen.exit_code == 0);
    std::ifstream f("cli_tmp_v.json");
    std::string inst((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
    auto claim = temp_file("claim.json", std::string(R"({"kind":"solution",)") +
                                             "\"instance\":" + inst +
                                             R"(,"solution":[]})");
    auto res = run("verify --in " + claim);
    CHECK((res.exit_code == 0 || res.exit_code == 1));
    std::remove("cli_tmp_v.json");
    std::remove(claim.c_str());
}

TEST_CASE("verify-reduction round trips a tiny PSI instance") {
    auto psi = temp_file("psi.json", R"({
      "pattern_edges": [[0, 1]],
      "parts": {"0": ["u0", "u1"], "1": ["v0", "v1"]},
      "host_edges": [["u0", "v1"]]})");
    auto res = run("verify-reduction --in " + psi + " --oracle");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"equivalent\": true") != std::string::npos);
    std::remove(psi.c_str());
}

TEST_CASE("shadowrm emits a family and bypassed instances") {
    auto gen = run("gen dmc --seed 9 --n 4 --out cli_tmp_s.json");
    REQUIRE(gen.exit_code == 0);
    auto res = run("shadowrm --in cli_tmp_s.json --strategy oracle");
    CHECK(res.exit_code == 0);
    auto res2 = run("shadowrm --in cli_tmp_s.json --strategy randomized --seed 3");
    CHECK(res2.exit_code == 0);
    CHECK(run("shadowrm --in cli_tmp_s.json --strategy randomized --seed 3").out ==
          res2.out);
    std::remove("cli_tmp_s.json");
}

TEST_CASE("bad input exits with the input-error code") {
    auto bad = temp_file("bad.json", "{\"vertices\": 3}");
    auto res = run("solve --in " + bad);
    CHECK(res.exit_code == 3);
    std::remove(bad.c_str());
    CHECK(run("solve --in does_not_exist.json").exit_code == 3);
}
