#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dmc/multicut.hpp"
#include "dmc/permcsp.hpp"

namespace dmc {

/// Partitioned subgraph isomorphism: host graph, pattern graph, one host
/// part per pattern vertex. normalize() pads parts with fresh isolated host
/// vertices to a common size n.
struct PsiInstance {
    std::vector<std::pair<int, int>> pattern_edges;   // over 0..h-1, u < v
    std::vector<std::vector<std::string>> parts;      // per pattern vertex
    std::set<std::pair<std::string, std::string>> host_edges; // normalized u < v

    int h() const { return static_cast<int>(parts.size()); }
    int n() const; // common part size (after normalize)
    int k() const { return static_cast<int>(pattern_edges.size()); }

    bool host_adjacent(const std::string& u, const std::string& v) const;
    PsiInstance normalized() const; // pads parts, sorts, validates
    void validate() const;          // equal parts, no isolated pattern vertex
};

/// Multicolored clique: k independent parts of equal size.
struct CliqueInstance {
    std::vector<std::vector<std::string>> parts;
    std::set<std::pair<std::string, std::string>> edges; // normalized u < v

    int k() const { return static_cast<int>(parts.size()); }
    int n() const;
    bool adjacent(const std::string& u, const std::string& v) const;
    CliqueInstance normalized() const;
    void validate() const; // parts independent, equal size
};

/// The weighted two-pair instance: X/Y/Z paths, synchronization arcs into
/// the Z paths, one n x n grid per pattern edge, and the stated weights.
WdmcInstance psi_to_wdmc(const PsiInstance& psi);

/// phi maps each pattern vertex to an index in 1..n. Returns the vertex set
/// {xh, yh at phi(i)} u {zh^i_phi(i)} u {grid p at (phi(i), phi(j))} as
/// indices into the reduced instance; throws InputError on an invalid phi.
std::vector<int> map_psi_solution(const PsiInstance& psi, const WdmcInstance& wdmc,
                                  const std::vector<int>& phi);

/// Reads phi back off a solution of the reduced instance. Throws InputError
/// if the solution violates the exactly-one-per-path structure or decodes to
/// a non-homomorphism.
std::vector<int> extract_psi_solution(const PsiInstance& psi, const WdmcInstance& wdmc,
                                      const std::vector<int>& solution);

/// Appendix-style clique encoding: selector variables x_i over [n], pair
/// variables y_{i,j} over [n] x [n] (lexicographic), coordinate-projection
/// clauses as downclosed relations against mirror variables, and swap
/// permutation constraints restricted to host edges.
PermCspInstance clique_to_permcsp(const CliqueInstance& cl);

std::optional<std::vector<int>> brute_force_psi(const PsiInstance& psi,
                                                bool override_guard = false);
std::optional<std::vector<int>> brute_force_clique(const CliqueInstance& cl,
                                                   bool override_guard = false);

bool psi_homomorphism_valid(const PsiInstance& psi, const std::vector<int>& phi);
bool clique_selection_valid(const CliqueInstance& cl, const std::vector<int>& phi);

// reduction vertex naming (shared with tests and the CLI verifier)
std::string psi_vertex_z(int i, int a);
std::string psi_vertex_zh(int i, int a);
std::string psi_vertex_x(int i, int j, int a);
std::string psi_vertex_xh(int i, int j, int a);
std::string psi_vertex_y(int i, int j, int a);
std::string psi_vertex_yh(int i, int j, int a);
std::string psi_vertex_grid(int i, int j, int a, int b);

} // namespace dmc
