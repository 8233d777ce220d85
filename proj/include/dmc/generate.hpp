#pragma once

#include <cstdint>

#include "dmc/matrixgrid.hpp"
#include "dmc/multicut.hpp"
#include "dmc/reductions.hpp"

namespace dmc {

/// Seeded random three-pair instance: `internal` non-terminal vertices
/// v0..v{internal-1}, six terminals, arcs with probability `density` between
/// all ordered pairs except the three forbidden s_i -> t_i shortcuts.
DmcInstance gen_dmc(std::uint64_t seed, int internal = 4, double density = 0.18,
                    int k = 3);

/// Seeded random PSI instance within h <= 3, k <= 3, n <= 3.
PsiInstance gen_psi(std::uint64_t seed, int h = 3, int n = 3, double density = 0.5);

ZeroOneMatrix gen_matrix(std::uint64_t seed, int rows = 8, int cols = 8,
                         double density = 0.3);

CliqueInstance gen_clique(std::uint64_t seed, int k = 3, int n = 3,
                          double density = 0.5);

} // namespace dmc
