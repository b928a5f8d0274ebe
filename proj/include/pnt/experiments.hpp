#pragma once

#include <vector>

#include "pnt/report.hpp"

namespace pnt {

// Named experiments behind the CLI subcommands.  Each builds its own tables
// sized to the request and emits rows in deterministic order.

// Prime counting vs its asymptotic companions at x = xmax/10^(decades-1) .. xmax.
ExperimentReport pnt_table(double xmax, int decades);

// Mertens sums per decade.
ExperimentReport mertens_table(double xmax, int decades);

// The zero-free 3-4-1 functional on a sigma x t grid.
ExperimentReport zeta_check_table(const std::vector<double>& sigmas, const std::vector<double>& ts);

// Gaussian-integer counts per decade: lattice points, primes, psi_i, circle remainder.
ExperimentReport gauss_table(double xmax, int decades);

// Hecke prime number theorem ratios and twisted prime sums per decade.
ExperimentReport hecke_table(double xmax, int decades, int h_max);

// Angular equidistribution: per-bin counts; the Weyl ratios ride in params.
ExperimentReport equidist_table(double xmax, int bins, int h_max);

}  // namespace pnt
