#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pnt/gaussian.hpp"
#include "pnt/zeta.hpp"

namespace pnt {

enum class EvalMode { direct, continued };

// S_h(x) = sum of e^{4ih arg w} over 0 < |w|^2 <= x.  Exact lattice sum; the
// twist is evaluated as (w^4 / |w|^4)^h so no transcendental per point is
// needed.  h = 0 returns the plain lattice count.
Complex weyl_sum(int h, double x);

// Hecke's angular Dirichlet series Xi(h, z) = sum over nonzero w of
// e^{4ih arg w} |w|^{-2z}.
//   direct:    Re z >= 1.1, grouped by norm, tail bounded via r(n).
//   continued: h != 0, Re z >= 0.6, via the stabilized series over the
//              partial sums S_h(n) with alpha = 0.
SeriesEval hecke_xi(int h, Complex z, EvalMode mode, int64_t terms = 1'000'000);

// zeta of Z(i): sum r(n) n^{-z}.  direct needs Re z >= 1.1; continued uses
// pi * zeta(z) plus the stabilized circle-remainder correction, valid for
// Re z >= 0.6 except the simple pole at z = 1.
SeriesEval gaussian_zeta(Complex z, EvalMode mode, int64_t terms = 1'000'000);

// (z - 1) * zeta_i(z) along a probe list approaching the pole; the limit is
// the residue pi.
std::vector<std::pair<Complex, Complex>> residue_probe(std::span<const Complex> z_list);

// -Xi'/Xi(h, z) = (1/2) sum Lambda_i(w) e^{4ih arg w} |w|^{-2z}, summed over
// canonical prime powers (each class of four associates contributes equally).
// Re z >= 1.1; the tail uses Lambda_i(w) <= ln |w|.
SeriesEval xi_log_deriv(int h, Complex z, int64_t norm_limit = 1'000'000);

// Two independent evaluations of -zeta_i'/zeta_i: the prime-power series and
// (z/2) * integral of psi_i(x) x^{-z-1}, exact over the steps of psi_i.
MellinCheck mellin_check_gaussian(Complex z, double x_max, int64_t series_norm_limit = 4'000'000);

// The Hecke 3-4-1 functional: log|zeta_i(s)^3 Xi(h,s+it)^4 Xi(2h,s+2it)| -
// 8 ln 4, via the Euler-product cosine expansion over canonical primes.
// Termwise nonnegative, so the truncated sum is >= 0 by construction.
// Requires h != 0 and sigma >= 1.1.
double hecke_three_four_one(int h, double sigma, double t, double norm_limit = 1e6);

// Sector query over all associates: norm <= x and normalized arg in
// [alpha, beta) with 0 <= alpha < beta <= 2 pi.
struct SectorQuery {
    double x = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};
int64_t sector_count(const SectorQuery& q);

// pi_i(x): canonical (non-associated) primes with norm <= x.
int64_t gaussian_prime_count(double x);

// Angular distribution of the Gaussian primes: counts of all associates per
// equal arc of [0, 2 pi), the worst relative deviation from the uniform mean,
// and the normalized Weyl ratios (ln x / x) |sum e^{4ih arg p}| for h = 1..H.
struct EquidistReport {
    double x = 0.0;
    int bins = 0;
    std::vector<int64_t> counts;
    double max_rel_dev = 0.0;
    std::vector<double> weyl_ratios;
};
EquidistReport equidist_report(double x, int bins, int h_max);

// 4 * sum over canonical primes of e^{4ih arg p} ln |p|.  At h = 0 this is
// real and tracks psi_i(x) up to the prime-power correction O(sqrt x ln x).
Complex weighted_prime_sum(int h, double x);

}  // namespace pnt
