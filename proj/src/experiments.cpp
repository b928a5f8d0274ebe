#include "pnt/experiments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pnt/gaussian.hpp"
#include "pnt/hecke.hpp"
#include "pnt/rational.hpp"
#include "pnt/sieve.hpp"
#include "pnt/zeta.hpp"

namespace pnt {

namespace {

std::vector<double> decade_grid(double xmax, int decades) {
    if (!(xmax >= 10.0)) throw std::invalid_argument("xmax must be >= 10");
    if (decades < 1 || decades > 12) throw std::invalid_argument("decades must be in 1..12");
    std::vector<double> grid;
    for (int j = decades - 1; j >= 0; --j) {
        const double x = xmax / std::pow(10.0, j);
        if (x >= 2.0) grid.push_back(std::floor(x));
    }
    return grid;
}

std::string fmt(double v) { return format_cell(ExperimentReport::Cell{v}); }

}  // namespace

ExperimentReport pnt_table(double xmax, int decades) {
    const auto grid = decade_grid(xmax, decades);
    const Tables tables = Tables::build(uint64_t(grid.back()));

    ExperimentReport rep;
    rep.name = "pnt-table";
    rep.note = "prime counting vs x/ln x, li(x), and the Chebyshev psi function";
    rep.params = {{"xmax", fmt(xmax)}, {"decades", fmt(double(decades))}};
    rep.columns = {"x", "pi", "x_over_lnx", "li", "psi", "pi_lnx_over_x", "psi_over_x", "pi_over_li"};
    for (double x : grid) {
        const auto cs = chebyshev(x, tables);
        const double li = log_integral(x);
        rep.rows.push_back({int64_t(x), cs.pi_x, x / std::log(x), li, cs.psi, cs.ratio_pi,
                            cs.ratio_psi, double(cs.pi_x) / li});
    }
    return rep;
}

ExperimentReport mertens_table(double xmax, int decades) {
    const auto grid = decade_grid(xmax, decades);
    const PrimeTable table = PrimeTable::build(uint64_t(grid.back()));

    ExperimentReport rep;
    rep.name = "mertens";
    rep.note = "Mertens' three prime sums centered on their main terms";
    rep.params = {{"xmax", fmt(xmax)}, {"decades", fmt(double(decades))}};
    rep.columns = {"x", "A_lnp_over_p", "B_recip", "P_product", "c5_partial"};
    for (double x : grid) {
        if (x < 3.0) continue;
        const auto m = mertens_sums(x, table);
        rep.rows.push_back({int64_t(x), m.A, m.B, m.P, m.c5_partial});
    }
    return rep;
}

ExperimentReport zeta_check_table(const std::vector<double>& sigmas,
                                  const std::vector<double>& ts) {
    if (sigmas.empty() || ts.empty()) {
        throw std::invalid_argument("zeta-check needs at least one sigma and one t");
    }
    ExperimentReport rep;
    rep.name = "zeta-check";
    rep.note = "zero-free 3-4-1 inequality for zeta on the sigma x t grid";
    rep.columns = {"sigma", "t", "log_theta", "ln_zeta_sigma", "ln_zeta_sigma_it",
                   "ln_zeta_sigma_2it"};
    for (double s : sigmas) {
        for (double t : ts) {
            const auto th = three_four_one(s, t);
            rep.rows.push_back(
                {s, t, th.log_theta, th.comp_sigma, th.comp_sigma_it, th.comp_sigma_2it});
        }
    }
    return rep;
}

ExperimentReport gauss_table(double xmax, int decades) {
    const auto grid = decade_grid(xmax, decades);

    ExperimentReport rep;
    rep.name = "gauss-table";
    rep.note = "Gaussian-integer lattice and prime counts over the norm ball";
    rep.params = {{"xmax", fmt(xmax)}, {"decades", fmt(double(decades))}};
    rep.columns = {"x", "lattice_points", "pi_i", "psi_i", "circle_remainder", "psi_i_over_2x",
                   "pi_i_lnx_over_x"};
    for (double x : grid) {
        const auto n = uint64_t(x);
        const auto prefix = CirclePrefix::build(n);
        const int64_t pi_i = gaussian_prime_count(x);
        const double psi_i = gaussian_psi(x);
        rep.rows.push_back({int64_t(x), prefix.sum(n), pi_i, psi_i, prefix.remainder(n),
                            psi_i / (2.0 * x), double(pi_i) * std::log(x) / x});
    }
    return rep;
}

ExperimentReport hecke_table(double xmax, int decades, int h_max) {
    const auto grid = decade_grid(xmax, decades);
    if (h_max < 1 || h_max > 8) throw std::invalid_argument("hmax must be in 1..8");

    ExperimentReport rep;
    rep.name = "hecke-table";
    rep.note = "Hecke prime number theorem for Z(i): twisted prime sums and Weyl sums";
    rep.params = {{"xmax", fmt(xmax)}, {"decades", fmt(double(decades))},
                  {"hmax", fmt(double(h_max))}};
    rep.columns = {"x", "pi_i_lnx_over_x", "psi_i_over_2x"};
    for (int h = 1; h <= h_max; ++h) {
        rep.columns.push_back("weyl_S" + std::to_string(h) + "_over_x");
        rep.columns.push_back("twisted_prime_sum" + std::to_string(h) + "_over_x");
    }
    for (double x : grid) {
        const int64_t pi_i = gaussian_prime_count(x);
        const double psi_i = gaussian_psi(x);
        std::vector<ExperimentReport::Cell> row = {
            int64_t(x), double(pi_i) * std::log(x) / x, psi_i / (2.0 * x)};
        for (int h = 1; h <= h_max; ++h) {
            row.push_back(std::abs(weyl_sum(h, x)) / x);
            row.push_back(std::abs(weighted_prime_sum(h, x)) / x);
        }
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ExperimentReport equidist_table(double xmax, int bins, int h_max) {
    const auto er = equidist_report(xmax, bins, h_max);

    ExperimentReport rep;
    rep.name = "equidist";
    rep.note = "angular distribution of Gaussian primes over equal arcs of [0, 2pi)";
    rep.params = {{"xmax", fmt(xmax)},
                  {"bins", fmt(double(bins))},
                  {"hmax", fmt(double(h_max))},
                  {"max_rel_dev", fmt(er.max_rel_dev)}};
    for (int h = 1; h <= h_max; ++h) {
        rep.params.emplace_back("weyl_ratio_h" + std::to_string(h), fmt(er.weyl_ratios[h - 1]));
    }
    rep.columns = {"bin", "arc_lo", "arc_hi", "count", "rel_dev"};
    double total = 0.0;
    for (int64_t c : er.counts) total += double(c);
    const double bin_mean = total / double(bins);
    const double width = 2.0 * std::numbers::pi / double(bins);
    for (int b = 0; b < bins; ++b) {
        rep.rows.push_back({int64_t(b), b * width, (b + 1) * width, er.counts[size_t(b)],
                            std::abs(double(er.counts[size_t(b)]) - bin_mean) / bin_mean});
    }
    return rep;
}

}  // namespace pnt
