#include "pnt/verify.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

#include "pnt/envelopes.hpp"
#include "pnt/experiments.hpp"
#include "pnt/gaussian.hpp"
#include "pnt/hecke.hpp"
#include "pnt/rational.hpp"
#include "pnt/sieve.hpp"
#include "pnt/zeta.hpp"

#ifndef PNT_GOLDEN_DIR
#define PNT_GOLDEN_DIR "tests/golden"
#endif

namespace pnt::verify {

namespace env = pnt::envelopes;

namespace {

// Shared heavyweight tables, built once per process on first use.
const Tables& big_tables() {
    static const Tables tables = Tables::build(10'000'000);
    return tables;
}

std::vector<double> log_grid(double lo_exp, double hi_exp, int per_decade) {
    std::vector<double> g;
    const int steps = int(std::lround((hi_exp - lo_exp) * per_decade));
    for (int k = 0; k <= steps; ++k) {
        g.push_back(std::round(std::pow(10.0, lo_exp + double(k) / per_decade)));
    }
    return g;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

CheckResult timed(const std::string& id, const std::string& name, CheckKind kind,
                  const std::function<std::pair<bool, std::string>()>& body) {
    CheckResult r;
    r.id = id;
    r.name = name;
    r.kind = kind;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = body();
        r.pass = pass;
        r.detail = std::move(detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---------------------------------------------------------------- rational

CheckResult check_factorial_identity() {
    return timed("A1", "factorial-identity", CheckKind::hard, [] {
        double worst = 0.0;
        for (double x : {1e3, 1e4, 1e5}) {
            const auto f = factorial_identity(x, big_tables());
            worst = std::max(worst,
                             std::abs(f.floor_weighted - f.log_factorial) / f.log_factorial);
        }
        return std::make_pair(worst <= env::kFactorialIdentityRelTol,
                              "max rel err " + fmt(worst) + " (tol " +
                                  fmt(env::kFactorialIdentityRelTol) + ")");
    });
}

CheckResult check_floor_parity() {
    return timed("A2", "floor-parity-range", CheckKind::hard, [] {
        std::mt19937_64 gen(0x5EED5EEDull);
        std::uniform_real_distribution<double> dist(0.0, 1e6);
        for (int i = 0; i < 1'000'000; ++i) {
            const int v = floor_parity(dist(gen));
            if (v != 0 && v != 1) {
                return std::make_pair(false, "value " + std::to_string(v) + " outside {0,1}");
            }
        }
        return std::make_pair(true, std::string("1e6 draws all in {0,1}"));
    });
}

CheckResult check_chebyshev() {
    return timed("A3", "chebyshev-ratios", CheckKind::envelope, [] {
        double pi_lo = 10.0, pi_hi = 0.0, psi_lo = 10.0, psi_hi = 0.0;
        for (double x : log_grid(3.0, 7.0, 4)) {
            const auto cs = chebyshev(x, big_tables());
            pi_lo = std::min(pi_lo, cs.ratio_pi);
            pi_hi = std::max(pi_hi, cs.ratio_pi);
            psi_lo = std::min(psi_lo, cs.ratio_psi);
            psi_hi = std::max(psi_hi, cs.ratio_psi);
        }
        const double final_dev = std::abs(chebyshev(1e7, big_tables()).ratio_psi - 1.0);
        const bool pass = pi_lo >= env::kPiRatioLo && pi_hi <= env::kPiRatioHi &&
                          psi_lo >= env::kPsiRatioLo && psi_hi <= env::kPsiRatioHi &&
                          final_dev <= env::kPsiRatioTolAt1e7;
        return std::make_pair(pass, "pi ratio in [" + fmt(pi_lo) + "," + fmt(pi_hi) +
                                        "], psi ratio in [" + fmt(psi_lo) + "," + fmt(psi_hi) +
                                        "], |psi/x-1| at 1e7 = " + fmt(final_dev));
    });
}

CheckResult check_mertens() {
    return timed("A4", "mertens-sums", CheckKind::envelope, [] {
        double worst_a = 0.0;
        for (double x : log_grid(2.0, 7.0, 4)) {
            worst_a = std::max(worst_a, std::abs(mertens_sums(x, big_tables().primes).A));
        }
        const double b5 = mertens_sums(1e5, big_tables().primes).B;
        const double b6 = mertens_sums(1e6, big_tables().primes).B;
        const auto m7 = mertens_sums(1e7, big_tables().primes);
        const double spread = std::max({std::abs(b5 - b6), std::abs(b5 - m7.B), std::abs(b6 - m7.B)});
        const bool pass = worst_a <= env::kMertensABound && spread <= env::kMertensBPairwise &&
                          m7.P >= env::kMertensPLo && m7.P <= env::kMertensPHi;
        return std::make_pair(pass, "max|A| " + fmt(worst_a) + ", B spread " + fmt(spread) +
                                        ", P(1e7) " + fmt(m7.P));
    });
}

CheckResult check_li_oracle() {
    return timed("A5.oracle", "li-vs-reference-quadrature", CheckKind::hard, [] {
        double worst = 0.0;
        for (double x : {2.0, 10.0, 1e5, 1e6, 1e7}) {
            const double impl = log_integral(x);
            const double ref = li_reference_quadrature(x);
            worst = std::max(worst, std::abs(impl - ref) / std::abs(ref));
        }
        return std::make_pair(worst <= env::kLiOracleRelTol,
                              "max rel dev " + fmt(worst) + " (tol " + fmt(env::kLiOracleRelTol) + ")");
    });
}

CheckResult check_pnt_vs_li() {
    return timed("A5.ratio", "pi-over-li", CheckKind::envelope, [] {
        double lo = 10.0, hi = 0.0;
        for (double x : {1e5, 1e6, 1e7}) {
            const double ratio =
                double(prime_count(big_tables().primes, x)) / log_integral(x);
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        const bool pass = lo >= env::kPiOverLiLo && hi <= env::kPiOverLiHi;
        return std::make_pair(pass, "pi/li in [" + fmt(lo) + "," + fmt(hi) + "]");
    });
}

CheckResult check_summatory() {
    return timed("A8", "summatory-moebius-liouville", CheckKind::envelope, [] {
        const double m = double(summatory(SummatoryFn::moebius, 1e6, big_tables().arith));
        const double l = double(summatory(SummatoryFn::liouville, 1e6, big_tables().arith));
        const bool pass = std::abs(m) / 1e6 <= env::kSummatoryRatioBound &&
                          std::abs(l) / 1e6 <= env::kSummatoryRatioBound;
        return std::make_pair(pass, "M(1e6) = " + fmt(m) + ", L(1e6) = " + fmt(l));
    });
}

// -------------------------------------------------------------------- zeta

CheckResult check_three_four_one() {
    return timed("A6", "zero-free-341", CheckKind::hard, [] {
        double worst = 1.0;
        for (double sigma : {1.05, 1.1, 1.5, 2.0}) {
            for (double t : {0.5, 1.0, 5.0, 14.134725, 21.022}) {
                worst = std::min(worst, three_four_one(sigma, t).log_theta);
            }
        }
        return std::make_pair(worst >= env::kThreeFourOneFloor,
                              "min log_theta " + fmt(worst) + " (floor " +
                                  fmt(env::kThreeFourOneFloor) + ")");
    });
}

CheckResult check_mellin_rational() {
    return timed("A7", "mellin-identity", CheckKind::hard, [] {
        bool pass = true;
        std::string detail;
        for (Complex z : {Complex{2.0, 0.0}, Complex{1.5, 1.0}}) {
            const auto mc = mellin_check_rational(z, 1e6, big_tables());
            const double gap = std::abs(mc.series - mc.integral);
            const double allowed = mc.combined_bound + env::kMellinSlack;
            pass = pass && gap <= allowed;
            if (!detail.empty()) detail += "; ";
            detail += "gap " + fmt(gap) + " vs bound " + fmt(allowed);
        }
        return std::make_pair(pass, detail);
    });
}

CheckResult check_tauberian() {
    return timed("A15", "tauberian-trace-cauchy", CheckKind::envelope, [] {
        const double grid[] = {1e5, 1e6};
        const auto trace = tauberian_trace(grid, big_tables());
        const double delta = std::abs(trace[1].second - trace[0].second);
        return std::make_pair(delta <= env::kTauberianCauchyTol,
                              "|T(1e6)-T(1e5)| = " + fmt(delta) + " (tol " +
                                  fmt(env::kTauberianCauchyTol) + ")");
    });
}

// ---------------------------------------------------------------- gaussian

CheckResult check_r_divisor_formula() {
    return timed("A9.exact", "two-squares-vs-divisor-formula", CheckKind::hard, [] {
        for (uint64_t n = 1; n <= 10'000; ++n) {
            int64_t d1 = 0, d3 = 0;
            for (uint64_t d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                if (d % 4 == 1) ++d1;
                if (d % 4 == 3) ++d3;
            }
            if (two_squares_count(n) != 4 * (d1 - d3)) {
                return std::make_pair(false, "mismatch at n = " + std::to_string(n));
            }
        }
        return std::make_pair(true, std::string("exact agreement for n <= 1e4"));
    });
}

CheckResult check_circle_envelope() {
    return timed("A9.envelope", "gauss-circle-remainder", CheckKind::envelope, [] {
        const auto prefix = CirclePrefix::build(1'000'000);
        double worst = 0.0;
        for (double nd : log_grid(3.0, 6.0, 4)) {
            const auto n = uint64_t(nd);
            worst = std::max(worst, std::abs(prefix.remainder(n)) / std::sqrt(double(n)));
        }
        return std::make_pair(worst <= env::kCircleRemainderCoef,
                              "max |remainder|/sqrt(n) = " + fmt(worst) + " (coef " +
                                  fmt(env::kCircleRemainderCoef) + ")");
    });
}

// ------------------------------------------------------------------- hecke

CheckResult check_weyl_sums() {
    return timed("A10", "weyl-sum-envelope", CheckKind::envelope, [] {
        double worst_env = 0.0, worst_ratio = 0.0;
        for (int h : {1, 2, 3}) {
            for (double x : {1e3, 1e4, 1e5, 1e6}) {
                const double s = std::abs(weyl_sum(h, x));
                worst_env = std::max(worst_env, s / (std::sqrt(x) * std::log(x)));
                if (x == 1e6) worst_ratio = std::max(worst_ratio, s / x);
            }
        }
        const bool pass = worst_env <= env::kWeylEnvelopeCoef &&
                          worst_ratio <= env::kWeylRatioBoundAt1e6;
        return std::make_pair(pass, "max |S|/(sqrt(x) ln x) = " + fmt(worst_env) +
                                        ", max |S(1e6)|/1e6 = " + fmt(worst_ratio));
    });
}

CheckResult check_gaussian_prime_counts() {
    return timed("A11.exact", "gaussian-prime-counts", CheckKind::hard, [] {
        const int64_t p25 = gaussian_prime_count(25.0);
        const int64_t p100 = gaussian_prime_count(100.0);
        const bool pass = p25 == 8 && p100 == 25;
        return std::make_pair(pass, "pi_i(25) = " + std::to_string(p25) +
                                        ", pi_i(100) = " + std::to_string(p100));
    });
}

CheckResult check_hecke_pnt_ratios() {
    return timed("A11.envelope", "hecke-pnt-ratios", CheckKind::envelope, [] {
        const double x = 1e6;
        const double psi_ratio = gaussian_psi(x) / (2.0 * x);
        const double pi_ratio = double(gaussian_prime_count(x)) * std::log(x) / x;
        const bool pass = psi_ratio >= env::kGaussianPsiRatioLo &&
                          psi_ratio <= env::kGaussianPsiRatioHi &&
                          pi_ratio >= env::kGaussianPiRatioLo &&
                          pi_ratio <= env::kGaussianPiRatioHi;
        return std::make_pair(pass, "psi_i/(2x) = " + fmt(psi_ratio) +
                                        ", pi_i ln x / x = " + fmt(pi_ratio));
    });
}

CheckResult check_equidistribution() {
    return timed("A12", "angular-equidistribution", CheckKind::envelope, [] {
        const auto rep = equidist_report(1e6, 8, 3);
        double worst_weyl = 0.0;
        for (double w : rep.weyl_ratios) worst_weyl = std::max(worst_weyl, w);
        const bool pass = rep.max_rel_dev <= env::kEquidistMaxRelDev &&
                          worst_weyl <= env::kEquidistWeylRatio;
        return std::make_pair(pass, "max sector dev " + fmt(rep.max_rel_dev) +
                                        ", max weyl ratio " + fmt(worst_weyl));
    });
}

CheckResult check_continuation() {
    return timed("A13.consistency", "direct-vs-continued", CheckKind::hard, [] {
        bool pass = true;
        std::string detail;
        for (Complex z : {Complex{1.5, 0.0}, Complex{1.2, 2.0}, Complex{3.0, 0.0}}) {
            const auto xd = hecke_xi(1, z, EvalMode::direct);
            const auto xc = hecke_xi(1, z, EvalMode::continued);
            const double xgap = std::abs(xd.value - xc.value);
            const double xallow = xd.tail_bound + xc.tail_bound + env::kMellinSlack;
            const auto zd = gaussian_zeta(z, EvalMode::direct);
            const auto zc = gaussian_zeta(z, EvalMode::continued);
            const double zgap = std::abs(zd.value - zc.value);
            const double zallow = zd.tail_bound + zc.tail_bound + env::kMellinSlack;
            pass = pass && xgap <= xallow && zgap <= zallow;
            if (!detail.empty()) detail += "; ";
            detail += "xi gap " + fmt(xgap) + "<=" + fmt(xallow) + ", zeta_i gap " + fmt(zgap) +
                      "<=" + fmt(zallow);
        }
        return std::make_pair(pass, detail);
    });
}

CheckResult check_residue() {
    return timed("A13.residue", "pole-residue-probe", CheckKind::envelope, [] {
        const Complex probe[] = {Complex{1.001, 0.0}};
        const auto res = residue_probe(probe);
        const double dev = std::abs(res[0].second - Complex{std::numbers::pi, 0.0});
        return std::make_pair(dev <= env::kResiduePiTol,
                              "|(z-1) zeta_i(z) - pi| = " + fmt(dev) + " at z = 1.001");
    });
}

CheckResult check_hecke_zero_free() {
    return timed("A14", "hecke-zero-free-341", CheckKind::hard, [] {
        double worst = 1.0;
        for (int h : {1, 2}) {
            for (double sigma : {1.2, 1.5}) {
                for (double t : {0.7, 3.0}) {
                    worst = std::min(worst, hecke_three_four_one(h, sigma, t));
                }
            }
        }
        return std::make_pair(worst >= env::kThreeFourOneFloor,
                              "min value " + fmt(worst) + " (floor " +
                                  fmt(env::kThreeFourOneFloor) + ")");
    });
}

// --------------------------------------------------------------------- cli

CheckResult check_cli_golden() {
    return timed("A16", "cli-golden-determinism", CheckKind::hard, [] {
        const std::string first = to_csv(pnt_table(1000.0, 3));
        const std::string second = to_csv(pnt_table(1000.0, 3));
        if (first != second) return std::make_pair(false, std::string("two runs differ"));
        const std::string path = std::string(PNT_GOLDEN_DIR) + "/pnt_table_x1000.csv";
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::make_pair(false, "golden file missing: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        if (buf.str() != first) {
            return std::make_pair(false, std::string("output differs from golden bytes"));
        }
        return std::make_pair(true, std::string("byte-identical to golden and across runs"));
    });
}

}  // namespace

double li_reference_quadrature(double x) {
    if (!(x >= 1.5)) throw std::invalid_argument("li_reference_quadrature: x must be >= 1.5");

    const auto simpson = [](const std::function<double(double)>& f, double a, double b, int n) {
        const double h = (b - a) / n;
        double odd = 0.0, even = 0.0;
        for (int i = 1; i < n; i += 2) odd += f(a + i * h);
        for (int i = 2; i < n; i += 2) even += f(a + i * h);
        return h / 3.0 * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
    };

    // piece 1: integral of 1/ln t over (0, 1/2) via t = e^{-s}
    const double p1 =
        -simpson([](double s) { return std::exp(-s) / s; }, std::log(2.0), 60.0, 1 << 15);
    // piece 2: the paired principal-value core over (1/2, 3/2)
    const auto pair_f = [](double u) {
        if (u < 1e-7) return 1.0 + u * u / 12.0;
        return 1.0 / std::log1p(u) + 1.0 / std::log1p(-u);
    };
    const double p2 = simpson(pair_f, 0.0, 0.5, 1 << 13);
    // piece 3: integral over (3/2, x) via t = e^s
    const double p3 =
        simpson([](double s) { return std::exp(s) / s; }, std::log(1.5), std::log(x), 1 << 16);
    return p1 + p2 + p3;
}

std::vector<CheckResult> run_suite(const std::string& suite) {
    std::vector<CheckResult> out;
    const bool all = suite == "all";
    if (all || suite == "rational") {
        out.push_back(check_factorial_identity());
        out.push_back(check_floor_parity());
        out.push_back(check_chebyshev());
        out.push_back(check_mertens());
        out.push_back(check_li_oracle());
        out.push_back(check_pnt_vs_li());
        out.push_back(check_summatory());
    }
    if (all || suite == "zeta") {
        out.push_back(check_three_four_one());
        out.push_back(check_mellin_rational());
        out.push_back(check_tauberian());
    }
    if (all || suite == "gaussian") {
        out.push_back(check_r_divisor_formula());
        out.push_back(check_circle_envelope());
    }
    if (all || suite == "hecke") {
        out.push_back(check_weyl_sums());
        out.push_back(check_gaussian_prime_counts());
        out.push_back(check_hecke_pnt_ratios());
        out.push_back(check_equidistribution());
        out.push_back(check_continuation());
        out.push_back(check_residue());
        out.push_back(check_hecke_zero_free());
    }
    if (all || suite == "cli") {
        out.push_back(check_cli_golden());
    }
    if (out.empty()) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results) {
        if (!r.pass) return false;
    }
    return true;
}

std::string format_line(const CheckResult& r) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), "[%-8s] %-4s %-32s %7.2fs  %s",
                  r.kind == CheckKind::hard ? "HARD" : "ENVELOPE", r.pass ? "ok" : "FAIL",
                  (r.id + " " + r.name).c_str(), r.seconds, r.detail.c_str());
    return buf;
}

}  // namespace pnt::verify
