#include "pnt/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "pnt/envelopes.hpp"
#include "pnt/kahan.hpp"

namespace pnt {

namespace {

inline Complex npow_neg(double n, Complex z) {
    const double L = std::log(n);
    const double r = std::exp(-z.real() * L);
    const double a = -z.imag() * L;
    return {r * std::cos(a), r * std::sin(a)};
}

inline Complex ipow(Complex base, int k) {
    Complex acc{1.0, 0.0};
    for (int i = 0; i < k; ++i) acc *= base;
    return acc;
}

// e^{4i arg w} computed algebraically as w^4 / |w|^4.
inline Complex quartic_twist(double a, double b, double norm) {
    const Complex w{a, b};
    const Complex w2 = w * w;
    return (w2 * w2) / (norm * norm);
}

uint64_t isqrt_floor(double x) {
    if (x < 0.0) return 0;
    auto r = uint64_t(std::sqrt(x));
    while (r > 0 && double(r) * double(r) > x) --r;
    while (double(r + 1) * double(r + 1) <= x) ++r;
    return r;
}

// f(n) = sum_{|w|^2 = n} e^{4ih arg w} for n <= n_max.  Real: conjugate
// points cancel the imaginary parts within each norm class.  The four
// associates of a first-quadrant point contribute identical values.
std::vector<double> twisted_norm_sums(int h, uint64_t n_max) {
    std::vector<double> f(n_max + 1, 0.0);
    const uint64_t r = isqrt_floor(double(n_max));
    for (uint64_t a = 1; a <= r; ++a) {
        const uint64_t bmax = isqrt_floor(double(n_max) - double(a) * double(a));
        for (uint64_t b = 0; b <= bmax; ++b) {
            const uint64_t n = a * a + b * b;
            if (h == 0) {
                f[n] += 4.0;
            } else {
                // Real for either sign of h: the norm class is conjugation
                // closed, so f_{-h} = f_h.
                const Complex tw = ipow(quartic_twist(double(a), double(b), double(n)), std::abs(h));
                f[n] += 4.0 * tw.real();
            }
        }
    }
    return f;
}

// Tail of sum_{n>N} r(n) n^{-sigma} by partial summation against the circle
// envelope R(t) <= pi t + 5 sqrt t.
double r_series_tail(double N, double sigma) {
    const double c = envelopes::kCircleRemainderCoef;
    return std::numbers::pi * sigma / (sigma - 1.0) * std::pow(N, 1.0 - sigma) +
           c * sigma / (sigma - 0.5) * std::pow(N, 0.5 - sigma);
}

// Tail of (1/4) sum_{n>N} r(n) ln n n^{-sigma}, same device with the log kept.
double r_log_series_tail(double N, double sigma) {
    const double c = envelopes::kCircleRemainderCoef;
    const double s1 = sigma - 1.0;
    const double s2 = sigma - 0.5;
    const double i1 = std::pow(N, -s1) * (std::log(N) / s1 + 1.0 / (s1 * s1));
    const double i2 = std::pow(N, -s2) * (std::log(N) / s2 + 1.0 / (s2 * s2));
    return 0.25 * sigma * (std::numbers::pi * i1 + c * i2);
}

}  // namespace

Complex weyl_sum(int h, double x) {
    if (!(x >= 1.0)) throw std::invalid_argument("weyl_sum: x must be >= 1");
    const uint64_t r = isqrt_floor(x);
    if (h == 0) {
        int64_t quadrant = 0;
        for (uint64_t a = 1; a <= r; ++a) {
            quadrant += int64_t(isqrt_floor(x - double(a) * double(a))) + 1;
        }
        return {double(4 * quadrant), 0.0};
    }
    KahanComplexSum acc;
    for (uint64_t a = 1; a <= r; ++a) {
        const uint64_t bmax = isqrt_floor(x - double(a) * double(a));
        for (uint64_t b = 0; b <= bmax; ++b) {
            const double n = double(a * a + b * b);
            acc.add(ipow(quartic_twist(double(a), double(b), n), std::abs(h)));
        }
    }
    Complex s = 4.0 * acc.value();
    if (h < 0) s = std::conj(s);
    return s;
}

SeriesEval hecke_xi(int h, Complex z, EvalMode mode, int64_t terms) {
    const double sigma = z.real();
    if (terms < 10) throw std::invalid_argument("hecke_xi: terms must be >= 10");

    if (mode == EvalMode::direct) {
        if (sigma < 1.1) throw std::domain_error("hecke_xi: direct mode requires Re z >= 1.1");
        const auto f = twisted_norm_sums(h, uint64_t(terms));
        KahanComplexSum acc;
        for (int64_t n = 1; n <= terms; ++n) {
            if (f[n] != 0.0) acc.add(f[n] * npow_neg(double(n), z));
        }
        return {acc.value(), r_series_tail(double(terms), sigma), terms};
    }

    // Continued mode: Xi(h, z) = sum (n^-z - (n+1)^-z) S_h(n) with alpha = 0.
    if (h == 0) {
        throw std::domain_error("hecke_xi: continued mode has a pole at h = 0; use gaussian_zeta");
    }
    if (sigma < 0.6) throw std::domain_error("hecke_xi: continued mode requires Re z >= 0.6");

    const auto f = twisted_norm_sums(h, uint64_t(terms));
    auto prefix = std::make_shared<std::vector<double>>(terms + 1, 0.0);
    KahanSum run;
    for (int64_t n = 1; n <= terms; ++n) {
        run.add(f[n]);
        (*prefix)[n] = run.value();
    }

    // Certificate: the sqrt(n) ln n growth shape with the coefficient
    // measured over the top half of the computed range.
    double coef = 0.0;
    for (int64_t n = std::max<int64_t>(16, terms / 2); n <= terms; ++n) {
        const double scale = std::sqrt(double(n)) * std::log(double(n));
        coef = std::max(coef, std::abs((*prefix)[n]) / scale);
    }
    const GrowthCert cert{coef, 0.5, 1.0};
    const auto partial = [prefix](int64_t n) { return (*prefix)[n]; };
    return stabilized_dirichlet(partial, 0.0, z, terms, cert);
}

SeriesEval gaussian_zeta(Complex z, EvalMode mode, int64_t terms) {
    const double sigma = z.real();
    if (terms < 10) throw std::invalid_argument("gaussian_zeta: terms must be >= 10");

    if (mode == EvalMode::direct) {
        if (sigma < 1.1) throw std::domain_error("gaussian_zeta: direct mode requires Re z >= 1.1");
        const auto prefix = CirclePrefix::build(uint64_t(terms));
        KahanComplexSum acc;
        int64_t prev = 0;
        for (int64_t n = 1; n <= terms; ++n) {
            const int64_t rn = prefix.cumulative[n] - prev;
            prev = prefix.cumulative[n];
            if (rn != 0) acc.add(double(rn) * npow_neg(double(n), z));
        }
        return {acc.value(), r_series_tail(double(terms), sigma), terms};
    }

    if (z == Complex{1.0, 0.0}) throw std::domain_error("gaussian_zeta: simple pole at z = 1");
    if (sigma < 0.6) throw std::domain_error("gaussian_zeta: continued mode requires Re z >= 0.6");

    // pi * zeta(z) + stabilized circle-remainder correction; the remainder is
    // certified by the measured Gauss circle envelope 5 sqrt(n).
    auto prefix = std::make_shared<CirclePrefix>(CirclePrefix::build(uint64_t(terms)));
    const auto partial = [prefix](int64_t n) { return double(prefix->cumulative[n]); };
    const GrowthCert cert{envelopes::kCircleRemainderCoef, 0.5, 0.0};

    // Reference zeta at the best eps reachable with ~2^24 telescoped terms.
    const double eps_floor =
        std::abs(z) * std::pow(double(int64_t{1} << 24), -sigma) / (2.0 * sigma) * 1.01;
    const SeriesEval ref = zeta_ref(z, std::max(1e-8, eps_floor));
    return stabilized_dirichlet(partial, std::numbers::pi, z, terms, cert, &ref);
}

std::vector<std::pair<Complex, Complex>> residue_probe(std::span<const Complex> z_list) {
    std::vector<std::pair<Complex, Complex>> out;
    out.reserve(z_list.size());
    for (const Complex& z : z_list) {
        const SeriesEval e = gaussian_zeta(z, EvalMode::continued);
        out.emplace_back(z, (z - Complex{1.0, 0.0}) * e.value);
    }
    return out;
}

SeriesEval xi_log_deriv(int h, Complex z, int64_t norm_limit) {
    const double sigma = z.real();
    if (sigma < 1.1) throw std::domain_error("xi_log_deriv: requires Re z >= 1.1");
    if (norm_limit < 2) throw std::invalid_argument("xi_log_deriv: norm_limit must be >= 2");

    // (1/2) sum Lambda_i(w) e^{4ih arg w} |w|^{-2z} over the ball collapses to
    // 2 sum over canonical primes p and exponents nu with |p|^{2 nu} <= N.
    const auto primes = gaussian_primes_upto(double(norm_limit));
    KahanComplexSum acc;
    for (const auto& rec : primes) {
        Complex twist = h == 0 ? Complex{1.0, 0.0}
                               : ipow(quartic_twist(double(rec.rep.a), double(rec.rep.b),
                                                    double(rec.norm)),
                                      std::abs(h));
        if (h < 0) twist = std::conj(twist);
        const Complex base_pow = npow_neg(double(rec.norm), z);
        Complex tw = twist;
        Complex pw = base_pow;
        double norm_nu = double(rec.norm);
        while (norm_nu <= double(norm_limit)) {
            acc.add(2.0 * rec.log_abs * pw * tw);
            norm_nu *= double(rec.norm);
            pw *= base_pow;
            tw *= twist;
        }
    }
    return {acc.value(), r_log_series_tail(double(norm_limit), sigma), norm_limit};
}

MellinCheck mellin_check_gaussian(Complex z, double x_max, int64_t series_norm_limit) {
    if (z.real() < 1.5) throw std::domain_error("mellin_check_gaussian: requires Re z >= 1.5");
    if (!(x_max >= 4.0)) throw std::invalid_argument("mellin_check_gaussian: x_max too small");
    const double sigma = z.real();

    const SeriesEval series = xi_log_deriv(0, z, series_norm_limit);

    // (z/2) integral of psi_i over (1, x_max): psi_i jumps by 4 ln|p| at each
    // prime-power norm, and the z cancels into the closed-form pieces.
    const auto primes = gaussian_primes_upto(x_max);
    std::vector<std::pair<double, double>> steps;
    for (const auto& rec : primes) {
        double norm_nu = double(rec.norm);
        while (norm_nu <= x_max) {
            steps.emplace_back(norm_nu, 4.0 * rec.log_abs);
            norm_nu *= double(rec.norm);
        }
    }
    std::sort(steps.begin(), steps.end());

    KahanComplexSum integral;
    KahanSum psi;
    Complex cur_pow{1.0, 0.0};
    for (const auto& [q, w] : steps) {
        const Complex q_pow = npow_neg(q, z);
        const double val = psi.value();
        if (val != 0.0) integral.add(0.5 * val * (cur_pow - q_pow));
        psi.add(w);
        cur_pow = q_pow;
    }
    integral.add(0.5 * psi.value() * (cur_pow - npow_neg(x_max, z)));

    MellinCheck out;
    out.series = series.value;
    out.integral = integral.value();
    const double integral_tail = 0.5 * std::abs(z) * envelopes::kGaussianPsiUpperCoef *
                                 std::pow(x_max, 1.0 - sigma) / (sigma - 1.0);
    out.combined_bound = series.tail_bound + integral_tail;
    return out;
}

double hecke_three_four_one(int h, double sigma, double t, double norm_limit) {
    if (h == 0) throw std::invalid_argument("hecke_three_four_one: h must be nonzero");
    if (sigma < 1.1) throw std::domain_error("hecke_three_four_one: requires sigma >= 1.1");

    const auto primes = gaussian_primes_upto(norm_limit);
    KahanSum acc;
    for (const auto& rec : primes) {
        // cos arguments k * (4h arg p - 2t ln|p|); the double-angle term keeps
        // every summand a multiple of 3 + 4 cos + cos(2 .) >= 0.
        const double phi = 4.0 * double(h) * rec.arg - 2.0 * t * rec.log_abs;
        const double ratio = std::pow(double(rec.norm), -sigma);
        double pk = ratio;
        for (int k = 1; pk > 1e-18; ++k, pk *= ratio) {
            const double c1 = std::cos(double(k) * phi);
            const double c2 = std::cos(2.0 * double(k) * phi);
            acc.add(pk / double(k) * (3.0 + 4.0 * c1 + c2));
        }
    }
    return acc.value();
}

int64_t sector_count(const SectorQuery& q) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (!(q.alpha >= 0.0 && q.alpha < q.beta && q.beta <= two_pi)) {
        throw std::invalid_argument("sector_count: need 0 <= alpha < beta <= 2 pi");
    }
    if (!(q.x >= 2.0)) throw std::invalid_argument("sector_count: x must be >= 2");

    const auto primes = gaussian_primes_upto(q.x);
    int64_t count = 0;
    for (const auto& rec : primes) {
        for (int k = 0; k < 4; ++k) {
            const double ang = rec.arg + k * (std::numbers::pi / 2.0);
            if (ang >= q.alpha && ang < q.beta) ++count;
        }
    }
    return count;
}

int64_t gaussian_prime_count(double x) { return int64_t(gaussian_primes_upto(x).size()); }

EquidistReport equidist_report(double x, int bins, int h_max) {
    if (bins < 2) throw std::invalid_argument("equidist_report: bins must be >= 2");
    if (!(x >= 100.0)) throw std::invalid_argument("equidist_report: x must be >= 100");
    if (h_max < 0) throw std::invalid_argument("equidist_report: h_max must be >= 0");

    constexpr double two_pi = 2.0 * std::numbers::pi;
    const auto primes = gaussian_primes_upto(x);

    EquidistReport rep;
    rep.x = x;
    rep.bins = bins;
    rep.counts.assign(size_t(bins), 0);
    for (const auto& rec : primes) {
        for (int k = 0; k < 4; ++k) {
            const double ang = rec.arg + k * (std::numbers::pi / 2.0);
            auto idx = size_t(ang / two_pi * double(bins));
            if (idx >= size_t(bins)) idx = size_t(bins) - 1;
            ++rep.counts[idx];
        }
    }
    const double mean = 4.0 * double(primes.size()) / double(bins);
    for (int64_t c : rep.counts) {
        rep.max_rel_dev = std::max(rep.max_rel_dev, std::abs(double(c) - mean) / mean);
    }

    rep.weyl_ratios.assign(size_t(h_max), 0.0);
    for (int h = 1; h <= h_max; ++h) {
        KahanComplexSum acc;
        for (const auto& rec : primes) {
            acc.add(ipow(quartic_twist(double(rec.rep.a), double(rec.rep.b), double(rec.norm)), h));
        }
        rep.weyl_ratios[size_t(h - 1)] = std::log(x) / x * std::abs(acc.value());
    }
    return rep;
}

Complex weighted_prime_sum(int h, double x) {
    if (!(x >= 2.0)) throw std::invalid_argument("weighted_prime_sum: x must be >= 2");
    const auto primes = gaussian_primes_upto(x);
    KahanComplexSum acc;
    for (const auto& rec : primes) {
        const Complex twist = h == 0 ? Complex{1.0, 0.0}
                                     : ipow(quartic_twist(double(rec.rep.a), double(rec.rep.b),
                                                          double(rec.norm)),
                                            std::abs(h));
        acc.add(4.0 * rec.log_abs * twist);
    }
    Complex s = acc.value();
    if (h < 0) s = std::conj(s);
    return s;
}

}  // namespace pnt
