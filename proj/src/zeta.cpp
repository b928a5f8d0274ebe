#include "pnt/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pnt/envelopes.hpp"
#include "pnt/kahan.hpp"

namespace pnt {

namespace {

constexpr int64_t kTermBudget = int64_t{1} << 27;

// n^{-z} for n >= 1.
inline Complex npow_neg(double n, Complex z) {
    const double L = std::log(n);
    const double r = std::exp(-z.real() * L);
    const double a = -z.imag() * L;
    return {r * std::cos(a), r * std::sin(a)};
}

// Tail of sum_{n>N} ln n * n^{-sigma} via the integral estimate.
double log_weighted_tail(double N, double sigma) {
    const double s1 = sigma - 1.0;
    return std::pow(N, -s1) * (std::log(N) / s1 + 1.0 / (s1 * s1));
}

}  // namespace

SeriesEval zeta(Complex z, double eps) {
    const double sigma = z.real();
    if (sigma < 1.05) throw std::domain_error("zeta: direct series requires Re z >= 1.05");
    if (!(eps > 0.0)) throw std::invalid_argument("zeta: eps must be positive");

    // |sum_{n>N} n^-z| <= N^{1-sigma}/(sigma-1) <= eps
    const double n_real = std::pow(eps * (sigma - 1.0), -1.0 / (sigma - 1.0));
    if (!(n_real < double(kTermBudget))) {
        throw std::domain_error("zeta: eps unreachable within term budget at this Re z");
    }
    const int64_t n_terms = std::max<int64_t>(2, int64_t(std::ceil(n_real)));

    KahanComplexSum acc;
    if (z.imag() == 0.0 && z.real() == std::floor(z.real()) && z.real() <= 8.0) {
        const int k = int(z.real());
        for (int64_t n = 1; n <= n_terms; ++n) {
            double t = 1.0 / double(n);
            double term = t;
            for (int j = 1; j < k; ++j) term *= t;
            acc.add({term, 0.0});
        }
    } else {
        for (int64_t n = 1; n <= n_terms; ++n) acc.add(npow_neg(double(n), z));
    }

    SeriesEval out;
    out.value = acc.value();
    out.tail_bound = std::pow(double(n_terms), 1.0 - sigma) / (sigma - 1.0);
    out.terms_used = n_terms;
    return out;
}

SeriesEval zeta_continued(Complex z, double eps) {
    const double sigma = z.real();
    if (sigma <= 0.55) throw std::domain_error("zeta_continued: requires Re z > 0.55");
    if (z == Complex{1.0, 0.0}) throw std::domain_error("zeta_continued: pole at z = 1");
    if (!(eps > 0.0)) throw std::invalid_argument("zeta_continued: eps must be positive");

    // Each telescoped term is bounded by |z| n^{-sigma-1}/2, so the tail after
    // N is at most |z| N^{-sigma} / (2 sigma).
    const double zmod = std::abs(z);
    const double n_real = std::pow(zmod / (2.0 * sigma * eps), 1.0 / sigma);
    if (!(n_real < double(kTermBudget))) {
        throw std::domain_error("zeta_continued: eps unreachable within term budget");
    }
    const int64_t n_terms = std::max<int64_t>(8, int64_t(std::ceil(n_real)));

    const Complex one_minus_z = Complex{1.0, 0.0} - z;
    KahanComplexSum acc;
    Complex cur = {1.0, 0.0};  // n^{-z} at n = 1
    for (int64_t n = 1; n <= n_terms; ++n) {
        const Complex nxt = npow_neg(double(n + 1), z);
        // n^{-z} - ((n+1)^{1-z} - n^{1-z}) / (1-z)
        const Complex block = (nxt * double(n + 1) - cur * double(n)) / one_minus_z;
        acc.add(cur - block);
        cur = nxt;
    }

    SeriesEval out;
    out.value = Complex{1.0, 0.0} / (z - Complex{1.0, 0.0}) + acc.value();
    out.tail_bound = zmod * std::pow(double(n_terms), -sigma) / (2.0 * sigma);
    out.terms_used = n_terms;
    return out;
}

SeriesEval zeta_ref(Complex z, double eps) {
    // The telescoped form needs ~(|z|/eps)^{1/sigma} terms against the direct
    // series' (1/eps)^{1/(sigma-1)}; it wins everywhere the reference is used.
    return zeta_continued(z, eps);
}

SeriesEval zeta_log_deriv(Complex z, double eps) {
    const double sigma = z.real();
    if (sigma < 1.1) throw std::domain_error("zeta_log_deriv: requires Re z >= 1.1");
    if (!(eps > 0.0)) throw std::invalid_argument("zeta_log_deriv: eps must be positive");

    int64_t n_terms = 1024;
    while (log_weighted_tail(double(n_terms), sigma) > eps) {
        n_terms *= 2;
        if (n_terms > kTermBudget) {
            throw std::domain_error("zeta_log_deriv: eps unreachable within term budget");
        }
    }

    const auto primes = primes_upto(uint64_t(n_terms));
    KahanComplexSum acc;
    for (uint64_t p : primes) {
        const double lp = std::log(double(p));
        const Complex base = npow_neg(double(p), z);
        Complex term = base;
        uint64_t q = p;
        while (true) {
            acc.add(lp * term);
            if (q > uint64_t(n_terms) / p) break;
            q *= p;
            term *= base;
        }
    }

    SeriesEval out;
    out.value = acc.value();
    out.tail_bound = log_weighted_tail(double(n_terms), sigma);
    out.terms_used = n_terms;
    return out;
}

ThetaLog three_four_one(double sigma, double t, uint64_t prime_limit) {
    if (sigma < 1.05) throw std::domain_error("three_four_one: requires sigma >= 1.05");

    const auto primes = primes_upto(prime_limit);
    KahanSum total, c_sigma, c_it, c_2it;
    for (uint64_t p : primes) {
        const double lp = std::log(double(p));
        const double ratio = std::exp(-sigma * lp);  // p^-sigma
        double pk = ratio;
        for (int k = 1; pk > 1e-18; ++k, pk *= ratio) {
            const double common = pk / double(k);
            const double phi = double(k) * t * lp;
            const double c1 = std::cos(phi);
            const double c2 = std::cos(2.0 * phi);
            c_sigma.add(common);
            c_it.add(common * c1);
            c_2it.add(common * c2);
            total.add(common * (3.0 + 4.0 * c1 + c2));
        }
    }

    ThetaLog out;
    out.log_theta = total.value();
    out.comp_sigma = c_sigma.value();
    out.comp_sigma_it = c_it.value();
    out.comp_sigma_2it = c_2it.value();
    return out;
}

namespace {

// Jump points of psi: all prime powers q = p^k <= x_max with weight ln p,
// sorted ascending.
std::vector<std::pair<uint64_t, double>> mangoldt_steps(const PrimeTable& table,
                                                        uint64_t x_max) {
    std::vector<std::pair<uint64_t, double>> steps;
    for (uint64_t p : table.primes) {
        if (p > x_max) break;
        const double lp = std::log(double(p));
        uint64_t q = p;
        while (true) {
            steps.emplace_back(q, lp);
            if (q > x_max / p) break;
            q *= p;
        }
    }
    std::sort(steps.begin(), steps.end());
    return steps;
}

}  // namespace

MellinCheck mellin_check_rational(Complex z, double x_max, const Tables& tables) {
    if (z.real() < 1.5) throw std::domain_error("mellin_check_rational: requires Re z >= 1.5");
    if (!(x_max >= 1e3)) throw std::invalid_argument("mellin_check_rational: x_max must be >= 1e3");
    if (x_max > double(tables.primes.limit)) {
        throw std::out_of_range("mellin_check_rational: x_max exceeds table limit");
    }
    const double sigma = z.real();

    // Series side at the best eps reachable inside the term budget.
    const double eps_floor = log_weighted_tail(double(kTermBudget / 2), sigma) * 1.01;
    const SeriesEval series = zeta_log_deriv(z, std::max(1e-8, eps_floor));

    // Integral side: z * integral of psi(x) x^{-z-1} over (1, x_max), summed
    // in closed form over the constancy intervals of psi.  The z factor
    // cancels against the antiderivative, leaving sum psi * (a^-z - b^-z).
    const auto steps = mangoldt_steps(tables.primes, uint64_t(std::floor(x_max)));
    KahanComplexSum integral;
    KahanSum psi;
    Complex cur_pow = {1.0, 0.0};  // (current position)^-z, starts at x = 1
    for (const auto& [q, w] : steps) {
        const Complex q_pow = npow_neg(double(q), z);
        const double psi_val = psi.value();
        if (psi_val != 0.0) integral.add(psi_val * (cur_pow - q_pow));
        psi.add(w);
        cur_pow = q_pow;
    }
    integral.add(psi.value() * (cur_pow - npow_neg(x_max, z)));

    MellinCheck out;
    out.series = series.value;
    out.integral = integral.value();
    // Dropped integral tail: psi(x) <= 2x gives |z| * 2 * x_max^{1-sigma}/(sigma-1).
    const double integral_tail = std::abs(z) * envelopes::kPsiUpperCoef *
                                 std::pow(x_max, 1.0 - sigma) / (sigma - 1.0);
    out.combined_bound = series.tail_bound + integral_tail;
    return out;
}

SeriesEval stabilized_dirichlet(const std::function<double(int64_t)>& partial_sums, double alpha,
                                Complex z, int64_t terms, const GrowthCert& cert,
                                const SeriesEval* zeta_reference) {
    const double sigma = z.real();
    if (sigma <= 0.55) {
        throw std::domain_error("stabilized_dirichlet: divergent budget, requires Re z > 0.55");
    }
    if (terms < 10) throw std::invalid_argument("stabilized_dirichlet: terms must be >= 10");
    if (cert.log_power != 0.0 && cert.log_power != 1.0) {
        throw std::invalid_argument("stabilized_dirichlet: cert.log_power must be 0 or 1");
    }
    if (sigma - cert.exponent <= 1e-3) {
        throw std::domain_error("stabilized_dirichlet: certified growth too strong for Re z");
    }

    SeriesEval ref{{0.0, 0.0}, 0.0, 0};
    if (alpha != 0.0) {
        ref = zeta_reference != nullptr ? *zeta_reference : zeta_ref(z, 1e-8);
    }

    KahanComplexSum acc;
    Complex cur = {1.0, 0.0};
    for (int64_t n = 1; n <= terms; ++n) {
        const Complex nxt = npow_neg(double(n + 1), z);
        const double dev = partial_sums(n) - double(n) * alpha;
        if (dev != 0.0) acc.add((cur - nxt) * dev);
        cur = nxt;
    }

    // |n^-z - (n+1)^-z| <= |z| n^{-sigma-1}; with the certified deviation
    // growth the dropped tail integrates in closed form.
    const double a = sigma - cert.exponent;  // > 0
    const double N = double(terms);
    double tail = std::pow(N, -a) / a;
    if (cert.log_power == 1.0) tail = std::pow(N, -a) * (std::log(N) / a + 1.0 / (a * a));
    tail *= std::abs(z) * cert.coef;

    SeriesEval out;
    out.value = alpha * ref.value + acc.value();
    out.tail_bound = tail + std::abs(alpha) * ref.tail_bound;
    out.terms_used = terms;
    return out;
}

std::vector<std::pair<double, double>> tauberian_trace(std::span<const double> x_grid,
                                                       const Tables& tables) {
    for (size_t i = 0; i < x_grid.size(); ++i) {
        if (!(x_grid[i] >= 1.0)) throw std::invalid_argument("tauberian_trace: grid must be >= 1");
        if (i > 0 && !(x_grid[i] >= x_grid[i - 1])) {
            throw std::invalid_argument("tauberian_trace: grid must be ascending");
        }
        if (x_grid[i] > double(tables.primes.limit)) {
            throw std::out_of_range("tauberian_trace: grid exceeds table limit");
        }
    }
    std::vector<std::pair<double, double>> out;
    if (x_grid.empty()) return out;

    const auto steps = mangoldt_steps(tables.primes, uint64_t(std::floor(x_grid.back())));
    // Closed form on [a,b) where psi = c: integral of (c-x)/x^2 is
    // c (1/a - 1/b) - ln(b/a).
    KahanSum trace, psi;
    double pos = 1.0;
    size_t next_step = 0;
    for (double X : x_grid) {
        while (next_step < steps.size() && double(steps[next_step].first) <= X) {
            const double q = double(steps[next_step].first);
            trace.add(psi.value() * (1.0 / pos - 1.0 / q) - std::log1p((q - pos) / pos));
            psi.add(steps[next_step].second);
            pos = q;
            ++next_step;
        }
        trace.add(psi.value() * (1.0 / pos - 1.0 / X) - std::log1p((X - pos) / pos));
        pos = X;
        out.emplace_back(X, trace.value());
    }
    return out;
}

}  // namespace pnt
