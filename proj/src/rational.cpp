#include "pnt/rational.hpp"

#include <cmath>
#include <stdexcept>

#include "pnt/kahan.hpp"
#include "pnt/quadrature.hpp"

namespace pnt {

namespace {

uint64_t floor_limit(double x) { return uint64_t(std::floor(x)); }

void require_range(double x, const Tables& tables, double lo) {
    if (!(x >= lo)) throw std::invalid_argument("x below valid range");
    if (x > double(tables.arith.limit) || x > double(tables.primes.limit)) {
        throw std::out_of_range("x exceeds table limit");
    }
}

}  // namespace

ChebyshevSummary chebyshev(double x, const Tables& tables) {
    require_range(x, tables, 2.0);
    const uint64_t n_max = floor_limit(x);

    KahanSum psi_table;
    for (uint64_t n = 2; n <= n_max; ++n) psi_table.add(tables.arith.mangoldt[n]);

    KahanSum psi_loop, theta;
    for (uint64_t p : tables.primes.primes) {
        if (p > n_max) break;
        const double lp = std::log(double(p));
        theta.add(lp);
        for (double q = double(p); q <= x; q *= double(p)) psi_loop.add(lp);
    }

    ChebyshevSummary s;
    s.x = x;
    s.psi = psi_table.value();
    s.theta = theta.value();
    const double disagree = std::abs(s.psi - psi_loop.value());
    if (disagree > 1e-9 * std::max(1.0, std::abs(s.psi))) {
        throw std::logic_error("chebyshev: psi routes disagree beyond 1e-9 relative");
    }
    s.pi_x = prime_count(tables.primes, x);
    s.ratio_psi = s.psi / x;
    s.ratio_pi = double(s.pi_x) * std::log(x) / x;
    return s;
}

FactorialSums factorial_identity(double x, const Tables& tables) {
    require_range(x, tables, 2.0);
    const uint64_t n_max = floor_limit(x);

    KahanSum floor_weighted, log_factorial, binary_weighted;
    for (uint64_t n = 2; n <= n_max; ++n) {
        const double lam = tables.arith.mangoldt[n];
        if (lam != 0.0) {
            const double fl = std::floor(x / double(n));
            floor_weighted.add(lam * fl);
            binary_weighted.add(lam * (fl - 2.0 * std::floor(x / (2.0 * double(n)))));
        }
        log_factorial.add(std::log(double(n)));
    }

    FactorialSums r;
    r.floor_weighted = floor_weighted.value();
    r.log_factorial = log_factorial.value();
    r.binary_weighted = binary_weighted.value();
    r.x_log2 = x * std::log(2.0);
    return r;
}

int floor_parity(double alpha) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("floor_parity: alpha must be >= 0");
    return int(std::floor(alpha) - 2.0 * std::floor(alpha / 2.0));
}

MertensSums mertens_sums(double x, const PrimeTable& table) {
    if (!(x >= 3.0)) throw std::invalid_argument("mertens_sums: x must be >= 3");
    if (x > double(table.limit)) throw std::out_of_range("mertens_sums: x exceeds table limit");

    KahanSum log_ratio, recip, log_prod, c5;
    for (uint64_t p : table.primes) {
        if (double(p) > x) break;
        const double pd = double(p);
        const double lp = std::log(pd);
        log_ratio.add(lp / pd);
        recip.add(1.0 / pd);
        log_prod.add(std::log1p(-1.0 / pd));
        // Exponent cutoff 40: the dropped tail sum_{n>40} (1/n) p^-n is below
        // a geometric 2^-40 < 1e-12 already at p = 2.
        double t = 1.0 / (pd * pd);
        for (int n = 2; n <= 40; ++n) {
            c5.add(t / double(n));
            t /= pd;
            if (t < 1e-22) break;
        }
    }

    MertensSums m;
    m.x = x;
    m.A = log_ratio.value() - std::log(x);
    m.B = recip.value() - std::log(std::log(x));
    m.P = std::log(x) * std::exp(log_prod.value());
    m.c5_partial = c5.value();
    return m;
}

namespace {

// One excision level: integral of 1/ln t over (0, 1-eps) u (1+eps, x),
// with the pieces near t = 1 evaluated in the offset variable so log1p keeps
// full precision where 1/ln t blows up.
double li_excised(double x, double eps, double quad_tol) {
    const auto direct = [](double t) { return 1.0 / std::log(t); };
    const auto below = [](double u) { return 1.0 / std::log1p(-u); };  // t = 1-u
    const auto above = [](double u) { return 1.0 / std::log1p(u); };   // t = 1+u

    KahanSum total;
    total.add(integrate_adaptive(direct, 0.0, 0.5, quad_tol).value);
    total.add(integrate_adaptive(below, eps, 0.5, quad_tol).value);
    if (x <= 2.0) {
        total.add(integrate_adaptive(above, eps, x - 1.0, quad_tol).value);
    } else {
        total.add(integrate_adaptive(above, eps, 1.0, quad_tol).value);
        total.add(integrate_adaptive(direct, 2.0, x, quad_tol).value);
    }
    return total.value();
}

}  // namespace

double log_integral(double x, const LiSchedule& schedule) {
    if (!(x > 1.0)) throw std::invalid_argument("log_integral: x must be > 1");

    double eps = schedule.eps0;
    if (eps >= x - 1.0) eps = 0.5 * (x - 1.0);
    double prev = li_excised(x, eps, 1e-12);
    for (int step = 1; step < schedule.max_steps; ++step) {
        eps *= schedule.shrink;
        const double cur = li_excised(x, eps, 1e-12);
        if (std::abs(cur - prev) < schedule.stop) return cur;
        prev = cur;
    }
    return prev;
}

int64_t summatory(SummatoryFn fn, double x, const ArithFnTable& table) {
    if (!(x >= 1.0)) throw std::invalid_argument("summatory: x must be >= 1");
    if (x > double(table.limit)) throw std::out_of_range("summatory: x exceeds table limit");
    const uint64_t n_max = floor_limit(x);
    int64_t acc = 0;
    switch (fn) {
        case SummatoryFn::moebius:
            for (uint64_t n = 1; n <= n_max; ++n) acc += table.moebius[n];
            break;
        case SummatoryFn::liouville:
            for (uint64_t n = 1; n <= n_max; ++n) acc += table.liouville[n];
            break;
        default:
            throw std::invalid_argument("summatory: unknown function tag");
    }
    return acc;
}

LowerBoundCheck weak_lower_bounds(double x, const Tables& tables) {
    require_range(x, tables, 4.0);
    const uint64_t n_max = floor_limit(x);

    LowerBoundCheck r;
    const double pi_x = double(prime_count(tables.primes, x));
    const double ln2 = std::log(2.0);
    r.euclid_ok = pi_x >= std::log(std::log(x) / ln2) / ln2;

    int64_t q = 0;
    for (uint64_t n = 1; n <= n_max; ++n) q += tables.arith.squarefree[n];
    r.q_x = q;
    // 2^pi(x) >= Q(x), compared in log space to avoid overflow.
    r.squarefree_ok = pi_x * ln2 >= std::log(double(q));
    return r;
}

}  // namespace pnt
