#pragma once

// Independent oracles for the unit suites: brute-force or alternative-route
// evaluations kept deliberately separate from the library implementations
// they audit.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "pnt/gaussian.hpp"
#include "pnt/sieve.hpp"

namespace oracles {

inline bool trial_division_is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

inline std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, int>> f;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline int moebius_naive(uint64_t n) {
    int sign = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

inline int liouville_naive(uint64_t n) {
    int omega = 0;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        omega += e;
    }
    return omega % 2 == 0 ? 1 : -1;
}

inline double mangoldt_naive(uint64_t n) {
    const auto f = factorize(n);
    if (f.size() != 1) return 0.0;
    return std::log(double(f[0].first));
}

// li(x) = Ei(ln x) for x > 1 by the everywhere-convergent series
// Ei(y) = gamma + ln y + sum y^k / (k k!).
inline double li_ei_series(double x) {
    constexpr double gamma = 0.5772156649015328606;
    const double y = std::log(x);
    double term = 1.0;
    double acc = 0.0;
    for (int k = 1; k < 400; ++k) {
        term *= y / double(k);
        const double add = term / double(k);
        acc += add;
        if (std::abs(add) < 1e-17 * std::abs(acc) && k > int(y)) break;
    }
    return gamma + std::log(y) + acc;
}

// Euler-Maclaurin zeta, valid well below Re s = 1; error ~ N^{-Re s - 7}.
inline std::complex<double> zeta_euler_maclaurin(std::complex<double> s, int n_cut = 50) {
    using C = std::complex<double>;
    const auto powc = [](double base, C e) {
        const double L = std::log(base);
        const double r = std::exp(-e.real() * L);
        const double a = -e.imag() * L;
        return C{r * std::cos(a), r * std::sin(a)};
    };
    C acc{0.0, 0.0};
    for (int n = 1; n <= n_cut; ++n) acc += powc(double(n), s);
    const double N = double(n_cut);
    const C Ns = powc(N, s);  // N^{-s}
    acc += Ns * N / (s - 1.0);
    acc -= 0.5 * Ns;
    const C s1 = s, s2 = s * (s + 1.0) * (s + 2.0), s3 = s2 * (s + 3.0) * (s + 4.0);
    acc += Ns / N * s1 / 12.0;
    acc -= Ns / (N * N * N) * s2 / 720.0;
    acc += Ns / (N * N * N * N * N) * s3 / 30240.0;
    return acc;
}

inline int64_t r_divisor_formula(uint64_t n) {
    int64_t d1 = 0, d3 = 0;
    for (uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        const uint64_t q = n / d;
        if (d % 4 == 1) ++d1;
        if (d % 4 == 3) ++d3;
        if (q != d) {
            if (q % 4 == 1) ++d1;
            if (q % 4 == 3) ++d3;
        }
    }
    return 4 * (d1 - d3);
}

// Direct transcendental route for the Weyl sum: atan2 per lattice point.
inline std::complex<double> weyl_brute(int h, double x) {
    std::complex<double> acc{0.0, 0.0};
    const auto r = int64_t(std::sqrt(x)) + 1;
    for (int64_t a = -r; a <= r; ++a) {
        for (int64_t b = -r; b <= r; ++b) {
            if (a == 0 && b == 0) continue;
            if (double(a) * double(a) + double(b) * double(b) > x) continue;
            const double ang = 4.0 * double(h) * std::atan2(double(b), double(a));
            acc += std::complex<double>{std::cos(ang), std::sin(ang)};
        }
    }
    return acc;
}

// psi_i straight from the definition: ball enumeration + pointwise Lambda_i.
inline double psi_i_definition(double x) {
    double acc = 0.0;
    for (const auto& w : pnt::enumerate_ball(x)) acc += pnt::gaussian_mangoldt(w);
    return acc;
}

// pi_i by exhaustive classification over the canonical quarter-lattice.
inline int64_t gaussian_prime_count_brute(double x) {
    int64_t count = 0;
    const auto r = int64_t(std::sqrt(x)) + 1;
    for (int64_t a = 1; a <= r; ++a) {
        for (int64_t b = 0; b <= r; ++b) {
            const pnt::GaussianInt w{a, b};
            if (double(w.norm()) > x) continue;
            if (pnt::classify(w) == pnt::GaussianClass::prime) ++count;
        }
    }
    return count;
}

}  // namespace oracles
