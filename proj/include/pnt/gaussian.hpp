#pragma once

#include <cstdint>
#include <vector>

namespace pnt {

// Lattice point a + bi.  Components are bounded by 2^31 so the norm fits an
// unsigned 64-bit value; construction beyond that is rejected outright.
struct GaussianInt {
    int64_t a = 0;
    int64_t b = 0;

    uint64_t norm() const;   // a^2 + b^2
    double arg() const;      // in (-pi, pi]
    bool operator==(const GaussianInt&) const = default;
};

enum class GaussianClass { zero, unit, prime, composite };

// Prime elements of Z(i): norm is a rational prime, or an associate of a
// rational prime q with q = 3 mod 4.
GaussianClass classify(const GaussianInt& w);

// The unique associate with argument in [0, pi/2); idempotent.  w = 0 throws.
GaussianInt canonical_rep(const GaussianInt& w);

// Every nonzero w with norm <= x, ordered by (norm ascending, arg ascending).
std::vector<GaussianInt> enumerate_ball(double x);

// A canonical Gaussian prime: representative with arg in [0, pi/2), its norm,
// argument, and ln |p| = (1/2) ln norm.
struct GaussianPrimeRecord {
    GaussianInt rep;
    uint64_t norm = 0;
    double arg = 0.0;
    double log_abs = 0.0;
};

// All canonical primes with norm <= x, sorted by (norm, arg).
std::vector<GaussianPrimeRecord> gaussian_primes_upto(double x);

// Generalized Mangoldt function: ln |p| when w = unit * p^nu, else 0.
// Decided by factoring the norm and testing the pure-power structure.
double gaussian_mangoldt(const GaussianInt& w);

// psi_i(x): sum of the generalized Mangoldt values over the norm ball.
// Each prime power has exactly four associates carrying the same value, so
// the sum collapses to 4 * sum over canonical primes and exponents.
double gaussian_psi(double x);

// r(n): ordered, signed representations of n as a sum of two squares.
int64_t two_squares_count(uint64_t n);

// sum_{m<=n} r(m) - n pi, the Gauss circle remainder.
double circle_remainder(uint64_t n);

// Cumulative r table for grid consumers: sum(n) = sum_{m<=n} r(m) exactly.
struct CirclePrefix {
    std::vector<int64_t> cumulative;  // index 0 holds 0

    static CirclePrefix build(uint64_t n_max);
    int64_t sum(uint64_t n) const { return cumulative[n]; }
    double remainder(uint64_t n) const;
};

}  // namespace pnt
