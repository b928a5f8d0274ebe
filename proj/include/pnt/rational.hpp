#pragma once

#include <cstdint>

#include "pnt/sieve.hpp"

namespace pnt {

// Chebyshev functions at x, with the ratios the prime number theorem drives
// to 1.  psi is computed along two routes (Mangoldt-table sum and a
// prime/exponent double loop) that must agree to 1e-9 relative.
struct ChebyshevSummary {
    double x = 0.0;
    double psi = 0.0;        // sum_{n<=x} Lambda(n)
    double theta = 0.0;      // sum_{p<=x} ln p
    int64_t pi_x = 0;
    double ratio_psi = 0.0;  // psi(x)/x
    double ratio_pi = 0.0;   // pi(x) ln x / x
};
ChebyshevSummary chebyshev(double x, const Tables& tables);

// The exact chain behind sum_{n<=x} Lambda(n) floor(x/n) = ln floor(x)! and
// its binary-weighted variant that isolates x ln 2.
struct FactorialSums {
    double floor_weighted = 0.0;   // sum Lambda(n) floor(x/n)
    double log_factorial = 0.0;    // sum_{n<=floor(x)} ln n
    double binary_weighted = 0.0;  // sum Lambda(n) (floor(x/n) - 2 floor(x/2n))
    double x_log2 = 0.0;
};
FactorialSums factorial_identity(double x, const Tables& tables);

// floor(alpha) - 2 floor(alpha/2) for alpha >= 0; always 0 or 1.
int floor_parity(double alpha);

// Mertens' three sums, centered on their asymptotic main terms, plus the
// partial sum defining the constant that links (b) and (c).
struct MertensSums {
    double x = 0.0;
    double A = 0.0;           // sum ln p / p - ln x
    double B = 0.0;           // sum 1/p - ln ln x
    double P = 0.0;           // ln x * prod (1 - 1/p)
    double c5_partial = 0.0;  // sum_{n=2..40} (1/n) sum_{p<=x} p^-n
};
MertensSums mertens_sums(double x, const PrimeTable& table);

// Excision schedule for the principal-value logarithmic integral: epsilon
// shrinks geometrically until successive values differ by less than `stop`.
struct LiSchedule {
    double eps0 = 0.25;
    double shrink = 0.25;
    double stop = 1e-9;
    int max_steps = 20;
};
// li(x) as the symmetric principal value of the integral of 1/ln t over
// (0, x), x > 1.  Reproducible to 1e-8 absolute for x <= 1e8.
double log_integral(double x, const LiSchedule& schedule = {});

enum class SummatoryFn { moebius, liouville };
// Exact M(x) or L(x).
int64_t summatory(SummatoryFn fn, double x, const ArithFnTable& table);

// The two weak lower bounds on pi(x): the Euclid-style iterated-log bound and
// the square-free counting bound 2^pi(x) >= Q(x), checked in log space.
struct LowerBoundCheck {
    bool euclid_ok = false;
    bool squarefree_ok = false;
    int64_t q_x = 0;  // #{square-free n <= x}
};
LowerBoundCheck weak_lower_bounds(double x, const Tables& tables);

}  // namespace pnt
