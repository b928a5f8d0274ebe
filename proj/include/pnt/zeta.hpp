#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "pnt/sieve.hpp"

namespace pnt {

using Complex = std::complex<double>;

// A truncated series value together with a rigorous bound on everything that
// was dropped.  Every infinite sum in this module reports one.
struct SeriesEval {
    Complex value;
    double tail_bound = 0.0;
    int64_t terms_used = 0;
};

// Direct Dirichlet series sum_{n<=N} n^-z with N chosen so the integral tail
// estimate N^{1-sigma}/(sigma-1) is <= eps.  Re z >= 1.05 is required and the
// term budget is enforced: near sigma = 1 the direct series cannot reach small
// eps at any feasible N and a domain error reports the infeasibility.
SeriesEval zeta(Complex z, double eps);

// Elementary continuation: zeta(z) = 1/(z-1) + sum_n [n^-z - integral of t^-z
// over (n, n+1)], a telescoped comparison whose terms are O(|z| n^{-sigma-1}).
// Valid for Re z > 0 except z = 1; practical for Re z > 0.55.
SeriesEval zeta_continued(Complex z, double eps);

// Reference zeta for callers that need a value plus bound anywhere in
// Re z > 0.55, z != 1.  Backed by the telescoped continuation, which reaches
// a given eps in far fewer terms than the direct series near sigma = 1.
SeriesEval zeta_ref(Complex z, double eps);

// -zeta'/zeta as sum Lambda(n) n^-z, summed over prime powers with the tail
// bounded via Lambda(n) <= ln n.  Re z >= 1.1.
SeriesEval zeta_log_deriv(Complex z, double eps);

// log |zeta(s)^3 zeta(s+it)^4 zeta(s+2it)| via the Euler-product cosine
// expansion over primes <= prime_limit.  Each term is a nonnegative multiple
// of 3 + 4 cos(k t ln p) + cos(2 k t ln p), so the truncated value is >= 0 by
// construction; the dropped tail is also nonnegative.
struct ThetaLog {
    double log_theta = 0.0;       // the combined 3-4-1 sum
    double comp_sigma = 0.0;      // ln |zeta(sigma)|  (truncated, minus nothing)
    double comp_sigma_it = 0.0;   // ln |zeta(sigma + it)|
    double comp_sigma_2it = 0.0;  // ln |zeta(sigma + 2it)|
};
ThetaLog three_four_one(double sigma, double t, uint64_t prime_limit = 1'000'000);

// Two independent evaluations of -zeta'/zeta: the Dirichlet series and the
// Mellin transform z * integral of psi(x) x^{-z-1}, the latter summed exactly
// over the constancy intervals of the step function psi.
struct MellinCheck {
    Complex series;
    Complex integral;
    double combined_bound = 0.0;
};
MellinCheck mellin_check_rational(Complex z, double x_max, const Tables& tables);

// Growth certificate for the stabilized series: |partial_sums(n) - n*alpha|
// <= coef * n^exponent * (ln n)^log_power for n beyond the summed range.
struct GrowthCert {
    double coef = 1.0;
    double exponent = 0.5;
    double log_power = 0.0;
};

// Stabilized Dirichlet series: alpha * zeta(z) + sum (n^-z - (n+1)^-z) *
// (partial_sums(n) - n*alpha).  Converges wherever the certified deviation
// growth beats n^{Re z}; refuses Re z <= 0.55.  When alpha != 0 a reference
// zeta value is required; pass nullptr to let the dispatcher compute it.
SeriesEval stabilized_dirichlet(const std::function<double(int64_t)>& partial_sums, double alpha,
                                Complex z, int64_t terms, const GrowthCert& cert,
                                const SeriesEval* zeta_reference = nullptr);

// T(X) = integral over (1, X) of (psi(x) - x)/x^2, evaluated in closed form
// on each interval where psi is constant.  Returns (X, T(X)) in input order.
std::vector<std::pair<double, double>> tauberian_trace(std::span<const double> x_grid,
                                                       const Tables& tables);

}  // namespace pnt
