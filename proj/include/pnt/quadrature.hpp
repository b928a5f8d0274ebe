#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace pnt {

// Adaptive Gauss-Kronrod (7,15) integrator.  Bisects until the local
// |K15 - G7| estimate meets the tolerance or the depth cap is hit; depth 60
// lets panels shrink by 2^-60, enough for the integrable endpoint
// singularities produced by the principal-value excision.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int64_t evaluations = 0;
};

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-12, int max_depth = 60);

}  // namespace pnt
