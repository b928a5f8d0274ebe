#include "pnt/quadrature.hpp"

#include "pnt/kahan.hpp"

namespace pnt {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
constexpr double kWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr double gWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct PanelEval {
    double k15;
    double g7;
};

PanelEval eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kNodes[i]);
        fv[14 - i] = f(c + h * kNodes[i]);
    }
    fv[7] = f(c);
    double k15 = 0.0;
    for (int i = 0; i < 7; ++i) k15 += kWeights[i] * (fv[i] + fv[14 - i]);
    k15 += kWeights[7] * fv[7];
    // Gauss nodes are the odd Kronrod nodes.
    double g7 = gWeights[3] * fv[7];
    for (int i = 0; i < 3; ++i) g7 += gWeights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    return {k15 * h, g7 * h};
}

void integrate_rec(const std::function<double(double)>& f, double a, double b, double tol,
                   int depth, int max_depth, KahanSum& acc, KahanSum& err, int64_t& evals) {
    const PanelEval pe = eval_panel(f, a, b);
    evals += 15;
    const double delta = std::abs(pe.k15 - pe.g7);
    if (delta <= tol || depth >= max_depth) {
        acc.add(pe.k15);
        err.add(delta);
        return;
    }
    const double c = 0.5 * (a + b);
    integrate_rec(f, a, c, 0.5 * tol, depth + 1, max_depth, acc, err, evals);
    integrate_rec(f, c, b, 0.5 * tol, depth + 1, max_depth, acc, err, evals);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_depth) {
    QuadratureResult r;
    if (a == b) return r;
    KahanSum acc, err;
    integrate_rec(f, a, b, abs_tol, 0, max_depth, acc, err, r.evaluations);
    r.value = acc.value();
    r.error_estimate = err.value();
    return r;
}

}  // namespace pnt
