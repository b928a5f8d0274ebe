#pragma once

#include <cmath>
#include <complex>

namespace pnt {

// Neumaier-compensated accumulator. Used for every real accumulation that can
// exceed ~1e5 terms, so identity checks at 1e-9 stay well inside double
// precision.
class KahanSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    KahanSum& operator+=(double x) {
        add(x);
        return *this;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class KahanComplexSum {
public:
    void add(std::complex<double> z) {
        re_.add(z.real());
        im_.add(z.imag());
    }
    KahanComplexSum& operator+=(std::complex<double> z) {
        add(z);
        return *this;
    }
    std::complex<double> value() const { return {re_.value(), im_.value()}; }

private:
    KahanSum re_;
    KahanSum im_;
};

}  // namespace pnt
