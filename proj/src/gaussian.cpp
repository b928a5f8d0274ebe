#include "pnt/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "pnt/sieve.hpp"

namespace pnt {

namespace {

constexpr int64_t kComponentCap = int64_t{1} << 31;

void check_components(const GaussianInt& w) {
    if (std::abs(w.a) > kComponentCap || std::abs(w.b) > kComponentCap) {
        throw std::out_of_range("GaussianInt: component magnitude exceeds 2^31");
    }
}

uint64_t isqrt_floor(double x) {
    if (x < 0.0) return 0;
    auto r = uint64_t(std::sqrt(x));
    while (r > 0 && double(r) * double(r) > x) --r;
    while (double(r + 1) * double(r + 1) <= x) ++r;
    return r;
}

bool is_rational_prime(uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace

uint64_t GaussianInt::norm() const {
    check_components(*this);
    const uint64_t aa = uint64_t(std::abs(a));
    const uint64_t bb = uint64_t(std::abs(b));
    return aa * aa + bb * bb;
}

double GaussianInt::arg() const { return std::atan2(double(b), double(a)); }

GaussianClass classify(const GaussianInt& w) {
    if (w.a == 0 && w.b == 0) return GaussianClass::zero;
    const uint64_t n = w.norm();
    if (n == 1) return GaussianClass::unit;
    if (is_rational_prime(n)) return GaussianClass::prime;
    if (w.a == 0 || w.b == 0) {
        const uint64_t q = uint64_t(std::abs(w.a) + std::abs(w.b));
        if (q % 4 == 3 && is_rational_prime(q)) return GaussianClass::prime;
    }
    return GaussianClass::composite;
}

GaussianInt canonical_rep(const GaussianInt& w) {
    if (w.a == 0 && w.b == 0) throw std::invalid_argument("canonical_rep: zero has no associate class");
    check_components(w);
    GaussianInt c = w;
    // Multiply by i (a,b) -> (-b,a) until arg lands in [0, pi/2), i.e. a > 0, b >= 0.
    for (int k = 0; k < 4; ++k) {
        if (c.a > 0 && c.b >= 0) return c;
        c = GaussianInt{-c.b, c.a};
    }
    throw std::logic_error("canonical_rep: rotation failed");
}

std::vector<GaussianInt> enumerate_ball(double x) {
    std::vector<GaussianInt> pts;
    if (!(x >= 1.0)) return pts;
    const int64_t r = int64_t(isqrt_floor(x));
    pts.reserve(size_t(3.2 * x) + 8);
    for (int64_t a = -r; a <= r; ++a) {
        const double rem = x - double(a) * double(a);
        const int64_t bmax = int64_t(isqrt_floor(rem));
        for (int64_t b = -bmax; b <= bmax; ++b) {
            if (a == 0 && b == 0) continue;
            pts.push_back(GaussianInt{a, b});
        }
    }
    std::sort(pts.begin(), pts.end(), [](const GaussianInt& u, const GaussianInt& v) {
        const uint64_t nu = u.norm(), nv = v.norm();
        if (nu != nv) return nu < nv;
        return u.arg() < v.arg();
    });
    return pts;
}

std::vector<GaussianPrimeRecord> gaussian_primes_upto(double x) {
    if (!(x >= 2.0)) throw std::invalid_argument("gaussian_primes_upto: x must be >= 2");
    const uint64_t n_max = uint64_t(std::floor(x));
    const PrimeTable table = PrimeTable::build(n_max);

    std::vector<GaussianPrimeRecord> out;
    // Split and ramified primes: a, b >= 1 with a^2 + b^2 a rational prime.
    const uint64_t r = isqrt_floor(x);
    for (uint64_t a = 1; a <= r; ++a) {
        const uint64_t bmax = isqrt_floor(x - double(a) * double(a));
        for (uint64_t b = 1; b <= bmax; ++b) {
            const uint64_t n = a * a + b * b;
            if (table.prime(n)) {
                GaussianPrimeRecord rec;
                rec.rep = GaussianInt{int64_t(a), int64_t(b)};
                rec.norm = n;
                rec.arg = rec.rep.arg();
                rec.log_abs = 0.5 * std::log(double(n));
                out.push_back(rec);
            }
        }
    }
    // Inert primes q = 3 mod 4 sit on the axis with norm q^2.
    for (uint64_t q = 3; q * q <= n_max; ++q) {
        if (q % 4 == 3 && table.prime(q)) {
            GaussianPrimeRecord rec;
            rec.rep = GaussianInt{int64_t(q), 0};
            rec.norm = q * q;
            rec.arg = 0.0;
            rec.log_abs = std::log(double(q));
            out.push_back(rec);
        }
    }
    std::sort(out.begin(), out.end(), [](const GaussianPrimeRecord& u, const GaussianPrimeRecord& v) {
        if (u.norm != v.norm) return u.norm < v.norm;
        return u.arg < v.arg;
    });
    return out;
}

double gaussian_mangoldt(const GaussianInt& w) {
    if (w.a == 0 && w.b == 0) throw std::invalid_argument("gaussian_mangoldt: w must be nonzero");
    uint64_t n = w.norm();
    if (n == 1) return 0.0;

    // Factor the norm; a prime power u * p^nu forces a single rational prime.
    uint64_t base = 0;
    int exponent = 0;
    uint64_t m = n;
    for (uint64_t d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        base = d;
        while (m % d == 0) {
            m /= d;
            ++exponent;
        }
        break;
    }
    if (base == 0) {
        base = m;  // the norm itself is prime
        exponent = 1;
        m = 1;
    }
    if (m != 1) return 0.0;  // mixed norm

    if (base == 2) {
        // Norm 2^nu: necessarily an associate of (1+i)^nu.
        return 0.5 * std::log(2.0);
    }
    if (base % 4 == 1) {
        // Norm p^nu with p split: prime power iff the conjugate pair does not
        // both divide w, i.e. p does not divide w in Z(i).
        if (w.a % int64_t(base) == 0 && w.b % int64_t(base) == 0) return 0.0;
        return 0.5 * std::log(double(base));
    }
    // base = 3 mod 4: norm q^{2k}; w is u * q^k exactly when it lies on an axis
    // at distance q^k.
    if (exponent % 2 != 0) return 0.0;  // not a norm of a q-power
    const uint64_t half = uint64_t(exponent / 2);
    uint64_t qk = 1;
    for (uint64_t i = 0; i < half; ++i) qk *= base;
    const bool on_axis = (w.b == 0 && uint64_t(std::abs(w.a)) == qk) ||
                         (w.a == 0 && uint64_t(std::abs(w.b)) == qk);
    return on_axis ? std::log(double(base)) : 0.0;
}

double gaussian_psi(double x) {
    if (!(x >= 1.0)) return 0.0;
    if (x < 2.0) return 0.0;
    const auto primes = gaussian_primes_upto(x);
    // psi_i(x) = 4 sum over canonical p and nu >= 1 with |p|^{2 nu} <= x.
    double acc = 0.0;
    for (const auto& rec : primes) {
        double norm_pow = double(rec.norm);
        while (norm_pow <= x) {
            acc += 4.0 * rec.log_abs;
            norm_pow *= double(rec.norm);
        }
    }
    return acc;
}

int64_t two_squares_count(uint64_t n) {
    if (n == 0) throw std::invalid_argument("two_squares_count: n must be >= 1");
    int64_t count = 0;
    const uint64_t r = isqrt_floor(double(n));
    for (uint64_t a = 0; a <= r; ++a) {
        const uint64_t rest = n - a * a;
        const uint64_t b = isqrt_floor(double(rest));
        if (b * b == rest) {
            // The scan fixes a >= 0; sign choices give 4 points, or 2 when a
            // component is zero.  (b, a) is picked up at its own a value.
            count += (a == 0 || b == 0) ? 2 : 4;
        }
    }
    return count;
}

CirclePrefix CirclePrefix::build(uint64_t n_max) {
    if (n_max == 0) throw std::invalid_argument("CirclePrefix: n_max must be >= 1");
    std::vector<int64_t> counts(n_max + 1, 0);
    const uint64_t r = isqrt_floor(double(n_max));
    for (uint64_t a = 1; a <= r; ++a) {
        counts[a * a] += 4;  // axis points (±a, 0), (0, ±a)
    }
    for (uint64_t a = 1; a * a < n_max; ++a) {
        const uint64_t rem = n_max - a * a;
        const uint64_t bmax = isqrt_floor(double(rem));
        for (uint64_t b = 1; b <= bmax; ++b) {
            counts[a * a + b * b] += 4;  // (±a, ±b)
        }
    }
    CirclePrefix out;
    out.cumulative.assign(n_max + 1, 0);
    int64_t run = 0;
    for (uint64_t n = 1; n <= n_max; ++n) {
        run += counts[n];
        out.cumulative[n] = run;
    }
    return out;
}

double CirclePrefix::remainder(uint64_t n) const {
    return double(cumulative[n]) - double(n) * std::numbers::pi;
}

double circle_remainder(uint64_t n) {
    if (n == 0) throw std::invalid_argument("circle_remainder: n must be >= 1");
    return CirclePrefix::build(n).remainder(n);
}

}  // namespace pnt
