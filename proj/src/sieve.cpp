#include "pnt/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pnt {

namespace {

// Simple sieve for the base primes up to n (used for segment marking).
std::vector<uint64_t> small_primes(uint64_t n) {
    std::vector<bool> flags(n + 1, true);
    if (n >= 0) flags[0] = false;
    if (n >= 1) flags[1] = false;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (!flags[p]) continue;
        for (uint64_t q = p * p; q <= n; q += p) flags[q] = false;
    }
    std::vector<uint64_t> out;
    for (uint64_t p = 2; p <= n; ++p) {
        if (flags[p]) out.push_back(p);
    }
    return out;
}

}  // namespace

PrimeTable PrimeTable::build(uint64_t limit, uint64_t segment_size, uint64_t mem_budget) {
    if (limit < 2) throw std::invalid_argument("PrimeTable: limit must be >= 2");
    if (limit > (uint64_t{1} << 33)) {
        throw std::invalid_argument("PrimeTable: limit must be <= 2^33");
    }
    // Footprint estimate: one bit per flag plus 8 bytes per prime
    // (pi(x) < 1.26 x / ln x for x >= 17).
    const double est_primes = limit < 17 ? 8.0 : 1.26 * double(limit) / std::log(double(limit));
    const double est_bytes = double(limit) / 8.0 + est_primes * 8.0;
    if (est_bytes > double(mem_budget)) {
        throw std::runtime_error("PrimeTable: estimated memory " + std::to_string(uint64_t(est_bytes)) +
                                 " bytes exceeds budget");
    }
    if (segment_size < 64) segment_size = 64;

    PrimeTable t;
    t.limit = limit;
    t.is_prime.assign(limit + 1, false);

    const uint64_t root = uint64_t(std::sqrt(double(limit))) + 2;
    const auto base = small_primes(std::min(root, limit));

    std::vector<uint8_t> seg;
    for (uint64_t lo = 2; lo <= limit; lo += segment_size) {
        const uint64_t hi = std::min(limit, lo + segment_size - 1);
        seg.assign(hi - lo + 1, 1);
        for (uint64_t p : base) {
            if (p * p > hi) break;
            uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
            for (uint64_t q = start; q <= hi; q += p) {
                if (q >= p * p) seg[q - lo] = 0;
            }
        }
        for (uint64_t n = lo; n <= hi; ++n) {
            if (seg[n - lo]) t.is_prime[n] = true;
        }
    }

    size_t count = 0;
    for (uint64_t n = 2; n <= limit; ++n) count += t.is_prime[n];
    t.primes.reserve(count);
    for (uint64_t n = 2; n <= limit; ++n) {
        if (t.is_prime[n]) t.primes.push_back(n);
    }
    return t;
}

int64_t prime_count(const PrimeTable& table, double x) {
    if (!(x >= 0.0)) throw std::invalid_argument("prime_count: x must be >= 0");
    if (x > double(table.limit)) throw std::out_of_range("prime_count: x exceeds table limit");
    const uint64_t n = uint64_t(std::floor(x));
    auto it = std::upper_bound(table.primes.begin(), table.primes.end(), n);
    return int64_t(it - table.primes.begin());
}

ArithFnTable ArithFnTable::build(uint64_t limit) {
    if (limit < 1) throw std::invalid_argument("ArithFnTable: limit must be >= 1");

    ArithFnTable t;
    t.limit = limit;
    t.mangoldt.assign(limit + 1, 0.0);
    t.moebius.assign(limit + 1, 0);
    t.liouville.assign(limit + 1, 0);
    t.squarefree.assign(limit + 1, false);

    t.moebius[1] = 1;
    t.liouville[1] = 1;
    t.squarefree[1] = true;

    // Linear sieve over smallest prime factors.
    std::vector<uint32_t> spf(limit + 1, 0);
    std::vector<uint64_t> primes;
    for (uint64_t i = 2; i <= limit; ++i) {
        if (spf[i] == 0) {
            spf[i] = uint32_t(i);
            primes.push_back(i);
            t.moebius[i] = -1;
            t.liouville[i] = -1;
        }
        for (uint64_t p : primes) {
            if (p > spf[i] || i * p > limit) break;
            const uint64_t m = i * p;
            spf[m] = uint32_t(p);
            t.liouville[m] = int8_t(-t.liouville[i]);
            t.moebius[m] = (i % p == 0) ? int8_t(0) : int8_t(-t.moebius[i]);
        }
    }
    for (uint64_t n = 2; n <= limit; ++n) t.squarefree[n] = t.moebius[n] != 0;

    for (uint64_t p : primes) {
        const double lp = std::log(double(p));
        for (uint64_t q = p; q <= limit; q *= p) {
            t.mangoldt[q] = lp;
            if (q > limit / p) break;  // next power would overflow
        }
    }
    return t;
}

std::vector<uint64_t> primes_upto(uint64_t n) {
    if (n < 2) return {};
    return small_primes(n);
}

double mangoldt_point(uint64_t n) {
    if (n == 0) throw std::invalid_argument("mangoldt_point: n must be >= 1");
    if (n == 1) return 0.0;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        return n == 1 ? std::log(double(p)) : 0.0;
    }
    return std::log(double(n));  // n itself prime
}

}  // namespace pnt
