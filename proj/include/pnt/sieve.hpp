#pragma once

#include <cstdint>
#include <vector>

namespace pnt {

// Prime substrate: flags and an ascending prime list up to `limit`.
// Built by a segmented sieve of Eratosthenes; the segment size is a tuning
// knob that must not change the resulting table.
struct PrimeTable {
    uint64_t limit = 0;
    std::vector<bool> is_prime;     // indexed 0..limit
    std::vector<uint64_t> primes;   // strictly increasing

    // limit in [2, 2^33]; throws std::invalid_argument outside that range and
    // a resource error when the estimated footprint exceeds `mem_budget`.
    static PrimeTable build(uint64_t limit, uint64_t segment_size = uint64_t{1} << 20,
                            uint64_t mem_budget = uint64_t{2} << 30);

    bool prime(uint64_t n) const { return n <= limit && is_prime[n]; }
};

// pi(x) = #{p prime : p <= x}.  Requires 0 <= x <= table.limit.
int64_t prime_count(const PrimeTable& table, double x);

// Per-n values of the classical arithmetic functions on [1, limit]:
// mangoldt[n] = ln p on prime powers p^nu, else 0; moebius in {-1,0,1};
// liouville = (-1)^{Omega(n)}; squarefree flags.
// Filled by a linear (smallest-prime-factor) sieve, deliberately a different
// algorithm from PrimeTable so the two cross-validate.
struct ArithFnTable {
    uint64_t limit = 0;
    std::vector<double> mangoldt;    // index 0 unused
    std::vector<int8_t> moebius;
    std::vector<int8_t> liouville;
    std::vector<bool> squarefree;

    static ArithFnTable build(uint64_t limit);
};

// Point query for the Mangoldt function by trial division up to sqrt(n);
// independent of any table so sporadic queries beyond a table limit work.
// n = 0 throws std::invalid_argument.
double mangoldt_point(uint64_t n);

// Just the ascending prime list up to n, without the flag bitset.  For
// one-shot internal consumers that size their own range.
std::vector<uint64_t> primes_upto(uint64_t n);

// The two tables bundled at a common limit; immutable after construction.
struct Tables {
    PrimeTable primes;
    ArithFnTable arith;

    static Tables build(uint64_t limit) {
        return Tables{PrimeTable::build(limit), ArithFnTable::build(limit)};
    }
};

}  // namespace pnt
