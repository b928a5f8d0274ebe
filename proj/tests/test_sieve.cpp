#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pnt/envelopes.hpp"
#include "pnt/kahan.hpp"
#include "pnt/sieve.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace pnt;

TEST_CASE("prime table basics") {
    const auto t10 = PrimeTable::build(10);
    CHECK(t10.primes == std::vector<uint64_t>{2, 3, 5, 7});

    const auto t2 = PrimeTable::build(2);
    CHECK(t2.primes == std::vector<uint64_t>{2});

    const auto t100 = PrimeTable::build(100);
    CHECK(t100.primes.size() == 25);
    CHECK(t100.primes[0] == 2);
    CHECK(t100.primes[1] == 3);
}

TEST_CASE("prime table errors") {
    CHECK_THROWS_AS(PrimeTable::build(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeTable::build(0), std::invalid_argument);
    CHECK_THROWS_AS(PrimeTable::build((uint64_t{1} << 33) + 1), std::invalid_argument);
    // a deliberately tiny memory budget trips the resource guard
    CHECK_THROWS_AS(PrimeTable::build(1'000'000, 1 << 20, 1024), std::runtime_error);
}

TEST_CASE("segmentation does not change the table") {
    const auto a = PrimeTable::build(100'000, 64);
    const auto b = PrimeTable::build(100'000, 977);
    const auto c = PrimeTable::build(100'000);
    CHECK(a.primes == b.primes);
    CHECK(a.primes == c.primes);
    CHECK(a.is_prime == b.is_prime);
}

TEST_CASE("sieve agrees with trial division up to 1e4") {
    const auto& t = fixtures::tables_1e4().primes;
    for (uint64_t n = 0; n <= 10'000; ++n) {
        CAPTURE(n);
        REQUIRE(t.is_prime[n] == oracles::trial_division_is_prime(n));
    }
}

TEST_CASE("prime_count") {
    const auto& t = fixtures::tables_1e4().primes;
    CHECK(prime_count(t, 1.5) == 0);
    CHECK(prime_count(t, 10) == 4);
    CHECK(prime_count(t, 100) == 25);
    CHECK(prime_count(t, 2) == 1);
    CHECK(prime_count(t, 10'000) == 1229);
    CHECK_THROWS_AS(prime_count(t, 10'001), std::out_of_range);
    CHECK_THROWS_AS(prime_count(t, -1.0), std::invalid_argument);
    // monotone on a sample of adjacent reals
    for (double x = 0.0; x < 50.0; x += 0.5) {
        CHECK(prime_count(t, x) <= prime_count(t, x + 0.5));
    }
}

TEST_CASE("arithmetic function table on small n") {
    const auto& a = fixtures::tables_1e4().arith;
    const int expected_mu[11] = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1};
    for (int n = 1; n <= 10; ++n) CHECK(a.moebius[n] == expected_mu[n]);
    CHECK(a.liouville[8] == -1);  // Omega(8) = 3
    CHECK(a.liouville[9] == 1);   // Omega(9) = 2
    CHECK(a.mangoldt[9] == doctest::Approx(std::log(3.0)).epsilon(1e-14));
    CHECK(a.mangoldt[6] == 0.0);
}

TEST_CASE("moebius and liouville match full factorization up to 1e4") {
    const auto& a = fixtures::tables_1e4().arith;
    for (uint64_t n = 1; n <= 10'000; ++n) {
        CAPTURE(n);
        REQUIRE(a.moebius[n] == oracles::moebius_naive(n));
        REQUIRE(a.liouville[n] == oracles::liouville_naive(n));
        REQUIRE(a.squarefree[n] == (oracles::moebius_naive(n) != 0));
    }
}

TEST_CASE("divisor sum of Lambda equals ln n up to 1e4") {
    const auto& a = fixtures::tables_1e4().arith;
    for (uint64_t n = 2; n <= 10'000; ++n) {
        KahanSum s;
        for (uint64_t d = 1; d <= n; ++d) {
            if (n % d == 0) s.add(a.mangoldt[d]);
        }
        CAPTURE(n);
        REQUIRE(s.value() == doctest::Approx(std::log(double(n))).epsilon(1e-12));
    }
}

TEST_CASE("mangoldt point query") {
    CHECK(mangoldt_point(1) == 0.0);
    CHECK(mangoldt_point(8) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(mangoldt_point(12) == 0.0);
    CHECK(mangoldt_point(9973) == doctest::Approx(std::log(9973.0)).epsilon(1e-14));
    CHECK_THROWS_AS(mangoldt_point(0), std::invalid_argument);
    // agreement with the table and the naive factorization route
    const auto& a = fixtures::tables_1e4().arith;
    for (uint64_t n = 1; n <= 2'000; ++n) {
        CAPTURE(n);
        REQUIRE(mangoldt_point(n) == doctest::Approx(a.mangoldt[n]).epsilon(1e-13));
        REQUIRE(mangoldt_point(n) == doctest::Approx(oracles::mangoldt_naive(n)).epsilon(1e-13));
    }
}

TEST_CASE("square-free density trend") {
    const auto& a = fixtures::tables_1e6().arith;
    for (uint64_t x : {uint64_t(1e4), uint64_t(1e5), uint64_t(1e6)}) {
        int64_t q = 0;
        for (uint64_t n = 1; n <= x; ++n) q += a.squarefree[n];
        const double density = double(q) / double(x);
        CAPTURE(x);
        CHECK(density >= envelopes::kSquarefreeDensityLo);
        CHECK(density <= envelopes::kSquarefreeDensityHi);
    }
}
