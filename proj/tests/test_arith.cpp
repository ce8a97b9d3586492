#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "polya5/arith.hpp"
#include "polya5/errors.hpp"

using namespace polya5;

namespace {

// independent oracle: plain sieve of Eratosthenes
std::vector<bool> sieve_oracle(std::uint32_t limit) {
    std::vector<bool> prime(limit + 1, true);
    prime[0] = prime[1] = false;
    for (std::uint64_t i = 2; i * i <= limit; ++i)
        if (prime[i])
            for (std::uint64_t j = i * i; j <= limit; j += i) prime[j] = false;
    return prime;
}

}  // namespace

TEST_CASE("is_prime examples") {
    CHECK(is_prime(71));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(145441));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    // around the sieve boundary
    CHECK(is_prime(999983));
    CHECK_FALSE(is_prime(999984));
    CHECK(is_prime(1000003));
    // Mersenne prime 2^61 - 1, far beyond the sieve
    CHECK(is_prime(2305843009213693951ull));
    CHECK_FALSE(is_prime(2305843009213693951ull - 2));
}

TEST_CASE("is_prime agrees with a sieve oracle up to 1e5") {
    auto oracle = sieve_oracle(100'000);
    for (std::uint32_t n = 1; n <= 100'000; ++n)
        REQUIRE(is_prime(n) == oracle[n]);
}

TEST_CASE("factor examples") {
    CHECK(factor(1).factors.empty());
    {
        auto f = factor(1775);
        REQUIRE(f.factors.size() == 2);
        CHECK(f.factors[0] == std::pair<std::uint64_t, int>{5, 2});
        CHECK(f.factors[1] == std::pair<std::uint64_t, int>{71, 1});
    }
    {
        auto f = factor(4839549275ull);
        REQUIRE(f.factors.size() == 3);
        CHECK(f.factors[0] == std::pair<std::uint64_t, int>{5, 2});
        CHECK(f.factors[1] == std::pair<std::uint64_t, int>{11, 3});
        CHECK(f.factors[2] == std::pair<std::uint64_t, int>{145441, 1});
    }
    CHECK_THROWS_AS(factor(0), std::invalid_argument);
}

TEST_CASE("factor splits semiprimes beyond the sieve") {
    // both factors exceed the 1e6 trial-division bound, forcing rho
    const std::uint64_t p = 1073741827, q = 1073741831;
    auto f = factor(p * q);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<std::uint64_t, int>{p, 1});
    CHECK(f.factors[1] == std::pair<std::uint64_t, int>{q, 1});

    // perfect square of an out-of-sieve prime
    auto g = factor(1000003ull * 1000003ull);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0] == std::pair<std::uint64_t, int>{1000003, 2});
}

TEST_CASE("factor reconstructs every n up to 1e6") {
    for (std::uint64_t n = 1; n <= 1'000'000; ++n)
        REQUIRE(factor(n).value() == n);
}

TEST_CASE("factorizations list certified primes in strict order") {
    for (std::uint64_t n : {2ull, 360ull, 1775ull, 964382ull, 999983ull * 2,
                            4839549275ull, 1073741827ull * 1073741831ull}) {
        auto f = factor(n);
        std::uint64_t last = 0;
        for (auto [p, e] : f.factors) {
            REQUIRE(is_prime(p));
            REQUIRE(p > last);
            REQUIRE(e >= 1);
            last = p;
        }
        REQUIRE(f.value() == n);
    }
}

TEST_CASE("factor handles random 60-bit inputs") {
    std::mt19937_64 rng(987654321);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n = (rng() >> 4) | 1;
        auto f = factor(n);
        REQUIRE(f.value() == n);
        for (auto [p, e] : f.factors) REQUIRE(is_prime(p));
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(1775, 5) == 2);
    CHECK(valuation(7, 7) == 1);
    CHECK(valuation(4839549275ull, 11) == 3);
    CHECK(valuation(1, 2) == 0);
    CHECK_THROWS_AS(valuation(10, 4), std::invalid_argument);
    CHECK_THROWS_AS(valuation(0, 2), std::invalid_argument);

    std::mt19937_64 rng(12345);
    const std::uint64_t ps[] = {2, 3, 5, 7, 11, 13};
    for (int i = 0; i < 200; ++i) {
        std::uint64_t n = rng() % 10'000 + 1;
        std::uint64_t p = ps[rng() % 6];
        int k = static_cast<int>(rng() % 4);
        std::uint64_t np = n;
        for (int j = 0; j < k; ++j) np *= p;
        REQUIRE(valuation(np, p) == valuation(n, p) + k);
    }
}

TEST_CASE("omega") {
    CHECK(omega(1775) == 2);
    CHECK(omega(1) == 0);
    CHECK(omega(16775) == 3);  // 5^2 * 11 * 61
}

TEST_CASE("cube_part") {
    CHECK(cube_part(4839549275ull) == 1331);
    CHECK(cube_part(1775) == 1);
    CHECK(cube_part(8) == 8);
    CHECK(cube_part(1) == 1);

    for (std::uint64_t n = 1; n <= 20'000; ++n) {
        bool flat = true;
        for (auto [p, e] : factor(n).factors)
            if (e > 2) flat = false;
        REQUIRE((cube_part(n) == 1) == flat);
    }
}

TEST_CASE("integer_sqrt") {
    CHECK(integer_sqrt(25) == SqrtResult{5, true});
    CHECK(integer_sqrt(1775).root == 42);
    CHECK_FALSE(integer_sqrt(1775).exact);
    // 69566^2 = 4839428356 <= 4839549275 < 69567^2
    CHECK(integer_sqrt(4839549275ull).root == 69566);
    CHECK_FALSE(integer_sqrt(4839549275ull).exact);
    CHECK(integer_sqrt(0) == SqrtResult{0, true});

    for (std::uint64_t n = 0; n <= 10'000; ++n) {
        auto [r, exact] = integer_sqrt(n * n);
        REQUIRE(r == n);
        REQUIRE(exact);
        if (n >= 2) REQUIRE_FALSE(integer_sqrt(n * n - 1).exact);
    }
    // boundaries near the top of the range
    CHECK(integer_sqrt(UINT64_MAX).root == 4294967295ull);
    auto big = integer_sqrt128((uint128(1) << 126));
    CHECK(big.root == (uint128(1) << 63));
    CHECK(big.exact);
    CHECK_FALSE(integer_sqrt128((uint128(1) << 126) - 1).exact);
}

TEST_CASE("integer_cbrt") {
    CHECK(integer_cbrt(8) == CbrtResult{2, true});
    CHECK(integer_cbrt(7).root == 1);
    CHECK(integer_cbrt(1331) == CbrtResult{11, true});
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        auto [r, exact] = integer_cbrt(n * n * n);
        REQUIRE(r == n);
        REQUIRE(exact);
    }
    CHECK(integer_cbrt(UINT64_MAX).root == 2642245);
}

TEST_CASE("fit_u64 magnitude gate") {
    CHECK(fit_u64(uint128(UINT64_MAX)) == UINT64_MAX);
    CHECK_THROWS_AS(fit_u64(uint128(UINT64_MAX) + 1), magnitude_error);
}

TEST_CASE("checked 128-bit arithmetic") {
    int128 big = int128(1) << 126;
    CHECK_THROWS_AS(mul_checked(big, 4), magnitude_error);
    CHECK_THROWS_AS(add_checked(big, big), magnitude_error);
    CHECK(mul_checked(int128(1) << 62, 2) == int128(1) << 63);
    CHECK(to_string(uint128(0)) == "0");
    CHECK(to_string(int128(-17)) == "-17");
    CHECK(to_string((uint128(1) << 127)) == "170141183460469231731687303715884105728");
}
