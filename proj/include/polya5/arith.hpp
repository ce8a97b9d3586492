#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polya5/int128.hpp"

namespace polya5 {

/* Exact prime-power decomposition of a positive integer.  Pairs are
 * sorted by prime ascending; 1 factors to the empty list. */
struct Factorization {
    std::vector<std::pair<std::uint64_t, int>> factors;

    std::uint64_t value() const;  // product of p^e, exact
    int omega() const { return static_cast<int>(factors.size()); }
    int exponent_of(std::uint64_t p) const;  // 0 if p absent
};

/* Deterministic primality for the full 64-bit range: sieve lookup below
 * 10^6, then strong-pseudoprime tests with a base set that has no
 * composite survivor below 2^64.  1 is not prime. */
bool is_prime(std::uint64_t n);

/* Complete factorization: trial division by primes <= 10^6, perfect
 * power extraction, then Brent's variant of Pollard rho with a bounded
 * retry budget.  Throws factorization_error if a composite cofactor
 * survives (never returns a guess). */
Factorization factor(std::uint64_t n);

// Largest e with p^e | n.  p must be prime.
int valuation(std::uint64_t n, std::uint64_t p);

// Number of distinct prime divisors.
int omega(std::uint64_t n);

// Product of p^e over primes with e >= 3; 1 iff n is cube-free.
std::uint64_t cube_part(std::uint64_t n);

struct SqrtResult {
    std::uint64_t root;  // floor(sqrt(n))
    bool exact;          // root^2 == n
    bool operator==(const SqrtResult&) const = default;
};
SqrtResult integer_sqrt(std::uint64_t n);

struct SqrtResult128 {
    uint128 root;
    bool exact;
    bool operator==(const SqrtResult128&) const = default;
};
SqrtResult128 integer_sqrt128(uint128 n);

struct CbrtResult {
    std::uint64_t root;  // floor(cbrt(n))
    bool exact;
    bool operator==(const CbrtResult&) const = default;
};
CbrtResult integer_cbrt(std::uint64_t n);

/* Narrow a 128-bit value into the range where factorization and
 * primality are proven deterministic.  Throws magnitude_error beyond. */
std::uint64_t fit_u64(uint128 n);

// Primes <= limit, ascending.  limit <= 10^8.
std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

}  // namespace polya5
