#pragma once

#include <cstdint>
#include <vector>

#include "polya5/arith.hpp"
#include "polya5/polyring.hpp"

namespace polya5 {

/* Data attached to the Lehmer quintic field K_n = Q(theta_n):
 * m = n^4+5n^3+15n^2+25n+25, c = n^3+5n^2+10n+7, and
 * disc(f_n) = c^2 m^4. */
struct LehmerQuintic {
    long long n;
    IntPolynomial poly;
    uint128 m;
    int128 c;
    BigInt disc_poly;
};

/* m = 5^b A B^2 with A, B square-free and coprime, 5 not dividing AB.
 * When m is not cube-free, A and B describe the cube-free cofactor and
 * `cube` carries the rest. */
struct MDecomposition {
    int b;  // 2 iff 5 | n, else 0
    std::uint64_t A;
    std::uint64_t B;
    std::uint64_t cube;
    bool is_cube_free;
};

/* Conductor and discriminant of K_n: d(K_n) = f(K_n)^4, with the
 * conductor 5^b times the primes p != 5 whose exponent in m is not a
 * multiple of 5.  Ramified primes are totally ramified (degree 5,
 * Galois). */
struct FieldInvariants {
    std::uint64_t conductor;
    BigInt field_disc;
    std::vector<std::uint64_t> ramified_primes;
    int t;  // number of ramified primes
    bool five_ramified;
};

// n^4 + 5n^3 + 15n^2 + 25n + 25, exact; always >= 1.
uint128 m_value(long long n);

// n^3 + 5n^2 + 10n + 7, exact.
int128 c_value(long long n);

LehmerQuintic make_lehmer(long long n);

MDecomposition decompose_m(long long n);

FieldInvariants field_invariants(long long n);

/* Index [O_K : Z[theta_n]]: the exact square root of
 * disc(f_n) / d(K_n), equal to |c| (m / conductor)^2.  The identity is
 * re-checked by squaring; a mismatch raises consistency_error. */
BigInt theta_index(long long n);

}  // namespace polya5
