#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "polya5/int128.hpp"
#include "polya5/polyring.hpp"

namespace polya5 {

/* Integral point on Y^2 = f(X), canonical representative y >= 0 (both
 * (x, y) and (x, -y) solve the curve). */
struct CurvePoint {
    long long x;
    std::uint64_t y;
    auto operator<=>(const CurvePoint&) const = default;
};

/* Empirical cube-free counts of g(k) = 25k^4+25k^3+15k^2+5k+1 against
 * the truncated Euler product prod_p (1 - rho(p^3)/p^3). */
struct DensityReport {
    std::uint64_t limit;
    std::uint64_t tested;
    std::uint64_t cubefree_count;
    BigRat empirical_density;
    std::uint64_t prime_cutoff;
    std::vector<std::pair<std::uint64_t, int>> root_counts;  // (p, rho(p^3))
    BigRat truncated_product;
};

/* omega(m_{5p}) sampled over primes p, with descriptive means; the
 * loglog column is report-only (no asymptotic assertion is made). */
struct OmegaStats {
    std::uint64_t prime_limit;
    std::vector<std::pair<std::uint64_t, int>> samples;  // (p, omega(m_{5p}))
    std::vector<std::uint64_t> failed;                   // skipped, beyond the exact range
    BigRat mean_omega;
    double mean_loglog;  // mean of ln ln p
};

// The quartic X^4 + 5X^3 + 15X^2 + 25X + 25 whose value at n is m_n.
const IntPolynomial& lehmer_quartic();

/* 26 H(f)^3 where H is the largest absolute coefficient: every integral
 * point of Y^2 = f(X) has |x| below this (Masser).  f must be a monic
 * quartic; a perfect square f = g^2 raises perfect_square_error. */
std::uint64_t masser_bound(const IntPolynomial& f);

/* Exhaustive scan of x in [-masser_bound, masser_bound], sorted by x.
 * The default entry point runs the OpenMP kernel; the _serial variant
 * is the straightforward reference kept for cross-checking. */
std::vector<CurvePoint> curve_integral_points(const IntPolynomial& f);
std::vector<CurvePoint> curve_integral_points_serial(const IntPolynomial& f);

// g(k) = 25k^4 + 25k^3 + 15k^2 + 5k + 1; satisfies 25 g(k) = m_{5k}.
uint128 gk_value(long long k);

/* #{x mod p^3 : g(x) = 0 mod p^3}.  Full enumeration for p <= 50;
 * Hensel lifting of simple roots beyond, with enumeration fallback for
 * small singular cases and lifting_error where neither applies. */
int rho_cube(std::uint64_t p);
int rho_cube_enumerated(std::uint64_t p);  // oracle path, needs p^3 manageable
int rho_cube_lifted(std::uint64_t p);      // lifting path, any prime

// Variant counting only x coprime to p (the prime-argument constant).
int rho_cube_coprime(std::uint64_t p);

DensityReport cubefree_density(std::uint64_t limit, std::uint64_t prime_cutoff);
DensityReport cubefree_density_serial(std::uint64_t limit, std::uint64_t prime_cutoff);

// prod_{p <= cutoff} (1 - rho'(p^3) / (p^3 - p^2)).
BigRat hel_constant(std::uint64_t prime_cutoff);

OmegaStats omega_over_primes(std::uint64_t prime_limit);
OmegaStats omega_over_primes_serial(std::uint64_t prime_limit);

}  // namespace polya5
