#include "polya5/analytics.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "polya5/arith.hpp"
#include "polya5/errors.hpp"
#include "polya5/lehmer.hpp"

namespace polya5 {

namespace {

constexpr long long kMaxScanBound = 1ll << 31;  // beyond this a full scan is impractical

// g's coefficients, highest degree first
constexpr std::int64_t kG[5] = {25, 25, 15, 5, 1};

bool is_square_of_quadratic(const IntPolynomial& f) {
    // f = (x^2 + a x + b)^2 forces 2a = c3, a^2 + 2b = c2, 2ab = c1, b^2 = c0
    BigInt c3 = f.coeff_of_degree(3), c2 = f.coeff_of_degree(2);
    BigInt c1 = f.coeff_of_degree(1), c0 = f.coeff_of_degree(0);
    if (c3 % 2 != 0) return false;
    BigInt a = c3 / 2;
    BigInt twob = c2 - a * a;
    if (twob % 2 != 0) return false;
    BigInt b = twob / 2;
    return 2 * a * b == c1 && b * b == c0;
}

void require_monic_quartic(const IntPolynomial& f) {
    if (f.degree() != 4 || !f.is_monic())
        throw std::invalid_argument("expected a monic quartic");
    if (is_square_of_quadratic(f))
        throw perfect_square_error("f is the square of a quadratic; the curve has "
                                   "infinitely many integral points");
}

BigInt height(const IntPolynomial& f) {
    BigInt h = 0;
    for (const BigInt& c : f.coeffs) {
        BigInt a = abs(c);
        if (a > h) h = a;
    }
    return h;
}

}  // namespace

const IntPolynomial& lehmer_quartic() {
    static const IntPolynomial f{{1, 5, 15, 25, 25}};
    return f;
}

std::uint64_t masser_bound(const IntPolynomial& f) {
    require_monic_quartic(f);
    BigInt h = height(f);
    BigInt bound = 26 * h * h * h;
    if (bound > UINT64_MAX)
        throw magnitude_error("Masser bound " + bound.str() + " exceeds 64 bits");
    return bound.convert_to<std::uint64_t>();
}

namespace {

// true if |f(x)| stays below 2^126 across the whole scan window
bool fits_int128(const IntPolynomial& f, std::uint64_t bound) {
    BigInt m = bound;
    BigInt worst = m * m * m * m + height(f) * (m * m * m + m * m + m + 1);
    return worst < (BigInt(1) << 126);
}

struct QuarticI128 {
    int128 c3, c2, c1, c0;

    explicit QuarticI128(const IntPolynomial& f)
        : c3(f.coeff_of_degree(3).convert_to<std::int64_t>()),
          c2(f.coeff_of_degree(2).convert_to<std::int64_t>()),
          c1(f.coeff_of_degree(1).convert_to<std::int64_t>()),
          c0(f.coeff_of_degree(0).convert_to<std::int64_t>()) {}

    int128 operator()(long long x) const {
        int128 t = x;
        return (((t + c3) * t + c2) * t + c1) * t + c0;
    }
};

}  // namespace

std::vector<CurvePoint> curve_integral_points_serial(const IntPolynomial& f) {
    const std::uint64_t bound = masser_bound(f);
    if (bound > static_cast<std::uint64_t>(kMaxScanBound))
        throw magnitude_error("scan range 2*" + std::to_string(bound) + " is impractical");
    const auto M = static_cast<long long>(bound);

    // reference path: exact BigInt evaluation, no width assumptions
    std::vector<CurvePoint> points;
    for (long long x = -M; x <= M; ++x) {
        BigInt v = eval(f, BigInt(x));
        if (v < 0) continue;
        BigInt r = sqrt(v);
        if (r * r == v) points.push_back({x, r.convert_to<std::uint64_t>()});
    }
    return points;
}

std::vector<CurvePoint> curve_integral_points(const IntPolynomial& f) {
    const std::uint64_t bound = masser_bound(f);
    if (bound > static_cast<std::uint64_t>(kMaxScanBound))
        throw magnitude_error("scan range 2*" + std::to_string(bound) + " is impractical");
    if (!fits_int128(f, bound)) return curve_integral_points_serial(f);
    const auto M = static_cast<long long>(bound);

    const QuarticI128 q(f);
    const int threads = omp_get_max_threads();
    std::vector<std::vector<CurvePoint>> per_thread(static_cast<std::size_t>(threads));

#pragma omp parallel num_threads(threads)
    {
        auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (long long x = -M; x <= M; ++x) {
            int128 v = q(x);
            if (v < 0) continue;
            auto [root, exact] = integer_sqrt128(static_cast<uint128>(v));
            if (exact) local.push_back({x, static_cast<std::uint64_t>(root)});
        }
    }

    std::vector<CurvePoint> points;
    for (auto& chunk : per_thread)
        points.insert(points.end(), chunk.begin(), chunk.end());
    std::sort(points.begin(), points.end());
    return points;
}

uint128 gk_value(long long k) {
    int128 x = k;
    int128 acc = kG[0];
    for (int i = 1; i < 5; ++i) acc = add_checked(mul_checked(acc, x), kG[i]);
    if (acc <= 0) throw consistency_error("gk_value: quartic must be positive");
    return static_cast<uint128>(acc);
}

namespace {

std::uint64_t g_mod(std::uint64_t x, std::uint64_t mod) {
    std::uint64_t acc = kG[0] % mod;
    for (int i = 1; i < 5; ++i)
        acc = (mulmod(acc, x, mod) + kG[i]) % mod;
    return acc;
}

std::uint64_t g_derivative_mod(std::uint64_t x, std::uint64_t p) {
    // g' = 100k^3 + 75k^2 + 30k + 5
    std::uint64_t acc = 100 % p;
    acc = (mulmod(acc, x, p) + 75) % p;
    acc = (mulmod(acc, x, p) + 30) % p;
    acc = (mulmod(acc, x, p) + 5) % p;
    return acc;
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

int rho_enumerate(std::uint64_t p, bool coprime_only) {
    uint128 cube = static_cast<uint128>(p) * p * p;
    if (cube > 200'000'000)
        throw std::invalid_argument("rho_cube_enumerated: p^3 too large to enumerate");
    auto p3 = static_cast<std::uint64_t>(cube);
    int count = 0;
    for (std::uint64_t x = 0; x < p3; ++x) {
        if (coprime_only && x % p == 0) continue;
        if (g_mod(x, p3) == 0) ++count;
    }
    return count;
}

int rho_lift(std::uint64_t p, bool coprime_only) {
    // p^3 must fit u64 for the mod arithmetic
    if (p > 2'642'245) throw magnitude_error("rho_cube: p^3 exceeds 64 bits");
    std::uint64_t p3 = p * p * p;
    int count = 0;
    for (std::uint64_t r = 0; r < p; ++r) {
        if (g_mod(r, p) != 0) continue;
        if (coprime_only && r == 0) continue;
        if (g_derivative_mod(r, p) != 0) {
            ++count;  // simple root: unique Hensel lift mod p^3
            continue;
        }
        // singular root; count its lifts directly when that is feasible
        if (p * p <= 10'000'000) {
            for (std::uint64_t t = 0; t < p * p; ++t)
                if (g_mod(r + t * p, p3) == 0) ++count;
        } else {
            throw lifting_error("rho_cube: singular root " + std::to_string(r) +
                                " mod " + std::to_string(p) + " cannot be lifted");
        }
    }
    return count;
}

int rho_impl(std::uint64_t p, bool coprime_only) {
    require_prime(p);
    if (p <= 50) return rho_enumerate(p, coprime_only);
    return rho_lift(p, coprime_only);
}

}  // namespace

int rho_cube(std::uint64_t p) { return rho_impl(p, false); }

int rho_cube_enumerated(std::uint64_t p) {
    require_prime(p);
    return rho_enumerate(p, false);
}

int rho_cube_lifted(std::uint64_t p) {
    require_prime(p);
    return rho_lift(p, false);
}

int rho_cube_coprime(std::uint64_t p) { return rho_impl(p, true); }

namespace {

/* Cube-free test by trial division up to the cube root: once every
 * prime <= cbrt(n) is removed, a surviving cofactor has at most two
 * prime factors counted with multiplicity. */
bool cubefree_by_division(std::uint64_t n, const std::vector<std::uint32_t>& primes) {
    for (std::uint32_t p : primes) {
        std::uint64_t p64 = p;
        if (p64 * p64 * p64 > n) break;
        if (n % p64 != 0) continue;
        int e = 0;
        while (n % p64 == 0) {
            n /= p64;
            ++e;
        }
        if (e >= 3) return false;
    }
    return true;
}

DensityReport assemble_density(std::uint64_t limit, std::uint64_t cutoff,
                               std::uint64_t cubefree) {
    DensityReport r;
    r.limit = limit;
    r.tested = limit;
    r.cubefree_count = cubefree;
    r.empirical_density = BigRat(cubefree, limit);
    r.prime_cutoff = cutoff;
    r.truncated_product = 1;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(cutoff))) {
        int rho = rho_cube(p);
        r.root_counts.emplace_back(p, rho);
        BigInt p3 = BigInt(p) * p * p;
        r.truncated_product *= BigRat(p3 - rho, p3);
    }
    return r;
}

void check_density_args(std::uint64_t limit, std::uint64_t cutoff) {
    if (limit < 10) throw std::invalid_argument("cubefree_density: limit must be >= 10");
    if (cutoff < 2) throw std::invalid_argument("cubefree_density: cutoff must be >= 2");
    if (cutoff > 1'000'000) throw std::invalid_argument("cubefree_density: cutoff too large");
}

}  // namespace

DensityReport cubefree_density(std::uint64_t limit, std::uint64_t prime_cutoff) {
    check_density_args(limit, prime_cutoff);
    // largest prime that could appear cubed in g(k), k <= limit
    std::uint64_t gmax = fit_u64(gk_value(static_cast<long long>(limit)));
    auto cbrt_bound = static_cast<std::uint32_t>(integer_cbrt(gmax).root + 1);
    const auto primes = primes_up_to(cbrt_bound);

    std::uint64_t cubefree = 0;
    const auto lim = static_cast<long long>(limit);
#pragma omp parallel for schedule(static) reduction(+ : cubefree)
    for (long long k = 1; k <= lim; ++k) {
        std::uint64_t v = fit_u64(gk_value(k));
        if (cubefree_by_division(v, primes)) ++cubefree;
    }
    return assemble_density(limit, prime_cutoff, cubefree);
}

DensityReport cubefree_density_serial(std::uint64_t limit, std::uint64_t prime_cutoff) {
    check_density_args(limit, prime_cutoff);
    // reference path: full factorization, cube part must be 1
    std::uint64_t cubefree = 0;
    for (long long k = 1; k <= static_cast<long long>(limit); ++k)
        if (cube_part(fit_u64(gk_value(k))) == 1) ++cubefree;
    return assemble_density(limit, prime_cutoff, cubefree);
}

BigRat hel_constant(std::uint64_t prime_cutoff) {
    if (prime_cutoff < 2) throw std::invalid_argument("hel_constant: cutoff must be >= 2");
    if (prime_cutoff > 1'000'000) throw std::invalid_argument("hel_constant: cutoff too large");
    BigRat prod = 1;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(prime_cutoff))) {
        int rho = rho_cube_coprime(p);
        BigInt phi = BigInt(p) * p * p - BigInt(p) * p;  // phi(p^3)
        prod *= BigRat(phi - rho, phi);
    }
    return prod;
}

namespace {

OmegaStats assemble_omega(std::uint64_t prime_limit,
                          const std::vector<std::uint32_t>& primes,
                          const std::vector<int>& omegas) {
    OmegaStats s;
    s.prime_limit = prime_limit;
    long long total = 0;
    double loglog_sum = 0.0;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (omegas[i] < 0) {
            s.failed.push_back(primes[i]);
            continue;
        }
        s.samples.emplace_back(primes[i], omegas[i]);
        total += omegas[i];
        loglog_sum += std::log(std::log(static_cast<double>(primes[i])));
    }
    const auto count = s.samples.size();
    s.mean_omega = count ? BigRat(total, count) : BigRat(0);
    s.mean_loglog = count ? loglog_sum / static_cast<double>(count) : 0.0;
    return s;
}

int omega_of_sample(std::uint32_t p) {
    try {
        return omega(fit_u64(m_value(5ll * p)));
    } catch (const magnitude_error&) {
        return -1;
    } catch (const factorization_error&) {
        return -1;
    }
}

}  // namespace

OmegaStats omega_over_primes(std::uint64_t prime_limit) {
    if (prime_limit < 2) throw std::invalid_argument("omega_over_primes: limit must be >= 2");
    if (prime_limit > 10'000'000)
        throw std::invalid_argument("omega_over_primes: limit too large");
    const auto primes = primes_up_to(static_cast<std::uint32_t>(prime_limit));
    std::vector<int> omegas(primes.size());
    const auto count = static_cast<long long>(primes.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (long long i = 0; i < count; ++i)
        omegas[static_cast<std::size_t>(i)] = omega_of_sample(primes[static_cast<std::size_t>(i)]);
    return assemble_omega(prime_limit, primes, omegas);
}

OmegaStats omega_over_primes_serial(std::uint64_t prime_limit) {
    if (prime_limit < 2) throw std::invalid_argument("omega_over_primes: limit must be >= 2");
    if (prime_limit > 10'000'000)
        throw std::invalid_argument("omega_over_primes: limit too large");
    const auto primes = primes_up_to(static_cast<std::uint32_t>(prime_limit));
    std::vector<int> omegas(primes.size());
    for (std::size_t i = 0; i < primes.size(); ++i) omegas[i] = omega_of_sample(primes[i]);
    return assemble_omega(prime_limit, primes, omegas);
}

}  // namespace polya5
