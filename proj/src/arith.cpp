#include "polya5/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "polya5/errors.hpp"

namespace polya5 {

namespace {

constexpr std::uint32_t kSieveBound = 1'000'000;

struct SmallPrimes {
    std::vector<bool> composite;       // index i, i <= kSieveBound
    std::vector<std::uint32_t> primes;

    SmallPrimes() {
        composite.assign(kSieveBound + 1, false);
        composite[0] = composite[1] = true;
        for (std::uint32_t i = 2; i * static_cast<std::uint64_t>(i) <= kSieveBound; ++i)
            if (!composite[i])
                for (std::uint32_t j = i * i; j <= kSieveBound; j += i)
                    composite[j] = true;
        for (std::uint32_t i = 2; i <= kSieveBound; ++i)
            if (!composite[i]) primes.push_back(i);
    }
};

const SmallPrimes& small_primes() {
    static const SmallPrimes tables;  // magic static, thread-safe init
    return tables;
}

// One strong-pseudoprime round; n odd, n - 1 = d * 2^s.
bool sprp(std::uint64_t n, std::uint64_t base, std::uint64_t d, int s) {
    base %= n;
    if (base == 0) return true;
    std::uint64_t x = powmod(base, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

/* Brent's cycle-finding variant of Pollard rho ("An Improved Monte
 * Carlo Factorization Algorithm", BIT 20, 1980).  Returns a nontrivial
 * divisor of composite odd n, or 0 if this (x0, c) pair failed. */
std::uint64_t brent_rho(std::uint64_t n, std::uint64_t x0, std::uint64_t c) {
    auto step = [n, c](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
    std::uint64_t y = x0, q = 1, g = 1, x = 0, ys = 0;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
                y = step(y);
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = std::gcd(q, n);
            k += m;
        }
        r *= 2;
        if (r > (std::uint64_t(1) << 40)) return 0;  // stuck in a long cycle
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = step(ys);
            g = std::gcd(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g == n ? 0 : g;
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out);

// n composite, odd, no prime factor <= kSieveBound
void split_hard(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (auto [r, exact] = integer_sqrt(n); exact) {
        factor_into(r, out);
        factor_into(r, out);
        return;
    }
    if (auto [r, exact] = integer_cbrt(n); exact) {
        factor_into(r, out);
        factor_into(r, out);
        factor_into(r, out);
        return;
    }
    for (std::uint64_t c = 1; c <= 40; ++c) {
        std::uint64_t d = brent_rho(n, 2 + c, c);
        if (d != 0 && d != 1 && d != n) {
            factor_into(d, out);
            factor_into(n / d, out);
            return;
        }
    }
    throw factorization_error("unsplit composite cofactor " + std::to_string(n));
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    split_hard(n, out);
}

}  // namespace

std::string to_string(uint128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(int128 v) {
    if (v < 0) return "-" + to_string(static_cast<uint128>(-v));
    return to_string(static_cast<uint128>(v));
}

std::uint64_t powmod(std::uint64_t base, uint128 exp, std::uint64_t mod) {
    std::uint64_t result = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

std::uint64_t Factorization::value() const {
    std::uint64_t v = 1;
    for (auto [p, e] : factors)
        for (int i = 0; i < e; ++i) v *= p;
    return v;
}

int Factorization::exponent_of(std::uint64_t p) const {
    for (auto [q, e] : factors)
        if (q == p) return e;
    return 0;
}

bool is_prime(std::uint64_t n) {
    const auto& t = small_primes();
    if (n <= kSieveBound) return n >= 2 && !t.composite[n];
    if (n % 2 == 0) return false;

    std::uint64_t d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    /* Sinclair's 7-base set; verified to have no composite strong
     * pseudoprime below 2^64 (Feitsma/Galway tables). */
    for (std::uint64_t base : {2ull, 325ull, 9375ull, 28178ull, 450775ull,
                               9780504ull, 1795265022ull})
        if (!sprp(n, base, d, s)) return false;
    return true;
}

Factorization factor(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factor: n must be positive");
    std::vector<std::uint64_t> primes_found;
    const auto& t = small_primes();
    for (std::uint32_t p : t.primes) {
        if (static_cast<std::uint64_t>(p) * p > n) break;
        while (n % p == 0) {
            primes_found.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_into(n, primes_found);
    std::sort(primes_found.begin(), primes_found.end());

    Factorization f;
    for (std::size_t i = 0; i < primes_found.size();) {
        std::size_t j = i;
        while (j < primes_found.size() && primes_found[j] == primes_found[i]) ++j;
        f.factors.emplace_back(primes_found[i], static_cast<int>(j - i));
        i = j;
    }
    return f;
}

int valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::invalid_argument("valuation: n must be positive");
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("valuation: p must be prime");
    int e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

int omega(std::uint64_t n) { return factor(n).omega(); }

std::uint64_t cube_part(std::uint64_t n) {
    std::uint64_t c = 1;
    for (auto [p, e] : factor(n).factors)
        if (e >= 3)
            for (int i = 0; i < e; ++i) c *= p;
    return c;
}

SqrtResult integer_sqrt(std::uint64_t n) {
    if (n == 0) return {0, true};
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    // the double seed can be off by one in either direction
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return {r, r * r == n};
}

SqrtResult128 integer_sqrt128(uint128 n) {
    if (n <= UINT64_MAX) {
        auto [r, exact] = integer_sqrt(static_cast<std::uint64_t>(n));
        return {r, exact};
    }
    auto seed = static_cast<uint128>(sqrtl(static_cast<long double>(n)));
    uint128 r = seed;
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return {r, r * r == n};
}

CbrtResult integer_cbrt(std::uint64_t n) {
    if (n == 0) return {0, true};
    auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(n)));
    auto cube_le = [n](std::uint64_t x) {
        if (x == 0) return true;
        if (x > 2642245) return false;  // 2642246^3 > 2^64
        return x * x * x <= n;
    };
    while (r > 0 && !cube_le(r)) --r;
    while (cube_le(r + 1)) ++r;
    return {r, r * r * r == n};
}

std::uint64_t fit_u64(uint128 n) {
    if (n > UINT64_MAX)
        throw magnitude_error("value " + to_string(n) +
                              " exceeds the deterministic 64-bit factorization range");
    return static_cast<std::uint64_t>(n);
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    if (limit > 100'000'000) throw std::invalid_argument("primes_up_to: limit too large");
    if (limit <= kSieveBound) {
        const auto& t = small_primes();
        std::vector<std::uint32_t> out;
        for (std::uint32_t p : t.primes) {
            if (p > limit) break;
            out.push_back(p);
        }
        return out;
    }
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
            composite[j] = true;
    }
    return out;
}

}  // namespace polya5
