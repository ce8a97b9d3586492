#include "polya5/lehmer.hpp"

#include <algorithm>
#include <numeric>

#include "polya5/errors.hpp"

namespace polya5 {

uint128 m_value(long long n) {
    int128 x = n;
    int128 x2 = mul_checked(x, x);
    int128 x3 = mul_checked(x2, x);
    int128 x4 = mul_checked(x3, x);
    int128 m = add_checked(
        add_checked(x4, mul_checked(5, x3)),
        add_checked(mul_checked(15, x2), add_checked(mul_checked(25, x), 25)));
    if (m <= 0) throw consistency_error("m_value: quartic must be positive");
    return static_cast<uint128>(m);
}

int128 c_value(long long n) {
    int128 x = n;
    int128 x2 = mul_checked(x, x);
    int128 x3 = mul_checked(x2, x);
    return add_checked(add_checked(x3, mul_checked(5, x2)),
                       add_checked(mul_checked(10, x), 7));
}

namespace {

BigInt to_bigint(uint128 v) {
    BigInt hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | static_cast<std::uint64_t>(v);
}

BigInt to_bigint(int128 v) {
    if (v < 0) return -to_bigint(static_cast<uint128>(-v));
    return to_bigint(static_cast<uint128>(v));
}

BigInt pow4(const BigInt& v) {
    BigInt sq = v * v;
    return sq * sq;
}

}  // namespace

LehmerQuintic make_lehmer(long long n) {
    LehmerQuintic k;
    k.n = n;
    k.poly = lehmer_coeffs(n);
    k.m = m_value(n);
    k.c = c_value(n);
    k.disc_poly = to_bigint(k.c) * to_bigint(k.c) * pow4(to_bigint(k.m));
    if (std::gcd(static_cast<std::uint64_t>(k.m % 6), std::uint64_t(6)) != 1)
        throw consistency_error("make_lehmer: m is divisible by 2 or 3");
    int128 cr = k.c % 6;
    if (std::gcd(static_cast<long long>(cr < 0 ? -cr : cr), 6ll) != 1)
        throw consistency_error("make_lehmer: c is divisible by 2 or 3");
    return k;
}

MDecomposition decompose_m(long long n) {
    std::uint64_t m = fit_u64(m_value(n));
    Factorization f = factor(m);

    MDecomposition d;
    d.b = (n % 5 == 0) ? 2 : 0;
    if (f.exponent_of(5) != d.b)
        throw consistency_error("decompose_m: v_5(m) disagrees with 5 | n");
    d.A = 1;
    d.B = 1;
    d.cube = 1;
    for (auto [p, e] : f.factors) {
        if (p == 5) continue;
        if (e == 1)
            d.A *= p;
        else if (e == 2)
            d.B *= p;
        else
            for (int i = 0; i < e; ++i) d.cube *= p;
    }
    d.is_cube_free = (d.cube == 1);
    return d;
}

FieldInvariants field_invariants(long long n) {
    std::uint64_t m = fit_u64(m_value(n));
    Factorization f = factor(m);

    const int b = (n % 5 == 0) ? 2 : 0;
    if (f.exponent_of(5) != b)
        throw consistency_error("field_invariants: v_5(m) disagrees with 5 | n");

    FieldInvariants inv;
    inv.five_ramified = (b == 2);
    inv.conductor = (b == 2) ? 25 : 1;
    if (b == 2) inv.ramified_primes.push_back(5);
    for (auto [p, e] : f.factors) {
        if (p == 5) continue;
        if (p % 5 != 1)
            throw consistency_error("field_invariants: prime divisor " + std::to_string(p) +
                                    " of m is not 1 mod 5");
        if (e % 5 != 0) {
            inv.conductor *= p;
            inv.ramified_primes.push_back(p);
        }
    }
    std::sort(inv.ramified_primes.begin(), inv.ramified_primes.end());
    inv.t = static_cast<int>(inv.ramified_primes.size());
    if (inv.t == 0)
        throw consistency_error("field_invariants: a quintic field must ramify somewhere");
    inv.field_disc = pow4(BigInt(inv.conductor));
    return inv;
}

BigInt theta_index(long long n) {
    LehmerQuintic k = make_lehmer(n);
    FieldInvariants inv = field_invariants(n);

    std::uint64_t m = fit_u64(k.m);
    if (m % inv.conductor != 0)
        throw consistency_error("theta_index: conductor does not divide m");
    BigInt cofactor = m / inv.conductor;
    BigInt idx = to_bigint(k.c < 0 ? -k.c : k.c) * cofactor * cofactor;
    if (idx * idx * inv.field_disc != k.disc_poly)
        throw consistency_error("theta_index: disc(f)/d(K) is not the expected square");
    return idx;
}

}  // namespace polya5
