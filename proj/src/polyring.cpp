#include "polya5/polyring.hpp"

#include <stdexcept>

#include "polya5/arith.hpp"
#include "polya5/int128.hpp"

namespace polya5 {

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) coeffs.push_back(0);
    std::size_t lead = 0;
    while (lead + 1 < coeffs.size() && coeffs[lead] == 0) ++lead;
    coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
}

BigInt IntPolynomial::coeff_of_degree(int d) const {
    int idx = degree() - d;
    if (idx < 0 || d < 0) return 0;
    return coeffs[static_cast<std::size_t>(idx)];
}

IntPolynomial lehmer_coeffs(long long n) {
    BigInt N = n;
    return IntPolynomial{{
        1,
        N * N,
        -(2 * N * N * N + 6 * N * N + 10 * N + 10),
        N * N * N * N + 5 * N * N * N + 11 * N * N + 15 * N + 5,
        N * N * N + 4 * N * N + 10 * N + 10,
        1,
    }};
}

BigInt eval(const IntPolynomial& f, const BigInt& x) {
    BigInt acc = 0;
    for (const BigInt& c : f.coeffs) acc = acc * x + c;
    return acc;
}

namespace {

IntPolynomial derivative(const IntPolynomial& f) {
    int d = f.degree();
    if (d == 0) return IntPolynomial{{0}};
    std::vector<BigInt> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) out.push_back(f.coeffs[static_cast<std::size_t>(i)] * (d - i));
    return IntPolynomial{std::move(out)};
}

// Determinant by Bareiss fraction-free elimination; all divisions exact.
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
    const std::size_t k = m.size();
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t r = 0; r + 1 < k; ++r) {
        if (m[r][r] == 0) {
            std::size_t piv = r + 1;
            while (piv < k && m[piv][r] == 0) ++piv;
            if (piv == k) return 0;
            std::swap(m[r], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < k; ++i) {
            for (std::size_t j = r + 1; j < k; ++j)
                m[i][j] = (m[r][r] * m[i][j] - m[i][r] * m[r][j]) / prev;
            m[i][r] = 0;
        }
        prev = m[r][r];
    }
    return sign > 0 ? m[k - 1][k - 1] : -m[k - 1][k - 1];
}

BigInt resultant(const IntPolynomial& f, const IntPolynomial& g) {
    const int df = f.degree(), dg = g.degree();
    const std::size_t dim = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<BigInt>> syl(dim, std::vector<BigInt>(dim, 0));
    for (int row = 0; row < dg; ++row)
        for (int i = 0; i <= df; ++i)
            syl[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] =
                f.coeffs[static_cast<std::size_t>(i)];
    for (int row = 0; row < df; ++row)
        for (int i = 0; i <= dg; ++i)
            syl[static_cast<std::size_t>(dg + row)][static_cast<std::size_t>(row + i)] =
                g.coeffs[static_cast<std::size_t>(i)];
    return bareiss_det(std::move(syl));
}

}  // namespace

BigInt discriminant(const IntPolynomial& f) {
    const int d = f.degree();
    if (d < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    if (!f.is_monic()) throw std::invalid_argument("discriminant: polynomial must be monic");
    BigInt res = resultant(f, derivative(f));
    return (d * (d - 1) / 2) % 2 == 0 ? res : -res;
}

namespace {

// F_p polynomials, low degree first, coefficients reduced mod p.
using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

// a mod f, f monic; in-place
void reduce_mod(ModPoly& a, const ModPoly& f, std::uint64_t p) {
    const int df = deg(f);
    for (int i = deg(a); i >= df; --i) {
        std::uint64_t c = a[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= df; ++j) {
            auto& t = a[static_cast<std::size_t>(i - df + j)];
            std::uint64_t s = mulmod(c, f[static_cast<std::size_t>(j)], p);
            t = t >= s ? t - s : t + (p - s);
        }
    }
    trim(a);
}

ModPoly mul_mod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    reduce_mod(out, f, p);
    return out;
}

ModPoly pow_x_mod(uint128 e, const ModPoly& f, std::uint64_t p) {
    ModPoly result{1};
    ModPoly base{0, 1};  // X
    reduce_mod(base, f, p);
    while (e > 0) {
        if (e & 1) result = mul_mod(result, base, f, p);
        base = mul_mod(base, base, f, p);
        e >>= 1;
    }
    return result;
}

ModPoly gcd_mod(ModPoly a, ModPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b after scaling b monic
        std::uint64_t inv = powmod(b.back(), p - 2, p);
        ModPoly bm(b);
        for (auto& c : bm) c = mulmod(c, inv, p);
        reduce_mod(a, bm, p);
        std::swap(a, b);
    }
    return a;
}

}  // namespace

bool is_irreducible_mod_p(const IntPolynomial& f, std::uint64_t p) {
    if (f.degree() != 5) throw std::invalid_argument("is_irreducible_mod_p: degree must be 5");
    if (!is_prime(p)) throw std::invalid_argument("is_irreducible_mod_p: p must be prime");
    if (f.coeffs.front() % p == 0)
        throw std::invalid_argument("is_irreducible_mod_p: leading coefficient divisible by p");

    // f mod p, made monic, low degree first
    ModPoly fp(6);
    for (int i = 0; i <= 5; ++i) {
        BigInt r = f.coeffs[static_cast<std::size_t>(5 - i)] % p;
        if (r < 0) r += p;
        fp[static_cast<std::size_t>(i)] = r.convert_to<std::uint64_t>();
    }
    std::uint64_t inv = powmod(fp.back(), p - 2, p);
    for (auto& c : fp) c = mulmod(c, inv, p);

    // no factor of degree 1 or 2 <=> irreducible, for quintics
    for (int k = 1; k <= 2; ++k) {
        uint128 e = 1;
        for (int i = 0; i < k; ++i) e *= p;
        ModPoly h = pow_x_mod(e, fp, p);  // X^{p^k} mod f
        // h - X
        if (h.size() < 2) h.resize(2, 0);
        h[1] = h[1] >= 1 ? h[1] - 1 : p - 1;
        trim(h);
        ModPoly g = gcd_mod(std::move(h), fp, p);
        if (deg(g) > 0) return false;
    }
    return true;
}

}  // namespace polya5
