#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace polya5 {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/* Dense integer polynomial, coefficients highest degree first.  The
 * leading coefficient is nonzero unless the polynomial is identically
 * zero (represented as the single coefficient 0). */
struct IntPolynomial {
    std::vector<BigInt> coeffs;

    IntPolynomial() : coeffs{0} {}
    explicit IntPolynomial(std::vector<BigInt> c);

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == 0; }
    bool is_monic() const { return coeffs.front() == 1; }
    BigInt coeff_of_degree(int d) const;  // 0 above the degree
    bool operator==(const IntPolynomial&) const = default;
};

/* x^5 + n^2 x^4 - (2n^3+6n^2+10n+10) x^3 + (n^4+5n^3+11n^2+15n+5) x^2
 *     + (n^3+4n^2+10n+10) x + 1 */
IntPolynomial lehmer_coeffs(long long n);

// Exact Horner evaluation.
BigInt eval(const IntPolynomial& f, const BigInt& x);

/* Discriminant of a monic polynomial of degree >= 2, computed as
 * (-1)^{d(d-1)/2} Res(f, f') with the resultant evaluated by Bareiss
 * fraction-free elimination on the (2d-1) x (2d-1) Sylvester matrix. */
BigInt discriminant(const IntPolynomial& f);

/* True iff f mod p is irreducible over the p-element field.  Requires
 * degree(f) = 5 and p prime not dividing the leading coefficient; tests
 * gcd(X^p - X, f) and gcd(X^{p^2} - X, f), which for quintics rules out
 * every proper factor. */
bool is_irreducible_mod_p(const IntPolynomial& f, std::uint64_t p);

}  // namespace polya5
