#pragma once

#include <cstdint>

#include "polya5/lehmer.hpp"

namespace polya5 {

/* Polya classification of K_n.  po_order = 5^{t-1} with t the number of
 * ramified primes; for cube-free m this is 5^{omega(m)-1} and the
 * Polya/non-Polya verdict coincides with "m prime or m = 25".  When m
 * is not cube-free the order still comes from the conductor formula but
 * theorem1_applies is false so consumers can tell proved from
 * formula-extended classifications. */
struct PolyaReport {
    long long n;
    std::uint64_t m;
    bool is_cube_free;
    bool is_polya;
    std::uint64_t po_order;       // always a power of 5
    int po_rank;                  // Po(K_n) = (Z/5Z)^po_rank
    std::uint64_t genus_number;
    std::uint64_t polya_number_bound;
    bool theorem1_applies;
};

/* Monogenicity evidence: a non-Polya cyclic quintic cannot be the real
 * cyclotomic subfield (Gras), hence is not monogenic; gcd(I(theta), 6)
 * = 1 plus Zylinski's p < degree bound force field index 1. */
struct MonogenicityReport {
    long long n;
    BigInt theta_index;
    int gcd_with_six;
    bool non_monogenic;    // false means undetermined by this criterion
    bool field_index_one;
};

// |Po(K_n)| = 5^{t-1}.
std::uint64_t polya_group_order(long long n);

PolyaReport classify(long long n);

// Ishida: 5^t if 5 is totally ramified, else 5^{t-1}.
std::uint64_t genus_number(long long n);

// po_K <= genus number; equals 5 |Po(K_n)| whenever 5 | n.
std::uint64_t polya_number_bound(long long n);

MonogenicityReport monogenicity_report(long long n);

}  // namespace polya5
