#include "polya5/polya.hpp"

#include "polya5/errors.hpp"

namespace polya5 {

namespace {

std::uint64_t pow5(int e) {
    std::uint64_t v = 1;
    while (e-- > 0) v *= 5;
    return v;
}

}  // namespace

std::uint64_t polya_group_order(long long n) {
    FieldInvariants inv = field_invariants(n);
    return pow5(inv.t - 1);
}

std::uint64_t genus_number(long long n) {
    FieldInvariants inv = field_invariants(n);
    return inv.five_ramified ? pow5(inv.t) : pow5(inv.t - 1);
}

std::uint64_t polya_number_bound(long long n) { return genus_number(n); }

PolyaReport classify(long long n) {
    std::uint64_t m = fit_u64(m_value(n));
    FieldInvariants inv = field_invariants(n);
    MDecomposition dec = decompose_m(n);

    PolyaReport r;
    r.n = n;
    r.m = m;
    r.is_cube_free = dec.is_cube_free;
    r.po_rank = inv.t - 1;
    r.po_order = pow5(r.po_rank);
    r.is_polya = (r.po_order == 1);
    r.genus_number = inv.five_ramified ? pow5(inv.t) : pow5(inv.t - 1);
    r.polya_number_bound = r.genus_number;
    r.theorem1_applies = dec.is_cube_free;

    if (r.theorem1_applies) {
        // cube-free: the verdict must match "m prime or m = 25"
        bool criterion = (m == 25) || is_prime(m);
        if (criterion != r.is_polya)
            throw consistency_error("classify: conductor formula disagrees with the "
                                    "prime-or-25 criterion for cube-free m");
    }
    return r;
}

MonogenicityReport monogenicity_report(long long n) {
    MonogenicityReport r;
    r.n = n;
    r.theta_index = theta_index(n);
    BigInt g = gcd(r.theta_index, BigInt(6));
    r.gcd_with_six = g.convert_to<int>();
    if (r.gcd_with_six != 1)
        throw consistency_error("monogenicity_report: gcd(I(theta), 6) != 1");
    r.non_monogenic = !classify(n).is_polya;
    r.field_index_one = (r.gcd_with_six == 1);
    return r;
}

}  // namespace polya5
