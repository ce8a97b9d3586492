#pragma once

#include <cstdint>
#include <string>

#include "polya5/errors.hpp"

namespace polya5 {

using int128 = __int128;
using uint128 = unsigned __int128;

// Overflow-checked arithmetic on 128-bit integers.  Anything that would
// leave the representable range raises magnitude_error.

inline int128 add_checked(int128 a, int128 b) {
    int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw magnitude_error("128-bit addition overflow");
    return r;
}

inline int128 mul_checked(int128 a, int128 b) {
    int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw magnitude_error("128-bit multiplication overflow");
    return r;
}

inline uint128 mul_checked_u(uint128 a, uint128 b) {
    uint128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw magnitude_error("128-bit multiplication overflow");
    return r;
}

std::string to_string(uint128 v);
std::string to_string(int128 v);

// (a * b) mod m for any 64-bit modulus; the product is taken in 128 bits.
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, uint128 exp, std::uint64_t mod);

}  // namespace polya5
