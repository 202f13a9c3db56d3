#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <cstdint>

namespace sesqui {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 2-adic valuation of a nonzero integer.
inline long val2(const BigInt& n) {
    assert(!n.is_zero());
    return static_cast<long>(lsb(abs(n)));
}

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline BigInt pow3(unsigned e) {
    BigInt r = 1;
    BigInt b = 3;
    while (e != 0) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

// Residue in {0, 1, 2}; cpp_int's % truncates toward zero.
inline int mod3(const BigInt& n) {
    int r = static_cast<int>(n % 3);
    return r < 0 ? r + 3 : r;
}

// Canonical representative of n mod 2^bits in [0, 2^bits).
inline BigInt mod_pow2(const BigInt& n, unsigned bits) {
    BigInt mask = pow2(bits) - 1;
    BigInt r = n & mask;
    if (n < 0 && r != 0) r = (mask + 1) - ((-n) & mask);
    if (r == mask + 1) r = 0;
    return r;
}

// Inverse of an odd w modulo 2^bits by Newton lifting:
// x <- x * (2 - w * x) doubles the number of correct bits.
inline BigInt inverse_mod_pow2(const BigInt& w, unsigned bits) {
    assert((w & 1) != 0);
    BigInt x = 1;
    unsigned have = 1;
    while (have < bits) {
        have *= 2;
        x = mod_pow2(x * (2 - mod_pow2(w * x, have)), have);
    }
    return mod_pow2(x, bits);
}

inline double to_double(const BigInt& n) { return n.convert_to<double>(); }
inline double to_double(const Rational& r) { return r.convert_to<double>(); }

} // namespace sesqui
