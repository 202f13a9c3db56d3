#pragma once

#include "sesqui/bigint.hpp"
#include "sesqui/errors.hpp"

#include <string>
#include <string_view>

namespace sesqui {

// An element a/2^l of Z[1/2], the ring of dyadic rationals. Z[1/2] is
// exactly the set of values with a finite integer expansion in base -3/2
// over the digits {0,1,2}, so this type carries every "integer" of that
// system. Normal form: the numerator is odd or the exponent is 0; zero
// is always (0, 0).
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long n) : num_(n), exp_(0) {}           // NOLINT(google-explicit-constructor)
    Dyadic(BigInt n) : num_(std::move(n)), exp_(0) {}
    Dyadic(BigInt n, unsigned e) : num_(std::move(n)), exp_(e) { normalize(); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return exp_ == 0; }
    int sign() const { return num_.sign(); }

    // Value * (-3/2). Z[1/2] is closed under this map.
    Dyadic mul_base() const { return Dyadic(num_ * -3, exp_ + 1); }

    // Value * (-2/3). Throws NotDivisibleBy3 when the numerator has no
    // factor 3; the caller must first peel off a digit.
    Dyadic div_base() const {
        if (num_ % 3 != 0)
            throw NotDivisibleBy3("div_base: numerator " + num_.str() + " not divisible by 3");
        return Dyadic(num_ / -3 * 2, exp_);
    }

    // 2-adic valuation; requires a nonzero value.
    long val2() const { return sesqui::val2(num_) - static_cast<long>(exp_); }

    // |x|_2 = 2^{-val2}, and 0 for x = 0.
    Rational abs2() const {
        if (is_zero()) return Rational(0);
        long v = val2();
        return v >= 0 ? Rational(1, pow2(static_cast<unsigned>(v)))
                      : Rational(pow2(static_cast<unsigned>(-v)));
    }

    // Residue of x in Z[1/2]/3Z[1/2]. The inverse of 2^l mod 3 is 2^l
    // itself, and 2 = -1 mod 3, so the residue is (-1)^l * a mod 3.
    int residue_mod3() const {
        int r = mod3(num_);
        if (exp_ % 2 == 1) r = (3 - r) % 3;
        return r;
    }

    Dyadic operator-() const { return Dyadic(-num_, exp_, NoNormalize{}); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return Dyadic((a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_)), e);
    }
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
    }

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) {
        unsigned e = std::max(a.exp_, b.exp_);
        return (a.num_ << (e - a.exp_)) < (b.num_ << (e - b.exp_));
    }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return !(a < b); }

    Rational to_rational() const { return Rational(num_, pow2(exp_)); }
    double to_double() const { return sesqui::to_double(to_rational()); }

    // Nearest integer; halves round up.
    BigInt nearest_integer() const;

    // "a/b" with b = 2^l for small l, "a/2^l" beyond, plain integers as is.
    std::string str() const;
    // Exact finite decimal, e.g. -3/8 -> "-0.375".
    std::string decimal_str() const;

    // Accepts integers, "a/b" with b a power of two, "a/2^l", and exact
    // decimal strings. Throws ParseError on malformed text and NotDyadic
    // on rationals outside Z[1/2].
    static Dyadic parse(std::string_view text);

private:
    struct NoNormalize {};
    Dyadic(BigInt n, unsigned e, NoNormalize) : num_(std::move(n)), exp_(e) {}

    void normalize() {
        if (num_.is_zero()) {
            exp_ = 0;
            return;
        }
        unsigned tz = static_cast<unsigned>(lsb(abs(num_)));
        unsigned strip = std::min(tz, exp_);
        num_ >>= strip;
        exp_ -= strip;
    }

    BigInt num_;
    unsigned exp_;
};

} // namespace sesqui
