#pragma once

#include "sesqui/bigint.hpp"
#include "sesqui/dyadic.hpp"

#include <string>

namespace sesqui {

// An exact rational n/(2^a * 3^b). Every value this library manipulates
// exactly, short of interval endpoints, has a denominator of this shape:
// tile translates live in Z[1/2] and contractions only multiply by powers
// of -2/3. Keeping the two exponents explicit makes normalization and the
// 2-adic valuation O(1) in structure. Normal form: the numerator shares
// no factor 2 with pow2 > 0 and no factor 3 with pow3 > 0; zero is
// (0, 0, 0).
class Rat23 {
public:
    Rat23() : num_(0), pow2_(0), pow3_(0) {}
    Rat23(long n) : num_(n), pow2_(0), pow3_(0) {}   // NOLINT(google-explicit-constructor)
    Rat23(BigInt n) : num_(std::move(n)), pow2_(0), pow3_(0) {}
    Rat23(BigInt n, unsigned a, unsigned b) : num_(std::move(n)), pow2_(a), pow3_(b) { normalize(); }
    Rat23(const Dyadic& z) : num_(z.numerator()), pow2_(z.exponent()), pow3_(0) {}  // NOLINT

    const BigInt& numerator() const { return num_; }
    unsigned pow2() const { return pow2_; }
    unsigned pow3() const { return pow3_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_dyadic() const { return pow3_ == 0; }
    int sign() const { return num_.sign(); }

    Dyadic to_dyadic() const;

    // Value * (-3/2)^k, exact for either sign of k.
    Rat23 times_pow_base(long k) const;

    long val2() const { return sesqui::val2(num_) - static_cast<long>(pow2_); }

    Rational abs2() const {
        if (is_zero()) return Rational(0);
        long v = val2();
        return v >= 0 ? Rational(1, pow2(static_cast<unsigned>(v)))
                      : Rational(sesqui::pow2(static_cast<unsigned>(-v)));
    }

    Rat23 operator-() const {
        Rat23 r;
        r.num_ = -num_;
        r.pow2_ = pow2_;
        r.pow3_ = pow3_;
        return r;
    }

    friend Rat23 operator+(const Rat23& x, const Rat23& y) {
        unsigned a = std::max(x.pow2_, y.pow2_);
        unsigned b = std::max(x.pow3_, y.pow3_);
        return Rat23(x.scaled_to(a, b) + y.scaled_to(a, b), a, b);
    }
    friend Rat23 operator-(const Rat23& x, const Rat23& y) { return x + (-y); }
    friend Rat23 operator*(const Rat23& x, const Rat23& y) {
        return Rat23(x.num_ * y.num_, x.pow2_ + y.pow2_, x.pow3_ + y.pow3_);
    }

    friend bool operator==(const Rat23& x, const Rat23& y) {
        return x.pow2_ == y.pow2_ && x.pow3_ == y.pow3_ && x.num_ == y.num_;
    }
    friend bool operator!=(const Rat23& x, const Rat23& y) { return !(x == y); }
    friend bool operator<(const Rat23& x, const Rat23& y) {
        unsigned a = std::max(x.pow2_, y.pow2_);
        unsigned b = std::max(x.pow3_, y.pow3_);
        return x.scaled_to(a, b) < y.scaled_to(a, b);
    }
    friend bool operator<=(const Rat23& x, const Rat23& y) { return !(y < x); }
    friend bool operator>(const Rat23& x, const Rat23& y) { return y < x; }
    friend bool operator>=(const Rat23& x, const Rat23& y) { return !(x < y); }

    BigInt floor() const;

    Rational to_rational() const { return Rational(num_, pow2(pow2_) * pow3(pow3_)); }
    double to_double() const { return sesqui::to_double(to_rational()); }

    // "n", "n/d" with d = 2^a*3^b printed in plain form.
    std::string str() const;

private:
    BigInt scaled_to(unsigned a, unsigned b) const {
        return (num_ << (a - pow2_)) * pow3(b - pow3_);
    }

    void normalize();

    BigInt num_;
    unsigned pow2_;
    unsigned pow3_;
};

} // namespace sesqui
