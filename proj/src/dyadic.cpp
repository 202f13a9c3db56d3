#include "sesqui/dyadic.hpp"

#include <algorithm>
#include <cctype>

namespace sesqui {

BigInt Dyadic::nearest_integer() const {
    if (exp_ == 0) return num_;
    // floor((a + 2^{l-1}) / 2^l); BigInt >> is an arithmetic shift.
    return (num_ + (BigInt(1) << (exp_ - 1))) >> exp_;
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.str();
    if (exp_ <= 63) return num_.str() + "/" + pow2(exp_).str();
    return num_.str() + "/2^" + std::to_string(exp_);
}

std::string Dyadic::decimal_str() const {
    if (exp_ == 0) return num_.str();
    // a/2^l = a*5^l / 10^l, so the decimal expansion is finite.
    BigInt scaled = abs(num_);
    for (unsigned i = 0; i < exp_; ++i) scaled *= 5;
    std::string digits = scaled.str();
    if (digits.size() <= exp_) digits.insert(0, exp_ + 1 - digits.size(), '0');
    digits.insert(digits.size() - exp_, ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return (num_ < 0 ? "-" : "") + digits;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Dyadic parse_fraction(std::string_view numText, std::string_view denText, bool negative,
                      std::string_view whole) {
    if (!all_digits(numText)) throw ParseError("bad numerator in '" + std::string(whole) + "'");
    BigInt num(std::string(numText));
    BigInt den;
    if (denText.size() > 2 && denText.substr(0, 2) == "2^") {
        std::string_view e = denText.substr(2);
        if (!all_digits(e)) throw ParseError("bad exponent in '" + std::string(whole) + "'");
        unsigned ell = static_cast<unsigned>(BigInt(std::string(e)).convert_to<unsigned long>());
        return Dyadic(negative ? -num : num, ell);
    }
    if (!all_digits(denText)) throw ParseError("bad denominator in '" + std::string(whole) + "'");
    den = BigInt(std::string(denText));
    if (den.is_zero()) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    // The denominator must be a power of two, up to common factors.
    BigInt g = gcd(num, den);
    num /= g;
    den /= g;
    unsigned tz = den == 1 ? 0 : static_cast<unsigned>(lsb(den));
    if ((den >> tz) != 1)
        throw NotDyadic("'" + std::string(whole) + "' is not a dyadic rational");
    return Dyadic(negative ? -num : num, tz);
}

Dyadic parse_decimal(std::string_view intPart, std::string_view fracPart, bool negative,
                     std::string_view whole) {
    if (intPart.empty() && fracPart.empty()) throw ParseError("no digits in '" + std::string(whole) + "'");
    if (!intPart.empty() && !all_digits(intPart)) throw ParseError("bad integer part in '" + std::string(whole) + "'");
    if (!fracPart.empty() && !all_digits(fracPart)) throw ParseError("bad fractional part in '" + std::string(whole) + "'");
    BigInt num = intPart.empty() ? BigInt(0) : BigInt(std::string(intPart));
    unsigned d = static_cast<unsigned>(fracPart.size());
    for (char c : fracPart) num = num * 10 + (c - '0');
    // value = num / 10^d = num / (2^d * 5^d); dyadic iff 5^d divides num.
    BigInt fived = 1;
    for (unsigned i = 0; i < d; ++i) fived *= 5;
    if (num % fived != 0)
        throw NotDyadic("'" + std::string(whole) + "' is not a dyadic rational");
    return Dyadic(negative ? -(num / fived) : num / fived, d);
}

} // namespace

Dyadic Dyadic::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty input");
    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (auto slash = s.find('/'); slash != std::string_view::npos)
        return parse_fraction(s.substr(0, slash), s.substr(slash + 1), negative, text);
    if (auto dot = s.find('.'); dot != std::string_view::npos)
        return parse_decimal(s.substr(0, dot), s.substr(dot + 1), negative, text);
    if (!all_digits(s)) throw ParseError("cannot parse '" + std::string(text) + "'");
    BigInt n{std::string(s)};
    return Dyadic(negative ? -n : n, 0);
}

} // namespace sesqui
