#include "ordtutte/weights.hpp"

#include <cctype>

namespace ordtutte {

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix
boost::multiprecision::cpp_int decimal_int(std::string digits) {
    const auto nonzero = digits.find_first_not_of('0');
    digits = nonzero == std::string::npos ? "0" : digits.substr(nonzero);
    return boost::multiprecision::cpp_int(digits);
}

Rational parse_decimal(const std::string& text) {
    // [sign] digits [. digits] [e [sign] digits]
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    std::string mantissa = s;
    long exponent = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string::npos) {
        mantissa = s.substr(0, epos);
        std::string exp_part = s.substr(epos + 1);
        bool exp_neg = false;
        if (!exp_part.empty() && (exp_part[0] == '+' || exp_part[0] == '-')) {
            exp_neg = exp_part[0] == '-';
            exp_part = exp_part.substr(1);
        }
        if (!all_digits(exp_part)) throw std::invalid_argument("bad number: " + text);
        exponent = std::stol(exp_part);
        if (exp_neg) exponent = -exponent;
    }
    std::string digits = mantissa;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (!all_digits(digits)) throw std::invalid_argument("bad number: " + text);
    Rational value{decimal_int(digits)};
    for (long i = 0; i < exponent; ++i) value *= 10;
    for (long i = 0; i > exponent; --i) value /= 10;
    return negative ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    if (auto slash = text.find('/'); slash != std::string::npos) {
        std::string num = text.substr(0, slash);
        std::string den = text.substr(slash + 1);
        bool negative = false;
        if (!num.empty() && (num[0] == '+' || num[0] == '-')) {
            negative = num[0] == '-';
            num = num.substr(1);
        }
        if (!all_digits(num) || !all_digits(den))
            throw std::invalid_argument("bad rational: " + text);
        if (decimal_int(den) == 0) throw std::invalid_argument("zero denominator: " + text);
        Rational value{decimal_int(num), decimal_int(den)};
        return negative ? -value : value;
    }
    return parse_decimal(text);
}

}  // namespace ordtutte
