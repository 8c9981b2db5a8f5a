#include "curvebound/rational.hpp"

#include <cctype>

namespace curvebound {

namespace {

// "123" or "1.25" -> exact rational; empty/invalid -> throw.
Rat number_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty numeric literal");
    std::string digits;
    long frac_digits = -1;
    for (char ch : s) {
        if (ch == '.') {
            if (frac_digits >= 0) throw std::invalid_argument("two decimal points in: " + s);
            frac_digits = 0;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            throw std::invalid_argument("invalid numeric literal: " + s);
        digits.push_back(ch);
        if (frac_digits >= 0) ++frac_digits;
    }
    if (digits.empty()) throw std::invalid_argument("invalid numeric literal: " + s);
    Int num(digits, 10);
    Rat r(num);
    if (frac_digits > 0) {
        Int den = int_pow(Int(10), static_cast<unsigned long>(frac_digits));
        r = Rat(num, den);
        r.canonicalize();
    }
    return r;
}

}  // namespace

Rat rat_from_string(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        s.erase(0, 1);
    }

    Rat value;
    if (s.rfind("2^", 0) == 0) {
        std::string expo = s.substr(2);
        bool eneg = false;
        if (!expo.empty() && (expo[0] == '+' || expo[0] == '-')) {
            eneg = expo[0] == '-';
            expo.erase(0, 1);
        }
        if (expo.empty()) throw std::invalid_argument("invalid dyadic literal: " + text);
        for (char ch : expo)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("invalid dyadic literal: " + text);
        unsigned long e = std::stoul(expo);
        if (e > 100000) throw std::invalid_argument("dyadic exponent too large: " + text);
        Int p = int_pow(Int(2), e);
        value = eneg ? Rat(1, p) : Rat(p);
        value.canonicalize();
    } else {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            value = number_from_string(s);
        } else {
            Rat num = number_from_string(s.substr(0, slash));
            Rat den = number_from_string(s.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator in: " + text);
            value = num / den;
        }
    }
    if (neg) value = -value;
    return value;
}

}  // namespace curvebound
