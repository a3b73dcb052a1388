#include "orbitsieve/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace orbitsieve {

namespace {

BigInt pow10(long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + text);
        return Rat(num, den);
    }

    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    std::string digits;
    long frac_len = 0;
    bool seen_dot = false, seen_digit = false;
    long exp10 = 0;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            digits.push_back(ch);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else if (ch == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((ch == 'e' || ch == 'E') && seen_digit) {
            exp10 = std::stol(s.substr(i + 1));
            break;
        } else {
            throw std::invalid_argument("bad rational literal: " + text);
        }
    }
    if (!seen_digit) throw std::invalid_argument("bad rational literal: " + text);

    BigInt num(digits.empty() ? "0" : digits);
    if (neg) num = -num;
    long net = exp10 - frac_len;
    if (net >= 0) return Rat(num * pow10(net), 1);
    return Rat(num, pow10(-net));
}

std::string rational_str(const Rat& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace orbitsieve
