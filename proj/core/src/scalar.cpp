#include "padelab/scalar.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace padelab {

std::string to_fraction_string(const BigRational& q) {
    std::ostringstream os;
    os << numerator(q) << "/" << denominator(q);
    return os.str();
}

std::string to_string(const GaussianRational& z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0) {
        if (z.imag() > 0) os << "+";
        os << z.imag() << "i";
    }
    return os.str();
}

std::string to_string(const Complex& z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() != 0.0) {
        if (z.imag() > 0.0) os << "+";
        os << z.imag() << "i";
    }
    return os.str();
}

namespace {

// Digits with optional sign. Normalized before handing to cpp_int, whose
// string constructor would otherwise read a leading zero as an octal prefix.
BigInt parse_integer(const std::string& s) {
    std::string t = s;
    bool negative = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        negative = t[0] == '-';
        t.erase(t.begin());
    }
    while (t.size() > 1 && t[0] == '0') t.erase(t.begin());
    if (t.empty()) throw ArgumentError("bad integer literal '" + s + "'");
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ArgumentError("bad integer literal '" + s + "'");
    BigInt v(t);
    return negative ? -v : v;
}

// One real literal: integer, a/b, or decimal with optional exponent.
// Decimal text is converted exactly: digits scaled by a power of ten.
BigRational parse_real(const std::string& s) {
    if (s.empty()) throw ArgumentError("empty numeric literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_integer(s.substr(0, slash));
        BigInt den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw ArgumentError("zero denominator in literal '" + s + "'");
        return BigRational(num, den);
    }
    std::string digits;
    long frac_digits = 0;
    long exponent = 0;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') digits += s[i++];
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && seen_digit) {
            exponent = std::strtol(s.c_str() + i + 1, nullptr, 10);
            if (s.substr(i + 1).empty()) throw ArgumentError("bad exponent in '" + s + "'");
            break;
        } else {
            throw ArgumentError("bad numeric literal '" + s + "'");
        }
    }
    if (!seen_digit) throw ArgumentError("bad numeric literal '" + s + "'");
    BigRational value = BigRational(parse_integer(digits));
    long net = exponent - frac_digits;
    BigInt pow10 = 1;
    for (long k = 0; k < (net < 0 ? -net : net); ++k) pow10 *= 10;
    if (net >= 0)
        value *= BigRational(pow10);
    else
        value /= BigRational(pow10);
    return value;
}

} // namespace

GaussianRational parse_scalar(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ArgumentError("empty scalar");

    bool imaginary = false;
    if (s.back() == 'i' || s.back() == 'I') {
        imaginary = true;
        s.pop_back();
    }
    // Split an "a+bi" / "a-bi" form at the last top-level sign that is not
    // an exponent sign and not the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (imaginary && split != std::string::npos) {
        BigRational re = parse_real(s.substr(0, split));
        std::string im_part = s.substr(split);
        if (im_part == "+") im_part = "1";
        if (im_part == "-") im_part = "-1";
        return {re, parse_real(im_part)};
    }
    if (imaginary) {
        if (s.empty() || s == "+") return GaussianRational::i();
        if (s == "-") return {0, BigRational(-1)};
        return {0, parse_real(s)};
    }
    return {parse_real(s), 0};
}

} // namespace padelab
