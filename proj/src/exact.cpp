#include "unitons/exact.hpp"

#include <stdexcept>

namespace unitons {

ExactScalar ExactScalar::inverse() const {
    if (is_zero())
        throw std::invalid_argument("ExactScalar: division by zero");
    Rational n = norm2();
    return {re / n, -im / n};
}

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("ExactScalar: empty rational");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("ExactScalar: bad rational '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

// Canonical form: "a/b" for reals, "c/d i" for pure imaginaries, "a/b+c/d i"
// otherwise (denominator 1 printed without "/1").
std::string ExactScalar::str() const {
    if (im == 0)
        return rational_str(re);
    std::string imag = rational_str(im) + " i";
    if (re == 0)
        return imag;
    if (im > 0)
        return rational_str(re) + "+" + imag;
    return rational_str(re) + imag; // sign carried by im
}

ExactScalar ExactScalar::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ')
            s += c;
    bool imag = false;
    if (!s.empty() && s.back() == 'i') {
        imag = true;
        s.pop_back();
    }
    if (!imag)
        return ExactScalar(parse_rational(s));
    // split "<re><+/-><im>"; the separator is a sign not at position 0 and not
    // directly after '/' or another sign
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < s.size(); ++p) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '+' && s[p - 1] != '-')
            split = p;
    }
    if (split == std::string::npos)
        return ExactScalar(Rational(0), parse_rational(s));
    std::string re_part = s.substr(0, split);
    std::string im_part = s.substr(split);
    if (im_part == "+")
        im_part = "1";
    else if (im_part == "-")
        im_part = "-1";
    else if (im_part[0] == '+')
        im_part = im_part.substr(1);
    return {parse_rational(re_part), parse_rational(im_part)};
}

} // namespace unitons
