#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace unitons {

using Rational = mpq_class;

/// Complex number with exact rational real and imaginary parts. All field
/// operations are exact; nothing in the symbolic layers ever rounds.
struct ExactScalar {
    Rational re{0};
    Rational im{0};

    ExactScalar() = default;
    ExactScalar(long v) : re(v) {}
    ExactScalar(Rational r) : re(std::move(r)) {}
    ExactScalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    ExactScalar conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }

    ExactScalar inverse() const;

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }

    std::string str() const;
    static ExactScalar parse(const std::string& text);

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    ExactScalar& operator+=(const ExactScalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator-(const ExactScalar& a) { return {-a.re, -a.im}; }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        return a * b.inverse();
    }
};

} // namespace unitons
