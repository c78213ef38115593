#pragma once

#include "unitons/exact.hpp"

#include <string>
#include <vector>

namespace unitons {

/// Polynomial in one variable z over the exact complex rationals.
/// Coefficients are stored lowest degree first with no trailing zeros; the
/// zero polynomial is the empty list.
class Poly {
public:
    Poly() = default;
    explicit Poly(ExactScalar constant);
    explicit Poly(std::vector<ExactScalar> coeffs);

    static Poly zero() { return {}; }
    static Poly one() { return Poly(ExactScalar(1)); }
    static Poly var(); // z

    const std::vector<ExactScalar>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const ExactScalar& leading() const;
    ExactScalar coeff(int k) const;

    Poly derivative() const;
    ExactScalar eval(const ExactScalar& z0) const;

    std::string str() const; // human form, e.g. "1 - 2z + z^2"

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const ExactScalar& s, const Poly& p);

private:
    void normalize();
    std::vector<ExactScalar> c_;
};

/// Quotient and remainder of field division: a = q*b + r, deg r < deg b.
struct PolyDivMod {
    Poly q;
    Poly r;
};
PolyDivMod divmod(const Poly& a, const Poly& b);

/// Monic gcd over the coefficient field (Euclid); gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// Exact quotient; throws std::logic_error if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);

/// Intermediate-degree cap (default 512, env UNITON_DEGREE_CAP overrides).
int degree_cap();
void set_degree_cap(int cap);

} // namespace unitons
