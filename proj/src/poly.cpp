#include "unitons/poly.hpp"

#include "unitons/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

namespace unitons {

namespace {

std::atomic<int> g_cap{0};

int initial_cap() {
    if (const char* env = std::getenv("UNITON_DEGREE_CAP")) {
        int v = std::atoi(env);
        if (v > 0)
            return v;
    }
    return 512;
}

void check_degree(long deg) {
    if (deg > degree_cap())
        throw DegreeCapExceeded("polynomial degree " + std::to_string(deg) +
                                " exceeds cap " + std::to_string(degree_cap()));
}

} // namespace

int degree_cap() {
    int v = g_cap.load();
    if (v == 0) {
        v = initial_cap();
        g_cap.store(v);
    }
    return v;
}

void set_degree_cap(int cap) { g_cap.store(cap > 0 ? cap : 512); }

Poly::Poly(ExactScalar constant) {
    if (!constant.is_zero())
        c_.push_back(std::move(constant));
}

Poly::Poly(std::vector<ExactScalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::var() { return Poly(std::vector<ExactScalar>{ExactScalar(0), ExactScalar(1)}); }

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

const ExactScalar& Poly::leading() const {
    if (c_.empty())
        throw std::logic_error("Poly::leading on zero polynomial");
    return c_.back();
}

ExactScalar Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size()))
        return ExactScalar(0);
    return c_[static_cast<std::size_t>(k)];
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<ExactScalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        d[k - 1] = ExactScalar(static_cast<long>(k)) * c_[k];
    return Poly(std::move(d));
}

ExactScalar Poly::eval(const ExactScalar& z0) const {
    ExactScalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z0 + *it;
    return acc;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    normalize();
    return *this;
}

Poly operator-(const Poly& a) {
    std::vector<ExactScalar> d(a.c_.size());
    for (std::size_t k = 0; k < a.c_.size(); ++k)
        d[k] = -a.c_[k];
    return Poly(std::move(d));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    check_degree(static_cast<long>(a.degree()) + b.degree());
    std::vector<ExactScalar> d(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            d[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(d));
}

Poly operator*(const ExactScalar& s, const Poly& p) {
    if (s.is_zero())
        return {};
    std::vector<ExactScalar> d(p.coeffs());
    for (auto& x : d)
        x = s * x;
    return Poly(std::move(d));
}

PolyDivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw std::invalid_argument("Poly division by zero");
    std::vector<ExactScalar> rem(a.coeffs());
    int db = b.degree();
    int da = static_cast<int>(rem.size()) - 1;
    if (da < db)
        return {Poly{}, a};
    std::vector<ExactScalar> quot(static_cast<std::size_t>(da - db + 1));
    ExactScalar lb_inv = b.leading().inverse();
    for (int k = da; k >= db; --k) {
        ExactScalar f = rem[static_cast<std::size_t>(k)] * lb_inv;
        if (f.is_zero())
            continue;
        quot[static_cast<std::size_t>(k - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).r;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a.leading().inverse() * a; // monic
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

std::string Poly::str() const {
    if (c_.empty())
        return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        std::string coeff = c_[k].str();
        if (k == 0) {
            out += coeff;
        } else {
            if (coeff != "1")
                out += "(" + coeff + ")*";
            out += (k == 1) ? "z" : "z^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace unitons
