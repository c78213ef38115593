#include "unitons/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unitons {

bool LatticeElement::operator<(const LatticeElement& o) const {
    if (n != o.n)
        return n < o.n;
    return coeffs < o.coeffs;
}

std::string LatticeElement::csv() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(coeffs[i]);
    }
    return out;
}

LatticeElement LatticeElement::parse_csv(int n, const std::string& text) {
    LatticeElement xi;
    xi.n = n;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument("bad coefficient '" + tok + "'");
        xi.coeffs.push_back(v);
    }
    validate(xi);
    return xi;
}

void validate(const LatticeElement& xi) {
    if (xi.n < 2)
        throw std::invalid_argument("lattice element needs n >= 2");
    if (static_cast<int>(xi.coeffs.size()) != xi.n - 1)
        throw std::invalid_argument("lattice element needs n-1 coefficients, got " +
                                    std::to_string(xi.coeffs.size()));
}

bool is_dominant(const LatticeElement& xi) {
    for (long v : xi.coeffs)
        if (v < 0)
            return false;
    return true;
}

bool is_zero(const LatticeElement& xi) {
    for (long v : xi.coeffs)
        if (v != 0)
            return false;
    return true;
}

bool EExpansion::all_integer() const {
    for (const auto& q : e)
        if (q.get_den() != 1)
            return false;
    return true;
}

EExpansion h_to_e(const LatticeElement& xi) {
    validate(xi);
    const int n = xi.n;
    // c_1 = sum_i n_i (n-i)/n, then c_{j+1} = c_j - n_j.
    Rational c1(0);
    for (int i = 1; i < n; ++i) {
        Rational w(n - i, n);
        w.canonicalize();
        c1 += Rational(xi.coeffs[static_cast<std::size_t>(i - 1)]) * w;
    }
    EExpansion out;
    out.n = n;
    out.e.resize(static_cast<std::size_t>(n));
    out.e[0] = c1;
    for (int j = 1; j < n; ++j)
        out.e[static_cast<std::size_t>(j)] =
            out.e[static_cast<std::size_t>(j - 1)] - xi.coeffs[static_cast<std::size_t>(j - 1)];
    return out;
}

bool in_lattice(const LatticeElement& xi) {
    validate(xi);
    long acc = 0;
    for (int i = 1; i < xi.n; ++i)
        acc = (acc + (i % xi.n) * (xi.coeffs[static_cast<std::size_t>(i - 1)] % xi.n)) % xi.n;
    return ((acc % xi.n) + xi.n) % xi.n == 0;
}

long min_multiple(int n, int i) {
    if (i < 1 || i > n - 1)
        throw std::out_of_range("min_multiple: index out of range");
    return n / std::gcd(static_cast<long>(i), static_cast<long>(n));
}

namespace {

void require_comparable(const LatticeElement& a, const LatticeElement& b) {
    validate(a);
    validate(b);
    if (a.n != b.n)
        throw std::invalid_argument("order: mismatched n");
    if (!is_dominant(a) || !is_dominant(b))
        throw std::invalid_argument("order: non-dominant input");
}

} // namespace

bool leq(const LatticeElement& xi, const LatticeElement& xi2) {
    require_comparable(xi, xi2);
    for (std::size_t i = 0; i < xi.coeffs.size(); ++i)
        if (xi2.coeffs[i] > xi.coeffs[i])
            return false;
    return true;
}

bool leq_root_oracle(const LatticeElement& xi, const LatticeElement& xi2) {
    require_comparable(xi, xi2);
    EExpansion c = h_to_e(xi);
    EExpansion c2 = h_to_e(xi2);
    for (int a = 0; a < xi.n; ++a) {
        for (int b = 0; b < xi.n; ++b) {
            if (a == b)
                continue;
            Rational alpha = c.e[static_cast<std::size_t>(a)] - c.e[static_cast<std::size_t>(b)];
            Rational alpha2 = c2.e[static_cast<std::size_t>(a)] - c2.e[static_cast<std::size_t>(b)];
            Rational bound = alpha > 0 ? alpha : Rational(0);
            if (alpha2 > bound)
                return false;
        }
    }
    return true;
}

bool symmetric_leq(const LatticeElement& xi, const LatticeElement& xi2, bool strict_identity) {
    if (!leq(xi, xi2))
        return false;
    if (strict_identity) {
        EExpansion d = h_to_e(xi);
        EExpansion d2 = h_to_e(xi2);
        for (int j = 0; j < xi.n; ++j) {
            Rational diff = d.e[static_cast<std::size_t>(j)] - d2.e[static_cast<std::size_t>(j)];
            if (diff.get_den() != 1 || diff.get_num() % 2 != 0)
                return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < xi.coeffs.size(); ++i)
        if (((xi.coeffs[i] - xi2.coeffs[i]) % 2 + 2) % 2 != 0)
            return false;
    return true;
}

LatticeElement chi1(const LatticeElement& xi) {
    validate(xi);
    LatticeElement out = xi;
    std::reverse(out.coeffs.begin(), out.coeffs.end());
    return out;
}

// chi2 permutes coefficient slots by i -> 2i (mod n); for odd n this is a
// bijection of {1..n-1}.
LatticeElement chi2(const LatticeElement& xi) {
    validate(xi);
    if (xi.n % 2 == 0)
        throw std::invalid_argument("chi2 is defined only for odd n");
    LatticeElement out;
    out.n = xi.n;
    out.coeffs.assign(xi.coeffs.size(), 0);
    for (int i = 1; i < xi.n; ++i) {
        int target = (2 * i) % xi.n;
        out.coeffs[static_cast<std::size_t>(target - 1)] = xi.coeffs[static_cast<std::size_t>(i - 1)];
    }
    return out;
}

LoopExponents loop_exponents(const LatticeElement& xi) {
    validate(xi);
    if (!is_dominant(xi))
        throw std::invalid_argument("loop_exponents: non-dominant input");
    EExpansion c = h_to_e(xi);
    if (!c.all_integer())
        throw std::logic_error("loop_exponents: element is not in the integer lattice");
    LoopExponents out;
    out.n = xi.n;
    out.c.reserve(static_cast<std::size_t>(xi.n));
    for (const auto& q : c.e)
        out.c.push_back(q.get_num().get_si());
    return out;
}

FlagType flag_type(const LatticeElement& xi) {
    if (is_zero(xi))
        throw std::invalid_argument("flag_type: zero element has no flag");
    LoopExponents le = loop_exponents(xi);
    long cmax = le.c.front();
    long cmin = le.c.back();
    FlagType ft;
    ft.n = xi.n;
    ft.s = static_cast<int>(-cmin);
    ft.r = static_cast<int>(cmax);
    for (long i = cmin; i <= cmax; ++i) {
        int count = 0;
        for (long cj : le.c)
            if (cj <= i)
                ++count;
        ft.d.push_back(count);
    }
    return ft;
}

int FlagType::jump(int i) const {
    if (i < -s - 1 || i > r - 1)
        throw std::out_of_range("FlagType::jump");
    int lo = (i == -s - 1) ? 0 : at(i);
    return at(i + 1) - lo;
}

EigenspaceDims eigenspace_dims(const LatticeElement& xi) {
    validate(xi);
    if (!is_dominant(xi))
        throw std::invalid_argument("eigenspace_dims: non-dominant input");
    EExpansion c = h_to_e(xi);
    EigenspaceDims out;
    out.dim[0] = xi.n - 1; // Cartan part
    for (int a = 0; a < xi.n; ++a) {
        for (int b = 0; b < xi.n; ++b) {
            if (a == b)
                continue;
            Rational diff = c.e[static_cast<std::size_t>(a)] - c.e[static_cast<std::size_t>(b)];
            // root values of integer H-combinations are integers
            long i = diff.get_num().get_si();
            out.dim[static_cast<int>(i)] += 1;
        }
    }
    for (auto it = out.dim.begin(); it != out.dim.end();) {
        if (it->second == 0)
            it = out.dim.erase(it);
        else
            ++it;
    }
    out.r = out.dim.empty() ? 0 : std::max(0, out.dim.rbegin()->first);
    return out;
}

SymmetricSpaceTarget grassmannian_target(const LatticeElement& xi) {
    LoopExponents le = loop_exponents(xi);
    int even = 0;
    for (long cj : le.c)
        if (((cj % 2) + 2) % 2 == 0)
            ++even;
    SymmetricSpaceTarget t;
    t.n = xi.n;
    if (even == 0 || even == xi.n)
        t.k = 0; // gamma_xi(-1) is central
    else
        t.k = std::min(even, xi.n - even);
    return t;
}

std::string SymmetricSpaceTarget::str() const {
    if (is_point())
        return "point";
    return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

bool su_balance(const FlagType& ft) {
    long below = 0;
    for (int i = -ft.s; i < 0 && i <= ft.r; ++i)
        below += ft.at(i);
    long above = 0;
    for (int i = 0; i < ft.r; ++i)
        above += ft.n - ft.at(i);
    return below == above;
}

bool symmetric_trivial(const LatticeElement& xi) {
    validate(xi);
    for (long v : xi.coeffs)
        if (((v % 2) + 2) % 2 != 0)
            return false;
    return true;
}

} // namespace unitons
