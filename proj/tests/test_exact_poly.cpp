#include "unitons/errors.hpp"
#include "unitons/poly.hpp"

#include <doctest.h>

#include <random>

using namespace unitons;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<ExactScalar> c;
    for (long v : coeffs)
        c.emplace_back(v);
    return Poly(std::move(c));
}

Poly random_poly(std::mt19937_64& rng, int maxdeg) {
    std::vector<ExactScalar> c;
    for (int k = 0; k <= maxdeg; ++k)
        c.emplace_back(static_cast<long>(rng() % 19) - 9);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("exact scalar field arithmetic") {
    ExactScalar a(Rational(1, 2), Rational(-3, 4));
    ExactScalar b(Rational(2), Rational(1, 3));
    CHECK(a + b == ExactScalar(Rational(5, 2), Rational(-5, 12)));
    CHECK(a * b.inverse() * b == a);
    CHECK((a - a).is_zero());
    CHECK(a.conj().conj() == a);
    CHECK(a.norm2() == Rational(1, 4) + Rational(9, 16));
    CHECK_THROWS_AS(ExactScalar(0).inverse(), std::invalid_argument);
}

TEST_CASE("exact scalar string round trip") {
    for (const char* text : {"0", "3", "-3/2", "1/2+2/3 i", "1/2-2/3 i", "-5 i", "7/3"}) {
        ExactScalar v = ExactScalar::parse(text);
        CHECK(ExactScalar::parse(v.str()) == v);
    }
    CHECK(ExactScalar::parse("1/2+2/3 i") == ExactScalar(Rational(1, 2), Rational(2, 3)));
    CHECK_THROWS_AS(ExactScalar::parse("1/2+!"), std::invalid_argument);
}

TEST_CASE("poly basics") {
    Poly z = Poly::var();
    Poly p = from_ints({1, 0, -2}); // 1 - 2 z^2
    CHECK(p.degree() == 2);
    CHECK((p - p).is_zero());
    CHECK(p * Poly::one() == p);
    CHECK((z * z).coeff(2) == ExactScalar(1));
    CHECK(p.eval(ExactScalar(2)) == ExactScalar(-7));
    CHECK(from_ints({0, 0}).is_zero());
}

TEST_CASE("poly derivative examples") {
    // (z^2, 3z) -> (2z, 3); constants -> 0
    CHECK(from_ints({0, 0, 1}).derivative() == from_ints({0, 2}));
    CHECK(from_ints({0, 3}).derivative() == from_ints({3}));
    CHECK(from_ints({5}).derivative().is_zero());
}

TEST_CASE("poly division and gcd") {
    Poly a = from_ints({-1, 0, 1}); // z^2 - 1
    Poly b = from_ints({1, 1});     // z + 1
    auto [q, r] = divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == from_ints({-1, 1}));
    CHECK(exact_div(a, b) == q);
    CHECK(poly_gcd(a, b) == b); // monic z + 1
    CHECK_THROWS_AS(exact_div(b, a), std::logic_error);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Poly f = random_poly(rng, 4);
        Poly g = random_poly(rng, 3);
        if (g.is_zero())
            continue;
        auto [qq, rr] = divmod(f, g);
        CHECK(qq * g + rr == f);
        CHECK(rr.degree() < g.degree());
    }
}

TEST_CASE("derivative is linear and satisfies the product rule") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Poly f = random_poly(rng, 5);
        Poly g = random_poly(rng, 5);
        CHECK((f + g).derivative() == f.derivative() + g.derivative());
        CHECK((f * g).derivative() == f.derivative() * g + f * g.derivative());
    }
}

TEST_CASE("degree cap rejects runaway growth") {
    int old = degree_cap();
    set_degree_cap(8);
    Poly z = Poly::var();
    Poly p = z;
    CHECK_THROWS_AS([&] {
        for (int i = 0; i < 10; ++i)
            p = p * p;
    }(), DegreeCapExceeded);
    set_degree_cap(old);
}
