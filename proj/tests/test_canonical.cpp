#include "unitons/canonical.hpp"
#include "unitons/golden_tables.hpp"

#include <doctest.h>

#include <set>

using namespace unitons;

namespace {

LatticeElement el(int n, std::initializer_list<long> coeffs) {
    return LatticeElement{n, std::vector<long>(coeffs)};
}

std::set<LatticeElement> as_set(const std::vector<LatticeElement>& v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("plain enumeration examples") {
    CHECK(enumerate_I_canonical(2, {1}) == std::vector<LatticeElement>{el(2, {2})});
    CHECK(enumerate_I_canonical(3, {1, 2}) == std::vector<LatticeElement>{el(3, {1, 1})});
    CHECK(as_set(enumerate_I_canonical(4, {1, 2, 3})) ==
          as_set({el(4, {1, 2, 1}), el(4, {3, 1, 1}), el(4, {1, 1, 3})}));
    CHECK_THROWS_AS(enumerate_I_canonical(4, {}), std::invalid_argument);
}

TEST_CASE("singleton supports give m_i H_i") {
    for (int n = 2; n <= 7; ++n) {
        for (int i = 1; i < n; ++i) {
            LatticeElement expected;
            expected.n = n;
            expected.coeffs.assign(static_cast<std::size_t>(n - 1), 0);
            expected.coeffs[static_cast<std::size_t>(i - 1)] = min_multiple(n, i);
            CHECK(enumerate_I_canonical(n, {i}) == std::vector<LatticeElement>{expected});
        }
    }
}

TEST_CASE("odd n has a unique full-support canonical element") {
    for (int n : {3, 5, 7}) {
        std::vector<int> full;
        for (int i = 1; i < n; ++i)
            full.push_back(i);
        LatticeElement ones;
        ones.n = n;
        ones.coeffs.assign(static_cast<std::size_t>(n - 1), 1);
        CHECK(enumerate_I_canonical(n, full) == std::vector<LatticeElement>{ones});
    }
}

TEST_CASE("symmetric enumeration examples") {
    CHECK(enumerate_symmetric_canonical(2).empty());
    CHECK(as_set(enumerate_symmetric_canonical(3)) ==
          as_set({el(3, {1, 1}), el(3, {4, 1}), el(3, {1, 4}), el(3, {3, 0}), el(3, {0, 3})}));
    CHECK(as_set(enumerate_symmetric_canonical(4)) ==
          as_set({el(4, {3, 1, 1}), el(4, {1, 1, 3}), el(4, {2, 1, 0}), el(4, {0, 1, 2}),
                  el(4, {1, 0, 1})}));
}

TEST_CASE("maximality oracle agrees with the enumerations for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        // plain: every enumerated element is oracle-maximal, and the oracle
        // filter over the box reproduces the enumeration
        for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> I;
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1)))
                    I.push_back(i);
            auto canon = enumerate_I_canonical(n, I);
            for (const auto& xi : canon)
                CHECK(maximality_oracle(xi, CanonicalMode::plain));
        }
        auto sym = enumerate_symmetric_canonical(n);
        for (const auto& xi : sym)
            CHECK(maximality_oracle(xi, CanonicalMode::symmetric));
    }
}

TEST_CASE("oracle filter over the box reproduces the symmetric enumeration") {
    for (int n = 2; n <= 5; ++n) {
        std::vector<LatticeElement> via_oracle;
        std::vector<long> cur(static_cast<std::size_t>(n - 1), 0);
        std::vector<long> hi;
        for (int i = 1; i < n; ++i)
            hi.push_back(2 * min_multiple(n, i) - 1);
        while (true) {
            LatticeElement xi{n, cur};
            if (!is_zero(xi) && in_lattice(xi) && !symmetric_trivial(xi) &&
                maximality_oracle(xi, CanonicalMode::symmetric))
                via_oracle.push_back(xi);
            std::size_t slot = 0;
            while (slot < cur.size()) {
                if (++cur[slot] <= hi[slot])
                    break;
                cur[slot] = 0;
                ++slot;
            }
            if (slot == cur.size())
                break;
        }
        std::sort(via_oracle.begin(), via_oracle.end());
        CHECK(via_oracle == enumerate_symmetric_canonical(n));
    }
}

TEST_CASE("oracle spot checks") {
    CHECK(maximality_oracle(el(4, {1, 2, 1}), CanonicalMode::plain));
    CHECK_FALSE(maximality_oracle(el(4, {1, 2, 1}), CanonicalMode::symmetric));
    CHECK(maximality_oracle(el(5, {4, 2, 1, 1}), CanonicalMode::symmetric));
}

TEST_CASE("chi action permutes canonical sets") {
    for (int n : {4, 5}) {
        auto plain = enumerate_all_canonical(n);
        auto sym = enumerate_symmetric_canonical(n);
        auto closed_under = [&](const std::vector<LatticeElement>& set) {
            auto s = as_set(set);
            for (const auto& xi : set) {
                CHECK(s.count(chi1(xi)) == 1);
                if (n % 2 == 1)
                    CHECK(s.count(chi2(xi)) == 1);
            }
        };
        closed_under(plain);
        closed_under(sym);
    }
}

TEST_CASE("symmetric canonical elements are non-trivial") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& xi : enumerate_symmetric_canonical(n)) {
            CHECK_FALSE(symmetric_trivial(xi));
            CHECK_FALSE(grassmannian_target(xi).is_point());
        }
}

TEST_CASE("quotient by symmetry") {
    auto sym3 = quotient_by_symmetry(
        make_canonical_set(3, CanonicalMode::symmetric, enumerate_symmetric_canonical(3)));
    REQUIRE(sym3.orbits.size() == 3);
    CHECK(sym3.orbits[0] == std::vector<LatticeElement>{el(3, {0, 3}), el(3, {3, 0})});
    CHECK(sym3.orbits[1] == std::vector<LatticeElement>{el(3, {1, 1})});
    CHECK(sym3.orbits[2] == std::vector<LatticeElement>{el(3, {1, 4}), el(3, {4, 1})});

    auto full4 = quotient_by_symmetry(make_canonical_set(
        4, CanonicalMode::plain, enumerate_I_canonical(4, {1, 2, 3})));
    CHECK(full4.orbits.size() == 2);

    auto singleton = quotient_by_symmetry(
        make_canonical_set(4, CanonicalMode::plain, {el(4, {1, 2, 1})}));
    REQUIRE(singleton.orbits.size() == 1);
    CHECK(singleton.orbits[0] == std::vector<LatticeElement>{el(4, {1, 2, 1})});
}

TEST_CASE("golden tables verify and the negative control names the missing orbit") {
    TableCheck t1 = check_table(1);
    CHECK(t1.pass);
    TableCheck t2 = check_table(2);
    CHECK(t2.pass);

    // negative control: drop one golden row; the comparison must flag an
    // extra computed orbit (the one no longer matched)
    std::vector<GoldenRow> damaged = golden_table1();
    damaged.erase(damaged.begin()); // removes the H1+2H2+H3 orbit for SU(4)
    std::vector<CanonicalSet> computed;
    for (int n : {4, 5})
        computed.push_back(quotient_by_symmetry(
            make_canonical_set(n, CanonicalMode::plain, enumerate_all_canonical(n))));
    TableCheck broken = compare_orbits(damaged, computed);
    CHECK_FALSE(broken.pass);
    REQUIRE(broken.extra_orbits.size() == 1);
    CHECK(broken.extra_orbits[0].find("1,2,1") != std::string::npos);
}
