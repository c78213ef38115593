#include "unitons/bundles.hpp"
#include "unitons/errors.hpp"

#include <doctest.h>

#include <random>

using namespace unitons;

namespace {

Poly P(std::initializer_list<long> coeffs) {
    std::vector<ExactScalar> c;
    for (long v : coeffs)
        c.emplace_back(v);
    return Poly(std::move(c));
}

const PolyVec curve{P({1}), P({0, 1}), P({0, 0, 1})}; // (1, z, z^2)
const PolyVec e3{P({0}), P({0}), P({1})};

MeromorphicBundle span3(std::initializer_list<PolyVec> sections) {
    return MeromorphicBundle::from_sections(3, std::vector<PolyVec>(sections));
}

MeromorphicBundle random_bundle(int n, int rank, int deg, std::mt19937_64& rng) {
    while (true) {
        std::vector<PolyVec> cols;
        for (int c = 0; c < rank; ++c)
            cols.push_back(random_poly_vector(n, deg, rng()));
        MeromorphicBundle e = MeromorphicBundle::from_sections(n, cols);
        if (e.rank() == rank)
            return e;
    }
}

} // namespace

TEST_CASE("osculate up") {
    MeromorphicBundle line = span3({curve});
    MeromorphicBundle up1 = osculate_up(line, 1);
    CHECK(up1.rank() == 2);
    CHECK(bundle_equal(up1, span3({curve, ddz(curve)})));
    CHECK(osculate_up(line, 2).rank() == 3); // Wronskian of 1, z, z^2 is nonzero
    MeromorphicBundle constant = span3({PolyVec{P({1}), P({2}), P({0})}, e3});
    CHECK(bundle_equal(osculate_up(constant, 3), constant));
}

TEST_CASE("osculate down") {
    CHECK(osculate_down(span3({curve}), 1).is_zero());
    MeromorphicBundle constant = span3({PolyVec{P({1}), P({2}), P({0})}, e3});
    CHECK(bundle_equal(osculate_down(constant, 2), constant));
    MeromorphicBundle plane = span3({curve, e3});
    MeromorphicBundle down = osculate_down(plane, 1);
    CHECK(down.rank() == 1);
    CHECK(bundle_equal(down, span3({e3})));
}

TEST_CASE("osculation stats") {
    auto st1 = osculation_stats(span3({curve}));
    CHECK(st1.g == 1);
    CHECK(st1.q == 1);
    CHECK(st1.r == 0);
    auto st2 = osculation_stats(span3({PolyVec{P({1}), P({0}), P({0})}, e3}));
    CHECK(st2.g == 0);
    CHECK(st2.q == 0);
    CHECK(st2.r == 2);
    auto st3 = osculation_stats(span3({curve, e3}));
    CHECK(st3.g == 1);
    CHECK(st3.q == 2);
    CHECK(st3.r == 0);
}

TEST_CASE("constant part") {
    MeromorphicBundle plane = span3({curve, e3});
    MeromorphicBundle cp = constant_part(plane);
    CHECK(cp.rank() == 1);
    CHECK(bundle_contains(plane, cp));
    CHECK(constant_part(MeromorphicBundle::full(3)).rank() == 3);
    CHECK(constant_part(MeromorphicBundle::zero(3)).rank() == 0);
    CHECK(bundle_is_constant(span3({e3})));
    CHECK_FALSE(bundle_is_constant(span3({curve})));
}

TEST_CASE("osculating rank laws on random bundles") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 3 + static_cast<int>(rng() % 3);
        int rank = 1 + static_cast<int>(rng() % (n - 1));
        MeromorphicBundle e = random_bundle(n, rank, 3, rng);
        int g = osculation_stats(e).g;
        // equalities at i = 1
        CHECK(osculate_up(e, 1).rank() == e.rank() + g);
        MeromorphicBundle down1 = osculate_down(e, 1);
        CHECK(down1.rank() == e.rank() - g);
        CHECK(osculation_stats(down1).g <= g);
        // inequalities for higher orders
        for (int i = 2; i <= 3; ++i) {
            MeromorphicBundle up = osculate_up(e, i);
            CHECK(up.rank() <= e.rank() + i * g);
            CHECK(osculation_stats(up).g <= g);
            MeromorphicBundle down = osculate_down(e, i);
            CHECK(down.rank() >= e.rank() - i * g);
            if (!down.is_zero())
                CHECK(osculation_stats(down).g <= g);
        }
        // E^(-1)^(1) stays inside E
        CHECK(bundle_contains(e, osculate_up(down1, 1)));
    }
}

TEST_CASE("is_superhorizontal") {
    HoloFlag bad;
    bad.n = 3;
    bad.lo = -1;
    bad.members = {span3({curve}), span3({curve, e3})};
    CHECK_FALSE(is_superhorizontal(bad)); // (0,1,2z) is not in the second member

    HoloFlag good;
    good.n = 3;
    good.lo = -1;
    good.members = {span3({curve}), span3({curve, ddz(curve)})};
    CHECK(is_superhorizontal(good));

    HoloFlag constant;
    constant.n = 3;
    constant.lo = 0;
    constant.members = {span3({e3}), span3({PolyVec{P({1}), P({0}), P({0})}, e3})};
    CHECK(is_superhorizontal(constant));
}

TEST_CASE("build_subflag") {
    MeromorphicBundle full = MeromorphicBundle::full(3);
    HoloFlag flag = build_subflag(full, 1, 7);
    REQUIRE(flag.members.size() == 4); // ranks 0, 1, 2, 3
    for (int i = 0; i < 4; ++i)
        CHECK(flag.members[static_cast<std::size_t>(i)].rank() == i);
    CHECK(is_superhorizontal(flag));

    MeromorphicBundle constant = span3({PolyVec{P({1}), P({2}), P({0})}, e3});
    HoloFlag cflag = build_subflag(constant, 1, 3);
    CHECK(is_superhorizontal(cflag));
    CHECK(cflag.members.back().rank() == 2);

    MeromorphicBundle mixed = span3({curve, e3});
    HoloFlag mflag = build_subflag(mixed, 1, 11);
    REQUIRE(mflag.members.size() == 3);
    CHECK(mflag.members[0].rank() == 0);
    CHECK(mflag.members[1].rank() == 1);
    CHECK(bundle_equal(mflag.members[2], mixed));
    CHECK(is_superhorizontal(mflag));

    // constant bundle with g = 0 yields the trivial one-member flag
    HoloFlag trivial = build_subflag(constant, 0, 1);
    CHECK(trivial.members.size() == 1);
    CHECK_THROWS_AS(build_subflag(span3({curve}), 0, 1), std::invalid_argument);
}

TEST_CASE("interpolate_flag") {
    MeromorphicBundle zero = MeromorphicBundle::zero(3);
    MeromorphicBundle full3 = MeromorphicBundle::full(3);
    InterpolationResult res = interpolate_flag(zero, full3, 0, 0, 2, 1, 5);
    CHECK(res.f.rank() == 2);
    CHECK(osculation_stats(res.f).g <= 1);
    CHECK(is_superhorizontal(res.internal));
    REQUIRE(res.internal.members.size() == 2);
    CHECK(res.internal.members[0].rank() == 1); // super-horizontal rank-1 sub

    // impossible d: T = E means rank T^(j) = rank E^(-i) leaves no room
    CHECK_THROWS_AS(interpolate_flag(full3, full3, 0, 0, 3, 1, 1), std::invalid_argument);

    // T a non-constant line in C^4, j = 1: F must contain T^(1)
    std::mt19937_64 rng(55);
    MeromorphicBundle t = random_bundle(4, 1, 3, rng);
    MeromorphicBundle full4 = MeromorphicBundle::full(4);
    InterpolationResult res4 = interpolate_flag(t, full4, 0, 1, 3, 1, 9);
    CHECK(res4.f.rank() == 3);
    CHECK(osculation_stats(res4.f).g <= 1);
    CHECK(bundle_contains(res4.f, osculate_up(t, 1)));
    CHECK(is_superhorizontal(res4.internal));
}

TEST_CASE("build_canonical_flag shapes") {
    LatticeElement xi1{3, {1, 1}};
    HoloFlag f1 = build_canonical_flag(xi1, 7);
    REQUIRE(f1.members.size() == 2);
    CHECK(f1.members[0].rank() == 1);
    CHECK(f1.members[1].rank() == 2);
    CHECK(is_superhorizontal(f1));
    // the line actually moves: generic draws give a non-constant member
    CHECK_FALSE(bundle_is_constant(f1.members[0]));

    LatticeElement xi2{3, {3, 0}};
    HoloFlag f2 = build_canonical_flag(xi2, 7);
    REQUIRE(f2.members.size() == 3);
    for (const auto& m : f2.members) {
        CHECK(m.rank() == 2);
        CHECK(bundle_is_constant(m));
        CHECK(bundle_equal(m, f2.members[0]));
    }

    LatticeElement xi3{4, {1, 2, 1}};
    HoloFlag f3 = build_canonical_flag(xi3, 1);
    REQUIRE(f3.members.size() == 4);
    CHECK(f3.members[0].rank() == 1);
    CHECK(f3.members[1].rank() == 2);
    CHECK(f3.members[2].rank() == 2);
    CHECK(f3.members[3].rank() == 3);
    CHECK(is_superhorizontal(f3));
    CHECK(bundle_is_constant(f3.members[1])); // A_{-1} = A_0 is constant
    CHECK(bundle_equal(f3.members[1], f3.members[2]));

    CHECK_THROWS_AS(build_canonical_flag(LatticeElement{4, {0, 0, 0}}, 1),
                    std::invalid_argument);
}

TEST_CASE("canonical flags over seeds and elements") {
    std::vector<LatticeElement> els = {
        {2, {2}}, {3, {1, 1}}, {3, {3, 0}}, {4, {3, 1, 1}}, {4, {2, 1, 0}}, {4, {1, 0, 1}},
    };
    for (const auto& xi : els) {
        for (std::uint64_t seed : {1, 2}) {
            HoloFlag flag = build_canonical_flag(xi, seed);
            FlagType ft = flag_type(xi);
            REQUIRE(flag.members.size() == ft.d.size() - 1);
            for (int i = -ft.s; i <= ft.r - 1; ++i)
                CHECK(flag.at(i).rank() == ft.at(i));
            CHECK(is_superhorizontal(flag));
        }
    }
}
