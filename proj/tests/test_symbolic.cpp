#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kmslab/symbolic.hpp"

using namespace kmslab;

static SplitMix64 rng(0x5eed'0002u);

namespace {

BiSeq random_biseq() {
    auto word = [&](int max_len) {
        int len = 1 + static_cast<int>(rng.below(max_len));
        std::string w;
        for (int i = 0; i < len; ++i) w += rng.coin() ? '1' : '0';
        return w;
    };
    int core_len = static_cast<int>(rng.below(6));
    std::string core;
    for (int i = 0; i < core_len; ++i) core += rng.coin() ? '1' : '0';
    long long lo = core.empty() ? 0 : -static_cast<long long>(rng.below(core_len + 1));
    return BiSeq(word(4), core, lo, word(4));
}

OmegaZPoint random_point() { return {random_biseq(), rng.range(-6, 6)}; }

}  // namespace

TEST_CASE("chi") {
    Potential pot(Real(1), parse_scalar("0.7"));
    CHECK(chi(BiSeq::constant(0), pot) == Real(1));
    CHECK(chi(BiSeq::constant(1), pot) == Real("-0.7"));
    Potential zero(Real(1), parse_scalar("0"));
    CHECK(chi(BiSeq::constant(1), zero) == Real(0));
}

TEST_CASE("birkhoff closed forms") {
    Potential pot(Real(1), parse_scalar("0"));
    CHECK(birkhoff(BiSeq::constant(1), 0, pot) == Real(0));
    CHECK(birkhoff(BiSeq::constant(1), 1, pot) == Real(0));

    // S_n = |n| * theta for n <= -1 on the step sequence
    Potential pot2(Real(1), parse_scalar("2/5"));
    CHECK(birkhoff_rational(BiSeq::step(), -3, Rational(2, 5)) == Rational(6, 5));
    CHECK(abs(birkhoff(BiSeq::step(), -3, pot2) - Real(3) * Real(2) / Real(5)) < Real("1e-36"));
}

TEST_CASE("birkhoff matches direct summation") {
    Rational theta(3, 7);
    for (int i = 0; i < 100; ++i) {
        BiSeq x = random_biseq();
        long long n = rng.range(-25, 25);
        Rational direct(0);
        if (n >= 1)
            for (long long j = 0; j < n; ++j) direct += chi_rational(shift(x, j), theta);
        else if (n <= -1)
            for (long long j = 1; j <= -n; ++j) direct -= chi_rational(shift(x, -j), theta);
        CHECK(birkhoff_rational(x, n, theta) == direct);
    }
}

TEST_CASE("birkhoff cocycle law") {
    Rational theta(1, 3);
    for (int i = 0; i < 100; ++i) {
        BiSeq x = random_biseq();
        for (long long m = -20; m <= 20; m += 5)
            for (long long n = -20; n <= 20; n += 5) {
                CHECK(birkhoff_rational(x, m + n, theta) ==
                      birkhoff_rational(x, n, theta) +
                          birkhoff_rational(shift(x, n), m, theta));
            }
    }
}

TEST_CASE("profile examples") {
    OmegaZPoint zeros{BiSeq::constant(0), 5};
    for (long long m = -7; m <= 7; ++m) CHECK(profile(zeros, m) == 5);

    OmegaZPoint ones{BiSeq::constant(1), 0};
    CHECK(profile(ones, 3) == -3);
    long long direct = 0;
    for (long long j = 0; j < 3; ++j) direct += ones.x.bit(j);
    CHECK(profile(ones, 3) == ones.t - direct);
}

TEST_CASE("profile consistency a_m - a_{m+1} = x_m") {
    for (int i = 0; i < 1000; ++i) {
        OmegaZPoint pt = random_point();
        long long m = rng.range(-15, 15);
        CHECK(profile(pt, m) - profile(pt, m + 1) == pt.x.bit(m));
    }
}

TEST_CASE("hereditary set membership") {
    OmegaZPoint ones{BiSeq::constant(1), 0};
    CHECK(in_hereditary_set(ones, -kE2));        // v-coords (1,-1), -1 <= a_1 = -1
    CHECK_FALSE(in_hereditary_set(ones, kE1));   // v-coords (1,0), 0 <= -1 fails
    OmegaZPoint zeros{BiSeq::constant(0), 0};
    CHECK(in_hereditary_set(zeros, GroupElement{0, 0}));
}

TEST_CASE("action examples") {
    OmegaZPoint ones{BiSeq::constant(1), 0};
    OmegaZPoint moved = act(ones, kV1);
    CHECK(moved.x == BiSeq::constant(1));
    CHECK(moved.t == 1);

    for (int i = 0; i < 50; ++i) {
        OmegaZPoint pt = random_point();
        CHECK(act(pt, GroupElement{0, 0}) == pt);
        CHECK(act(act(pt, kV1), -kV1) == pt);
    }
}

TEST_CASE("act is a group action") {
    for (int i = 0; i < 1000; ++i) {
        OmegaZPoint pt = random_point();
        GroupElement s{rng.range(-8, 8), rng.range(-8, 8)};
        GroupElement t{rng.range(-8, 8), rng.range(-8, 8)};
        CHECK(act(pt, s + t) == act(act(pt, s), t));
    }
}

TEST_CASE("v1 carries the left ones count") {
    for (int i = 0; i < 200; ++i) {
        OmegaZPoint pt = random_point();
        long long m = 1 + rng.range(0, 9);
        CHECK(act(pt, kV1 * m).t - pt.t == pt.x.ones_in(-m, 0));
    }
}

TEST_CASE("equivariance of the parametrization") {
    OmegaZPoint ones{BiSeq::constant(1), 0};
    CHECK(equivariance_check(ones, GroupElement{0, 0}, 4));
    CHECK(equivariance_check(ones, kV2, 6));
    for (int i = 0; i < 200; ++i) {
        OmegaZPoint pt = random_point();
        GroupElement s{rng.range(-4, 4), rng.range(-4, 4)};
        CHECK(equivariance_check(pt, s, 8));
    }
}

TEST_CASE("stabilizer of periodic points") {
    OmegaZPoint ones{BiSeq::constant(1), 0};
    auto g = stabilizer_of(ones);
    REQUIRE(g.has_value());
    CHECK(*g == -kE2);  // v1 - v2
    CHECK(act(ones, *g) == ones);

    OmegaZPoint step{BiSeq::step(), 0};
    CHECK_FALSE(stabilizer_of(step).has_value());

    OmegaZPoint alt{BiSeq::parse("(01)* . (01)*"), 0};
    auto h = stabilizer_of(alt);
    REQUIRE(h.has_value());
    CHECK(*h == from_v_coords(2, -1));
    CHECK(act(alt, *h) == alt);
}

TEST_CASE("stabilizer generator is exact, non-multiples move the point") {
    OmegaZPoint alt{BiSeq::parse("(01)* . (01)*"), 0};
    GroupElement g = *stabilizer_of(alt);
    for (long long k = -5; k <= 5; ++k) CHECK(act(alt, g * k) == alt);
    int checked = 0;
    while (checked < 50) {
        GroupElement h{rng.range(-20, 20), rng.range(-20, 20)};
        bool is_multiple = false;
        for (long long k = -25; k <= 25; ++k) is_multiple |= (g * k == h);
        if (is_multiple) continue;
        CHECK_FALSE(act(alt, h) == alt);
        ++checked;
    }
}

TEST_CASE("q_set basics") {
    OmegaZPoint pt{random_biseq(), 0};
    auto q = q_set(pt, 3);
    bool has_zero = false;
    for (auto s : q) has_zero |= s.is_zero();
    CHECK(has_zero);

    OmegaZPoint ones{BiSeq::constant(1), 0};
    auto q1 = q_set(ones, 3);
    bool has_v2 = false;
    for (auto s : q1) has_v2 |= (s == kV2);
    CHECK_FALSE(has_v2);  // acting by -v2 drops the level to -1
}

TEST_CASE("q_set equivariance") {
    for (int i = 0; i < 100; ++i) {
        OmegaZPoint pt = random_point();
        GroupElement s{rng.range(-2, 2), rng.range(-2, 2)};
        auto q_moved = q_set(act(pt, s), 6);
        auto q_base = q_set(pt, 10);
        // within the common window, Q_{pt+s} = Q_pt + s
        for (long long a = -4; a <= 4; ++a)
            for (long long b = -4; b <= 4; ++b) {
                GroupElement u{a, b};
                bool in_moved = false, in_base = false;
                for (auto v : q_moved) in_moved |= (v == u);
                for (auto v : q_base) in_base |= (v == u - s);
                CHECK(in_moved == in_base);
            }
    }
}
