#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gen.hpp"
#include "pinchuk/ratfn.hpp"

using namespace pinchuk;

namespace {
const Universe X{"x"};
const Universe XY{"x", "y"};

RatFn rf(const MPoly& n, const MPoly& d) { return RatFn(n, d); }
}

TEST_CASE("formal quotients compare by cross multiplication") {
    MPoly x = MPoly::var(X, "x");
    MPoly one = MPoly::constant(X, 1);
    CHECK(rf(x * x - one, x - one) == RatFn(x + one));
    CHECK(rf(x, x * x) == rf(one, x));
    CHECK(rf(x, x + one) != rf(x, x - one));
    CHECK_THROWS_AS(RatFn(x, MPoly::zero(X)), domain_error);
    CHECK_THROWS_AS(RatFn(MPoly::var(XY, "x")) == RatFn(x), universe_mismatch);
}

TEST_CASE("arithmetic keeps identities") {
    MPoly x = MPoly::var(X, "x");
    MPoly one = MPoly::constant(X, 1);
    RatFn a = rf(one, x);
    RatFn b = rf(one, x + one);
    CHECK(a - b == rf(one, x * (x + one)));
    CHECK(a * b == rf(one, x * (x + one)));
    CHECK(a / b == rf(x + one, x));
    CHECK(a.pow(2) == rf(one, x * x));
    CHECK_THROWS_AS(a / RatFn(MPoly::zero(X)), domain_error);
}

TEST_CASE("equivalence relation on seeded samples") {
    std::mt19937 rng(921u);
    for (int k = 0; k < 8; ++k) {
        MPoly n = gen::mpoly(rng, X, 3, 3);
        MPoly d = gen::mpoly(rng, X, 2, 3);
        MPoly s = gen::mpoly(rng, X, 2, 2);
        if (d.is_zero() || s.is_zero()) continue;
        RatFn a = rf(n, d);
        CHECK(a == rf(n * s, d * s));        // scaling invariance
        RatFn b = rf(n * s, d * s);
        RatFn c = gen::mpoly(rng, X, 2, 2).is_zero() ? a : rf(n, d);
        CHECK(a == a);
        CHECK((a == b) == (b == a));
        if (a == b && b == c) CHECK(a == c);
        // compatibility with arithmetic
        RatFn w = rf(gen::mpoly(rng, X, 2, 3), d);
        CHECK(a + w == b + w);
        CHECK(a * w == b * w);
    }
}

TEST_CASE("evaluation and poles") {
    MPoly x = MPoly::var(X, "x");
    MPoly one = MPoly::constant(X, 1);
    RatFn a = rf(x + one, x - one);
    CHECK(a.evaluate({{"x", Rat(3)}}) == 2);
    CHECK_THROWS_AS(a.evaluate({{"x", Rat(1)}}), domain_error);
}

TEST_CASE("polynomial detection") {
    MPoly x = MPoly::var(X, "x");
    MPoly one = MPoly::constant(X, 1);
    RatFn a = rf(Rat(2) * x, MPoly::constant(X, 2));
    CHECK(a.is_polynomial());
    CHECK(a.as_polynomial() == x);
    CHECK(rf(x * x - one, x - one).is_polynomial() == false); // no implicit cancellation
    CHECK_THROWS_AS(rf(one, x).as_polynomial(), domain_error);
}

TEST_CASE("substitution composes exactly") {
    MPoly x = MPoly::var(XY, "x"), y = MPoly::var(XY, "y");
    RatFn target = rf(x, y);
    Universe T{"t"};
    MPoly t = MPoly::var(T, "t");
    MPoly onet = MPoly::constant(T, 1);
    RatFn xt = rf(onet, t);
    RatFn yt = RatFn(t + onet);
    RatFn composed = target.substitute({{"x", xt}, {"y", yt}});
    CHECK(composed == rf(onet, t * (t + onet)));
    std::mt19937 rng(922u);
    for (int k = 0; k < 6; ++k) {
        Rat tv = gen::rat(rng, 6, 3);
        if (tv == 0 || tv == -1) continue;
        CHECK(composed.evaluate({{"t", tv}}) ==
              target.evaluate({{"x", Rat(1) / tv}, {"y", tv + 1}}));
    }
}

TEST_CASE("limits at rational points match direct evaluation") {
    std::mt19937 rng(923u);
    Universe T{"T"};
    MPoly t = MPoly::var(T, "T");
    for (int k = 0; k < 8; ++k) {
        MPoly n = gen::mpoly(rng, T, 3, 3);
        MPoly d = gen::mpoly(rng, T, 2, 3);
        if (d.is_zero()) continue;
        RatFn a = rf(n, d);
        Rat s = gen::rat(rng, 5, 3);
        if (d.evaluate({{"T", s}}) == 0) continue;
        LimitResult lim = limit_at(a, QuadNum(s));
        REQUIRE(lim.finite);
        CHECK(lim.value.is_rational());
        CHECK(lim.value.as_rational() == a.evaluate({{"T", s}}));
    }
}

TEST_CASE("limits where numerator and denominator share roots") {
    Universe T{"T"};
    MPoly t = MPoly::var(T, "T");
    MPoly one = MPoly::constant(T, 1);

    LimitResult removable = limit_at(rf(t * t - one, t - one), QuadNum(Rat(1)));
    REQUIRE(removable.finite);
    CHECK(removable.value.as_rational() == 2);

    LimitResult pole = limit_at(rf(one, (t - one).pow(2)), QuadNum(Rat(1)));
    CHECK(!pole.finite);
    CHECK(pole.pole_order == 2);

    LimitResult zero = limit_at(RatFn(MPoly::zero(T)), QuadNum(Rat(1)));
    REQUIRE(zero.finite);
    CHECK(zero.value.as_rational() == 0);

    // at T = sqrt(2): (T^2-2)/(T^4-4) -> 1/(T^2+2) -> 1/4
    MPoly two = MPoly::constant(T, 2);
    LimitResult quad = limit_at(rf(t * t - two, t.pow(4) - two * two), QuadNum::sqrt_of(Rat(2)));
    REQUIRE(quad.finite);
    CHECK(quad.value.as_rational() == Rat(1, 4));

    LimitResult vanish = limit_at(rf((t * t - two).pow(2), t * t - two), QuadNum::sqrt_of(Rat(2)));
    REQUIRE(vanish.finite);
    CHECK(vanish.value.as_rational() == 0);
}
