#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gen.hpp"
#include "pinchuk/avariety.hpp"
#include "pinchuk/levelset.hpp"

using namespace pinchuk;

TEST_CASE("poles of the level three parametrization") {
    auto ps = poles(Rat(3));
    REQUIRE(ps.size() == 3);
    CHECK(ps[0].location == QuadNum(Rat(-3)));
    CHECK_FALSE(ps[0].divergent);
    CHECK(ps[1].location == QuadNum(Rat(1)));
    CHECK_FALSE(ps[1].divergent);
    CHECK(ps[2].location == QuadNum(Rat(3)));
    CHECK(ps[2].divergent);
}

TEST_CASE("pole structure across level ranges") {
    auto below = poles(Rat(-2));
    REQUIRE(below.size() == 1);
    CHECK(below[0].location == QuadNum(Rat(-2)));
    CHECK(below[0].divergent);

    auto irr = poles(Rat(1));
    REQUIRE(irr.size() == 3);
    CHECK(irr[0].location == QuadNum(Rat(-1)) - QuadNum::sqrt_of(Rat(2)));
    CHECK(irr[1].location == QuadNum(Rat(-1)) + QuadNum::sqrt_of(Rat(2)));
    CHECK(irr[2].location == QuadNum(Rat(1)));
    CHECK(irr[2].divergent);

    CHECK_THROWS_AS(poles(Rat(0)), domain_error);
    CHECK_THROWS_AS(poles(Rat(-1)), domain_error);
}

TEST_CASE("level parametrization stays on its level") {
    PinchukCore core = build_core();
    LevelParam lp = param_level(core, Rat(3));
    Rat x = lp.x_of_h.evaluate({{"h", Rat(0)}});
    Rat y = lp.y_of_h.evaluate({{"h", Rat(0)}});
    CHECK(x == Rat(1, 3));
    CHECK(y == Rat(3));
    CHECK(core.P.evaluate({{"x", x}, {"y", y}}) == 3);
    CHECK(lp.excluded.size() == 3);

    std::mt19937 rng(961u);
    for (int k = 0; k < 10; ++k) {
        Rat c = gen::rat(rng, 9, 4);
        if (c == 0 || c == -1) continue;
        LevelParam p = param_level(core, c);
        Rat h = gen::rat(rng, 9, 4);
        if (c - 2 * h - h * h == 0 || c == h) continue;
        Rat px = p.x_of_h.evaluate({{"h", h}});
        Rat py = p.y_of_h.evaluate({{"h", h}});
        CHECK(core.P.evaluate({{"x", px}, {"y", py}}) == c);
        CHECK(core.h.evaluate({{"x", px}, {"y", py}}) == h);
    }
    CHECK_THROWS_AS(param_level(core, Rat(0)), domain_error);
    CHECK_THROWS_AS(param_level(core, Rat(-1)), domain_error);
}

TEST_CASE("finite asymptotic values at level three") {
    PinchukCore core = build_core();
    auto vals = asymptotic_values(core, Rat(3));
    REQUIRE(vals.size() == 2);
    CHECK(vals[0].first == QuadNum(Rat(-3)));
    CHECK(vals[0].second == QuadNum(Rat(16821, 4)));
    CHECK(vals[1].first == QuadNum(Rat(1)));
    CHECK(vals[1].second == QuadNum(Rat(-4235, 4)));
}

TEST_CASE("finite asymptotic values at level eight") {
    PinchukCore core = build_core();
    auto vals = asymptotic_values(core, Rat(8));
    REQUIRE(vals.size() == 2);
    CHECK(vals[0].first == QuadNum(Rat(-4)));
    CHECK(vals[0].second == QuadNum(Rat(26480)));
    CHECK(vals[1].first == QuadNum(Rat(2)));
    CHECK(vals[1].second == QuadNum(Rat(-11536)));
}

TEST_CASE("no finite asymptotes below level minus one") {
    PinchukCore core = build_core();
    CHECK(asymptotic_values(core, Rat(-2)).empty());
    CHECK(asymptotic_values(core, Rat(-7, 2)).empty());
}

TEST_CASE("asymptotic values land on the limit curve") {
    PinchukCore core = build_core();
    AsymVariety av = build_asym_variety(core);
    std::mt19937 rng(962u);
    for (int k = 0; k < 6; ++k) {
        Rat c = Rat(gen::pick(rng, 1, 40), gen::pick(rng, 1, 4));
        c.canonicalize();
        if (c == 0 || c == -1) continue;
        for (const auto& [pole, value] : asymptotic_values(core, c))
            CHECK(evaluate_quad(av.w, {{"P", QuadNum(c)}, {"Q", value}}).signum() == 0);
    }
}

TEST_CASE("zero level splits into five rational arcs") {
    PinchukCore core = build_core();
    ZeroLevel z = level_zero_components(core);
    CHECK(z.component_count == 5);
    CHECK(z.excluded_h == std::vector<Rat>{Rat(0), Rat(-2)});

    // h-branch spot check away from the excluded parameters
    Rat x1 = z.x_of_h.evaluate({{"h", Rat(1)}});
    Rat y1 = z.y_of_h.evaluate({{"h", Rat(1)}});
    CHECK(core.P.evaluate({{"x", x1}, {"y", y1}}) == 0);
    CHECK(core.h.evaluate({{"x", x1}, {"y", y1}}) == 1);

    // t-branch spot check: t=1 gives (-1, -2) with Q = -1
    Rat xt = z.t_branch.x_of_t.evaluate({{"t", Rat(1)}});
    Rat yt = z.t_branch.y_of_t.evaluate({{"t", Rat(1)}});
    CHECK(xt == Rat(-1));
    CHECK(yt == Rat(-2));
    CHECK(core.P.evaluate({{"x", xt}, {"y", yt}}) == 0);
    CHECK(core.Q.evaluate({{"x", xt}, {"y", yt}}) == -1);
    CHECK(z.t_branch.q_of_t.evaluate({{"t", Rat(1)}}) == -1);
}

TEST_CASE("level Q restriction keeps its divergent pole") {
    PinchukCore core = build_core();
    RatFn q3 = q_on_level(core, Rat(3));
    LimitResult at_pole = limit_at(q3, QuadNum(Rat(3)));
    CHECK_FALSE(at_pole.finite);
    CHECK(at_pole.pole_order > 0);
    LimitResult at_asym = limit_at(q3, QuadNum(Rat(-3)));
    CHECK(at_asym.finite);
    CHECK(at_asym.value == QuadNum(Rat(16821, 4)));
}
