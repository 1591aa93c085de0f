#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gen.hpp"
#include "oracle.hpp"
#include "pinchuk/map.hpp"

using namespace pinchuk;

namespace {

MPoly from_oracle(const oracle::Poly2& p) {
    const Universe& xy = xy_universe();
    MPoly x = MPoly::var(xy, "x"), y = MPoly::var(xy, "y");
    MPoly out = MPoly::zero(xy);
    for (std::size_t i = 0; i < p.c.size(); ++i)
        for (std::size_t j = 0; j < p.c[i].size(); ++j)
            if (p.c[i][j] != 0)
                out = out + Rat(p.c[i][j]) * x.pow(static_cast<unsigned>(i)) *
                                y.pow(static_cast<unsigned>(j));
    return out;
}

} // namespace

TEST_CASE("components match the independent dense expansion") {
    PinchukCore core = build_core();
    CHECK(core.t == from_oracle(oracle::oracle_t()));
    CHECK(core.h == from_oracle(oracle::oracle_h()));
    CHECK(core.f == from_oracle(oracle::oracle_f()));
    CHECK(core.P == from_oracle(oracle::oracle_P()));
    CHECK(core.q == from_oracle(oracle::oracle_q()));
    CHECK(core.u == from_oracle(oracle::oracle_u()));
    CHECK(core.Q == from_oracle(oracle::oracle_Q()));
}

TEST_CASE("degrees and term counts") {
    PinchukCore core = build_core();
    CHECK(oracle::oracle_P().total_degree() == 10);
    CHECK(oracle::oracle_P().term_count() == 12);
    CHECK(oracle::oracle_Q().total_degree() == 25);
    CHECK(oracle::oracle_Q().term_count() == 55);
    CHECK(core.P.total_degree() == 10u);
    CHECK(core.P.term_count() == 12);
    CHECK(core.Q.total_degree() == 25u);
    CHECK(core.Q.term_count() == 55);
    // the y-partial drops total degree by one here, not by zero
    CHECK(oracle::oracle_Q().dy().total_degree() == 24);
    CHECK(core.Q.derivative("y").total_degree() == 24u);
}

TEST_CASE("jacobian determinant is the advertised sum of squares") {
    PinchukCore core = build_core();
    CHECK(verify_jacobian_identity(core));
    MPoly j = jacobian2(core.P, core.Q, "x", "y");
    CHECK(j == sos_polynomial(core));
    CHECK(j == from_oracle(oracle::jacobian(oracle::oracle_P(), oracle::oracle_Q())));
}

TEST_CASE("positivity holds and sampled values are positive") {
    PinchukCore core = build_core();
    CHECK(verify_positivity(core));
    MPoly j = jacobian2(core.P, core.Q, "x", "y");
    std::mt19937 rng(941u);
    for (int k = 0; k < 100; ++k) {
        Rat x = gen::rat(rng, 20, 7), y = gen::rat(rng, 20, 7);
        CHECK(j.evaluate({{"x", x}, {"y", y}}) > 0);
    }
}

TEST_CASE("level points land on their level") {
    PinchukCore core = build_core();
    std::mt19937 rng(942u);
    for (int k = 0; k < 12; ++k) {
        Rat c = gen::rat(rng, 9, 4);
        Rat h = gen::rat(rng, 9, 4);
        if (c - 2 * h - h * h == 0 || c == h) continue;
        auto [x, y] = level_point(c, h);
        CHECK(core.P.evaluate({{"x", x}, {"y", y}}) == c);
        CHECK(core.h.evaluate({{"x", x}, {"y", y}}) == h);
    }
    CHECK_THROWS_AS(level_point(Rat(3), Rat(3)), domain_error);
    CHECK_THROWS_AS(level_point(Rat(0), Rat(-2)), domain_error);
}

TEST_CASE("family shifts the second component by a polynomial in the first") {
    PinchukCore base = build_core();
    UniPoly S({Rat(1, 2), Rat(-5), Rat(0), Rat(1)});
    PinchukCore shifted = build_family(S);
    CHECK(shifted.Q.total_degree() == 30u);
    CHECK(shifted.Q - base.Q == compose(S, base.P));
    CHECK(shifted.P == base.P);
    CHECK(build_family(UniPoly()).Q == base.Q);
    CHECK(build_family(UniPoly({Rat(7)})).Q == base.Q + MPoly::constant(xy_universe(), 7));
}

TEST_CASE("family members keep the jacobian identities") {
    std::mt19937 rng(943u);
    for (int k = 0; k < 10; ++k) {
        PinchukCore member = build_family(gen::unipoly(rng, 4, 6, 3));
        CHECK(verify_jacobian_identity(member));
        CHECK(verify_positivity(member));
    }
}

TEST_CASE("shift recovery round-trips") {
    PinchukCore base = build_core();
    CHECK(recover_S(base, base) == UniPoly());
    UniPoly S({Rat(1, 2), Rat(-5), Rat(0), Rat(1)});
    CHECK(recover_S(base, build_family(S)) == S);
    std::mt19937 rng(944u);
    for (int k = 0; k < 5; ++k) {
        UniPoly R = gen::unipoly(rng, 4, 8, 3);
        CHECK(recover_S(base, build_family(R)) == R);
    }
}

TEST_CASE("shift recovery rejects non-members") {
    PinchukCore base = build_core();
    PinchukCore other = build_core();
    other.P = other.P + MPoly::constant(xy_universe(), 1);
    CHECK_THROWS_AS(recover_S(base, other), domain_error);
    PinchukCore skew = build_core();
    skew.Q = skew.Q + MPoly::var(xy_universe(), "x");
    CHECK_THROWS_AS(recover_S(base, skew), identity_failure);
}
