#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gen.hpp"
#include "rootcheck.hpp"
#include "pinchuk/fibers.hpp"
#include "pinchuk/uniroots.hpp"

using namespace pinchuk;
using rootcheck::grid_count;

namespace {
UniPoly linear(const Rat& root) { return UniPoly({-root, Rat(1)}); }
}

TEST_CASE("isolates mixed rational and irrational roots in order") {
    UniPoly f = (UniPoly({Rat(-2), Rat(0), Rat(1)})) * linear(Rat(1, 2));
    auto roots = isolate_real_roots_full(f);
    REQUIRE(roots.size() == 3);
    CHECK(sign_at(UniPoly({Rat(-2), Rat(0), Rat(1)}), roots[0].first) == 0);
    CHECK(sign_at(UniPoly({Rat(-1), Rat(2)}), roots[1].first) == 0); // the root 1/2
    CHECK(sign_at(UniPoly({Rat(-2), Rat(0), Rat(1)}), roots[2].first) == 0);
    CHECK(roots[0].first.iv.hi < roots[1].first.iv.lo);
    CHECK(roots[1].first.iv.hi < roots[2].first.iv.lo);
    CHECK(approx(roots[2].first, 6) == "1.41421");

    auto plain = isolate_real_roots(f);
    REQUIRE(plain.size() == 3);
    for (const auto& r : plain) CHECK(r.multiplicity == 1);
}

TEST_CASE("root at zero comes out exactly rational") {
    UniPoly f({Rat(0), Rat(-2), Rat(0), Rat(1)}); // T^3 - 2T
    auto roots = isolate_real_roots_full(f);
    REQUIRE(roots.size() == 3);
    CHECK(roots[1].first.is_rational());
    CHECK(roots[1].first.rational_value() == 0);
}

TEST_CASE("multiplicities via squarefree structure") {
    UniPoly f = linear(Rat(1)).pow(2) * linear(Rat(-2));
    auto roots = isolate_real_roots_full(f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].second == 1); // root -2
    CHECK(roots[1].second == 2); // double root 1
    UniPoly g = UniPoly({Rat(-2), Rat(0), Rat(1)}).pow(2);
    auto groots = isolate_real_roots_full(g);
    REQUIRE(groots.size() == 2);
    CHECK(groots[0].second == 2);
    CHECK(groots[1].second == 2);
}

TEST_CASE("window counting") {
    UniPoly f = linear(Rat(1)) * linear(Rat(2)) * linear(Rat(3));
    CHECK(sturm_count(f, Rat(0), Rat(5, 2)) == 2);
    CHECK(sturm_count(f, Rat(0), Rat(4)) == 3);
    CHECK(sturm_count(f, Rat(5, 2), Rat(4)) == 1);
    CHECK_THROWS_AS(sturm_count(f, Rat(1), Rat(4)), domain_error);
}

TEST_CASE("signs of polynomials at algebraic points") {
    UniPoly sq2({Rat(-2), Rat(0), Rat(1)});
    auto roots = isolate_real_roots_full(sq2);
    REQUIRE(roots.size() == 2);
    const AlgNum& r2 = roots[1].first;
    CHECK(sign_at(UniPoly({Rat(-3), Rat(0), Rat(1)}), r2) == -1); // 2 < 3
    CHECK(sign_at(UniPoly({Rat(-1), Rat(0), Rat(1)}), r2) == 1);
    CHECK(sign_at(sq2, r2) == 0);
    CHECK(sign_at(linear(Rat(2)), r2) == -1); // sqrt(2) < 2
    AlgNum half = algnum_from_rat(Rat(1, 2));
    CHECK(sign_at(linear(Rat(1, 2)), half) == 0);
    CHECK(sign_at(UniPoly({Rat(1), Rat(1)}), half) == 1);
}

TEST_CASE("refinement narrows the interval around the same root") {
    UniPoly f({Rat(-2), Rat(0), Rat(1)});
    auto roots = isolate_real_roots_full(f);
    AlgNum narrow = refine_root(roots[1].first, Rat(1, 1000000));
    CHECK(narrow.iv.width() <= Rat(1, 1000000));
    CHECK(narrow.iv.lo * narrow.iv.lo <= 2);
    CHECK(narrow.iv.hi * narrow.iv.hi >= 2);
    CHECK(approx(narrow) == "1.41421356237");
}

TEST_CASE("all roots fall inside the coefficient bound") {
    UniPoly f = linear(Rat(10)) * linear(Rat(-3));
    Rat b = cauchy_bound(f);
    for (const auto& [root, mult] : isolate_real_roots_full(f)) {
        CHECK(root.iv.lo >= -b);
        CHECK(root.iv.hi <= b);
    }
}

TEST_CASE("root counts agree with grid sign changes on seeded samples") {
    std::mt19937 rng(931u);
    for (int k = 0; k < 12; ++k) {
        UniPoly f = gen::nonzero_unipoly(rng, 6, 9, 1); // integer coefficients
        if (f.degree() == 0) continue;
        auto roots = isolate_real_roots_full(f);
        int odd = 0;
        for (const auto& [root, mult] : roots)
            if (mult % 2 == 1) ++odd;
        CHECK(grid_count(f, roots) == odd);
    }
}

TEST_CASE("roots of a product are the union of factor roots") {
    std::mt19937 rng(932u);
    for (int k = 0; k < 8; ++k) {
        UniPoly f = gen::nonzero_unipoly(rng, 3);
        UniPoly g = gen::nonzero_unipoly(rng, 3);
        if (f.degree() == 0 || g.degree() == 0) continue;
        auto rf = isolate_real_roots_full(f);
        auto rg = isolate_real_roots_full(g);
        auto rfg = isolate_real_roots_full(f * g);
        unsigned total = 0, expected = 0;
        for (const auto& [r, m] : rfg) {
            total += m;
            CHECK((sign_at(f, r) == 0 || sign_at(g, r) == 0));
        }
        for (const auto& [r, m] : rf) expected += m;
        for (const auto& [r, m] : rg) expected += m;
        CHECK(total == expected);
        for (const auto& [r, m] : rf) CHECK(sign_at(f * g, r) == 0);
    }
}

TEST_CASE("modular irreducibility") {
    UniPoly t2p1({Rat(1), Rat(0), Rat(1)});
    CHECK(irreducible_mod_p(t2p1, 3));
    CHECK(!irreducible_mod_p(t2p1, 5)); // (T+2)(T+3) mod 5
    CHECK(irreducible_mod_p(UniPoly({Rat(-1), Rat(-1), Rat(0), Rat(1)}), 2));
    CHECK(irreducible_mod_p(UniPoly({Rat(-2), Rat(0), Rat(1)}), 5));
    CHECK(!irreducible_mod_p(UniPoly({Rat(-2), Rat(0), Rat(1)}), 7)); // 3^2 = 2 mod 7
    CHECK_THROWS_AS(irreducible_mod_p(t2p1, 4), domain_error);
    CHECK_THROWS_AS(irreducible_mod_p(UniPoly({Rat(1, 2), Rat(1)}), 3), domain_error);
    CHECK_THROWS_AS(irreducible_mod_p(UniPoly({Rat(1), Rat(3)}), 3), domain_error);
    // modular irreducibility rules out rational roots
    CHECK(isolate_real_roots_full(t2p1).empty());
}

TEST_CASE("quadratic irrationals become isolated algebraic numbers") {
    AlgNum a = algnum_from_quad(QuadNum(Rat(1), Rat(1), Rat(2))); // 1 + sqrt(2)
    CHECK(a.defpoly == UniPoly({Rat(-1), Rat(-2), Rat(1)}));
    CHECK(sign_at(a.defpoly, a) == 0);
    CHECK(a.iv.lo > 0); // conjugate 1 - sqrt(2) excluded
    CHECK(approx(a, 6) == "2.41421");
    AlgNum b = algnum_from_quad(QuadNum(Rat(3, 2)));
    CHECK(b.is_rational());
    CHECK(b.rational_value() == Rat(3, 2));
}
