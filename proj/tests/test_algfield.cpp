#include <catch2/catch_amalgamated.hpp>

#include "pinchuk/algfield.hpp"

using namespace pinchuk;

namespace {
AlgNum sqrt2_root() {
    return AlgNum{UniPoly({Rat(-2), Rat(0), Rat(1)}), RatInterval(Rat(1), Rat(2))};
}
}

TEST_CASE("arithmetic in a quadratic field") {
    NumberField K(sqrt2_root());
    auto g = K.generator();
    auto one = K.from_rat(1);
    auto a = K.add(one, g);                       // 1 + sqrt(2)
    auto sq = K.mul(a, a);                        // 3 + 2 sqrt(2)
    auto expected = K.add(K.from_rat(3), K.add(g, g));
    CHECK(K.is_zero(K.sub(sq, expected)));
    CHECK(K.is_zero(K.sub(K.mul(g, g), K.from_rat(2))));
    CHECK(K.is_zero(K.sub(K.pow(g, 4), K.from_rat(4))));
    CHECK(K.approx_of(K.mul(a, a)) == "5.82842712475");
}

TEST_CASE("inverses and division") {
    NumberField K(sqrt2_root());
    auto g = K.generator();
    auto a = K.add(K.from_rat(1), g);
    auto b = K.inv(a); // sqrt(2) - 1
    CHECK(K.is_zero(K.sub(b, K.sub(g, K.from_rat(1)))));
    CHECK(K.is_zero(K.sub(K.mul(a, b), K.from_rat(1))));
    CHECK(K.is_zero(K.sub(K.div(K.from_rat(1), a), b)));
    CHECK_THROWS_AS(K.inv(K.from_rat(0)), domain_error);
}

TEST_CASE("coset minimal polynomials") {
    NumberField K(sqrt2_root());
    auto g = K.generator();
    CHECK(K.coset_minimal_polynomial(K.add(K.from_rat(1), g)) ==
          UniPoly({Rat(-1), Rat(-2), Rat(1)})); // T^2 - 2T - 1
    CHECK(K.coset_minimal_polynomial(K.from_rat(5)) == UniPoly({Rat(-5), Rat(1)}));
    CHECK(K.coset_minimal_polynomial(g) == UniPoly({Rat(-2), Rat(0), Rat(1)}));
}

TEST_CASE("values drop to rationals when possible") {
    NumberField K(sqrt2_root());
    auto g = K.generator();
    AlgNum two = K.value_of(K.mul(g, g));
    CHECK(two.is_rational());
    CHECK(two.rational_value() == 2);
    AlgNum root = K.value_of(g);
    CHECK(!root.is_rational());
    CHECK(sign_at(UniPoly({Rat(-2), Rat(0), Rat(1)}), root) == 0);
    CHECK(root.iv.lo > 0);
}

TEST_CASE("reducible modulus shrinks on zero divisors") {
    // (T^2 - 2)(T - 3), selecting the root sqrt(2)
    UniPoly modulus = UniPoly({Rat(-2), Rat(0), Rat(1)}) * UniPoly({Rat(-3), Rat(1)});
    NumberField K(AlgNum{modulus, RatInterval(Rat(1), Rat(2))});
    auto g = K.generator();
    auto zd = K.sub(g, K.from_rat(3)); // zero divisor in the ring, unit at our root
    auto inv = K.inv(zd);
    CHECK(K.is_zero(K.sub(K.mul(inv, zd), K.from_rat(1))));
    // the modulus collapsed to the factor owning sqrt(2)
    CHECK(K.coset_minimal_polynomial(K.generator()) == UniPoly({Rat(-2), Rat(0), Rat(1)}));
    AlgNum v = K.value_of(K.generator());
    CHECK(sign_at(UniPoly({Rat(-2), Rat(0), Rat(1)}), v) == 0);
    CHECK(v.iv.lo > 0);
}

TEST_CASE("signs of field elements") {
    NumberField K(sqrt2_root());
    auto g = K.generator();
    CHECK(K.sign_of(K.sub(g, K.from_rat(1))) == 1);
    CHECK(K.sign_of(K.sub(g, K.from_rat(2))) == -1);
    CHECK(K.sign_of(K.from_rat(0)) == 0);
    CHECK(K.sign_of(K.sub(K.mul(g, g), K.from_rat(2))) == 0);
}

TEST_CASE("multivariate evaluation inside the field") {
    NumberField K(sqrt2_root());
    Universe XY{"x", "y"};
    MPoly p = MPoly::var(XY, "x").pow(2) + MPoly::var(XY, "y");
    auto g = K.generator();
    auto val = K.eval_mpoly(p, {{"x", g}, {"y", g}});
    CHECK(K.is_zero(K.sub(val, K.add(K.from_rat(2), g))));
}

TEST_CASE("invalid field descriptions are rejected") {
    UniPoly sq = UniPoly({Rat(-2), Rat(0), Rat(1)});
    CHECK_THROWS_AS(NumberField(AlgNum{sq.pow(2), RatInterval(Rat(1), Rat(2))}), domain_error);
    UniPoly wide = sq * UniPoly({Rat(-3), Rat(0), Rat(1)});
    CHECK_THROWS_AS(NumberField(AlgNum{wide, RatInterval(Rat(1), Rat(2))}), domain_error);
    CHECK_THROWS_AS(NumberField(AlgNum{sq, RatInterval(Rat(-10), Rat(10))}), domain_error);
    CHECK_THROWS_AS(NumberField(AlgNum{sq, RatInterval(Rat(1), Rat(1))}), domain_error);
    CHECK_THROWS_AS(NumberField(AlgNum{UniPoly({Rat(5)}), RatInterval(Rat(1), Rat(2))}),
                    domain_error);
}
