#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gen.hpp"
#include "rootcheck.hpp"
#include "pinchuk/fieldext.hpp"

using namespace pinchuk;

TEST_CASE("auxiliary coordinates reproduce x, y and the lower component") {
    FhCoordinates co = fh_coordinates(build_core());
    CHECK(co.x_identity);
    CHECK(co.y_identity);
    CHECK(co.q_expansion);
    CHECK(co.all());
}

TEST_CASE("derived relation has the quoted coefficients") {
    PinchukCore core = build_core();
    RelationR r = derive_R(core);
    const Universe& pq = pq_universe();
    MPoly P = MPoly::var(pq, "P"), Q = MPoly::var(pq, "Q");
    CHECK(r.coeffs[6] == MPoly::constant(pq, Rat(197, 4)));
    CHECK(r.coeffs[5] == Rat(104) * MPoly::constant(pq, 1) - Rat(363, 2) * P);
    CHECK(r.coeffs[0] == -P.pow(2) * Q);
    CHECK(r.coeffs[4] ==
          Rat(63) * MPoly::constant(pq, 1) - Rat(421) * P + Rat(825, 4) * P.pow(2));
    CHECK(verify_R_annihilates_h(r, core));
}

TEST_CASE("relation is linear in the second coordinate") {
    RelationR r = derive_R(build_core());
    std::vector<MPoly> slots = r.full.collect("Q");
    REQUIRE(slots.size() == 2);
    // collecting drops the stacked variable, leaving polynomials in (P, T)
    Universe pt{"P", "T"};
    MPoly P = MPoly::var(pt, "P"), T = MPoly::var(pt, "T");
    CHECK(slots[1] == -(T - P).pow(2));
}

TEST_CASE("shifted family members break the annihilation") {
    // adding S(P) to the second component moves the image off the relation
    PinchukCore member = build_family(UniPoly({Rat(0), Rat(1)}));
    RelationR r = derive_R(member);
    CHECK_FALSE(verify_R_annihilates_h(r, member));
}

TEST_CASE("specialization fixes the quoted sextic shape") {
    RelationR r = derive_R(build_core());
    CHECK(specialize_sextic(r.coeffs, Rat(0), Rat(5)) ==
          UniPoly({Rat(0), Rat(0), Rat(-5), Rat(0), Rat(63), Rat(104), Rat(197, 4)}));
    // at the origin the sextic collapses onto T^4 times a unit quadratic
    UniPoly origin = specialize_sextic(r.coeffs, Rat(0), Rat(0));
    CHECK(origin == UniPoly({Rat(0), Rat(0), Rat(0), Rat(0), Rat(63), Rat(104), Rat(197, 4)}));
}

TEST_CASE("monic normalization carries an irreducibility certificate") {
    PinchukCore core = build_core();
    RelationR r = derive_R(core);
    MinPoly m = minimal_polynomial(core);
    CHECK(m.coeffs[6] == MPoly::constant(pq_universe(), 1));
    for (std::size_t i = 0; i < 7; ++i)
        CHECK(Rat(197, 4) * m.coeffs[i] == r.coeffs[i]);
    CHECK(m.certificate.p0 == 1);
    CHECK(m.certificate.q0 == -1);
    CHECK(m.certificate.prime == 23);

    UniPoly scaled = specialize_sextic(r.coeffs, m.certificate.p0, m.certificate.q0) * Rat(4);
    CHECK(scaled.coeff(6) == 197);
    CHECK(irreducible_mod_p(scaled, m.certificate.prime));
    // the origin specialization can never certify: T^4 divides it
    UniPoly origin4 = specialize_sextic(r.coeffs, Rat(0), Rat(0)) * Rat(4);
    CHECK_FALSE(irreducible_mod_p(origin4, 23));
}

TEST_CASE("specialized root counts agree with the dense sign oracle") {
    RelationR r = derive_R(build_core());
    std::mt19937 rng(951u);
    for (int k = 0; k < 20; ++k) {
        Rat p = gen::rat(rng, 9, 3), q = gen::rat(rng, 9, 3);
        UniPoly spec = specialize_sextic(r.coeffs, p, q);
        auto roots = isolate_real_roots_full(spec);
        int odd = 0;
        for (const auto& [root, mult] : roots)
            if (mult % 2 == 1) ++odd;
        CHECK(rootcheck::grid_count(spec, roots) == odd);
    }
}

TEST_CASE("level-zero identities behind the involution") {
    AutReport rep = automorphism_identities(build_core());
    CHECK(rep.level_q_formula);
    CHECK(rep.q_at_minus_two == 208);
    CHECK(rep.quartic_discriminant == -1595);
    CHECK(rep.derivative_factors);
    CHECK(rep.inner_discriminant == -1944);
    CHECK(rep.odd_part_identity);
    CHECK(rep.all());
}
