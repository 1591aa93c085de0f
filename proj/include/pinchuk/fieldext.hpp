#pragma once

// The function-field side: (f,h) coordinates, the degree-6 relation R(T)
// annihilating h over the image coordinates, its monic normalization, an
// irreducibility certificate via specialization and a small prime, and the
// level-zero identities obstructing extra automorphisms.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "map.hpp"
#include "mpoly.hpp"
#include "ratfn.hpp"
#include "unipoly.hpp"
#include "uniroots.hpp"

namespace pinchuk {

inline const Universe& pq_universe() {
    static const Universe u{"P", "Q"};
    return u;
}

inline const Universe& pqt_universe() {
    static const Universe u{"P", "Q", "T"};
    return u;
}

struct FhCoordinates {
    RatFn x_in_fh, y_in_fh;
    bool x_identity = false;
    bool y_identity = false;
    bool q_expansion = false;
    bool all() const { return x_identity && y_identity && q_expansion; }
};

// x and y written in the auxiliary coordinates, verified against the map
inline FhCoordinates fh_coordinates(const PinchukCore& core) {
    Universe fh{"f", "h"};
    MPoly f = MPoly::var(fh, "f"), h = MPoly::var(fh, "h");
    MPoly one = MPoly::constant(fh, 1);
    MPoly denom = f - h - h.pow(2);

    FhCoordinates out;
    out.x_in_fh = RatFn(f * (h + one), denom.pow(2));
    out.y_in_fh = RatFn(denom.pow(2) * (f - h.pow(2)), f.pow(2));

    const Universe& xy = core.f.universe();
    std::map<std::string, MPoly> back{{"f", core.f}, {"h", core.h}};
    out.x_identity = out.x_in_fh.substitute(back) == RatFn(MPoly::var(xy, "x"));
    out.y_identity = out.y_in_fh.substitute(back) == RatFn(MPoly::var(xy, "y"));

    MPoly qnum = -h.pow(4) * (h + one).pow(2) +
                 h.pow(3) * (h + one) * (Rat(6) * h + Rat(8) * one) * f -
                 h.pow(2) * (Rat(6) * h + Rat(7) * one) * f.pow(2);
    RatFn q_fh(qnum, f.pow(2));
    out.q_expansion = q_fh.substitute(back) == RatFn(core.q);
    return out;
}

struct RelationR {
    std::array<MPoly, 7> coeffs; // in (P, Q), index = power of T
    MPoly full;                  // same data over (P, Q, T)
};

namespace detail {

// the quoted expansion of f^2 * Q as a polynomial in f with h-coefficients
inline MPoly quoted_f2Q() {
    Universe fh{"f", "h"};
    MPoly f = MPoly::var(fh, "f"), h = MPoly::var(fh, "h");
    MPoly one = MPoly::constant(fh, 1);
    MPoly s0 = -h.pow(4) * (h + one).pow(2);
    MPoly s1 = h.pow(3) * (h + one) * (Rat(6) * h + Rat(8) * one);
    MPoly s2 = -h.pow(2) * (Rat(6) * h + Rat(7) * one) - Rat(91) * h.pow(2) -
               Rat(69) * h.pow(3) - Rat(75, 4) * h.pow(4);
    MPoly s3 = -(Rat(170) * h + Rat(195) * h.pow(2) + Rat(75) * h.pow(3));
    return s0 + s1 * f + s2 * f.pow(2) + s3 * f.pow(3);
}

inline std::array<MPoly, 7> quoted_R_coeffs() {
    const Universe& pq = pq_universe();
    MPoly P = MPoly::var(pq, "P"), Q = MPoly::var(pq, "Q");
    MPoly one = MPoly::constant(pq, 1);
    return {
        -P.pow(2) * Q,
        Rat(2) * P * Q - Rat(170) * P.pow(3),
        -Q + Rat(412) * P.pow(2) - Rat(195) * P.pow(3),
        -Rat(306) * P + Rat(510) * P.pow(2) - Rat(75) * P.pow(3),
        Rat(63) * one - Rat(421) * P + Rat(825, 4) * P.pow(2),
        Rat(104) * one - Rat(363, 2) * P,
        Rat(197, 4) * one,
    };
}

} // namespace detail

// R(T) built by substituting f = P - T into the f^2*Q expansion; checked
// against the quoted coefficients term by term
inline RelationR derive_R(const PinchukCore& core) {
    MPoly g = detail::quoted_f2Q();

    // the expansion must agree with the map before it is used
    MPoly base_Q = core.q - core.u;
    if (g.substitute({{"f", core.f}, {"h", core.h}}) != core.f.pow(2) * base_Q)
        throw identity_failure("f^2*Q expansion does not match the map");

    const Universe& pqt = pqt_universe();
    MPoly P = MPoly::var(pqt, "P"), Q = MPoly::var(pqt, "Q"), T = MPoly::var(pqt, "T");
    MPoly composed = g.substitute({{"f", P - T}, {"h", T}});
    RelationR r;
    r.full = composed - (P - T).pow(2) * Q;

    std::vector<MPoly> slots = r.full.collect("T");
    if (slots.size() != 7) throw identity_failure("relation is not a sextic in T");
    auto quoted = detail::quoted_R_coeffs();
    for (std::size_t i = 0; i < 7; ++i) {
        if (slots[i] != quoted[i])
            throw identity_failure("coefficient of T^" + std::to_string(i) +
                                   " differs from the quoted relation");
        r.coeffs[i] = slots[i];
    }
    return r;
}

inline bool verify_R_annihilates_h(const RelationR& r, const PinchukCore& core) {
    MPoly image = r.full.substitute({{"P", core.P}, {"Q", core.Q}, {"T", core.h}});
    return image.is_zero();
}

struct Certificate {
    Rat p0, q0;
    std::uint64_t prime = 0;
};

struct MinPoly {
    std::array<MPoly, 7> coeffs; // in (P, Q), monic in T
    Certificate certificate;
};

// the sextic over T with (P, Q) evaluated at a rational point
inline UniPoly specialize_sextic(const std::array<MPoly, 7>& coeffs, const Rat& p, const Rat& q) {
    std::vector<Rat> c(7);
    for (std::size_t i = 0; i < 7; ++i)
        c[i] = coeffs[i].evaluate({{"P", p}, {"Q", q}});
    return UniPoly(std::move(c));
}

namespace detail {

inline std::vector<std::uint64_t> primes_below(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n < bound; ++n)
        if (is_prime_u64(n)) out.push_back(n);
    return out;
}

} // namespace detail

// monic minimal polynomial of h over the image coordinates, with a
// specialization certificate of irreducibility. The search order is fixed:
// integer pairs (P0, Q0) on square shells of growing radius, lexicographic
// inside a shell, then primes ascending below 500 skipping the leading 197.
inline MinPoly minimal_polynomial(const PinchukCore& core) {
    RelationR r = derive_R(core);
    MinPoly m;
    for (std::size_t i = 0; i < 7; ++i) m.coeffs[i] = Rat(4, 197) * r.coeffs[i];
    if (m.coeffs[6] != MPoly::constant(pq_universe(), 1))
        throw identity_failure("normalized relation is not monic");

    // quoted specialization at P=0 as a construction sanity gate
    const Universe& pqt = pqt_universe();
    MPoly Q = MPoly::var(pqt, "Q"), T = MPoly::var(pqt, "T");
    MPoly at_p0 = r.full.substitute(
        {{"P", MPoly::zero(pqt)}, {"Q", Q}, {"T", T}});
    MPoly expected = Rat(197, 4) * T.pow(6) + Rat(104) * T.pow(5) + Rat(63) * T.pow(4) -
                     Q * T.pow(2);
    if (at_p0 != expected)
        throw identity_failure("specialization at P=0 does not match the quoted sextic");

    static const std::vector<std::uint64_t> primes = detail::primes_below(500);
    const int max_shell = 8;
    for (int n = 0; n <= max_shell; ++n) {
        for (long a = -n; a <= n; ++a) {
            for (long b = -n; b <= n; ++b) {
                if (std::max(std::labs(a), std::labs(b)) != n) continue;
                UniPoly spec = specialize_sextic(r.coeffs, Rat(a), Rat(b));
                UniPoly scaled = spec * Rat(4); // integer coefficients, leading 197
                for (std::uint64_t p : primes) {
                    if (p == 197) continue;
                    if (irreducible_mod_p(scaled, p)) {
                        m.certificate = Certificate{Rat(a), Rat(b), p};
                        return m;
                    }
                }
            }
        }
    }
    throw search_exhausted("no irreducibility certificate within the configured shells");
}

struct AutReport {
    bool level_q_formula = false;  // Q on the level-zero h-branch equals the quartic
    Rat q_at_minus_two;            // value 208 shared by the double point
    Rat quartic_discriminant;      // of (197/4)h^2 + 104h + 63
    bool derivative_factors = false;
    Rat inner_discriminant;        // of 197h^2 + 312h + 126
    bool odd_part_identity = false; // Q(h) - Q(-h) = 208h^3
    bool all() const {
        return level_q_formula && q_at_minus_two == 208 && quartic_discriminant == -1595 &&
               quartic_discriminant < 0 && derivative_factors && inner_discriminant == -1944 &&
               inner_discriminant < 0 && odd_part_identity;
    }
};

// the identities governing the level-set involution on P = 0
inline AutReport automorphism_identities(const PinchukCore& core) {
    AutReport rep;
    Universe hu{"h"};
    MPoly h = MPoly::var(hu, "h");
    MPoly one = MPoly::constant(hu, 1);

    // h-branch of the level set P=0, kept as formal quotients
    RatFn xh(-h * (h + one), (Rat(-2) * h - h.pow(2)).pow(2));
    RatFn yh((Rat(-2) * h - h.pow(2)).pow(2) * (-h - h.pow(2)), h.pow(2));

    UniPoly quartic({Rat(0), Rat(0), Rat(63), Rat(104), Rat(197, 4)});
    RatFn composed = RatFn::compose_poly(core.Q, {{"x", xh}, {"y", yh}});
    rep.level_q_formula = composed == RatFn(to_mpoly(quartic, hu, "h"));

    rep.q_at_minus_two = quartic.evaluate(Rat(-2));
    rep.quartic_discriminant = Rat(104) * Rat(104) - 4 * Rat(197, 4) * Rat(63);

    UniPoly inner({Rat(126), Rat(312), Rat(197)});
    rep.derivative_factors = quartic.derivative() == UniPoly({Rat(0), Rat(1)}) * inner;
    rep.inner_discriminant = Rat(312) * Rat(312) - 4 * Rat(197) * Rat(126);

    UniPoly mirrored({Rat(0), Rat(0), Rat(63), Rat(-104), Rat(197, 4)});
    rep.odd_part_identity = quartic - mirrored == UniPoly::monomial(Rat(208), 3);
    return rep;
}

} // namespace pinchuk
