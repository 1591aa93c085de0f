#pragma once

// The concrete non-injective positive-Jacobian plane map and its
// one-parameter family Q + S(P). Everything is built from the generating
// pieces t, h, f and verified as exact polynomial identities at
// construction time.

#include <string>
#include <vector>

#include "mpoly.hpp"
#include "unipoly.hpp"

namespace pinchuk {

struct PinchukCore {
    MPoly t, h, f, P, q, u, Q;
    UniPoly S; // family shift, zero for the base map
};

inline const Universe& xy_universe() {
    static const Universe u{"x", "y"};
    return u;
}

// u as a polynomial in the auxiliary variables f and h
inline MPoly u_in_fh() {
    Universe fh{"f", "h"};
    MPoly f = MPoly::var(fh, "f"), h = MPoly::var(fh, "h");
    return Rat(170) * f * h + Rat(91) * h.pow(2) + Rat(195) * f * h.pow(2) +
           Rat(69) * h.pow(3) + Rat(75) * f * h.pow(3) + Rat(75, 4) * h.pow(4);
}

namespace detail {

inline void check_core_identities(const PinchukCore& c) {
    const Universe& u = xy_universe();
    MPoly x = MPoly::var(u, "x"), y = MPoly::var(u, "y");
    MPoly one = MPoly::constant(u, 1);
    if (c.t != x * y - one) throw identity_failure("t != xy - 1");
    if (c.h != c.t * (x * c.t + one)) throw identity_failure("h != t(xt+1)");
    if (c.f != (x * c.t + one).pow(2) * (c.t.pow(2) + y)) throw identity_failure("f != (xt+1)^2(t^2+y)");
    if (c.P != c.f + c.h) throw identity_failure("P != f + h");
    if (c.q != -c.t.pow(2) - Rat(6) * c.t * c.h * (c.h + one))
        throw identity_failure("q != -t^2 - 6th(h+1)");
    if (c.u != u_in_fh().substitute({{"f", c.f}, {"h", c.h}}))
        throw identity_failure("u != u(f,h)");
    if (c.Q != c.q - c.u + compose(c.S, c.P)) throw identity_failure("Q != q - u + S(P)");
}

} // namespace detail

inline PinchukCore build_family(const UniPoly& S) {
    const Universe& u = xy_universe();
    PinchukCore c;
    MPoly x = MPoly::var(u, "x"), y = MPoly::var(u, "y");
    MPoly one = MPoly::constant(u, 1);
    c.t = x * y - one;
    c.h = c.t * (x * c.t + one);
    c.f = (x * c.t + one).pow(2) * (c.t.pow(2) + y);
    c.P = c.f + c.h;
    c.q = -c.t.pow(2) - Rat(6) * c.t * c.h * (c.h + one);
    c.u = u_in_fh().substitute({{"f", c.f}, {"h", c.h}});
    c.S = S;
    c.Q = c.q - c.u + compose(S, c.P);
    detail::check_core_identities(c);
    return c;
}

inline PinchukCore build_core() { return build_family(UniPoly()); }

// sum of squares the Jacobian determinant must equal
inline MPoly sos_polynomial(const PinchukCore& c) {
    MPoly inner = c.t + c.f * (MPoly::constant(c.f.universe(), 13) + Rat(15) * c.h);
    return c.t.pow(2) + inner.pow(2) + c.f.pow(2);
}

inline bool verify_jacobian_identity(const PinchukCore& c) {
    return jacobian2(c.P, c.Q, "x", "y") == sos_polynomial(c);
}

// The positive-Jacobian certificate: the SOS identity plus an exact proof
// that t and f cannot vanish together. The witness identity f - y = t*c1
// shows t=0 forces f=y, and t restricted to y=0 is the constant -1, so
// t=0 and f=0 together would force t=-1.
inline bool verify_positivity(const PinchukCore& c) {
    if (!verify_jacobian_identity(c)) return false;
    const Universe& u = c.t.universe();
    MPoly x = MPoly::var(u, "x"), y = MPoly::var(u, "y");
    MPoly one = MPoly::constant(u, 1);
    MPoly c1 = (x * c.t + one).pow(2) * c.t + x * y * (x * c.t + MPoly::constant(u, 2));
    if (c.f - y != c.t * c1) return false;
    MPoly t_at_y0 = c.t.substitute({{"x", x}, {"y", MPoly::zero(u)}});
    return t_at_y0 == MPoly::constant(u, -1);
}

// rational point on the level set P = c at parameter value h
inline std::pair<Rat, Rat> level_point(const Rat& c, const Rat& h) {
    Rat dx = c - 2 * h - h * h;
    Rat dy = c - h;
    if (dx == 0 || dy == 0) throw domain_error("parameter value hits a pole");
    Rat x = (c - h) * (1 + h) / (dx * dx);
    Rat y = dx * dx * (c - h - h * h) / (dy * dy);
    return {x, y};
}

// the unique S with Q2 - Q1 = S(P), reconstructed from rational samples on
// level sets and then verified symbolically
inline UniPoly recover_S(const PinchukCore& base, const PinchukCore& shifted) {
    if (base.P != shifted.P) throw domain_error("maps do not share the first component");
    MPoly diff = shifted.Q - base.Q;
    if (diff.is_zero()) return UniPoly();
    unsigned dtot = *diff.total_degree();
    if (dtot % 10 != 0)
        throw identity_failure("difference degree is not a multiple of deg P");
    unsigned degS = dtot / 10;

    auto sample = [&](const Rat& c) {
        auto [px, py] = level_point(c, c + 1);
        return diff.evaluate({{"x", px}, {"y", py}});
    };
    std::vector<std::pair<Rat, Rat>> pts;
    for (unsigned i = 0; i <= degS; ++i) {
        Rat c = Rat(2) + static_cast<long>(i);
        pts.emplace_back(c, sample(c));
    }
    UniPoly S = interpolate(pts);
    Rat extra = Rat(3) + static_cast<long>(degS);
    if (S.evaluate(extra) != sample(extra))
        throw identity_failure("interpolated shift fails the consistency sample");
    if (compose(S, base.P) != diff)
        throw identity_failure("shift does not satisfy Q2 - Q1 = S(P)");
    return S;
}

} // namespace pinchuk
