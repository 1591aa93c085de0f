#pragma once

// Rational parametrization of the level sets P = c, their poles, the finite
// asymptotic values of Q approached along the level curves, and the
// component structure of the exceptional level P = 0.

#include <string>
#include <vector>

#include "map.hpp"
#include "mpoly.hpp"
#include "quadnum.hpp"
#include "ratfn.hpp"
#include "unipoly.hpp"

namespace pinchuk {

struct PoleInfo {
    QuadNum location;
    bool divergent = false; // true at h=c where Q blows up, false at the finite asymptotes
};

struct LevelParam {
    Rat c;
    RatFn x_of_h, y_of_h;
    std::vector<PoleInfo> excluded;
};

namespace detail {

inline void require_admissible_level(const Rat& c) {
    if (c == 0 || c == -1)
        throw domain_error("level constant must avoid 0 and -1");
}

// raw parametrization formulas for any admissible c
inline std::pair<RatFn, RatFn> level_formulas(const Rat& c) {
    Universe hu{"h"};
    MPoly h = MPoly::var(hu, "h");
    MPoly one = MPoly::constant(hu, 1);
    MPoly cc = MPoly::constant(hu, c);
    MPoly dx = cc - Rat(2) * h - h.pow(2);
    RatFn x((cc - h) * (h + one), dx.pow(2));
    RatFn y(dx.pow(2) * (cc - h - h.pow(2)), (cc - h).pow(2));
    return {x, y};
}

// Q on the curve s -> (s^2+2s, ...): the polynomial the asymptotic values live on
inline UniPoly asym_q_closed_form() {
    UniPoly s({Rat(0), Rat(1)});
    UniPoly p = s * s + Rat(2) * s;                      // s^2 + 2s
    UniPoly g = Rat(345, 4) * p * p + Rat(231) * p + UniPoly::constant(104);
    UniPoly splus1 = s + UniPoly::constant(1);
    return g + splus1.pow(3) * (Rat(75) * p + UniPoly::constant(104));
}

} // namespace detail

// poles of the level parametrization: always h=c (divergent), and when
// 1+c > 0 the two finite-asymptote poles -1 +- sqrt(1+c); ascending order
inline std::vector<PoleInfo> poles(const Rat& c) {
    detail::require_admissible_level(c);
    std::vector<PoleInfo> out;
    out.push_back(PoleInfo{QuadNum(c), true});
    if (c > -1) {
        QuadNum root = QuadNum::sqrt_of(1 + c);
        out.push_back(PoleInfo{QuadNum(Rat(-1)) + root, false});
        out.push_back(PoleInfo{QuadNum(Rat(-1)) - root, false});
    }
    std::sort(out.begin(), out.end(),
              [](const PoleInfo& a, const PoleInfo& b) { return a.location < b.location; });
    return out;
}

inline LevelParam param_level(const PinchukCore& core, const Rat& c) {
    detail::require_admissible_level(c);
    LevelParam lp;
    lp.c = c;
    auto [x, y] = detail::level_formulas(c);
    lp.x_of_h = x;
    lp.y_of_h = y;
    std::map<std::string, RatFn> onto{{"x", lp.x_of_h}, {"y", lp.y_of_h}};
    if (RatFn::compose_poly(core.P, onto) != RatFn::constant({"h"}, c))
        throw identity_failure("parametrization does not stay on the level");
    if (RatFn::compose_poly(core.h, onto) != RatFn::var({"h"}, "h"))
        throw identity_failure("parametrization does not preserve the parameter");
    lp.excluded = poles(c);
    return lp;
}

// Q composed with the level parametrization, univariate in h
inline RatFn q_on_level(const PinchukCore& core, const Rat& c) {
    detail::require_admissible_level(c);
    auto [x, y] = detail::level_formulas(c);
    return RatFn::compose_poly(core.Q, {{"x", x}, {"y", y}});
}

// finite asymptotic values of Q at the non-divergent poles, cross-checked
// against the closed-form curve polynomial
inline std::vector<std::pair<QuadNum, QuadNum>> asymptotic_values(const PinchukCore& core,
                                                                 const Rat& c) {
    detail::require_admissible_level(c);
    if (c < -1) return {};
    RatFn q = q_on_level(core, c);
    std::vector<std::pair<QuadNum, QuadNum>> out;
    for (const PoleInfo& pole : poles(c)) {
        LimitResult lim = limit_at(q, pole.location);
        if (pole.divergent) {
            if (lim.finite) throw identity_failure("expected divergence at h=c");
            continue;
        }
        if (!lim.finite) throw identity_failure("expected a finite asymptotic value");
        out.emplace_back(pole.location, lim.value);
    }

    UniPoly qs = detail::asym_q_closed_form();
    for (const auto& [pole, value] : out) {
        // the identification sends pole h0 to curve parameter -2-h0
        QuadNum s = QuadNum(Rat(-2)) - pole;
        if (qs.evaluate(s) != value)
            throw identity_failure("asymptotic value disagrees with the curve polynomial");
    }
    return out;
}

struct TBranch {
    RatFn x_of_t, y_of_t, q_of_t;
};

struct ZeroLevel {
    RatFn x_of_h, y_of_h;        // h-branch with the c=0 formulas
    std::vector<Rat> excluded_h; // parameter values off the branch
    TBranch t_branch;            // x=-1/t, y=-t(t+1); excluded t=0
    unsigned component_count = 0;
};

// the two rational branches covering the level set P=0, with their
// defining identities verified symbolically
inline ZeroLevel level_zero_components(const PinchukCore& core) {
    ZeroLevel z;
    Universe hu{"h"};
    MPoly h = MPoly::var(hu, "h");
    MPoly one_h = MPoly::constant(hu, 1);
    MPoly dx = Rat(-2) * h - h.pow(2);
    z.x_of_h = RatFn(-h * (h + one_h), dx.pow(2));
    z.y_of_h = RatFn(dx.pow(2) * (-h - h.pow(2)), h.pow(2));
    z.excluded_h = {Rat(0), Rat(-2)};

    std::map<std::string, RatFn> on_h{{"x", z.x_of_h}, {"y", z.y_of_h}};
    if (RatFn::compose_poly(core.P, on_h) != RatFn::constant(hu, 0))
        throw identity_failure("h-branch leaves the zero level");
    if (RatFn::compose_poly(core.h, on_h) != RatFn::var(hu, "h"))
        throw identity_failure("h-branch does not preserve the parameter");
    UniPoly quartic({Rat(0), Rat(0), Rat(63), Rat(104), Rat(197, 4)});
    if (RatFn::compose_poly(core.Q, on_h) != RatFn(to_mpoly(quartic, hu, "h")))
        throw identity_failure("Q on the h-branch is not the quartic");

    Universe tu{"t"};
    MPoly t = MPoly::var(tu, "t");
    MPoly one_t = MPoly::constant(tu, 1);
    z.t_branch.x_of_t = RatFn(-one_t, t);
    z.t_branch.y_of_t = RatFn(-t * (t + one_t));
    z.t_branch.q_of_t = RatFn(-t.pow(2));

    std::map<std::string, RatFn> on_t{{"x", z.t_branch.x_of_t}, {"y", z.t_branch.y_of_t}};
    if (RatFn::compose_poly(core.P, on_t) != RatFn::constant(tu, 0))
        throw identity_failure("t-branch leaves the zero level");
    if (RatFn::compose_poly(core.h, on_t) != RatFn::constant(tu, 0))
        throw identity_failure("t-branch does not sit at h=0");
    if (RatFn::compose_poly(core.Q, on_t) != z.t_branch.q_of_t)
        throw identity_failure("Q on the t-branch is not -t^2");
    if (RatFn::compose_poly(core.t, on_t) != RatFn::var(tu, "t"))
        throw identity_failure("t-branch parameter is not t = xy-1");

    // three arcs of the h-branch (split at h=-2 and h=0) plus two of the
    // t-branch (split at t=0)
    z.component_count = 5;
    return z;
}

} // namespace pinchuk
