#pragma once

// The asymptotic variety: implicit equation W(P,Q)=0, a polynomial
// parametrization of the curve, exact membership classification, and the
// singular-point analysis. The curve is where fibers drop from two points
// to one (or none at the two exceptional targets).

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fieldext.hpp"
#include "levelset.hpp"
#include "map.hpp"
#include "mpoly.hpp"
#include "quadnum.hpp"
#include "ratfn.hpp"
#include "unipoly.hpp"

namespace pinchuk {

namespace detail {

// (345/4)P^2 + 231P + 104, the Q-offset completing the square in W
inline MPoly w_offset(const Universe& pq) {
    MPoly P = MPoly::var(pq, "P");
    return Rat(345, 4) * P.pow(2) + Rat(231) * P + MPoly::constant(pq, 104);
}

} // namespace detail

// W = (Q - (345/4)P^2 - 231P - 104)^2 - (P+1)^3 (75P+104)^2, expanded
inline MPoly implicit_poly() {
    const Universe& pq = pq_universe();
    MPoly P = MPoly::var(pq, "P"), Q = MPoly::var(pq, "Q");
    MPoly one = MPoly::constant(pq, 1);
    MPoly w = (Q - detail::w_offset(pq)).pow(2) -
              (P + one).pow(3) * (Rat(75) * P + MPoly::constant(pq, 104)).pow(2);
    const std::vector<std::pair<Rat, Rat>> named{
        {Rat(0), Rat(0)}, {Rat(0), Rat(208)}, {Rat(-1), Rat(-163, 4)}, {Rat(-104, 75), Rat(-18928, 375)}};
    for (const auto& [p, q] : named)
        if (w.evaluate({{"P", p}, {"Q", q}}) != 0)
            throw identity_failure("named point is not on the variety");
    return w;
}

struct AsymParam {
    UniPoly p_of_s, q_of_s;
};

// the parametrization s -> (s^2+2s, Q(s)) of the curve, verified both
// symbolically and against level-set limits at sampled levels
inline AsymParam param_asymptotic(const PinchukCore& core) {
    AsymParam ap;
    ap.p_of_s = UniPoly({Rat(0), Rat(2), Rat(1)});
    ap.q_of_s = detail::asym_q_closed_form();

    MPoly w = implicit_poly();
    Universe su{"s"};
    MPoly on_curve = w.substitute(
        {{"P", to_mpoly(ap.p_of_s, su, "s")}, {"Q", to_mpoly(ap.q_of_s, su, "s")}});
    if (!on_curve.is_zero())
        throw identity_failure("parametrization does not satisfy the curve equation");

    const std::vector<std::pair<Rat, std::pair<Rat, Rat>>> named{
        {Rat(0), {Rat(0), Rat(208)}},
        {Rat(-1), {Rat(-1), Rat(-163, 4)}},
        {Rat(-2), {Rat(0), Rat(0)}}};
    for (const auto& [s, target] : named)
        if (ap.p_of_s.evaluate(s) != target.first || ap.q_of_s.evaluate(s) != target.second)
            throw identity_failure("parametrization misses a named point");

    // sampled agreement with the level-set limits: the finite limits at the
    // poles of level c must coincide, as a set, with Q(s) over P(s) = c
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> num(1, 30), den(1, 6);
    for (int i = 0; i < 5; ++i) {
        Rat c(num(rng), den(rng));
        c.canonicalize();
        auto values = asymptotic_values(core, c);
        if (values.size() != 2)
            throw identity_failure("expected two finite asymptotic values");
        QuadNum root = QuadNum::sqrt_of(1 + c);
        QuadNum splus = QuadNum(Rat(-1)) + root, sminus = QuadNum(Rat(-1)) - root;
        QuadNum q1 = ap.q_of_s.evaluate(splus), q2 = ap.q_of_s.evaluate(sminus);
        const QuadNum& v1 = values[0].second;
        const QuadNum& v2 = values[1].second;
        bool match = (v1 == q1 && v2 == q2) || (v1 == q2 && v2 == q1);
        if (!match) throw identity_failure("level-set limits off the parametrized curve");
    }
    return ap;
}

enum class PointClass { off, on_curve, closure_only };

inline std::string point_class_name(PointClass c) {
    switch (c) {
        case PointClass::off: return "off";
        case PointClass::on_curve: return "on_curve";
        case PointClass::closure_only: return "closure_only";
    }
    throw domain_error("unknown classification");
}

// everything classify and fiber logic needs, built once
struct AsymVariety {
    MPoly w;
    AsymParam param;
};

inline AsymVariety build_asym_variety(const PinchukCore& core) {
    return AsymVariety{implicit_poly(), param_asymptotic(core)};
}

// exact membership: off the Zariski closure, on the parametrized curve, or
// on the closure but not the curve
inline PointClass classify_point(const AsymVariety& av, const Rat& p, const Rat& q) {
    if (av.w.evaluate({{"P", p}, {"Q", q}}) != 0) return PointClass::off;
    if (p < -1) return PointClass::closure_only;
    QuadNum root = QuadNum::sqrt_of(1 + p);
    for (const QuadNum& s : {QuadNum(Rat(-1)) + root, QuadNum(Rat(-1)) - root})
        if (av.param.q_of_s.evaluate(s) == QuadNum(q)) return PointClass::on_curve;
    return PointClass::closure_only;
}

struct SingularPoints {
    std::pair<Rat, Rat> on_curve;       // the curve's singular point
    std::pair<Rat, Rat> closure_only;   // critical point off the curve proper
    bool gradients_vanish = false;
    bool derivation_checks = false;
};

// solve dW/dQ = 0, intersect with W = 0, and verify the gradient vanishes
// at the two resulting points
inline SingularPoints singular_points(const AsymVariety& av) {
    const Universe& pq = pq_universe();
    MPoly P = MPoly::var(pq, "P"), Q = MPoly::var(pq, "Q");
    MPoly one = MPoly::constant(pq, 1);

    SingularPoints sp;
    sp.on_curve = {Rat(-1), Rat(-163, 4)};
    sp.closure_only = {Rat(-104, 75), Rat(-18928, 375)};

    // dW/dQ = 2(Q - offset): critical points satisfy Q = offset(P)
    MPoly offset = detail::w_offset(pq);
    bool dq_form = av.w.derivative("Q") == Rat(2) * (Q - offset);
    // W restricted to that locus collapses to -(P+1)^3 (75P+104)^2
    MPoly restricted = av.w.substitute({{"P", P}, {"Q", offset}});
    bool restricted_form =
        restricted == -(P + one).pow(3) * (Rat(75) * P + MPoly::constant(pq, 104)).pow(2);
    bool q_values = offset.evaluate({{"P", Rat(-1)}, {"Q", Rat(0)}}) == Rat(-163, 4) &&
                    offset.evaluate({{"P", Rat(-104, 75)}, {"Q", Rat(0)}}) == Rat(-18928, 375);
    sp.derivation_checks = dq_form && restricted_form && q_values;

    MPoly wp = av.w.derivative("P"), wq = av.w.derivative("Q");
    auto grad_zero = [&](const std::pair<Rat, Rat>& pt) {
        std::map<std::string, Rat> at{{"P", pt.first}, {"Q", pt.second}};
        return av.w.evaluate(at) == 0 && wp.evaluate(at) == 0 && wq.evaluate(at) == 0;
    };
    sp.gradients_vanish = grad_zero(sp.on_curve) && grad_zero(sp.closure_only);
    return sp;
}

// evaluate over the real quadratic extension, for membership checks of
// irrational values
inline QuadNum evaluate_quad(const MPoly& p, const std::map<std::string, QuadNum>& bindings) {
    const Universe& u = p.universe();
    std::vector<const QuadNum*> vals(u.size(), nullptr);
    for (std::size_t i = 0; i < u.size(); ++i) {
        auto it = bindings.find(u[i]);
        if (it == bindings.end()) throw domain_error("unbound variable '" + u[i] + "'");
        vals[i] = &it->second;
    }
    QuadNum acc{Rat(0)};
    for (const auto& [m, c] : p.terms()) {
        QuadNum t{c};
        for (std::size_t i = 0; i < u.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t = t * (*vals[i]);
        acc = acc + t;
    }
    return acc;
}

} // namespace pinchuk
