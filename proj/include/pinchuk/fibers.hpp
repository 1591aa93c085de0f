#pragma once

// Exact preimage computation. A target's candidate h-values are the real
// roots of the specialized sextic relation; each surviving root determines
// one preimage through the level parametrization, with coordinates kept as
// exact rationals or algebraic numbers. The exceptional levels P=0 and
// P=-1 contribute their own branches.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "algfield.hpp"
#include "avariety.hpp"
#include "fieldext.hpp"
#include "levelset.hpp"
#include "map.hpp"
#include "quadnum.hpp"
#include "uniroots.hpp"

namespace pinchuk {

enum class Branch { generic_h, level0_tcurve, levelm1_hcurve };

inline std::string branch_name(Branch b) {
    switch (b) {
        case Branch::generic_h: return "generic-h";
        case Branch::level0_tcurve: return "level0-tcurve";
        case Branch::levelm1_hcurve: return "levelm1-hcurve";
    }
    throw domain_error("unknown branch");
}

using Coord = std::variant<Rat, AlgNum>;

inline bool coord_is_rational(const Coord& c) { return std::holds_alternative<Rat>(c); }

inline Rat coord_rational(const Coord& c) {
    if (const Rat* r = std::get_if<Rat>(&c)) return *r;
    throw domain_error("coordinate is not rational");
}

inline std::string coord_approx(const Coord& c, int digits = 12) {
    if (const Rat* r = std::get_if<Rat>(&c)) return decimal_approx(*r, digits);
    return approx(std::get<AlgNum>(c), digits);
}

inline Coord coord_from_algnum(const AlgNum& a) {
    if (a.is_rational()) return Coord(a.rational_value());
    return Coord(a);
}

// exact comparison that sees through an algebraic encoding of a rational
inline bool coord_equals_rat(const Coord& c, const Rat& r) {
    if (coord_is_rational(c)) return coord_rational(c) == r;
    const AlgNum& a = std::get<AlgNum>(c);
    if (a.defpoly.evaluate(r) != 0) return false;
    return a.iv.lo <= r && r <= a.iv.hi;
}

// minimal polynomial T^2 - 2aT + (a^2 - b^2 d) with an interval excluding
// the conjugate
inline AlgNum algnum_from_quad(const QuadNum& v) {
    if (v.is_rational()) return algnum_from_rat(v.as_rational());
    const Rat& a = v.rational_part();
    const Rat& b = v.coeff();
    const Rat& d = v.radicand();
    UniPoly defpoly({a * a - b * b * d, -2 * a, Rat(1)});
    Rat eps = rat_abs(b) * std::min(Rat(1), d) / 2;
    RatInterval iv = v.enclosure(eps);
    return AlgNum{defpoly, iv};
}

inline Coord coord_from_quad(const QuadNum& v) {
    if (v.is_rational()) return Coord(v.as_rational());
    return Coord(algnum_from_quad(v));
}

struct FiberPoint {
    Coord x, y, h_value;
    Branch branch = Branch::generic_h;
};

struct FiberResult {
    Rat p, q;
    PointClass classification = PointClass::off;
    std::vector<FiberPoint> points;
};

inline bool same_point(const FiberPoint& a, const FiberPoint& b) {
    if (a.branch != b.branch) return false;
    auto same_coord = [](const Coord& u, const Coord& v) {
        if (coord_is_rational(u) != coord_is_rational(v)) return false;
        if (coord_is_rational(u)) return coord_rational(u) == coord_rational(v);
        const AlgNum& x = std::get<AlgNum>(u);
        const AlgNum& y = std::get<AlgNum>(v);
        return x.defpoly == y.defpoly && x.iv.lo == y.iv.lo && x.iv.hi == y.iv.hi;
    };
    return same_coord(a.x, b.x) && same_coord(a.y, b.y) && same_coord(a.h_value, b.h_value);
}

// all fiber machinery over one verified map instance
class FiberEngine {
public:
    FiberEngine()
        : core_(build_core()),
          variety_(build_asym_variety(core_)),
          relation_(derive_R(core_)) {
        level_zero_components(core_); // branch identities for p=0, throws on failure
        verify_exceptional_branch();
    }

    const PinchukCore& core() const { return core_; }
    const AsymVariety& variety() const { return variety_; }
    const RelationR& relation() const { return relation_; }

    // 2 generically, 1 on the curve, 0 at the two exceptional targets
    int expected_count(const Rat& p, const Rat& q) const {
        if ((p == 0 && q == 0) || (p == -1 && q == Rat(-163, 4))) return 0;
        switch (classify_point(variety_, p, q)) {
            case PointClass::off: return 2;
            case PointClass::on_curve: return 1;
            case PointClass::closure_only: return 2;
        }
        throw domain_error("unknown classification");
    }

    FiberResult fiber(const Rat& p, const Rat& q) const {
        FiberResult fr;
        fr.p = p;
        fr.q = q;
        fr.classification = classify_point(variety_, p, q);

        UniPoly sextic = specialize_sextic(relation_.coeffs, p, q);
        UniPoly pole_quadratic({p, Rat(-2), Rat(-1)}); // p - 2T - T^2
        UniPoly pole_linear({p, Rat(-1)});             // p - T
        for (const auto& [root, mult] : isolate_real_roots_full(sextic)) {
            if (sign_at(pole_quadratic, root) == 0) continue;
            if (sign_at(pole_linear, root) == 0) continue;
            fr.points.push_back(point_from_h_root(p, q, root));
        }
        if (p == 0) append_tcurve_points(q, fr.points);
        if (p == -1) append_exceptional_points(q, fr.points);
        return fr;
    }

    // partner of a fiber point under the level-set involution
    FiberPoint tau(const FiberResult& fr, std::size_t index) const {
        if (index >= fr.points.size()) throw domain_error("point index out of range");
        if (fr.classification != PointClass::off)
            throw domain_error("image lies on the asymptotic variety");
        if (fr.points.size() != 2)
            throw identity_failure("off-curve fiber does not have two points");
        return fr.points[1 - index];
    }

    FiberPoint tau(const Rat& x, const Rat& y) const {
        Rat p = core_.P.evaluate({{"x", x}, {"y", y}});
        Rat q = core_.Q.evaluate({{"x", x}, {"y", y}});
        FiberResult fr = fiber(p, q);
        if (fr.classification != PointClass::off)
            throw domain_error("image lies on the asymptotic variety");
        for (std::size_t i = 0; i < fr.points.size(); ++i) {
            const FiberPoint& pt = fr.points[i];
            if (coord_equals_rat(pt.x, x) && coord_equals_rat(pt.y, y)) return tau(fr, i);
        }
        throw identity_failure("input point missing from its own fiber");
    }

private:
    PinchukCore core_;
    AsymVariety variety_;
    RelationR relation_;

    // x = -(1+t)/t^2, y = -t^2 stays on P=-1 with h=-1 and Q=-t^2-163/4
    void verify_exceptional_branch() const {
        Universe tu{"t"};
        MPoly t = MPoly::var(tu, "t");
        MPoly one = MPoly::constant(tu, 1);
        RatFn xt(-(one + t), t.pow(2));
        RatFn yt(-t.pow(2));
        std::map<std::string, RatFn> on_t{{"x", xt}, {"y", yt}};
        if (RatFn::compose_poly(core_.P, on_t) != RatFn::constant(tu, -1))
            throw identity_failure("exceptional branch leaves the level P=-1");
        if (RatFn::compose_poly(core_.h, on_t) != RatFn::constant(tu, -1))
            throw identity_failure("exceptional branch does not sit at h=-1");
        if (RatFn::compose_poly(core_.Q, on_t) != RatFn(-t.pow(2) - Rat(163, 4) * one))
            throw identity_failure("Q on the exceptional branch is not -t^2-163/4");
        if (u_in_fh().evaluate({{"f", Rat(0)}, {"h", Rat(-1)}}) != Rat(163, 4))
            throw identity_failure("exceptional offset is not u(0,-1)");
    }

    FiberPoint point_from_h_root(const Rat& p, const Rat& q, const AlgNum& root) const {
        if (root.is_rational()) {
            Rat h = root.rational_value();
            auto [x, y] = level_point(p, h);
            if (core_.P.evaluate({{"x", x}, {"y", y}}) != p ||
                core_.Q.evaluate({{"x", x}, {"y", y}}) != q)
                throw identity_failure("rational fiber point fails back-substitution");
            return FiberPoint{Coord(x), Coord(y), Coord(h), Branch::generic_h};
        }
        NumberField K(root);
        NumberField::Elem h = K.generator();
        NumberField::Elem pc = K.from_rat(p);
        NumberField::Elem one = K.from_rat(1);
        NumberField::Elem dx = K.sub(pc, K.add(h, K.add(h, K.mul(h, h)))); // p - 2h - h^2
        NumberField::Elem dy = K.sub(pc, h);                               // p - h
        NumberField::Elem dx2 = K.mul(dx, dx);
        NumberField::Elem x = K.div(K.mul(dy, K.add(h, one)), dx2);
        NumberField::Elem y = K.div(K.mul(dx2, K.sub(dy, K.mul(h, h))), K.mul(dy, dy));

        std::map<std::string, NumberField::Elem> at{{"x", x}, {"y", y}};
        if (!K.is_zero(K.sub(K.eval_mpoly(core_.P, at), pc)) ||
            !K.is_zero(K.sub(K.eval_mpoly(core_.Q, at), K.from_rat(q))))
            throw identity_failure("algebraic fiber point fails back-substitution");

        return FiberPoint{coord_from_algnum(K.value_of(x)), coord_from_algnum(K.value_of(y)),
                          coord_from_algnum(K.value_of(h)), Branch::generic_h};
    }

    // contributions with h = 0: x = -1/t, y = -t(t+1), t = +-sqrt(-q)
    void append_tcurve_points(const Rat& q, std::vector<FiberPoint>& out) const {
        if (q >= 0) return;
        Rat m = -q;
        for (int sgn : {-1, +1}) {
            QuadNum t = QuadNum(Rat(0), Rat(sgn), m);
            QuadNum x = QuadNum(Rat(-1)) / t;
            QuadNum y = -(t * t) - t;
            if (coord_is_rational(coord_from_quad(t))) {
                Rat xr = x.as_rational(), yr = y.as_rational();
                if (core_.P.evaluate({{"x", xr}, {"y", yr}}) != 0 ||
                    core_.Q.evaluate({{"x", xr}, {"y", yr}}) != q)
                    throw identity_failure("t-branch point fails back-substitution");
            }
            out.push_back(FiberPoint{coord_from_quad(x), coord_from_quad(y), Coord(Rat(0)),
                                     Branch::level0_tcurve});
        }
    }

    // contributions with h = -1: x = -(1+t)/t^2, y = -t^2, t^2 = -q - 163/4
    void append_exceptional_points(const Rat& q, std::vector<FiberPoint>& out) const {
        Rat m = -q - Rat(163, 4);
        if (m <= 0) return;
        for (int sgn : {-1, +1}) {
            QuadNum t = QuadNum(Rat(0), Rat(sgn), m);
            QuadNum x = -(QuadNum(Rat(1)) + t) / (t * t);
            QuadNum y = -(t * t);
            if (x.is_rational()) {
                Rat xr = x.as_rational(), yr = y.as_rational();
                if (core_.P.evaluate({{"x", xr}, {"y", yr}}) != -1 ||
                    core_.Q.evaluate({{"x", xr}, {"y", yr}}) != q)
                    throw identity_failure("exceptional point fails back-substitution");
            }
            out.push_back(FiberPoint{coord_from_quad(x), coord_from_quad(y), Coord(Rat(-1)),
                                     Branch::levelm1_hcurve});
        }
    }
};

} // namespace pinchuk
