#pragma once

// Named self-checks grouped by scope, exposed to the command line driver.
// Every check recomputes its claim from scratch through the library and
// reports pass/fail plus a few computed values.

#include <chrono>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "avariety.hpp"
#include "fibers.hpp"
#include "fieldext.hpp"
#include "levelset.hpp"
#include "map.hpp"

namespace pinchuk {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> details;
    long long elapsed_ms = 0;
};

namespace detail {

struct CheckContext {
    unsigned seed;
    explicit CheckContext(unsigned s) : seed(s) {}

    const PinchukCore& core() {
        if (!core_) core_.emplace(build_core());
        return *core_;
    }
    const FiberEngine& engine() {
        if (!engine_) engine_.emplace();
        return *engine_;
    }

private:
    std::optional<PinchukCore> core_;
    std::optional<FiberEngine> engine_;
};

using CheckFn = std::function<void(CheckContext&, CheckResult&)>;

struct CheckDef {
    const char* scope;
    const char* name;
    CheckFn fn;
};

// portable seeded choice, independent of distribution internals
inline long pick(std::mt19937& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

inline Rat random_rat(std::mt19937& rng, long num_lo, long num_hi, long den_hi) {
    Rat r(pick(rng, num_lo, num_hi), pick(rng, 1, den_hi));
    r.canonicalize();
    return r;
}

inline std::string yn(bool b) { return b ? "yes" : "no"; }

inline int algnum_sign(const AlgNum& a) { return sign_at(UniPoly({Rat(0), Rat(1)}), a); }

inline int coord_sign(const Coord& c) {
    if (coord_is_rational(c)) return sign(coord_rational(c));
    return algnum_sign(std::get<AlgNum>(c));
}

inline const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> defs = {
        {"jacobian", "jacobian-identity",
         [](CheckContext& ctx, CheckResult& res) {
             const PinchukCore& core = ctx.core();
             MPoly j = jacobian2(core.P, core.Q, "x", "y");
             res.pass = verify_jacobian_identity(core);
             res.details.emplace_back("equals-sum-of-squares", yn(res.pass));
             res.details.emplace_back("jacobian-degree",
                                      std::to_string(j.total_degree().value_or(0)));
             res.details.emplace_back("jacobian-terms", std::to_string(j.term_count()));
         }},
        {"jacobian", "component-degrees",
         [](CheckContext& ctx, CheckResult& res) {
             const PinchukCore& core = ctx.core();
             unsigned dp = core.P.total_degree().value_or(0);
             unsigned dq = core.Q.total_degree().value_or(0);
             std::size_t tp = core.P.term_count(), tq = core.Q.term_count();
             res.pass = dp == 10 && tp == 12 && dq == 25 && tq == 55;
             res.details.emplace_back("deg-P", std::to_string(dp));
             res.details.emplace_back("terms-P", std::to_string(tp));
             res.details.emplace_back("deg-Q", std::to_string(dq));
             res.details.emplace_back("terms-Q", std::to_string(tq));
         }},
        {"jacobian", "positivity",
         [](CheckContext& ctx, CheckResult& res) {
             res.pass = verify_positivity(ctx.core());
             res.details.emplace_back("jacobian-positive-everywhere", yn(res.pass));
         }},

        {"minpoly", "inverse-coordinates",
         [](CheckContext& ctx, CheckResult& res) {
             FhCoordinates fc = fh_coordinates(ctx.core());
             res.pass = fc.all();
             res.details.emplace_back("x-identity", yn(fc.x_identity));
             res.details.emplace_back("y-identity", yn(fc.y_identity));
             res.details.emplace_back("q-expansion", yn(fc.q_expansion));
         }},
        {"minpoly", "sextic-relation",
         [](CheckContext& ctx, CheckResult& res) {
             const PinchukCore& core = ctx.core();
             RelationR rel = derive_R(core);
             bool ann = verify_R_annihilates_h(rel, core);
             Rat lead = rel.coeffs[6].evaluate({{"P", Rat(0)}, {"Q", Rat(0)}});
             res.pass = ann && lead == Rat(197, 4);
             res.details.emplace_back("annihilates-h", yn(ann));
             res.details.emplace_back("t6-coefficient", rat_to_string(lead));
         }},
        {"minpoly", "minimal-polynomial",
         [](CheckContext& ctx, CheckResult& res) {
             MinPoly mp = minimal_polynomial(ctx.core());
             const Universe& pq = pq_universe();
             bool monic = mp.coeffs[6] == MPoly::constant(pq, 1);
             bool cert = mp.certificate.p0 == 1 && mp.certificate.q0 == -1 &&
                         mp.certificate.prime == 23;
             res.pass = monic && cert;
             res.details.emplace_back("monic", yn(monic));
             res.details.emplace_back("degree", "6");
             res.details.emplace_back("certificate-point",
                                      "(" + rat_to_string(mp.certificate.p0) + ", " +
                                          rat_to_string(mp.certificate.q0) + ")");
             res.details.emplace_back("certificate-prime", std::to_string(mp.certificate.prime));
         }},

        {"levelsets", "level-three-poles",
         [](CheckContext& ctx, CheckResult& res) {
             (void)ctx;
             std::vector<PoleInfo> ps = poles(Rat(3));
             res.pass = ps.size() == 3;
             std::string names;
             for (const PoleInfo& p : ps) {
                 if (!names.empty()) names += ", ";
                 names += p.location.to_string();
             }
             if (res.pass) {
                 auto is_rat = [](const PoleInfo& p, long v, bool div) {
                     return p.location.is_rational() && p.location.as_rational() == v &&
                            p.divergent == div;
                 };
                 res.pass = is_rat(ps[0], -3, false) && is_rat(ps[1], 1, false) &&
                            is_rat(ps[2], 3, true);
             }
             res.details.emplace_back("poles", names);
             res.details.emplace_back("divergent-at", "3");
         }},
        {"levelsets", "level-three-asymptotics",
         [](CheckContext& ctx, CheckResult& res) {
             auto vals = asymptotic_values(ctx.core(), Rat(3));
             res.pass = vals.size() == 2;
             if (res.pass) {
                 res.pass = vals[0].first.is_rational() && vals[0].first.as_rational() == -3 &&
                            vals[0].second.is_rational() &&
                            vals[0].second.as_rational() == Rat(16821, 4) &&
                            vals[1].first.is_rational() && vals[1].first.as_rational() == 1 &&
                            vals[1].second.is_rational() &&
                            vals[1].second.as_rational() == Rat(-4235, 4);
             }
             for (const auto& [pole, value] : vals)
                 res.details.emplace_back("value-at-" + pole.to_string(), value.to_string());
         }},
        {"levelsets", "level-zero-structure",
         [](CheckContext& ctx, CheckResult& res) {
             ZeroLevel z = level_zero_components(ctx.core());
             res.pass = z.component_count == 5 && z.excluded_h.size() == 2 &&
                        z.excluded_h[0] == 0 && z.excluded_h[1] == -2;
             res.details.emplace_back("components", std::to_string(z.component_count));
             res.details.emplace_back("excluded-h", "0, -2");
         }},
        {"levelsets", "asymptote-membership",
         [](CheckContext& ctx, CheckResult& res) {
             std::mt19937 rng(ctx.seed);
             MPoly w = implicit_poly();
             int levels = 0;
             bool ok = true;
             while (levels < 4) {
                 Rat c = random_rat(rng, 1, 40, 6);
                 auto vals = asymptotic_values(ctx.core(), c);
                 if (vals.size() != 2) ok = false;
                 for (const auto& [pole, value] : vals) {
                     QuadNum wv =
                         evaluate_quad(w, {{"P", QuadNum(c)}, {"Q", value}});
                     if (wv.signum() != 0) ok = false;
                 }
                 ++levels;
             }
             res.pass = ok;
             res.details.emplace_back("levels-sampled", std::to_string(levels));
             res.details.emplace_back("asymptotic-values-on-curve", yn(ok));
         }},

        {"avariety", "implicit-equation",
         [](CheckContext& ctx, CheckResult& res) {
             const MPoly& w = ctx.engine().variety().w;
             auto at = [&](const Rat& p, const Rat& q) {
                 return w.evaluate({{"P", p}, {"Q", q}});
             };
             bool named = at(0, 0) == 0 && at(0, 208) == 0 &&
                          at(-1, Rat(-163, 4)) == 0 &&
                          at(Rat(-104, 75), Rat(-18928, 375)) == 0;
             bool off = at(1, 1) != 0;
             res.pass = named && off;
             res.details.emplace_back("vanishes-at-named-points", yn(named));
             res.details.emplace_back("nonzero-off-curve", yn(off));
             res.details.emplace_back("degree",
                                      std::to_string(w.total_degree().value_or(0)));
         }},
        {"avariety", "parametrization",
         [](CheckContext& ctx, CheckResult& res) {
             const AsymParam& ap = ctx.engine().variety().param;
             auto img = [&](const Rat& s) {
                 return std::make_pair(ap.p_of_s.evaluate(s), ap.q_of_s.evaluate(s));
             };
             auto [p0, q0] = img(Rat(0));
             auto [p1, q1] = img(Rat(-1));
             auto [p2, q2] = img(Rat(-2));
             res.pass = p0 == 0 && q0 == 208 && p1 == -1 && q1 == Rat(-163, 4) &&
                        p2 == 0 && q2 == 0;
             res.details.emplace_back("image-at-0",
                                      "(" + rat_to_string(p0) + ", " + rat_to_string(q0) + ")");
             res.details.emplace_back("image-at--1",
                                      "(" + rat_to_string(p1) + ", " + rat_to_string(q1) + ")");
             res.details.emplace_back("image-at--2",
                                      "(" + rat_to_string(p2) + ", " + rat_to_string(q2) + ")");
         }},
        {"avariety", "classification",
         [](CheckContext& ctx, CheckResult& res) {
             const AsymVariety& av = ctx.engine().variety();
             bool ok = classify_point(av, Rat(1), Rat(1)) == PointClass::off &&
                       classify_point(av, Rat(0), Rat(208)) == PointClass::on_curve &&
                       classify_point(av, Rat(0), Rat(0)) == PointClass::on_curve &&
                       classify_point(av, Rat(-1), Rat(-163, 4)) == PointClass::on_curve &&
                       classify_point(av, Rat(-104, 75), Rat(-18928, 375)) ==
                           PointClass::closure_only;
             res.pass = ok;
             res.details.emplace_back("off", point_class_name(PointClass::off));
             res.details.emplace_back("curve", point_class_name(PointClass::on_curve));
             res.details.emplace_back("closure", point_class_name(PointClass::closure_only));
         }},
        {"avariety", "singular-points",
         [](CheckContext& ctx, CheckResult& res) {
             SingularPoints sp = singular_points(ctx.engine().variety());
             bool named = sp.on_curve == std::make_pair(Rat(-1), Rat(-163, 4)) &&
                          sp.closure_only ==
                              std::make_pair(Rat(-104, 75), Rat(-18928, 375));
             res.pass = named && sp.gradients_vanish && sp.derivation_checks;
             res.details.emplace_back("on-curve", "(" + rat_to_string(sp.on_curve.first) + ", " +
                                                      rat_to_string(sp.on_curve.second) + ")");
             res.details.emplace_back("closure-only",
                                      "(" + rat_to_string(sp.closure_only.first) + ", " +
                                          rat_to_string(sp.closure_only.second) + ")");
             res.details.emplace_back("gradients-vanish", yn(sp.gradients_vanish));
         }},
        {"avariety", "fiber-counts",
         [](CheckContext& ctx, CheckResult& res) {
             const FiberEngine& eng = ctx.engine();
             auto count_is = [&](const Rat& p, const Rat& q, int want) {
                 FiberResult fr = eng.fiber(p, q);
                 return eng.expected_count(p, q) == want &&
                        static_cast<int>(fr.points.size()) == want;
             };
             bool empty0 = count_is(Rat(0), Rat(0), 0);
             bool emptym1 = count_is(Rat(-1), Rat(-163, 4), 0);
             bool oncurve = count_is(Rat(0), Rat(208), 1);
             bool off = count_is(Rat(0), Rat(-1), 2);
             bool closure = count_is(Rat(-104, 75), Rat(-18928, 375), 2);
             FiberResult single = eng.fiber(Rat(0), Rat(208));
             bool positive_h =
                 single.points.size() == 1 && coord_sign(single.points[0].h_value) > 0;
             res.pass = empty0 && emptym1 && oncurve && off && closure && positive_h;
             res.details.emplace_back("empty-at-(0, 0)", yn(empty0));
             res.details.emplace_back("empty-at-(-1, -163/4)", yn(emptym1));
             res.details.emplace_back("single-at-(0, 208)", yn(oncurve && positive_h));
             res.details.emplace_back("double-at-(0, -1)", yn(off));
             res.details.emplace_back("double-at-critical-closure-point", yn(closure));
         }},
        {"avariety", "off-curve-fibers",
         [](CheckContext& ctx, CheckResult& res) {
             const FiberEngine& eng = ctx.engine();
             std::mt19937 rng(ctx.seed + 1);
             int done = 0, guard = 0;
             bool ok = true;
             while (done < 6 && guard < 100) {
                 ++guard;
                 Rat p = random_rat(rng, -8, 8, 4);
                 Rat q = random_rat(rng, -12, 12, 4);
                 if (classify_point(eng.variety(), p, q) != PointClass::off) continue;
                 if (p == 0 && q == 0) continue;
                 FiberResult fr = eng.fiber(p, q);
                 if (fr.points.size() != 2) ok = false;
                 if (eng.expected_count(p, q) != 2) ok = false;
                 ++done;
             }
             res.pass = ok && done == 6;
             res.details.emplace_back("targets-sampled", std::to_string(done));
             res.details.emplace_back("all-fibers-have-two-points", yn(ok));
         }},

        {"identities", "automorphism-identities",
         [](CheckContext& ctx, CheckResult& res) {
             AutReport rep = automorphism_identities(ctx.core());
             res.pass = rep.all();
             res.details.emplace_back("level-q-formula", yn(rep.level_q_formula));
             res.details.emplace_back("q-at--2", rat_to_string(rep.q_at_minus_two));
             res.details.emplace_back("quartic-discriminant",
                                      rat_to_string(rep.quartic_discriminant));
             res.details.emplace_back("inner-discriminant",
                                      rat_to_string(rep.inner_discriminant));
             res.details.emplace_back("odd-part-identity", yn(rep.odd_part_identity));
         }},
        {"identities", "involution",
         [](CheckContext& ctx, CheckResult& res) {
             const FiberEngine& eng = ctx.engine();
             std::mt19937 rng(ctx.seed + 2);
             int done = 0, guard = 0;
             bool ok = true;
             while (done < 5 && guard < 100) {
                 ++guard;
                 Rat x = random_rat(rng, -6, 6, 3);
                 Rat y = random_rat(rng, -6, 6, 3);
                 if (x == 0 && y == 0) continue;
                 Rat p = eng.core().P.evaluate({{"x", x}, {"y", y}});
                 Rat q = eng.core().Q.evaluate({{"x", x}, {"y", y}});
                 if (classify_point(eng.variety(), p, q) != PointClass::off) continue;
                 FiberResult fr = eng.fiber(p, q);
                 if (fr.points.size() != 2) {
                     ok = false;
                     ++done;
                     continue;
                 }
                 std::size_t idx = fr.points.size();
                 for (std::size_t i = 0; i < fr.points.size(); ++i)
                     if (coord_equals_rat(fr.points[i].x, x) &&
                         coord_equals_rat(fr.points[i].y, y))
                         idx = i;
                 if (idx == fr.points.size()) {
                     ok = false; // the sample must appear in its own fiber
                 } else {
                     FiberPoint partner = eng.tau(fr, idx);
                     FiberPoint back = eng.tau(fr, 1 - idx);
                     ok = ok && same_point(partner, fr.points[1 - idx]) &&
                          same_point(back, fr.points[idx]);
                 }
                 ++done;
             }
             res.pass = ok && done == 5;
             res.details.emplace_back("samples", std::to_string(done));
             res.details.emplace_back("involution-closes", yn(ok));
         }},
        {"identities", "family-roundtrip",
         [](CheckContext& ctx, CheckResult& res) {
             const PinchukCore& base = ctx.core();
             UniPoly fixed({Rat(1, 2), Rat(-5), Rat(0), Rat(1)});
             PinchukCore shifted = build_family(fixed);
             bool fixed_ok = recover_S(base, shifted) == fixed;

             std::mt19937 rng(ctx.seed + 3);
             bool random_ok = true;
             for (int k = 0; k < 2; ++k) {
                 std::vector<Rat> cs;
                 long deg = pick(rng, 0, 3);
                 for (long i = 0; i <= deg; ++i) cs.push_back(random_rat(rng, -9, 9, 4));
                 UniPoly S(cs);
                 if (recover_S(base, build_family(S)) != S) random_ok = false;
             }
             res.pass = fixed_ok && random_ok;
             res.details.emplace_back("fixed-shift", fixed.to_string("P"));
             res.details.emplace_back("fixed-roundtrip", yn(fixed_ok));
             res.details.emplace_back("random-roundtrips", yn(random_ok));
         }},
    };
    return defs;
}

} // namespace detail

inline const std::vector<std::string>& check_scopes() {
    static const std::vector<std::string> scopes = {"jacobian", "minpoly", "levelsets",
                                                    "avariety", "identities"};
    return scopes;
}

inline std::vector<CheckResult> run_checks(const std::string& scope, unsigned seed) {
    if (scope != "all") {
        bool known = false;
        for (const std::string& s : check_scopes())
            if (s == scope) known = true;
        if (!known) throw domain_error("unknown verification scope: " + scope);
    }
    detail::CheckContext ctx(seed);
    std::vector<CheckResult> out;
    for (const detail::CheckDef& def : detail::check_registry()) {
        if (scope != "all" && scope != def.scope) continue;
        CheckResult res;
        res.name = def.name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            def.fn(ctx, res);
        } catch (const std::exception& e) {
            res.pass = false;
            res.details.emplace_back("error", e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        res.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        out.push_back(std::move(res));
    }
    return out;
}

} // namespace pinchuk
