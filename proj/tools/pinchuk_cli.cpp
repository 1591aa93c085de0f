// Command-line surface over the library: verification reports, fibers,
// level-set and curve sampling, the minimal polynomial, and family
// round-trips. All exact values print as rational strings; decimals only
// ever appear in fields explicitly named *_approx.
//
// Exit codes: 0 success, 1 a check or round-trip failed, 2 bad usage or a
// violated precondition. Set PINCHUK_VERBOSE=1 for progress on stderr.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinchuk/fibers.hpp"
#include "pinchuk/verify.hpp"

using json = nlohmann::ordered_json;
using namespace pinchuk;

namespace {

bool verbose() {
    const char* v = std::getenv("PINCHUK_VERBOSE");
    return v != nullptr && std::string(v) != "0" && std::string(v) != "";
}

void note(const std::string& msg) {
    if (verbose()) std::cerr << msg << "\n";
}

json coord_json(const Coord& c) {
    if (coord_is_rational(c)) return json(rat_to_string(coord_rational(c)));
    const AlgNum& a = std::get<AlgNum>(c);
    json j;
    j["minpoly"] = a.defpoly.to_string("T");
    j["interval"] = {rat_to_string(a.iv.lo), rat_to_string(a.iv.hi)};
    return j;
}

int cmd_verify(const std::string& scope, unsigned seed) {
    note("running scope '" + scope + "' with seed " + std::to_string(seed));
    std::vector<CheckResult> results = run_checks(scope, seed);
    json out = json::array();
    bool all_pass = true;
    for (const CheckResult& r : results) {
        json details = json::object();
        for (const auto& [k, v] : r.details) details[k] = v;
        out.push_back({{"check", r.name},
                       {"status", r.pass ? "pass" : "fail"},
                       {"details", details},
                       {"elapsed_ms", r.elapsed_ms}});
        all_pass = all_pass && r.pass;
    }
    std::cout << out.dump(2) << "\n";
    return all_pass ? 0 : 1;
}

int cmd_fiber(const Rat& p, const Rat& q) {
    FiberEngine engine;
    note("target (" + rat_to_string(p) + ", " + rat_to_string(q) + ")");
    FiberResult fr = engine.fiber(p, q);
    json out;
    out["target"] = {{"p", rat_to_string(p)}, {"q", rat_to_string(q)}};
    out["classification"] = point_class_name(fr.classification);
    out["expected"] = engine.expected_count(p, q);
    json pts = json::array();
    for (const FiberPoint& pt : fr.points) {
        json e;
        e["x"] = coord_json(pt.x);
        e["x_approx"] = coord_approx(pt.x, 12);
        e["y"] = coord_json(pt.y);
        e["y_approx"] = coord_approx(pt.y, 12);
        e["h"] = coord_json(pt.h_value);
        e["h_approx"] = coord_approx(pt.h_value, 12);
        e["branch"] = branch_name(pt.branch);
        pts.push_back(e);
    }
    out["points"] = pts;
    out["count"] = fr.points.size();
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_levelset(const Rat& c, long samples) {
    PinchukCore core = build_core();
    LevelParam lp = param_level(core, c); // throws on c in {0, -1}
    json header;
    header["c"] = rat_to_string(c);
    json pole_list = json::array();
    for (const PoleInfo& pole : lp.excluded)
        pole_list.push_back({{"value", pole.location.to_string()},
                             {"approx", pole.location.approx(12)},
                             {"divergent", pole.divergent}});
    header["poles"] = pole_list;
    json asym = json::array();
    for (const auto& [pole, value] : asymptotic_values(core, c))
        asym.push_back({{"h", pole.to_string()},
                        {"approx_h", pole.approx(12)},
                        {"value", value.to_string()},
                        {"approx_value", value.approx(12)}});
    header["asymptotic_values"] = asym;

    std::cout << "# " << header.dump() << "\n";
    std::cout << "h,x,y,Q\n";
    // h = c+1, c+2, ... always misses every pole: the divergent one by the
    // positive offset, the finite ones because c+1 exceeds -1+sqrt(1+c)
    for (long k = 1; k <= samples; ++k) {
        Rat h = c + k;
        Rat x = lp.x_of_h.evaluate({{"h", h}});
        Rat y = lp.y_of_h.evaluate({{"h", h}});
        Rat qv = core.Q.evaluate({{"x", x}, {"y", y}});
        std::cout << rat_to_string(h) << "," << rat_to_string(x) << ","
                  << rat_to_string(y) << "," << rat_to_string(qv) << "\n";
    }
    return 0;
}

int cmd_avariety(const Rat& from, const Rat& to, const Rat& step) {
    if (step <= 0) throw domain_error("step must be positive");
    if (to < from) throw domain_error("empty range: --to is below --from");
    AsymParam ap = param_asymptotic(build_core());
    std::cout << "s,P,Q\n";
    for (Rat s = from; s <= to; s += step)
        std::cout << rat_to_string(s) << "," << rat_to_string(ap.p_of_s.evaluate(s)) << ","
                  << rat_to_string(ap.q_of_s.evaluate(s)) << "\n";
    return 0;
}

int cmd_minpoly(bool print_json) {
    PinchukCore core = build_core();
    MinPoly m = minimal_polynomial(core);
    if (!print_json) {
        std::cout << "monic sextic in T over (P, Q); certificate p0="
                  << rat_to_string(m.certificate.p0) << " q0=" << rat_to_string(m.certificate.q0)
                  << " prime=" << m.certificate.prime << "\n";
        return 0;
    }
    json out;
    json coeffs = json::array();
    for (const MPoly& c : m.coeffs) coeffs.push_back(c.to_string());
    out["coefficients"] = coeffs;
    out["certificate"] = {{"p0", rat_to_string(m.certificate.p0)},
                          {"q0", rat_to_string(m.certificate.q0)},
                          {"prime", m.certificate.prime}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_family(const std::string& coeff_list) {
    std::vector<Rat> coeffs;
    std::stringstream ss(coeff_list);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(rat_from_string(item));
    if (coeffs.empty()) throw domain_error("empty coefficient list for --s-coeffs");
    UniPoly S(coeffs);

    PinchukCore base = build_core();
    PinchukCore shifted = build_family(S);
    UniPoly recovered = recover_S(base, shifted);
    bool verified = shifted.Q - base.Q == compose(S, base.P);

    json out;
    json given = json::array(), back = json::array();
    for (const Rat& c : coeffs) given.push_back(rat_to_string(c));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(0, recovered.degree())); ++i)
        back.push_back(rat_to_string(recovered.coeff(i)));
    out["s_coefficients"] = given;
    out["recovered"] = back;
    out["match"] = recovered == S;
    out["shift_identity"] = verified;
    out["q_total_degree"] = shifted.Q.total_degree().value_or(0);
    std::cout << out.dump(2) << "\n";
    return (recovered == S && verified) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification and sampling for a plane polynomial map"};
    app.require_subcommand(1);

    std::string scope = "all";
    unsigned seed = 20240823u;
    CLI::App* verify = app.add_subcommand("verify", "run registered symbolic checks");
    verify->add_option("scope", scope,
                       "all, jacobian, minpoly, levelsets, avariety or identities");
    verify->add_option("--seed", seed, "seed for the sampled checks");

    std::string fiber_p, fiber_q;
    CLI::App* fiber = app.add_subcommand("fiber", "exact preimages of a rational target");
    fiber->add_option("--p", fiber_p, "first coordinate of the target")->required();
    fiber->add_option("--q", fiber_q, "second coordinate of the target")->required();

    std::string level_c;
    long level_samples = 8;
    CLI::App* levelset = app.add_subcommand("levelset", "sample a level curve of P");
    levelset->add_option("--c", level_c, "level constant, not 0 or -1")->required();
    levelset->add_option("--samples", level_samples, "number of CSV rows")
        ->check(CLI::PositiveNumber);

    std::string av_from, av_to, av_step;
    CLI::App* avariety = app.add_subcommand("avariety", "sample the limit curve of the map");
    avariety->add_option("--from", av_from, "first parameter value")->required();
    avariety->add_option("--to", av_to, "last parameter value")->required();
    avariety->add_option("--step", av_step, "positive parameter increment")->required();

    bool mp_print = false;
    CLI::App* minpoly = app.add_subcommand("minpoly", "minimal polynomial of h over (P, Q)");
    minpoly->add_flag("--print", mp_print, "emit coefficients and certificate as JSON");

    std::string family_coeffs;
    CLI::App* family = app.add_subcommand("family", "shifted-map round-trip for Q + S(P)");
    family->add_option("--s-coeffs", family_coeffs,
                       "comma-separated rational coefficients of S, lowest degree first")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(scope, seed);
        if (fiber->parsed())
            return cmd_fiber(rat_from_string(fiber_p), rat_from_string(fiber_q));
        if (levelset->parsed()) return cmd_levelset(rat_from_string(level_c), level_samples);
        if (avariety->parsed())
            return cmd_avariety(rat_from_string(av_from), rat_from_string(av_to),
                                rat_from_string(av_step));
        if (minpoly->parsed()) return cmd_minpoly(mp_print);
        if (family->parsed()) return cmd_family(family_coeffs);
    } catch (const domain_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
