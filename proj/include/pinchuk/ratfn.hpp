#pragma once

// Formal quotients of multivariate polynomials. No multivariate gcd is ever
// computed: equality is decided by cross-multiplication, and quotients are
// kept as the pairs the constructions produce (up to a sign/zero tidy-up).

#include <map>
#include <string>
#include <vector>

#include "mpoly.hpp"
#include "quadnum.hpp"
#include "unipoly.hpp"

namespace pinchuk {

class RatFn {
public:
    RatFn() = default;
    explicit RatFn(MPoly num)
        : num_(std::move(num)), den_(MPoly::constant(num_.universe(), 1)) {}

    RatFn(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (num_.universe() != den_.universe())
            throw universe_mismatch("numerator and denominator universes differ");
        if (den_.is_zero()) throw domain_error("division by the zero function");
        tidy();
    }

    static RatFn constant(Universe u, const Rat& c) { return RatFn(MPoly::constant(std::move(u), c)); }
    static RatFn var(Universe u, const std::string& name) { return RatFn(MPoly::var(std::move(u), name)); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    const Universe& universe() const { return num_.universe(); }
    bool is_zero() const { return num_.is_zero(); }

    bool is_polynomial() const { return den_.is_constant(); }
    MPoly as_polynomial() const {
        if (!is_polynomial()) throw domain_error("denominator is not constant");
        return num_ * (Rat(1) / den_.constant_value());
    }

    friend RatFn operator-(const RatFn& a) { return RatFn(-a.num_, a.den_); }

    friend RatFn operator+(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

    friend RatFn operator*(const RatFn& a, const RatFn& b) {
        return RatFn(a.num_ * b.num_, a.den_ * b.den_);
    }

    friend RatFn operator/(const RatFn& a, const RatFn& b) {
        if (b.num_.is_zero()) throw domain_error("division by the zero function");
        return RatFn(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend RatFn operator*(const RatFn& a, const Rat& c) { return RatFn(a.num_ * c, a.den_); }
    friend RatFn operator*(const Rat& c, const RatFn& a) { return a * c; }

    RatFn pow(unsigned e) const { return RatFn(num_.pow(e), den_.pow(e)); }

    // cross-multiplied equality
    friend bool operator==(const RatFn& a, const RatFn& b) {
        if (a.universe() != b.universe())
            throw universe_mismatch("comparing functions over different universes");
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFn& a, const RatFn& b) { return !(a == b); }

    Rat evaluate(const std::map<std::string, Rat>& bindings) const {
        Rat d = den_.evaluate(bindings);
        if (d == 0) throw domain_error("evaluation at a pole");
        return num_.evaluate(bindings) / d;
    }

    // substitute every variable by a rational function over a common universe
    RatFn substitute(const std::map<std::string, RatFn>& bindings) const {
        RatFn n = compose_poly(num_, bindings);
        RatFn d = compose_poly(den_, bindings);
        return n / d;
    }

    // polynomial bindings: result stays polynomial in each part
    RatFn substitute(const std::map<std::string, MPoly>& bindings) const {
        return RatFn(num_.substitute(bindings), den_.substitute(bindings));
    }

    std::string to_string() const {
        if (den_ == MPoly::constant(den_.universe(), 1)) return num_.to_string();
        return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << f.to_string(); }

    // p composed with rational-function bindings, via one common denominator
    static RatFn compose_poly(const MPoly& p, const std::map<std::string, RatFn>& bindings) {
        const Universe& u = p.universe();
        if (u.empty()) throw domain_error("composition needs at least one variable");
        const Universe* target = nullptr;
        for (const auto& name : u) {
            auto it = bindings.find(name);
            if (it == bindings.end()) throw domain_error("unbound variable '" + name + "'");
            if (!target) target = &it->second.universe();
            else if (*target != it->second.universe())
                throw universe_mismatch("substitution targets disagree on universe");
        }
        for (const auto& [name, val] : bindings)
            if (std::find(u.begin(), u.end(), name) == u.end())
                throw domain_error("binding for unknown variable '" + name + "'");

        std::vector<unsigned> maxe(u.size(), 0);
        for (const auto& [m, c] : p.terms())
            for (std::size_t i = 0; i < u.size(); ++i) maxe[i] = std::max(maxe[i], m[i]);

        std::vector<std::vector<MPoly>> npow(u.size()), dpow(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            const RatFn& b = bindings.at(u[i]);
            npow[i].push_back(MPoly::constant(*target, 1));
            dpow[i].push_back(MPoly::constant(*target, 1));
            for (unsigned e = 1; e <= maxe[i]; ++e) {
                npow[i].push_back(npow[i].back() * b.num());
                dpow[i].push_back(dpow[i].back() * b.den());
            }
        }
        MPoly D = MPoly::constant(*target, 1);
        for (std::size_t i = 0; i < u.size(); ++i) D = D * dpow[i][maxe[i]];
        MPoly N = MPoly::zero(*target);
        for (const auto& [m, c] : p.terms()) {
            MPoly t = MPoly::constant(*target, c);
            for (std::size_t i = 0; i < u.size(); ++i) {
                if (m[i]) t = t * npow[i][m[i]];
                if (maxe[i] - m[i]) t = t * dpow[i][maxe[i] - m[i]];
            }
            N = N + t;
        }
        return RatFn(N, D);
    }

private:
    MPoly num_, den_;

    void tidy() {
        if (num_.is_zero()) {
            den_ = MPoly::constant(den_.universe(), 1);
            return;
        }
        if (den_.terms().rbegin()->second < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

// outcome of a one-variable limit: either a finite value or a pole with order
struct LimitResult {
    bool finite = false;
    QuadNum value;
    unsigned pole_order = 0;

    static LimitResult finite_value(QuadNum v) { return {true, std::move(v), 0}; }
    static LimitResult pole(unsigned order) { return {false, QuadNum(), order}; }
};

// limit of a univariate rational function at a point of the real quadratic
// closure, with matching numerator/denominator vanishing orders cancelled
inline LimitResult limit_at(const RatFn& fn, const QuadNum& s) {
    if (fn.universe().size() != 1)
        throw domain_error("limit needs a one-variable function");
    if (fn.is_zero()) return LimitResult::finite_value(QuadNum(Rat(0)));
    UniPoly n = to_unipoly(fn.num());
    UniPoly d = to_unipoly(fn.den());

    // minimal polynomial of s over the rationals
    UniPoly mp = s.is_rational()
                     ? UniPoly({-s.as_rational(), Rat(1)})
                     : UniPoly({s.rational_part() * s.rational_part() -
                                    s.coeff() * s.coeff() * s.radicand(),
                                -2 * s.rational_part(), Rat(1)});

    auto strip = [&](UniPoly& f) {
        unsigned k = 0;
        while (!f.is_zero()) {
            auto [q, r] = divmod(f, mp);
            if (!r.is_zero()) break;
            f = q;
            ++k;
        }
        return k;
    };
    unsigned kn = strip(n), kd = strip(d);
    if (kn > kd) return LimitResult::finite_value(QuadNum(Rat(0)));
    QuadNum dv = d.evaluate(s);
    if (kn == kd) return LimitResult::finite_value(n.evaluate(s) / dv);
    return LimitResult::pole(kd - kn);
}

} // namespace pinchuk
