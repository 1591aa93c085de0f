#pragma once

// Dense exact univariate polynomials, coefficients lowest-first. The highest
// stored coefficient is nonzero; the zero polynomial stores nothing and has
// degree -1 by convention.

#include <utility>
#include <vector>

#include "mpoly.hpp"
#include "quadnum.hpp"
#include "rat.hpp"
#include "rat_interval.hpp"

namespace pinchuk {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static UniPoly constant(const Rat& v) { return UniPoly(std::vector<Rat>{v}); }

    // the monomial c*T^k
    static UniPoly monomial(const Rat& c, std::size_t k) {
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = c;
        return UniPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const {
        if (c_.empty()) throw domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend UniPoly operator-(const UniPoly& a) {
        std::vector<Rat> v(a.c_);
        for (auto& x : v) x = -x;
        return UniPoly(std::move(v));
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(v));
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(std::move(v));
    }

    friend UniPoly operator*(const UniPoly& a, const Rat& s) {
        std::vector<Rat> v(a.c_);
        for (auto& x : v) x *= s;
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const Rat& s, const UniPoly& a) { return a * s; }

    UniPoly pow(unsigned e) const {
        UniPoly acc = constant(1), base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    Rat evaluate(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    QuadNum evaluate(const QuadNum& x) const {
        QuadNum acc{Rat(0)};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + QuadNum(c_[i]);
        return acc;
    }

    RatInterval evaluate(const RatInterval& x) const {
        RatInterval acc = RatInterval::point(Rat(0));
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rat> v(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return UniPoly(std::move(v));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rat(1) / leading());
    }

    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw domain_error("division by the zero polynomial");
        std::vector<Rat> rem(a.c_);
        const int db = b.degree();
        std::vector<Rat> quo;
        if (static_cast<int>(rem.size()) - 1 >= db)
            quo.assign(rem.size() - static_cast<std::size_t>(db), Rat(0));
        for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
            Rat q = rem[static_cast<std::size_t>(i)] / b.c_.back();
            if (q == 0) continue;
            quo[static_cast<std::size_t>(i - db)] = q;
            for (int j = 0; j <= db; ++j)
                rem[static_cast<std::size_t>(i - db + j)] -= q * b.c_[static_cast<std::size_t>(j)];
        }
        return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
    }

    // quotient when the division is known to be exact
    friend UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw domain_error("division was not exact");
        return q;
    }

    std::string to_string(const std::string& var = "T") const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            Rat ac = rat_abs(c_[i]);
            if (first) {
                if (c_[i] < 0) out += "-";
                first = false;
            } else {
                out += c_[i] < 0 ? " - " : " + ";
            }
            if (i == 0) out += rat_to_string(ac);
            else {
                if (ac != 1) out += rat_to_string(ac) + " * ";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

private:
    std::vector<Rat> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// monic gcd, with gcd(0, 0) = 0
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = divmod(f, g).second;
        f = std::move(g);
        g = r.is_zero() ? r : r.monic();
    }
    return f.is_zero() ? f : f.monic();
}

// g = gcd(a, b) monic together with u, v such that u*a + v*b = g
struct ExtGcd {
    UniPoly g, u, v;
};

inline ExtGcd ext_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly u0 = UniPoly::constant(1), u1;
    UniPoly v0, v1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    Rat s = Rat(1) / r0.leading();
    return {r0 * s, u0 * s, v0 * s};
}

inline bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

// largest squarefree divisor, monic
inline UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw domain_error("zero polynomial has no squarefree part");
    if (f.degree() == 0) return UniPoly::constant(1);
    return exact_div(f.monic(), gcd(f, f.derivative())).monic();
}

// squarefree decomposition: list of (factor, multiplicity) with distinct
// multiplicities, factors monic squarefree and pairwise coprime, product of
// factor^multiplicity equal to the monic input
inline std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) throw domain_error("zero polynomial has no squarefree decomposition");
    std::vector<std::pair<UniPoly, unsigned>> out;
    UniPoly fm = f.monic();
    if (fm.degree() == 0) return out;
    UniPoly g = gcd(fm, fm.derivative());
    UniPoly w = exact_div(fm, g);
    UniPoly y = exact_div(fm.derivative(), g);
    UniPoly z = y - w.derivative();
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly ai = gcd(w, z);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        w = exact_div(w, ai);
        z = exact_div(z, ai) - w.derivative();
        ++i;
    }
    return out;
}

// degree <= points-1 polynomial through the given (x, y) pairs; x values distinct
inline UniPoly interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].first == pts[j].first) throw domain_error("repeated interpolation node");
    UniPoly acc;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        UniPoly li = UniPoly::constant(1);
        Rat denom(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (j == i) continue;
            li = li * UniPoly({-pts[j].first, Rat(1)});
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + li * (pts[i].second / denom);
    }
    return acc;
}

// bridges to the multivariate layer

inline UniPoly to_unipoly(const MPoly& p) {
    if (p.universe().size() != 1)
        throw domain_error("expected a one-variable universe");
    const std::string& v = p.universe()[0];
    int d = p.degree_in(v);
    std::vector<Rat> c(static_cast<std::size_t>(d + 1), Rat(0));
    for (const auto& [m, coef] : p.terms()) c[m[0]] = coef;
    return UniPoly(std::move(c));
}

inline MPoly to_mpoly(const UniPoly& p, Universe u, const std::string& name) {
    MPoly x = MPoly::var(u, name);
    MPoly acc = MPoly::zero(u);
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * x + MPoly::constant(u, p.coeffs()[i]);
    return acc;
}

// S(P) for univariate S and multivariate P, Horner style
inline MPoly compose(const UniPoly& s, const MPoly& p) {
    MPoly acc = MPoly::zero(p.universe());
    for (std::size_t i = s.coeffs().size(); i-- > 0;)
        acc = acc * p + MPoly::constant(p.universe(), s.coeffs()[i]);
    return acc;
}

inline UniPoly compose(const UniPoly& s, const UniPoly& p) {
    UniPoly acc;
    for (std::size_t i = s.coeffs().size(); i-- > 0;)
        acc = acc * p + UniPoly::constant(s.coeffs()[i]);
    return acc;
}

} // namespace pinchuk
