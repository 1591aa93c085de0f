#pragma once

// Sparse exact multivariate polynomials over a fixed ordered variable
// universe. Terms live in a map keyed by exponent tuple, so every polynomial
// is canonical by construction: no zero coefficients, lexicographic key
// order. Two polynomials may be combined only when their universes agree
// exactly (same names, same order).

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "rat.hpp"

namespace pinchuk {

using Monomial = std::vector<unsigned>;
using Universe = std::vector<std::string>;

inline unsigned monomial_degree(const Monomial& m) {
    unsigned d = 0;
    for (unsigned e : m) d += e;
    return d;
}

class MPoly {
public:
    using TermMap = std::map<Monomial, Rat>;

    MPoly() = default;
    explicit MPoly(Universe u) : universe_(std::move(u)) { check_universe(universe_); }

    static MPoly zero(Universe u) { return MPoly(std::move(u)); }

    static MPoly constant(Universe u, const Rat& c) {
        MPoly p(std::move(u));
        if (c != 0) p.terms_[Monomial(p.universe_.size(), 0)] = c;
        return p;
    }

    static MPoly var(Universe u, const std::string& name, unsigned power = 1) {
        MPoly p(std::move(u));
        Monomial m(p.universe_.size(), 0);
        m[p.index_of(name)] = power;
        p.terms_[m] = 1;
        return p;
    }

    const Universe& universe() const { return universe_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && monomial_degree(terms_.begin()->first) == 0);
    }

    Rat constant_value() const {
        if (terms_.empty()) return 0;
        if (!is_constant()) throw domain_error("polynomial is not constant");
        return terms_.begin()->second;
    }

    // total degree; empty for the zero polynomial (minus infinity)
    std::optional<unsigned> total_degree() const {
        if (terms_.empty()) return std::nullopt;
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
        return d;
    }

    int degree_in(const std::string& name) const {
        std::size_t i = index_of(name);
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[i]));
        return d;
    }

    friend MPoly operator-(const MPoly& a) {
        MPoly r(a.universe_);
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r(a.universe_);
        r.terms_ = a.terms_;
        for (const auto& [m, c] : b.terms_) {
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) r.terms_[m] = c;
            else {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
        return r;
    }

    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }

    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        check_same(a, b);
        MPoly r(a.universe_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    Rat c = ca * cb;
                    if (c != 0) r.terms_.emplace(std::move(m), std::move(c));
                } else {
                    it->second += ca * cb;
                    if (it->second == 0) r.terms_.erase(it);
                }
            }
        return r;
    }

    friend MPoly operator*(const MPoly& a, const Rat& c) { return a * constant(a.universe_, c); }
    friend MPoly operator*(const Rat& c, const MPoly& a) { return a * c; }
    friend MPoly operator+(const MPoly& a, const Rat& c) { return a + constant(a.universe_, c); }
    friend MPoly operator-(const MPoly& a, const Rat& c) { return a - constant(a.universe_, c); }

    MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
    MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
    MPoly& operator*=(const MPoly& b) { return *this = *this * b; }

    MPoly pow(unsigned e) const {
        MPoly acc = constant(universe_, 1);
        MPoly base = *this;
        while (e) {
            if (e & 1u) acc = acc * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.universe_ == b.universe_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    MPoly derivative(const std::string& name) const {
        std::size_t i = index_of(name);
        MPoly r(universe_);
        for (const auto& [m, c] : terms_) {
            if (m[i] == 0) continue;
            Monomial dm = m;
            dm[i] -= 1;
            r.terms_[dm] = c * m[i];
        }
        return r;
    }

    // substitute every universe variable; bindings share one target universe
    MPoly substitute(const std::map<std::string, MPoly>& bindings) const {
        if (universe_.empty()) {
            if (!bindings.empty()) throw domain_error("binding for unknown variable");
            throw domain_error("substitution into empty universe needs a target universe");
        }
        for (const auto& [name, val] : bindings) index_of(name);
        const Universe* target = nullptr;
        for (const auto& name : universe_) {
            auto it = bindings.find(name);
            if (it == bindings.end()) throw domain_error("unbound variable '" + name + "'");
            if (!target) target = &it->second.universe();
            else if (*target != it->second.universe())
                throw universe_mismatch("substitution targets disagree on universe");
        }
        std::vector<std::vector<MPoly>> powers(universe_.size());
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            unsigned maxe = 0;
            for (const auto& [m, c] : terms_) maxe = std::max(maxe, m[i]);
            powers[i].reserve(maxe + 1);
            powers[i].push_back(MPoly::constant(*target, 1));
            const MPoly& b = bindings.at(universe_[i]);
            for (unsigned e = 1; e <= maxe; ++e) powers[i].push_back(powers[i].back() * b);
        }
        MPoly r(*target);
        for (const auto& [m, c] : terms_) {
            MPoly t = MPoly::constant(*target, c);
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) t = t * powers[i][m[i]];
            r = r + t;
        }
        return r;
    }

    Rat evaluate(const std::map<std::string, Rat>& bindings) const {
        for (const auto& [name, val] : bindings) index_of(name);
        std::vector<Rat> vals;
        vals.reserve(universe_.size());
        for (const auto& name : universe_) {
            auto it = bindings.find(name);
            if (it == bindings.end()) throw domain_error("unbound variable '" + name + "'");
            vals.push_back(it->second);
        }
        Rat r(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                if (m[i]) t *= rat_pow(vals[i], m[i]);
            r += t;
        }
        return r;
    }

    // coefficients of powers of `name`, lowest first, over the shrunk universe;
    // empty list for the zero polynomial
    std::vector<MPoly> collect(const std::string& name) const {
        std::size_t i = index_of(name);
        Universe shrunk;
        for (std::size_t j = 0; j < universe_.size(); ++j)
            if (j != i) shrunk.push_back(universe_[j]);
        int d = degree_in(name);
        std::vector<MPoly> out(static_cast<std::size_t>(d + 1), MPoly(shrunk));
        for (const auto& [m, c] : terms_) {
            Monomial rm;
            rm.reserve(m.size() - 1);
            for (std::size_t j = 0; j < m.size(); ++j)
                if (j != i) rm.push_back(m[j]);
            out[m[i]].terms_[rm] = c;
        }
        return out;
    }

    // same polynomial over a universe containing at least the old variables
    MPoly embedded(const Universe& bigger) const {
        check_universe(bigger);
        std::vector<std::size_t> where(universe_.size());
        for (std::size_t i = 0; i < universe_.size(); ++i) {
            auto it = std::find(bigger.begin(), bigger.end(), universe_[i]);
            if (it == bigger.end())
                throw universe_mismatch("variable '" + universe_[i] + "' missing from target universe");
            where[i] = static_cast<std::size_t>(it - bigger.begin());
        }
        MPoly r(bigger);
        for (const auto& [m, c] : terms_) {
            Monomial bm(bigger.size(), 0);
            for (std::size_t i = 0; i < m.size(); ++i) bm[where[i]] = m[i];
            r.terms_[bm] = c;
        }
        return r;
    }

    std::size_t term_count() const { return terms_.size(); }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        // highest terms first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rat ac = rat_abs(c);
            if (first) {
                if (c < 0) out += "-";
                first = false;
            } else {
                out += c < 0 ? " - " : " + ";
            }
            std::string mono = monomial_string(m);
            if (mono.empty()) out += rat_to_string(ac);
            else if (ac == 1) out += mono;
            else out += rat_to_string(ac) + " * " + mono;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

private:
    Universe universe_;
    TermMap terms_;

    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < universe_.size(); ++i)
            if (universe_[i] == name) return i;
        throw domain_error("unknown variable '" + name + "'");
    }

    static void check_universe(const Universe& u) {
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (u[i].empty()) throw domain_error("empty variable name");
            for (std::size_t j = i + 1; j < u.size(); ++j)
                if (u[i] == u[j]) throw domain_error("duplicate variable '" + u[i] + "'");
        }
    }

    static void check_same(const MPoly& a, const MPoly& b) {
        if (a.universe_ != b.universe_)
            throw universe_mismatch("operands live over different universes");
    }

    std::string monomial_string(const Monomial& m) const {
        std::string s;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!s.empty()) s += " ";
            s += universe_[i];
            if (m[i] > 1) s += "^" + std::to_string(m[i]);
        }
        return s;
    }
};

// jac(p, q) = dp/dx * dq/dy - dp/dy * dq/dx
inline MPoly jacobian2(const MPoly& p, const MPoly& q,
                       const std::string& x, const std::string& y) {
    if (p.universe() != q.universe())
        throw universe_mismatch("jacobian operands live over different universes");
    return p.derivative(x) * q.derivative(y) - p.derivative(y) * q.derivative(x);
}

} // namespace pinchuk
