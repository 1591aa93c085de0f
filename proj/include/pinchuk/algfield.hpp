#pragma once

// Arithmetic in Q[T]/(g) for a squarefree modulus g with a selected real root.
// The modulus need not be irreducible: inversion runs the extended Euclidean
// algorithm and, when it meets a zero divisor, splits the modulus and keeps
// the factor owning the selected root. Elements are reduced polynomials and
// stay valid across such splits.

#include <map>
#include <string>
#include <vector>

#include "mpoly.hpp"
#include "rat.hpp"
#include "rat_interval.hpp"
#include "unipoly.hpp"
#include "uniroots.hpp"

namespace pinchuk {

class NumberField {
public:
    using Elem = UniPoly;

    explicit NumberField(AlgNum root) : root_(std::move(root)) {
        root_.defpoly = root_.defpoly.monic();
        if (root_.defpoly.degree() < 1) throw domain_error("modulus must be nonconstant");
        if (!is_squarefree(root_.defpoly)) throw domain_error("modulus must be squarefree");
        if (!root_.iv.is_point()) {
            if (root_.defpoly.evaluate(root_.iv.lo) == 0 || root_.defpoly.evaluate(root_.iv.hi) == 0)
                throw domain_error("interval endpoints must not be roots");
            if (sturm_count(root_.defpoly, root_.iv.lo, root_.iv.hi) != 1)
                throw domain_error("interval does not isolate a single root");
        } else if (root_.defpoly.evaluate(root_.iv.lo) != 0) {
            throw domain_error("point is not a root of the modulus");
        }
    }

    const UniPoly& modulus() const { return root_.defpoly; }
    const AlgNum& root() const { return root_; }

    Elem reduce(const UniPoly& a) const { return divmod(a, root_.defpoly).second; }
    Elem from_rat(const Rat& c) const { return UniPoly::constant(c); }
    Elem generator() const { return reduce(UniPoly({Rat(0), Rat(1)})); }

    Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return reduce(a * b); }

    bool is_zero(const Elem& a) const {
        Elem r = reduce(a);
        if (r.is_zero()) return true;
        return sign_at(r, root_) == 0;
    }

    // may shrink the modulus to the factor owning the root
    Elem inv(const Elem& a) {
        for (;;) {
            Elem r = reduce(a);
            if (r.is_zero()) throw domain_error("inverse of zero");
            ExtGcd e = ext_gcd(r, root_.defpoly);
            if (e.g.degree() == 0) return reduce(e.u);
            shrink_to_factor_with_root(e.g);
        }
    }

    Elem div(const Elem& a, const Elem& b) { return mul(a, inv(b)); }

    Elem pow(const Elem& a, unsigned e) const {
        Elem acc = from_rat(1), base = reduce(a);
        while (e) {
            if (e & 1u) acc = mul(acc, base);
            e >>= 1;
            if (e) base = mul(base, base);
        }
        return acc;
    }

    int sign_of(const Elem& a) const { return sign_at(reduce(a), root_); }

    // value of a multivariate polynomial with all variables bound in the field
    Elem eval_mpoly(const MPoly& p, const std::map<std::string, Elem>& bindings) const {
        const Universe& u = p.universe();
        std::vector<const Elem*> bound(u.size(), nullptr);
        for (std::size_t i = 0; i < u.size(); ++i) {
            auto it = bindings.find(u[i]);
            if (it == bindings.end()) throw domain_error("unbound variable '" + u[i] + "'");
            bound[i] = &it->second;
        }
        std::vector<std::vector<Elem>> powers(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            unsigned maxe = 0;
            for (const auto& [m, c] : p.terms()) maxe = std::max(maxe, m[i]);
            powers[i].push_back(from_rat(1));
            for (unsigned k = 1; k <= maxe; ++k)
                powers[i].push_back(mul(powers[i].back(), *bound[i]));
        }
        Elem acc;
        for (const auto& [m, c] : p.terms()) {
            Elem t = from_rat(c);
            for (std::size_t i = 0; i < u.size(); ++i)
                if (m[i]) t = mul(t, powers[i][m[i]]);
            acc = add(acc, t);
        }
        return acc;
    }

    // monic minimal polynomial of the residue class of a, by the first linear
    // dependence among its powers; squarefree because the modulus is
    UniPoly coset_minimal_polynomial(const Elem& a) const {
        const std::size_t D = static_cast<std::size_t>(root_.defpoly.degree());
        struct Row {
            std::vector<Rat> vec;   // power of a, as coordinates
            std::vector<Rat> combo; // in terms of lower powers
            std::size_t pivot;
        };
        std::vector<Row> rows;
        Elem power = from_rat(1);
        for (std::size_t k = 0;; ++k) {
            if (k > 0) power = mul(power, a);
            std::vector<Rat> w(D, Rat(0));
            for (int i = 0; i <= power.degree(); ++i)
                w[static_cast<std::size_t>(i)] = power.coeff(static_cast<std::size_t>(i));
            std::vector<Rat> combo(k + 1, Rat(0));
            combo[k] = 1;
            for (const Row& r : rows) {
                if (w[r.pivot] == 0) continue;
                Rat factor = w[r.pivot] / r.vec[r.pivot];
                for (std::size_t i = 0; i < D; ++i) w[i] -= factor * r.vec[i];
                for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] -= factor * r.combo[i];
            }
            std::size_t pivot = D;
            for (std::size_t i = 0; i < D; ++i)
                if (w[i] != 0) { pivot = i; break; }
            if (pivot == D) return UniPoly(std::move(combo));
            rows.push_back(Row{std::move(w), std::move(combo), pivot});
            if (k == D) throw identity_failure("no dependence among powers up to the field degree");
        }
    }

    // exact algebraic description of the value of a at the selected root;
    // degenerate interval when the isolation discovers the value is rational
    AlgNum value_of(const Elem& a) const {
        Elem r = reduce(a);
        if (r.degree() <= 0) return algnum_from_rat(r.is_zero() ? Rat(0) : r.coeff(0));
        UniPoly mu = coset_minimal_polynomial(r);
        if (mu.degree() == 1) return algnum_from_rat(-mu.coeff(0));
        auto candidates = isolate_real_roots_full(mu);
        RatInterval base = root_.iv;
        for (;;) {
            RatInterval j = r.evaluate(base);
            std::size_t hits = 0, which = 0;
            for (std::size_t i = 0; i < candidates.size(); ++i)
                if (overlaps(candidates[i].first.iv, j)) { hits++; which = i; }
            if (hits == 1) return candidates[which].first;
            detail::refine_step(root_.defpoly, base);
        }
    }

    std::string approx_of(const Elem& a, int digits = 12) const {
        Elem r = reduce(a);
        Rat eps = Rat(1) / int_pow(10, static_cast<unsigned long>(digits + 6));
        RatInterval base = root_.iv;
        RatInterval j = r.evaluate(base);
        while (j.width() > eps) {
            detail::refine_step(root_.defpoly, base);
            j = r.evaluate(base);
            if (base.is_point()) { j = RatInterval::point(r.evaluate(base.lo)); break; }
        }
        return decimal_approx(j.mid(), digits);
    }

private:
    AlgNum root_;

    void shrink_to_factor_with_root(const UniPoly& factor) {
        UniPoly other = exact_div(root_.defpoly, factor);
        const UniPoly& keep = owns_root(factor) ? factor : other;
        root_.defpoly = keep.monic();
    }

    bool owns_root(const UniPoly& g) const {
        if (g.degree() < 1) return false;
        if (root_.iv.is_point()) return g.evaluate(root_.iv.lo) == 0;
        auto chain = sturm_chain(g);
        return sign_variations(chain, root_.iv.lo) - sign_variations(chain, root_.iv.hi) > 0;
    }
};

} // namespace pinchuk
