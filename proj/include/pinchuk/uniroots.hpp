#pragma once

// Exact real-root machinery for univariate polynomials: Sturm chains, root
// isolation with multiplicities, interval refinement, sign evaluation at an
// algebraic point, and a small-prime irreducibility test used for
// certificates. Everything is rational arithmetic; no floating point.

#include <cstdint>
#include <utility>
#include <vector>

#include "rat.hpp"
#include "rat_interval.hpp"
#include "unipoly.hpp"

namespace pinchuk {

// isolating interval for one real root; lo == hi marks an exact rational root
struct RootInterval {
    Rat lo, hi;
    unsigned multiplicity = 1;

    bool is_exact() const { return lo == hi; }
    RatInterval interval() const { return RatInterval(lo, hi); }
};

// real algebraic number: squarefree defining polynomial plus an isolating
// interval; degenerate interval for rational values
struct AlgNum {
    UniPoly defpoly;
    RatInterval iv;

    bool is_rational() const { return iv.is_point(); }
    Rat rational_value() const {
        if (!is_rational()) throw domain_error("value is not in a degenerate interval");
        return iv.lo;
    }
};

inline AlgNum algnum_from_rat(const Rat& r) {
    return AlgNum{UniPoly({-r, Rat(1)}), RatInterval::point(r)};
}

// 1 + max |a_i| / |a_n| strictly bounds every real root in absolute value
inline Rat cauchy_bound(const UniPoly& f) {
    if (f.is_zero()) throw domain_error("zero polynomial has no root bound");
    Rat m(0);
    for (std::size_t i = 0; i + 1 < f.coeffs().size(); ++i)
        m = std::max(m, rat_abs(f.coeffs()[i]));
    return 1 + m / rat_abs(f.leading());
}

// Sturm chain of a squarefree polynomial; remainders rescaled positively to
// keep coefficients small, which leaves all sign patterns intact
inline std::vector<UniPoly> sturm_chain(const UniPoly& f) {
    std::vector<UniPoly> chain;
    if (f.is_zero()) return chain;
    chain.push_back(f);
    if (f.degree() == 0) return chain;
    chain.push_back(f.derivative());
    while (!chain.back().is_zero()) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain.back();
        UniPoly r = divmod(a, b).second;
        if (r.is_zero()) break;
        chain.push_back(-r * (Rat(1) / rat_abs(r.leading())));
    }
    return chain;
}

inline int sign_variations(const std::vector<UniPoly>& chain, const Rat& x) {
    int v = 0, last = 0;
    for (const auto& p : chain) {
        int s = sign(p.evaluate(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

// distinct real roots of f in the open interval (a, b), counted on the
// squarefree part; endpoints must not be roots
inline int sturm_count(const UniPoly& f, const Rat& a, const Rat& b) {
    if (f.is_zero()) throw domain_error("zero polynomial");
    if (a >= b) throw domain_error("empty interval");
    UniPoly sf = squarefree_part(f);
    if (sf.evaluate(a) == 0 || sf.evaluate(b) == 0)
        throw domain_error("interval endpoint is a root");
    auto chain = sturm_chain(sf);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace detail {

// isolate the real roots of a squarefree polynomial; exact rational roots are
// split off and the isolation restarts on the cofactor
inline void isolate_squarefree(UniPoly g, std::vector<std::pair<UniPoly, RatInterval>>& out) {
    std::vector<Rat> exact;
    for (;;) {
        if (g.degree() <= 0) break;
        auto chain = sturm_chain(g);
        Rat B = cauchy_bound(g);
        std::vector<RatInterval> found;
        bool restart = false;
        struct Seg { Rat a, b; int va, vb; };
        std::vector<Seg> work;
        work.push_back({-B, B, sign_variations(chain, -B), sign_variations(chain, B)});
        while (!work.empty() && !restart) {
            Seg s = work.back();
            work.pop_back();
            int count = s.va - s.vb;
            if (count <= 0) continue;
            if (count == 1) {
                found.push_back(RatInterval(s.a, s.b));
                continue;
            }
            Rat m = (s.a + s.b) / 2;
            if (g.evaluate(m) == 0) {
                exact.push_back(m);
                g = exact_div(g, UniPoly({-m, Rat(1)}));
                restart = true;
                break;
            }
            int vm = sign_variations(chain, m);
            work.push_back({s.a, m, s.va, vm});
            work.push_back({m, s.b, vm, s.vb});
        }
        if (restart) continue;
        for (auto& iv : found) out.emplace_back(g, iv);
        break;
    }
    for (const auto& r : exact)
        out.emplace_back(UniPoly({-r, Rat(1)}), RatInterval::point(r));
}

// halve an isolating interval once; may collapse onto an exact rational root
inline void refine_step(const UniPoly& g, RatInterval& iv) {
    if (iv.is_point()) return;
    Rat m = iv.mid();
    Rat gm = g.evaluate(m);
    if (gm == 0) {
        iv = RatInterval::point(m);
        return;
    }
    if (sign(g.evaluate(iv.lo)) * sign(gm) < 0) iv = RatInterval(iv.lo, m);
    else iv = RatInterval(m, iv.hi);
}

} // namespace detail

// all real roots with multiplicities, as pairwise disjoint isolating
// intervals sorted in increasing root order
inline std::vector<std::pair<AlgNum, unsigned>> isolate_real_roots_full(const UniPoly& f) {
    if (f.is_zero()) throw domain_error("zero polynomial has every value as a root");
    std::vector<std::pair<AlgNum, unsigned>> roots;
    if (f.degree() == 0) return roots;
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        std::vector<std::pair<UniPoly, RatInterval>> isolated;
        detail::isolate_squarefree(factor, isolated);
        for (auto& [g, iv] : isolated) roots.push_back({AlgNum{g, iv}, mult});
    }
    // shrink until intervals are pairwise disjoint
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i < roots.size(); ++i)
            for (std::size_t j = i + 1; j < roots.size(); ++j)
                if (overlaps(roots[i].first.iv, roots[j].first.iv)) {
                    detail::refine_step(roots[i].first.defpoly, roots[i].first.iv);
                    detail::refine_step(roots[j].first.defpoly, roots[j].first.iv);
                    again = true;
                }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first.iv.lo < b.first.iv.lo; });
    return roots;
}

inline std::vector<RootInterval> isolate_real_roots(const UniPoly& f) {
    std::vector<RootInterval> out;
    for (const auto& [a, mult] : isolate_real_roots_full(f))
        out.push_back(RootInterval{a.iv.lo, a.iv.hi, mult});
    return out;
}

// shrink an isolating interval below eps without losing the root
inline AlgNum refine_root(const AlgNum& a, const Rat& eps) {
    if (eps <= 0) throw domain_error("refinement width must be positive");
    AlgNum r = a;
    while (r.iv.width() > eps) detail::refine_step(r.defpoly, r.iv);
    return r;
}

inline RootInterval refine_root(const UniPoly& f, const RootInterval& r, const Rat& eps) {
    UniPoly sf = squarefree_part(f);
    AlgNum a = refine_root(AlgNum{sf, r.interval()}, eps);
    return RootInterval{a.iv.lo, a.iv.hi, r.multiplicity};
}

// exact sign of f at an algebraic point
inline int sign_at(const UniPoly& f, const AlgNum& a) {
    if (f.is_zero()) return 0;
    if (a.is_rational()) return sign(f.evaluate(a.rational_value()));
    // shared roots with the defining polynomial make the sign exactly zero
    UniPoly g = gcd(f, a.defpoly);
    if (g.degree() > 0) {
        int inside = sign_variations(sturm_chain(g), a.iv.lo) -
                     sign_variations(sturm_chain(g), a.iv.hi);
        if (inside > 0) return 0;
    }
    AlgNum r = a;
    for (;;) {
        auto s = f.evaluate(r.iv).forced_sign();
        if (s) return *s;
        detail::refine_step(r.defpoly, r.iv);
        if (r.iv.is_point()) return sign(f.evaluate(r.iv.lo));
    }
}

inline std::string approx(const AlgNum& a, int digits = 12) {
    if (a.is_rational()) return decimal_approx(a.rational_value(), digits);
    Rat eps = Rat(1) / int_pow(10, static_cast<unsigned long>(digits + 6));
    return decimal_approx(refine_root(a, eps).iv.mid(), digits);
}

// ---- irreducibility over a small prime field ----

namespace detail {

using FpVec = std::vector<std::uint64_t>; // lowest first, normalized

inline void fp_normalize(FpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t fp_powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1u) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline FpVec fp_rem(FpVec a, const FpVec& m, std::uint64_t p) {
    fp_normalize(a);
    std::uint64_t inv_lead = fp_powmod(m.back(), p - 2, p);
    while (a.size() >= m.size()) {
        std::uint64_t q = a.back() * inv_lead % p;
        std::size_t off = a.size() - m.size();
        if (q)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[off + i] = (a[off + i] + p - q * m[i] % p) % p;
        a.pop_back();
        fp_normalize(a);
    }
    return a;
}

inline FpVec fp_mulmod(const FpVec& a, const FpVec& b, const FpVec& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpVec c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return fp_rem(std::move(c), m, p);
}

inline FpVec fp_ringpow(FpVec base, std::uint64_t e, const FpVec& m, std::uint64_t p) {
    FpVec acc{1};
    while (e) {
        if (e & 1u) acc = fp_mulmod(acc, base, m, p);
        base = fp_mulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

inline FpVec fp_gcd(FpVec a, FpVec b, std::uint64_t p) {
    fp_normalize(a);
    fp_normalize(b);
    while (!b.empty()) {
        FpVec r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace detail

// whether an integer-coefficient polynomial is irreducible modulo p, by the
// distinct-degree criterion: X^(p^n) = X in Fp[X]/(f) and X^(p^(n/l)) - X is
// coprime to f for every prime l dividing n
inline bool irreducible_mod_p(const UniPoly& f, std::uint64_t p) {
    if (f.is_zero()) throw domain_error("zero polynomial");
    for (const Rat& c : f.coeffs())
        if (!is_integer(c)) throw domain_error("coefficients must be integers");
    if (!detail::is_prime_u64(p)) throw domain_error("modulus is not prime");
    if (p >> 31) throw domain_error("prime too large");

    const int n = f.degree();
    detail::FpVec m(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        Int c = f.coeff(static_cast<std::size_t>(i)).get_num();
        m[static_cast<std::size_t>(i)] =
            mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p));
    }
    if (m.back() == 0) throw domain_error("leading coefficient vanishes mod p");
    if (n == 0) return false;
    if (n == 1) return true;

    // e[k] = X^(p^(k+1)) mod f
    std::vector<detail::FpVec> e;
    detail::FpVec x{0, 1};
    detail::FpVec cur = x;
    for (int k = 1; k <= n; ++k) {
        cur = detail::fp_ringpow(cur, p, m, p);
        e.push_back(cur);
    }
    detail::FpVec xr = detail::fp_rem(x, m, p);
    if (e.back() != xr) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) { lprime = false; break; }
        if (!lprime) continue;
        detail::FpVec diff = e[static_cast<std::size_t>(n / l - 1)];
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        detail::fp_normalize(diff);
        detail::FpVec g = detail::fp_gcd(diff, m, p);
        if (g.size() > 1) return false;
    }
    return true;
}

} // namespace pinchuk
