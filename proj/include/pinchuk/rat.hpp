#pragma once

// Exact rational scalars on top of GMP, plus parsing and deterministic
// decimal rendering. Nothing here ever rounds silently: approximations are
// opt-in through decimal_approx and carry a fixed digit budget.

#include <gmpxx.h>

#include <cstdlib>
#include <optional>
#include <string>

#include "error.hpp"

namespace pinchuk {

using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// strict [-]digits[/digits], canonicalized; anything else raises domain_error
inline Rat rat_from_string(const std::string& s) {
    std::size_t i = 0;
    const std::size_t n = s.size();
    auto fail = [&]() -> Rat { throw domain_error("bad rational literal: '" + s + "'"); };
    if (i < n && s[i] == '-') ++i;
    std::size_t num_begin = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_begin) return fail();
    if (i < n) {
        if (s[i] != '/') return fail();
        ++i;
        std::size_t den_begin = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == den_begin || i != n) return fail();
        if (s.find_first_not_of('0', den_begin) == std::string::npos)
            throw domain_error("zero denominator in rational literal: '" + s + "'");
    }
    Rat r(s);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// exact square root if the argument is a perfect rational square
inline std::optional<Rat> exact_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t()))
        return std::nullopt;
    Rat out;
    mpz_sqrt(out.get_num_mpz_t(), r.get_num_mpz_t());
    mpz_sqrt(out.get_den_mpz_t(), r.get_den_mpz_t());
    return out;
}

// Deterministic decimal with `digits` significant digits, round half away
// from zero, entirely in integer arithmetic. Falls back to scientific form
// when the decimal point would drift more than 15 places either way.
inline std::string decimal_approx(const Rat& v, int digits = 12) {
    if (digits < 1) throw domain_error("decimal_approx needs at least one digit");
    if (v == 0) return "0";
    const bool neg = v < 0;
    Int n = abs(v.get_num());
    Int d = v.get_den();

    // e = floor(log10(|v|)) by scaling
    long e;
    if (n >= d) {
        Int q = n / d;
        e = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10)) - 1; // exact or one too big
        if (e > 0 && int_pow(10, static_cast<unsigned long>(e)) > q) --e;
    } else {
        long k = 1;
        while (n * int_pow(10, static_cast<unsigned long>(k)) < d) ++k;
        e = -k;
    }

    // round(|v| * 10^(digits-1-e)) via integer division
    long shift = digits - 1 - e;
    Int num = n, den = d;
    if (shift >= 0) num *= int_pow(10, static_cast<unsigned long>(shift));
    else den *= int_pow(10, static_cast<unsigned long>(-shift));
    Int scaled = (2 * num + den) / (2 * den);

    std::string ds = scaled.get_str();
    if (static_cast<int>(ds.size()) > digits) { // rounding bumped 999.. to 1000..
        ds.pop_back();
        ++e;
    }

    std::string out;
    if (neg) out += '-';
    if (e >= 0 && e <= 15) {
        if (e + 1 >= static_cast<long>(ds.size())) {
            out += ds;
            out.append(static_cast<std::size_t>(e + 1 - static_cast<long>(ds.size())), '0');
        } else {
            out += ds.substr(0, static_cast<std::size_t>(e + 1));
            std::string frac = ds.substr(static_cast<std::size_t>(e + 1));
            while (!frac.empty() && frac.back() == '0') frac.pop_back();
            if (!frac.empty()) out += "." + frac;
        }
    } else if (e < 0 && e >= -15) {
        out += "0.";
        out.append(static_cast<std::size_t>(-e - 1), '0');
        std::string frac = ds;
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        out += frac;
    } else {
        out += ds.substr(0, 1);
        std::string frac = ds.substr(1);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
        out += "e" + std::to_string(e);
    }
    return out;
}

} // namespace pinchuk
