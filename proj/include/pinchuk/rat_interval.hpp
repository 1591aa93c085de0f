#pragma once

// Closed rational intervals, used for exact sign determination of algebraic
// values: evaluate a polynomial over an interval enclosure and shrink the
// enclosure until the sign is forced.

#include <algorithm>

#include "rat.hpp"

namespace pinchuk {

struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    RatInterval(Rat a, Rat b) : lo(std::move(a)), hi(std::move(b)) {
        if (lo > hi) throw domain_error("interval endpoints out of order");
    }
    static RatInterval point(const Rat& v) { return RatInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return sign(lo) <= 0 && sign(hi) >= 0; }
    bool is_point() const { return lo == hi; }

    // sign if forced by the enclosure, 0 only when the interval is the point 0
    std::optional<int> forced_sign() const {
        if (sign(lo) > 0) return 1;
        if (sign(hi) < 0) return -1;
        if (lo == 0 && hi == 0) return 0;
        return std::nullopt;
    }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo + b.lo, a.hi + b.hi);
}

inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return RatInterval(a.lo - b.hi, a.hi - b.lo);
}

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return RatInterval(std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4)));
}

inline RatInterval operator+(const RatInterval& a, const Rat& c) { return a + RatInterval::point(c); }
inline RatInterval operator*(const RatInterval& a, const Rat& c) { return a * RatInterval::point(c); }

inline bool disjoint(const RatInterval& a, const RatInterval& b) {
    return a.hi < b.lo || b.hi < a.lo;
}

inline bool overlaps(const RatInterval& a, const RatInterval& b) { return !disjoint(a, b); }

} // namespace pinchuk
