#pragma once

// Numbers of the form a + b*sqrt(d) with a, b, d rational and d >= 0 not a
// perfect square (b = 0 or d = 0 collapses to a plain rational). Enough for
// pole locations of level-set parametrizations, whose defining equations are
// quadratic. All comparisons are exact.

#include <string>

#include "rat.hpp"
#include "rat_interval.hpp"

namespace pinchuk {

class QuadNum {
public:
    QuadNum() : a_(0), b_(0), d_(0) {}
    QuadNum(Rat rational) : a_(std::move(rational)), b_(0), d_(0) {}
    QuadNum(int rational) : a_(rational), b_(0), d_(0) {}

    QuadNum(Rat a, Rat b, Rat d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ < 0) throw domain_error("negative radicand");
        normalize();
    }

    static QuadNum sqrt_of(const Rat& r) {
        if (r < 0) throw domain_error("negative radicand");
        return QuadNum(Rat(0), Rat(1), r);
    }

    const Rat& rational_part() const { return a_; }
    const Rat& coeff() const { return b_; }
    const Rat& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    Rat as_rational() const {
        if (!is_rational()) throw domain_error("value is irrational");
        return a_;
    }

    QuadNum conjugate() const { return QuadNum(a_, -b_, d_); }

    friend QuadNum operator-(const QuadNum& x) { return QuadNum(-x.a_, -x.b_, x.d_); }

    friend QuadNum operator+(const QuadNum& x, const QuadNum& y) {
        check_compatible(x, y);
        return QuadNum(x.a_ + y.a_, x.b_ + y.b_, x.b_ == 0 ? y.d_ : x.d_);
    }
    friend QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }

    friend QuadNum operator*(const QuadNum& x, const QuadNum& y) {
        check_compatible(x, y);
        Rat d = x.b_ == 0 ? y.d_ : x.d_;
        return QuadNum(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    friend QuadNum operator/(const QuadNum& x, const QuadNum& y) {
        if (y.is_zero()) throw domain_error("division by zero");
        // 1/(a+b*sqrt(d)) = (a-b*sqrt(d)) / (a^2-b^2 d); norm nonzero since d is not a square
        Rat norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
        QuadNum inv(y.a_ / norm, -y.b_ / norm, y.d_);
        return x * inv;
    }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // exact sign: compare a^2 with b^2 d on the side the signs dictate
    int signum() const {
        if (b_ == 0) return sign(a_);
        int sb = sign(b_);
        if (a_ == 0) return sb;
        int sa = sign(a_);
        if (sa == sb) return sa;
        // opposite signs: |a| vs |b| sqrt(d)
        int cmp = (a_ * a_ > b_ * b_ * d_) ? 1 : (a_ * a_ < b_ * b_ * d_ ? -1 : 0);
        return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
    }

    friend bool operator==(const QuadNum& x, const QuadNum& y) {
        if (x.b_ == 0 && y.b_ == 0) return x.a_ == y.a_;
        check_compatible(x, y);
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }
    friend bool operator<(const QuadNum& x, const QuadNum& y) { return (x - y).signum() < 0; }

    // rational enclosure of width <= eps, by bisecting toward sqrt(d)
    RatInterval enclosure(const Rat& eps) const {
        if (b_ == 0) return RatInterval::point(a_);
        RatInterval s = sqrt_enclosure(d_, eps / (2 * rat_abs(b_)));
        RatInterval v = s * b_ + RatInterval::point(a_);
        return v;
    }

    std::string to_string() const {
        if (b_ == 0) return rat_to_string(a_);
        std::string s;
        if (a_ != 0) s += rat_to_string(a_) + (b_ > 0 ? " + " : " - ");
        else if (b_ < 0) s += "-";
        Rat ab = rat_abs(b_);
        if (ab != 1) s += rat_to_string(ab) + "*";
        s += "sqrt(" + rat_to_string(d_) + ")";
        return s;
    }

    std::string approx(int digits = 12) const {
        if (b_ == 0) return decimal_approx(a_, digits);
        Rat eps = Rat(1) / int_pow(10, static_cast<unsigned long>(digits + 6));
        Rat scale = rat_abs(a_) + rat_abs(b_) * (1 + d_);
        return decimal_approx(enclosure(eps * std::max(Rat(1), scale)).mid(), digits);
    }

private:
    Rat a_, b_, d_;

    void normalize() {
        if (b_ == 0 || d_ == 0) {
            b_ = 0;
            d_ = 0;
            return;
        }
        if (auto r = exact_sqrt(d_)) {
            a_ += b_ * *r;
            b_ = 0;
            d_ = 0;
        }
    }

    static void check_compatible(const QuadNum& x, const QuadNum& y) {
        if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_)
            throw domain_error("mixed radicands " + rat_to_string(x.d_) + " and " + rat_to_string(y.d_));
    }

    // [lo, hi] containing sqrt(v) with hi - lo <= eps, v > 0 not a square
    static RatInterval sqrt_enclosure(const Rat& v, const Rat& eps) {
        Rat lo(0), hi = v < 1 ? Rat(1) : v;
        while (hi - lo > eps) {
            Rat m = (lo + hi) / 2;
            if (m * m <= v) lo = m;
            else hi = m;
        }
        return RatInterval(lo, hi);
    }
};

} // namespace pinchuk
