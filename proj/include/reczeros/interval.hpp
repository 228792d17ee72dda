#ifndef RECZEROS_INTERVAL_HPP
#define RECZEROS_INTERVAL_HPP

#include "reczeros/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace reczeros {

/// Closed real enclosure [lo, hi] with rational endpoints.
///
/// Arithmetic is exact on the endpoints; callers bound endpoint growth with
/// `rounded(bits)`, which widens outward to about `bits` significant bits.
class IntervalReal {
public:
    IntervalReal() = default;
    explicit IntervalReal(Rational point) : lo_(point), hi_(std::move(point)) {}
    IntervalReal(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
    {
        if (lo_ > hi_)
            throw std::invalid_argument("interval with lo > hi");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains(const IntervalReal& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool overlaps(const IntervalReal& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }

    /// +1 / -1 when the whole interval is strictly on one side of zero, else 0.
    int certain_sign() const
    {
        if (lo_ > 0)
            return 1;
        if (hi_ < 0)
            return -1;
        return 0;
    }

    IntervalReal rounded(long bits) const
    {
        return IntervalReal(round_down(lo_, bits), round_up(hi_, bits));
    }

    IntervalReal abs() const
    {
        if (lo_ >= 0)
            return *this;
        if (hi_ <= 0)
            return IntervalReal(-hi_, -lo_);
        return IntervalReal(Rational(0), std::max(Rational(-lo_), hi_));
    }

    friend IntervalReal operator+(const IntervalReal& a, const IntervalReal& b)
    {
        return IntervalReal(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend IntervalReal operator-(const IntervalReal& a, const IntervalReal& b)
    {
        return IntervalReal(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend IntervalReal operator-(const IntervalReal& a) { return IntervalReal(-a.hi_, -a.lo_); }
    friend IntervalReal operator*(const IntervalReal& a, const IntervalReal& b)
    {
        if (a.lo_ >= 0 && b.lo_ >= 0)
            return IntervalReal(a.lo_ * b.lo_, a.hi_ * b.hi_);
        Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return IntervalReal(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
    }
    friend IntervalReal operator/(const IntervalReal& a, const IntervalReal& b)
    {
        if (b.certain_sign() == 0)
            throw std::domain_error("interval division by an interval containing zero");
        return a * IntervalReal(1 / b.hi_, 1 / b.lo_);
    }
    friend IntervalReal operator*(const IntervalReal& a, const Rational& c)
    {
        if (c >= 0)
            return IntervalReal(a.lo_ * c, a.hi_ * c);
        return IntervalReal(a.hi_ * c, a.lo_ * c);
    }
    friend IntervalReal operator*(const Rational& c, const IntervalReal& a) { return a * c; }
    friend IntervalReal operator+(const IntervalReal& a, const Rational& c)
    {
        return IntervalReal(a.lo_ + c, a.hi_ + c);
    }
    friend IntervalReal operator-(const IntervalReal& a, const Rational& c)
    {
        return IntervalReal(a.lo_ - c, a.hi_ - c);
    }

    /// Strict ordering that holds for every pair of points.
    friend bool certainly_less(const IntervalReal& a, const IntervalReal& b) { return a.hi_ < b.lo_; }
    friend bool certainly_less(const IntervalReal& a, const Rational& b) { return a.hi_ < b; }
    friend bool certainly_less(const Rational& a, const IntervalReal& b) { return a < b.lo_; }

    friend bool operator==(const IntervalReal&, const IntervalReal&) = default;

private:
    Rational lo_{0};
    Rational hi_{0};
};

/// x^e by repeated squaring, rounding every intermediate to `bits`.
/// bits <= 0 keeps everything exact.
inline IntervalReal pow(const IntervalReal& x, unsigned long e, long bits = 0)
{
    auto fit = [bits](const IntervalReal& v) { return bits > 0 ? v.rounded(bits) : v; };
    if (x.lo() >= 0) {
        IntervalReal result(Rational(1));
        IntervalReal base = x;
        while (e > 0) {
            if (e & 1)
                result = fit(result * base);
            e >>= 1;
            if (e)
                base = fit(base * base);
        }
        return result;
    }
    IntervalReal mag = pow(x.abs(), e, bits);
    if (e % 2 == 0)
        return mag;
    if (x.hi() <= 0)
        return -mag;
    // straddles zero, odd power: monotone
    IntervalReal l = pow(IntervalReal(Rational(-x.lo())), e, bits);
    IntervalReal h = pow(IntervalReal(x.hi()), e, bits);
    return IntervalReal(-l.hi(), h.hi());
}

namespace detail {

// Rational y >= c^(1/n) for c > 0, by Newton from above on y^n - c.
inline Rational nth_root_upper(const Rational& c, unsigned n, long bits)
{
    // start above the root: 2^ceil((log2 c + 1)/n) + 1
    long lg = approx_log2(c) + 2;
    Rational y = pow2(lg >= 0 ? (lg + static_cast<long>(n) - 1) / static_cast<long>(n) : lg / static_cast<long>(n)) + 1;
    while (pow(y, n) < c)
        y *= 2;
    Rational target = pow2(-bits);
    for (int iter = 0; iter < 10000; ++iter) {
        // y_next = y - (y^n - c) / (n y^(n-1)); convexity keeps y_next >= root
        Rational yn1 = pow(y, n - 1);
        Rational next = y - (yn1 * y - c) / (yn1 * n);
        next = round_up(next, bits + 8);
        if (pow(next, n) < c) // rounding can never undershoot, but stay certified
            next = y;
        Rational step = y - next;
        y = next;
        if (step <= target * y)
            break;
    }
    return y;
}

} // namespace detail

/// Enclosure of v^(1/n) for an interval v with v.lo() > 0.
inline IntervalReal nth_root(const IntervalReal& v, unsigned n, long bits)
{
    if (n == 0)
        throw std::invalid_argument("zeroth root");
    if (v.lo() <= 0)
        throw std::domain_error("nth_root needs a positive enclosure");
    if (n == 1)
        return v;
    Rational up = detail::nth_root_upper(v.hi(), n, bits);
    Rational up_lo = detail::nth_root_upper(v.lo(), n, bits);
    // up_lo >= root(v.lo), so v.lo / up_lo^(n-1) <= root(v.lo)
    Rational down = v.lo() / pow(up_lo, n - 1);
    return IntervalReal(round_down(down, bits + 4), up);
}

inline std::string to_string(const IntervalReal& x)
{
    return "[" + to_string(x.lo()) + ", " + to_string(x.hi()) + "]";
}

} // namespace reczeros

#endif // RECZEROS_INTERVAL_HPP
