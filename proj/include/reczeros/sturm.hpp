#ifndef RECZEROS_STURM_HPP
#define RECZEROS_STURM_HPP

// Exact real-root counting and isolation with Sturm chains over Z[x].

#include "reczeros/interval.hpp"
#include "reczeros/ratpoly.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace reczeros {

class NotSquarefree : public std::domain_error {
public:
    NotSquarefree() : std::domain_error("Sturm chain degenerates: polynomial is not squarefree") {}
};

/// Interval endpoint on the extended real line.
class Bound {
public:
    Bound(Rational x) : value_(std::move(x)) {}
    Bound(long x) : value_(Rational(x)) {}
    static Bound neg_inf() { return Bound(-1, Tag{}); }
    static Bound pos_inf() { return Bound(+1, Tag{}); }

    bool is_finite() const { return inf_ == 0; }
    int infinity() const { return inf_; }
    const Rational& value() const { return value_; }

    friend bool operator<(const Bound& a, const Bound& b)
    {
        if (a.inf_ != b.inf_)
            return a.inf_ < b.inf_;
        return a.inf_ == 0 && a.value_ < b.value_;
    }

private:
    struct Tag {};
    Bound(int inf, Tag) : inf_(inf) {}
    int inf_ = 0;
    Rational value_{0};
};

/// p, p', then sign-corrected negated pseudo-remainders, each primitive.
class SturmChain {
public:
    explicit SturmChain(const RatPoly& p) : SturmChain(zpoly::from_rational(p)) {}

    explicit SturmChain(ZPoly p)
    {
        zpoly::trim(p);
        if (p.empty())
            throw std::invalid_argument("Sturm chain of the zero polynomial");
        ZPoly d = zpoly::derivative(p);
        zpoly::make_primitive(d);
        chain_.push_back(std::move(p));
        if (d.empty())
            return;
        chain_.push_back(std::move(d));
        for (;;) {
            const ZPoly& a = chain_[chain_.size() - 2];
            const ZPoly& b = chain_.back();
            if (zpoly::degree(b) == 0)
                break;
            ZPoly r = zpoly::prem(a, b);
            if (r.empty())
                break;
            // prem = lc(b)^(da-db+1) * rem; want a positive multiple of -rem
            const long e = zpoly::degree(a) - zpoly::degree(b) + 1;
            const bool factor_negative = b.back() < 0 && (e % 2 == 1);
            if (!factor_negative)
                for (auto& c : r)
                    c = -c;
            zpoly::make_primitive(r);
            chain_.push_back(std::move(r));
        }
    }

    const std::vector<ZPoly>& polys() const { return chain_; }
    std::size_t size() const { return chain_.size(); }

    /// The first entry is a gcd of p and p' iff the last one has degree 0.
    bool squarefree() const { return zpoly::degree(chain_.back()) == 0; }

    int variations(const Bound& x) const
    {
        int count = 0;
        int prev = 0;
        for (const auto& s : chain_) {
            int v = sign_at(s, x);
            if (v == 0)
                continue;
            if (prev != 0 && v != prev)
                ++count;
            prev = v;
        }
        return count;
    }

    static int sign_at(const ZPoly& s, const Bound& x)
    {
        if (x.is_finite())
            return zpoly::sign_at(s, x.value());
        int l = sgn(s.back());
        if (x.infinity() < 0 && zpoly::degree(s) % 2 == 1)
            l = -l;
        return l;
    }

private:
    std::vector<ZPoly> chain_;
};

/// Number of distinct real roots in the open interval (a, b). p squarefree.
inline int sturm_count(const SturmChain& chain, const Bound& a, const Bound& b)
{
    if (!(a < b))
        throw std::invalid_argument("sturm_count needs a < b");
    if (!chain.squarefree())
        throw NotSquarefree();
    int n = chain.variations(a) - chain.variations(b); // counts (a, b]
    if (b.is_finite() && zpoly::sign_at(chain.polys().front(), b.value()) == 0)
        --n;
    return n;
}

inline int sturm_count(const RatPoly& p, const Bound& a, const Bound& b)
{
    return sturm_count(SturmChain(p), a, b);
}

/// Open isolating interval for a single real root.
struct RootBox {
    Rational lo;
    Rational hi;
    int sign_lo = 0;
    int sign_hi = 0;

    Rational width() const { return hi - lo; }
    IntervalReal enclosure() const { return IntervalReal(lo, hi); }
};

/// Power of two strictly above every root modulus (Cauchy bound).
inline Rational root_bound(const ZPoly& p)
{
    Rational m(0);
    const Rational l = abs(Rational(p.back()));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        Rational r = abs(Rational(p[i])) / l;
        if (r > m)
            m = r;
    }
    Rational b(1);
    while (b <= m + 1)
        b *= 2;
    return b;
}

namespace detail {

inline void isolate_rec(const SturmChain& chain, const Rational& lo, const Rational& hi, int count,
                        std::vector<RootBox>& out)
{
    if (count == 0)
        return;
    const ZPoly& p = chain.polys().front();
    if (count == 1) {
        int sl = zpoly::sign_at(p, lo), sh = zpoly::sign_at(p, hi);
        if (sl != 0 && sh != 0) {
            out.push_back(RootBox{lo, hi, sl, sh});
            return;
        }
    }
    // split at a non-root point near the middle
    static const long fractions[][2] = {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 4}, {2, 5}, {3, 5}};
    Rational mid;
    for (const auto& f : fractions) {
        mid = lo + (hi - lo) * make_rational(f[0], f[1]);
        if (zpoly::sign_at(p, mid) != 0)
            break;
    }
    if (zpoly::sign_at(p, mid) == 0) {
        // at most deg p roots: one of the next candidates is not a root
        for (long t = 6;; ++t) {
            mid = lo + (hi - lo) * make_rational(1, t);
            if (zpoly::sign_at(p, mid) != 0)
                break;
        }
    }
    int left = sturm_count(chain, Bound(lo), Bound(mid));
    isolate_rec(chain, lo, mid, left, out);
    isolate_rec(chain, mid, hi, count - left, out);
}

} // namespace detail

/// Disjoint isolating boxes, in increasing order, for the real roots of a
/// squarefree p in (a, b).
inline std::vector<RootBox> isolate_real_roots(const SturmChain& chain, const Bound& a, const Bound& b)
{
    int total = sturm_count(chain, a, b);
    std::vector<RootBox> out;
    if (total == 0)
        return out;
    const Rational rb = root_bound(chain.polys().front());
    Rational lo = a.is_finite() ? a.value() : Rational(-rb);
    Rational hi = b.is_finite() ? b.value() : rb;
    detail::isolate_rec(chain, lo, hi, total, out);
    return out;
}

inline std::vector<RootBox> isolate_real_roots(const RatPoly& p, const Bound& a, const Bound& b)
{
    return isolate_real_roots(SturmChain(p), a, b);
}

/// Bisect until width <= target. Signs at the endpoints are preserved.
inline RootBox refine_root(const ZPoly& p, RootBox box, const Rational& target)
{
    if (box.sign_lo == 0 || box.sign_hi == 0 || box.sign_lo == box.sign_hi)
        throw std::invalid_argument("refine_root needs a box with opposite nonzero endpoint signs");
    while (box.width() > target) {
        Rational mid = (box.lo + box.hi) / 2;
        int s = zpoly::sign_at(p, mid);
        if (s == 0) {
            // exact rational root: shrink symmetrically around it
            Rational r = target / 4;
            if (r > box.width() / 4)
                r = box.width() / 4;
            box.lo = mid - r;
            box.hi = mid + r;
            return box;
        }
        if (s == box.sign_lo)
            box.lo = mid;
        else
            box.hi = mid;
    }
    return box;
}

inline RootBox refine_root(const RatPoly& p, const RootBox& box, const Rational& target)
{
    return refine_root(zpoly::from_rational(p), box, target);
}

} // namespace reczeros

#endif // RECZEROS_STURM_HPP
