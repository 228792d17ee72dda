#ifndef RECZEROS_RATPOLY_HPP
#define RECZEROS_RATPOLY_HPP

#include "reczeros/interval.hpp"
#include "reczeros/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reczeros {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
/// the leading coefficient is nonzero unless the polynomial is zero.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static RatPoly constant(Rational c) { return RatPoly(std::vector<Rational>{std::move(c)}); }
    static RatPoly monomial(Rational c, std::size_t power)
    {
        std::vector<Rational> v(power + 1, Rational(0));
        v[power] = std::move(c);
        return RatPoly(std::move(v));
    }
    /// x - r
    static RatPoly linear_root(const Rational& r) { return RatPoly({Rational(-r), Rational(1)}); }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& lc() const
    {
        if (c_.empty())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    Rational eval(const Rational& x) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    RatPoly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return RatPoly(std::move(d));
    }

    RatPoly monic() const
    {
        if (is_zero())
            return {};
        std::vector<Rational> v(c_);
        const Rational l = lc();
        for (auto& x : v)
            x /= l;
        return RatPoly(std::move(v));
    }

    /// p(x^e)
    RatPoly stretch(unsigned e) const
    {
        if (is_zero() || e == 0)
            return e == 0 ? constant(eval(Rational(1))) : RatPoly{};
        std::vector<Rational> v(static_cast<std::size_t>(degree()) * e + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            v[i * e] = c_[i];
        return RatPoly(std::move(v));
    }

    /// p(-x)
    RatPoly negate_variable() const
    {
        std::vector<Rational> v(c_);
        for (std::size_t i = 1; i < v.size(); i += 2)
            v[i] = -v[i];
        return RatPoly(std::move(v));
    }

    /// x^deg p(1/x)
    RatPoly reversed() const { return RatPoly(std::vector<Rational>(c_.rbegin(), c_.rend())); }

    RatPoly& operator+=(const RatPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    RatPoly& operator-=(const RatPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    RatPoly& operator*=(const Rational& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_)
            x *= s;
        return *this;
    }
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator-(RatPoly a)
    {
        for (auto& x : a.c_)
            x = -x;
        return a;
    }
    friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
    friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return RatPoly(std::move(v));
    }

    /// Euclidean division over Q: *this = quot * d + rem, deg rem < deg d.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const
    {
        if (d.is_zero())
            throw std::domain_error("polynomial division by zero");
        if (degree() < d.degree())
            return {RatPoly{}, *this};
        std::vector<Rational> r(c_);
        const std::size_t dd = static_cast<std::size_t>(d.degree());
        std::vector<Rational> qv(r.size() - dd, Rational(0));
        const Rational& l = d.lc();
        for (std::size_t i = r.size(); i-- > dd;) {
            if (r[i] == 0)
                continue;
            Rational f = r[i] / l;
            qv[i - dd] = f;
            for (std::size_t j = 0; j <= dd; ++j)
                r[i - dd + j] -= f * d.c_[j];
        }
        r.resize(dd);
        return {RatPoly(std::move(qv)), RatPoly(std::move(r))};
    }
    friend RatPoly operator/(const RatPoly& a, const RatPoly& b) { return a.divmod(b).first; }
    friend RatPoly operator%(const RatPoly& a, const RatPoly& b) { return a.divmod(b).second; }

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline RatPoly derivative(const RatPoly& p) { return p.derivative(); }

/// Human-readable form, highest power first: "x^2 - 5*x + 1".
inline std::string to_string(const RatPoly& p, const std::string& var = "x")
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool unit = a == 1 && i > 0;
        if (!unit)
            out += a.get_str();
        if (i > 0) {
            out += unit ? "" : "*";
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials: the working representation behind gcd, Sturm chains
// and resultants. Rational inputs are scaled to primitive integer form by a
// positive factor, so signs of values are preserved.

using ZPoly = std::vector<Integer>;

namespace zpoly {

inline void trim(ZPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline long degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }

inline Integer content(const ZPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

/// Divide by the (positive) content.
inline void make_primitive(ZPoly& p)
{
    Integer g = content(p);
    if (g > 1)
        for (auto& c : p)
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

/// Positive multiple of p with coprime integer coefficients.
inline ZPoly from_rational(const RatPoly& p)
{
    Integer l = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly z;
    z.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        Integer v = c.get_num() * (l / c.get_den());
        z.push_back(std::move(v));
    }
    make_primitive(z);
    return z;
}

inline RatPoly to_rational(const ZPoly& p)
{
    std::vector<Rational> v;
    v.reserve(p.size());
    for (const auto& c : p)
        v.emplace_back(c);
    return RatPoly(std::move(v));
}

inline ZPoly derivative(const ZPoly& p)
{
    if (p.size() <= 1)
        return {};
    ZPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i)
        d[i - 1] = p[i] * static_cast<unsigned long>(i);
    return d;
}

/// Sign of p(num/den), den > 0, by homogeneous Horner in integers.
inline int sign_at(const ZPoly& p, const Integer& num, const Integer& den)
{
    if (p.empty())
        return 0;
    Integer acc = p.back();
    Integer dpow = 1;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        dpow *= den;
        acc = acc * num + p[i] * dpow;
    }
    return sgn(acc);
}

inline int sign_at(const ZPoly& p, const Rational& x) { return sign_at(p, x.get_num(), x.get_den()); }

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
inline ZPoly prem(ZPoly a, const ZPoly& b)
{
    const long db = degree(b);
    if (db < 0)
        throw std::domain_error("pseudo-remainder by zero");
    long da = degree(a);
    if (da < db)
        return a;
    const Integer& l = b.back();
    long delta = da - db + 1;
    while (da >= db) {
        Integer top = a[static_cast<std::size_t>(da)];
        // a = l*a - top*x^(da-db)*b
        for (auto& c : a)
            c *= l;
        const std::size_t shift = static_cast<std::size_t>(da - db);
        for (std::size_t j = 0; j < b.size(); ++j)
            a[shift + j] -= top * b[j];
        --delta;
        a.pop_back();
        trim(a);
        da = degree(a);
    }
    if (delta > 0) {
        Integer f = pow_int(l, static_cast<unsigned long>(delta));
        for (auto& c : a)
            c *= f;
    }
    return a;
}

/// Exact division by a monic divisor; returns the remainder.
inline ZPoly rem_monic(ZPoly a, const ZPoly& m)
{
    const long dm = degree(m);
    for (long i = degree(a); i >= dm; --i) {
        Integer top = a[static_cast<std::size_t>(i)];
        if (top == 0)
            continue;
        const std::size_t shift = static_cast<std::size_t>(i - dm);
        for (std::size_t j = 0; j < m.size(); ++j)
            a[shift + j] -= top * m[j];
    }
    trim(a);
    return a;
}

/// Primitive gcd over Z[x] (hence associate of the gcd over Q[x]).
inline ZPoly gcd(ZPoly a, ZPoly b)
{
    trim(a);
    trim(b);
    if (degree(a) < degree(b))
        std::swap(a, b);
    if (b.empty()) {
        make_primitive(a);
        return a;
    }
    make_primitive(a);
    make_primitive(b);
    while (!b.empty()) {
        if (degree(b) == 0)
            return ZPoly{Integer(1)};
        ZPoly r = prem(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.back() < 0)
        for (auto& c : a)
            c = -c;
    return a;
}

} // namespace zpoly

/// Monic gcd over Q. Not both zero.
inline RatPoly gcd(const RatPoly& p, const RatPoly& q)
{
    if (p.is_zero() && q.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    if (p.is_zero())
        return q.monic();
    if (q.is_zero())
        return p.monic();
    return zpoly::to_rational(zpoly::gcd(zpoly::from_rational(p), zpoly::from_rational(q))).monic();
}

/// Enclosure of p over x by Horner. Exact when x is a point; otherwise each
/// step is rounded outward to `bits` (bits <= 0 keeps it exact).
inline IntervalReal eval_interval(const RatPoly& p, const IntervalReal& x, long bits = 0)
{
    if (x.is_point())
        return IntervalReal(p.eval(x.lo()));
    IntervalReal acc(Rational(0));
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
        if (bits > 0)
            acc = acc.rounded(bits);
    }
    return acc;
}

} // namespace reczeros

#endif // RECZEROS_RATPOLY_HPP
