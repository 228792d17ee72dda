#ifndef RECZEROS_ANALYSIS_HPP
#define RECZEROS_ANALYSIS_HPP

// Discriminants by subresultants, the Mahler measure of R_{k,l} read off
// its certified zero partition, Mahler's discriminant inequality, and the
// two-sided window for alpha built from the discriminant.

#include "reczeros/certify.hpp"
#include "reczeros/paperchecks.hpp"

#include <stdexcept>
#include <string>

namespace reczeros {

namespace detail {

inline Integer exact_div(const Integer& a, const Integer& b)
{
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0)
        throw std::logic_error("subresultant: inexact division");
    return q;
}

inline ZPoly exact_div(ZPoly p, const Integer& d)
{
    for (auto& c : p)
        c = exact_div(c, d);
    return p;
}

} // namespace detail

/// Res(a, b) over Z by the subresultant algorithm.
inline Integer resultant(ZPoly a, ZPoly b)
{
    zpoly::trim(a);
    zpoly::trim(b);
    if (a.empty() || b.empty())
        return 0;
    Integer ca = zpoly::content(a), cb = zpoly::content(b);
    a = detail::exact_div(std::move(a), ca);
    b = detail::exact_div(std::move(b), cb);
    const Integer t = pow_int(ca, static_cast<unsigned long>(zpoly::degree(b))) *
                      pow_int(cb, static_cast<unsigned long>(zpoly::degree(a)));
    int s = 1;
    if (zpoly::degree(a) < zpoly::degree(b)) {
        std::swap(a, b);
        if (zpoly::degree(a) % 2 == 1 && zpoly::degree(b) % 2 == 1)
            s = -1;
    }
    if (zpoly::degree(b) == 0)
        return s * t * pow_int(b.back(), static_cast<unsigned long>(zpoly::degree(a)));
    Integer g = 1, h = 1;
    for (;;) {
        const long da = zpoly::degree(a), db = zpoly::degree(b);
        const long delta = da - db;
        if (da % 2 == 1 && db % 2 == 1)
            s = -s;
        ZPoly r = zpoly::prem(a, b);
        a = std::move(b);
        b = detail::exact_div(std::move(r), g * pow_int(h, static_cast<unsigned long>(delta)));
        zpoly::trim(b);
        if (b.empty())
            return 0;
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            h = detail::exact_div(pow_int(g, static_cast<unsigned long>(delta)),
                                  pow_int(h, static_cast<unsigned long>(delta - 1)));
        }
        if (zpoly::degree(b) == 0) {
            const long d = zpoly::degree(a);
            Integer last = d == 1 ? b.back()
                                  : detail::exact_div(pow_int(b.back(), static_cast<unsigned long>(d)),
                                                      pow_int(h, static_cast<unsigned long>(d - 1)));
            return s * t * last;
        }
    }
}

/// Res(p, q) for rational polynomials: Res(cP, dQ) = c^deg Q d^deg P Res(P, Q).
inline Rational resultant(const RatPoly& p, const RatPoly& q)
{
    if (p.is_zero() || q.is_zero())
        return 0;
    ZPoly zp = zpoly::from_rational(p), zq = zpoly::from_rational(q);
    const Rational cp = p.lc() / Rational(zp.back());
    const Rational cq = q.lc() / Rational(zq.back());
    return pow(cp, static_cast<unsigned long>(q.degree())) * pow(cq, static_cast<unsigned long>(p.degree())) *
           Rational(resultant(std::move(zp), std::move(zq)));
}

/// Disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p).
inline Rational discriminant(const RatPoly& p)
{
    const long d = p.degree();
    if (d < 1)
        throw std::invalid_argument("discriminant of a constant polynomial");
    Rational r = resultant(p, p.derivative()) / p.lc();
    return ((d * (d - 1) / 2) % 2 == 0) ? r : Rational(-r);
}

/// Default k cap for analysis runs; larger k needs an explicit override.
inline constexpr unsigned analysis_k_cap = 15;

class NonConforming : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// M(R) = |lc(R)| alpha, valid because every other zero has modulus <= 1.
inline IntervalReal mahler_measure(const ZeroCertificate& cert)
{
    if (!cert.conforms)
        throw NonConforming("mahler_measure: zero partition of R_{" + std::to_string(cert.k) + "," +
                            std::to_string(cert.ell) + "} does not have the expected shape");
    return cert.alpha * abs(build_R(cert.k, cert.ell).lc());
}

inline IntervalReal mahler_measure(unsigned k, unsigned ell) { return mahler_measure(certify_zeros(k, ell)); }

struct MahlerCheck {
    Tri holds = Tri::unknown;
    Rational abs_disc;
    IntervalReal rhs; ///< m^m M^(2m-2), m = k + 1
    long precision = 0;
};

/// |Disc(R)| <= m^m M(R)^(2m-2) with m = deg R, refining alpha on demand.
inline MahlerCheck mahler_inequality_check(const ZeroCertificate& cert, const Rational& disc, long precision = 128)
{
    MahlerCheck out;
    out.abs_disc = abs(disc);
    const unsigned long m = cert.k + 1UL;
    const Rational lc = abs(build_R(cert.k, cert.ell).lc());
    const Rational mm = Rational(pow_int(Integer(m), m));
    IntervalReal alpha = cert.alpha;
    if (!cert.conforms)
        throw NonConforming("mahler_inequality_check needs a conforming certificate");
    auto [t, p] = precision_ladder(precision, [&](long prec) {
        if (alpha.width() > pow2(-prec) * alpha.hi())
            alpha = alpha_enclosure(cert.k, cert.ell, pow2(-prec) * floor(alpha.lo()));
        out.rhs = pow(alpha * lc, 2 * m - 2) * mm;
        if (out.abs_disc <= out.rhs.lo())
            return Tri::yes;
        if (out.abs_disc > out.rhs.hi())
            return Tri::no;
        return Tri::unknown;
    });
    out.holds = t;
    out.precision = p;
    return out;
}

struct Section5Window {
    IntervalReal lower; ///< ((k+1)^-(k+1) prod_{i<j} (a_i - a_j)^2)^(1/2k)
    IntervalReal upper; ///< 2^(l+1) zeta(2)^(l-1) (1 + 3 d_l / 4^k)
    Tri contains_alpha = Tri::unknown;
};

/// Lower endpoint from Disc / lc^(2k), the squared root-difference product.
inline IntervalReal section5_lower(unsigned k, const Rational& disc, const Rational& lc, long precision)
{
    const Rational v = abs(disc) / pow(lc, 2UL * k) / Rational(pow_int(Integer(k + 1), k + 1UL));
    if (v == 0)
        return IntervalReal(Rational(0));
    return nth_root(IntervalReal(v), 2 * k, precision);
}

inline Section5Window section5_interval(const ZeroCertificate& cert, const Rational& disc, long precision = 128)
{
    if (!cert.conforms)
        throw NonConforming("section5_interval needs a conforming certificate");
    Section5Window w;
    const Rational lc = build_R(cert.k, cert.ell).lc();
    IntervalReal alpha = cert.alpha;
    auto [t, p] = precision_ladder(precision, [&](long prec) {
        w.lower = section5_lower(cert.k, disc, lc, prec);
        w.upper = alpha_upper_enclosure(cert.k, cert.ell, prec);
        if (alpha.width() > pow2(-prec) * alpha.hi())
            alpha = alpha_enclosure(cert.k, cert.ell, pow2(-prec) * floor(alpha.lo()));
        if (w.lower.hi() < alpha.lo() && alpha.hi() < w.upper.lo())
            return Tri::yes;
        if (alpha.hi() <= w.lower.lo() || alpha.lo() >= w.upper.hi())
            return Tri::no;
        return Tri::unknown;
    });
    (void)p;
    w.contains_alpha = t;
    return w;
}

struct AnalysisRecord {
    unsigned k = 0;
    unsigned ell = 0;
    Rational discriminant;
    IntervalReal alpha;
    IntervalReal mahler;
    Rational mahler_lhs;       ///< |Disc|
    IntervalReal mahler_rhs;   ///< (k+1)^(k+1) M^(2k)
    Tri mahler_inequality = Tri::unknown;
    IntervalReal section5_lower;
    IntervalReal section5_upper;
    Tri alpha_in_interval = Tri::unknown;
    bool simple = true;
    bool conforms = true;
};

inline AnalysisRecord analyze_instance(unsigned k, unsigned ell, long precision = 128,
                                       const Rational& width = default_alpha_width())
{
    const ZeroCertificate cert = certify_zeros(k, ell, width);
    AnalysisRecord rec;
    rec.k = k;
    rec.ell = ell;
    rec.simple = cert.simple;
    rec.conforms = cert.conforms;
    rec.discriminant = discriminant(build_R(k, ell));
    rec.alpha = cert.alpha;
    if (!cert.conforms)
        return rec;
    rec.mahler = mahler_measure(cert);
    MahlerCheck mc = mahler_inequality_check(cert, rec.discriminant, precision);
    rec.mahler_lhs = mc.abs_disc;
    rec.mahler_rhs = mc.rhs;
    rec.mahler_inequality = mc.holds;
    Section5Window w = section5_interval(cert, rec.discriminant, precision);
    rec.section5_lower = w.lower;
    rec.section5_upper = w.upper;
    rec.alpha_in_interval = w.contains_alpha;
    return rec;
}

} // namespace reczeros

#endif // RECZEROS_ANALYSIS_HPP
