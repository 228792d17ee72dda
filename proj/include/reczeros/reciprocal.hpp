#ifndef RECZEROS_RECIPROCAL_HPP
#define RECZEROS_RECIPROCAL_HPP

// The w = z + 1/z reduction of a reciprocal polynomial of even degree 2d.
//
//   sigma = +1:  m(z) = z^d P(w),                 deg P = d
//   sigma = -1:  m(z) = z^(d-1) (z^2 - 1) Q(w),   deg Q = d - 1
//
// On |z| = 1 we have w = 2 cos(theta), so unimodular zeros of m correspond
// to zeros of the transform in [-2, 2].

#include "reczeros/ratpoly.hpp"

#include <stdexcept>
#include <vector>

namespace reczeros {

enum class Cofactor { none, z_squared_minus_one };

struct ReciprocalTransform {
    RatPoly poly;              ///< P or Q, in the variable w
    Cofactor cofactor = Cofactor::none;
    long shift = 0;            ///< power of z in front: d or d - 1
};

/// +1 / -1 if z^deg m(1/z) = +-m(z), 0 otherwise.
inline int reciprocity_sign(const RatPoly& m)
{
    if (m.is_zero())
        return 0;
    RatPoly r = m.reversed();
    if (r == m)
        return 1;
    if (r == -m)
        return -1;
    return 0;
}

namespace detail {

// V_i(w) = z^i + z^-i and U_i(w) = (z^(i+1) - z^-(i+1)) / (z - 1/z), i = 0..n.
inline std::vector<RatPoly> dickson_v(std::size_t n)
{
    const RatPoly w = RatPoly::monomial(Rational(1), 1);
    std::vector<RatPoly> v{RatPoly::constant(Rational(2))};
    if (n >= 1)
        v.push_back(w);
    while (v.size() <= n)
        v.push_back(w * v[v.size() - 1] - v[v.size() - 2]);
    return v;
}

inline std::vector<RatPoly> dickson_u(std::size_t n)
{
    const RatPoly w = RatPoly::monomial(Rational(1), 1);
    std::vector<RatPoly> u{RatPoly::constant(Rational(1))};
    if (n >= 1)
        u.push_back(w);
    while (u.size() <= n)
        u.push_back(w * u[u.size() - 1] - u[u.size() - 2]);
    return u;
}

} // namespace detail

/// Expand z^shift * cofactor(z) * T(z + 1/z) back into a polynomial in z.
inline RatPoly resubstitute(const ReciprocalTransform& t)
{
    // (z + 1/z)^i z^shift = sum_s C(i, s) z^(shift + i - 2s); shift >= deg T
    const long dt = t.poly.degree();
    if (dt < 0)
        return {};
    if (t.shift < dt)
        throw std::invalid_argument("resubstitute: shift smaller than degree");
    std::vector<Rational> out(static_cast<std::size_t>(2 * t.shift + 1), Rational(0));
    for (long i = 0; i <= dt; ++i) {
        const Rational& c = t.poly.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0)
            continue;
        Integer binom = 1;
        for (long s = 0; s <= i; ++s) {
            out[static_cast<std::size_t>(t.shift + i - 2 * s)] += c * binom;
            binom = binom * (i - s) / (s + 1);
        }
    }
    RatPoly m(std::move(out));
    if (t.cofactor == Cofactor::z_squared_minus_one)
        m = m * RatPoly({Rational(-1), Rational(0), Rational(1)});
    return m;
}

/// Reduce a reciprocal polynomial of even degree. Throws if m is not
/// reciprocal with the given sign, or has odd degree.
inline ReciprocalTransform reciprocal_transform(const RatPoly& m, int sigma)
{
    if (sigma != 1 && sigma != -1)
        throw std::invalid_argument("reciprocal_transform: sigma must be +1 or -1");
    if (m.is_zero() || m.degree() % 2 != 0)
        throw std::invalid_argument("reciprocal_transform: degree must be even");
    if (reciprocity_sign(m) != sigma)
        throw std::invalid_argument("reciprocal_transform: z^deg m(1/z) != sigma m(z)");
    const std::size_t d = static_cast<std::size_t>(m.degree() / 2);
    const auto& c = m.coeffs();
    ReciprocalTransform t;
    if (sigma == 1) {
        // z^-d m = c_d + sum_i c_{d+i} (z^i + z^-i)
        auto v = detail::dickson_v(d);
        RatPoly p = RatPoly::constant(c[d]);
        for (std::size_t i = 1; i <= d; ++i)
            p += c[d + i] * v[i];
        t.poly = std::move(p);
        t.shift = static_cast<long>(d);
    } else {
        // z^-d m = sum_i c_{d+i} (z^i - z^-i) = (z - 1/z) sum_i c_{d+i} U_{i-1}
        auto u = detail::dickson_u(d);
        RatPoly q;
        for (std::size_t i = 1; i <= d; ++i)
            q += c[d + i] * u[i - 1];
        t.poly = std::move(q);
        t.cofactor = Cofactor::z_squared_minus_one;
        t.shift = static_cast<long>(d) - 1;
    }
    if (resubstitute(t) != m)
        throw std::logic_error("reciprocal_transform: resubstitution mismatch");
    return t;
}

} // namespace reczeros

#endif // RECZEROS_RECIPROCAL_HPP
