#ifndef RECZEROS_CERTIFY_HPP
#define RECZEROS_CERTIFY_HPP

// Exact zero partition of R_{k,l}: how many zeros lie on |z| = 1, which real
// zeros lie off it, and whether any non-real zero leaves the circle.
//
// Counting goes through the w-transform T of M (P or Q). A root w of T in
// (-2, 2) gives a conjugate pair e^{+-i theta} of unimodular zeros of M, a
// real root outside [-2, 2] gives a reciprocal pair of real zeros, and a
// non-real root gives two zeros off the circle. Zeros of R are squares of
// zeros of M, and M is even, so every count for R is half the count for M.

#include "reczeros/family.hpp"
#include "reczeros/sturm.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reczeros {

class AccountingError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Squarefree decomposition p = c * prod f_i^i (Yun), as primitive integer
/// polynomials with their multiplicities. Constant factors are dropped.
inline std::vector<std::pair<ZPoly, int>> squarefree_factors(const RatPoly& p)
{
    std::vector<std::pair<ZPoly, int>> out;
    if (p.degree() < 1)
        return out;
    RatPoly dp = p.derivative();
    RatPoly g = gcd(p, dp);
    if (g.degree() == 0) {
        out.emplace_back(zpoly::from_rational(p), 1);
        return out;
    }
    RatPoly b = p / g;
    RatPoly c = dp / g;
    RatPoly dd = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        RatPoly a = gcd(b, dd);
        if (a.degree() > 0)
            out.emplace_back(zpoly::from_rational(a), i);
        b = b / a;
        c = dd / a;
        dd = c - b.derivative();
    }
    return out;
}

struct SquarefreeFactor {
    ZPoly poly;
    int multiplicity = 1;
    SturmChain chain;
};

/// Squarefree factors, each with its Sturm chain. The chain of p itself
/// decides squarefreeness, so the common case costs one chain.
inline std::vector<SquarefreeFactor> squarefree_chains(const RatPoly& p)
{
    std::vector<SquarefreeFactor> out;
    if (p.degree() < 1)
        return out;
    ZPoly z = zpoly::from_rational(p);
    SturmChain chain(z);
    if (chain.squarefree()) {
        out.push_back(SquarefreeFactor{std::move(z), 1, std::move(chain)});
        return out;
    }
    for (auto& [f, mult] : squarefree_factors(p)) {
        SturmChain c(f);
        out.push_back(SquarefreeFactor{std::move(f), mult, std::move(c)});
    }
    return out;
}

struct RealRootBox {
    RootBox box;
    int multiplicity = 1;
    std::size_t factor = 0; ///< index into the squarefree factors of R
};

struct ZeroCertificate {
    unsigned k = 0;
    unsigned ell = 0;
    int sigma = 1;
    ParityCase parity = ParityCase::ell_odd;

    bool simple = true;
    int on_circle_count = 0;
    std::vector<RealRootBox> off_circle_real; ///< real zeros of R off |z|=1, increasing
    int off_circle_complex_count = 0;         ///< non-real zeros of R off |z|=1
    IntervalReal alpha;                       ///< largest real zero
    IntervalReal alpha_inverse;               ///< its reciprocal partner
    std::vector<unsigned long> unity_roots;   ///< n with Phi_n | R

    // transform-side counts, with multiplicity
    long transform_degree = 0;
    int transform_inside = 0;  ///< roots in (-2, 2)
    int transform_at_pm2 = 0;  ///< roots at w = +-2
    int transform_outside = 0; ///< real roots with |w| > 2
    int transform_nonreal = 0;
    int m_real_zero_count = 0; ///< distinct real zeros of M

    bool conforms = false;
};

// ---------------------------------------------------------------------------
// cyclotomic polynomials

inline unsigned long euler_phi(unsigned long n)
{
    unsigned long r = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    }
    if (n > 1)
        r -= r / n;
    return r;
}

namespace detail {

inline int mobius(unsigned long n)
{
    int m = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            m = -m;
        }
    }
    if (n > 1)
        m = -m;
    return m;
}

struct CyclotomicCache {
    std::mutex mu;
    std::map<unsigned long, ZPoly> polys;
};

inline CyclotomicCache& cyclotomic_cache()
{
    static CyclotomicCache cache;
    return cache;
}

} // namespace detail

/// Phi_n = prod_{d | n} (x^d - 1)^mu(n/d), over Z.
inline ZPoly cyclotomic(unsigned long n)
{
    if (n == 0)
        throw std::invalid_argument("cyclotomic(0)");
    auto& cache = detail::cyclotomic_cache();
    {
        std::lock_guard lock(cache.mu);
        auto it = cache.polys.find(n);
        if (it != cache.polys.end())
            return it->second;
    }
    RatPoly num = RatPoly::constant(Rational(1));
    RatPoly den = RatPoly::constant(Rational(1));
    for (unsigned long dv = 1; dv <= n; ++dv) {
        if (n % dv != 0)
            continue;
        int mu = detail::mobius(n / dv);
        if (mu == 0)
            continue;
        RatPoly f = RatPoly::monomial(Rational(1), dv) - RatPoly::constant(Rational(1));
        if (mu > 0)
            num = num * f;
        else
            den = den * f;
    }
    auto [quot, rem] = num.divmod(den);
    if (!rem.is_zero())
        throw std::logic_error("cyclotomic: inexact division");
    ZPoly z;
    for (const auto& c : quot.coeffs())
        z.push_back(c.get_num());
    std::lock_guard lock(cache.mu);
    cache.polys.emplace(n, z);
    return z;
}

/// Every n (with phi(n) <= deg p and n <= 2 (deg p)^2) such that a primitive
/// n-th root of unity is a zero of p, by exact division.
inline std::vector<unsigned long> roots_of_unity_zeros(const RatPoly& p)
{
    std::vector<unsigned long> out;
    const long deg = p.degree();
    if (deg < 1)
        return out;
    const ZPoly z = zpoly::from_rational(p);
    const unsigned long cap = 2UL * static_cast<unsigned long>(deg) * static_cast<unsigned long>(deg);
    for (unsigned long n = 1; n <= cap; ++n) {
        if (euler_phi(n) > static_cast<unsigned long>(deg))
            continue;
        if (zpoly::rem_monic(z, cyclotomic(n)).empty())
            out.push_back(n);
    }
    return out;
}

inline std::vector<unsigned long> roots_of_unity_zeros(unsigned k, unsigned ell)
{
    return roots_of_unity_zeros(build_R(k, ell));
}

// ---------------------------------------------------------------------------

/// Default refinement width for alpha: 2^-110 (< 10^-33).
inline Rational default_alpha_width() { return pow2(-110); }

namespace detail {

struct TransformCounts {
    int inside = 0, at_pm2 = 0, outside = 0, left = 0, right = 0;
    int outside_distinct = 0, pm2_distinct = 0;
    long degree = 0;
};

inline TransformCounts count_transform(const RatPoly& t)
{
    TransformCounts c;
    c.degree = t.degree();
    for (auto& sf : squarefree_chains(t)) {
        const int mult = sf.multiplicity;
        ZPoly g = sf.poly;
        bool divided = false;
        // exact roots at w = +-2 are divided out before Sturm counting
        for (int s : {2, -2}) {
            RatPoly gr = zpoly::to_rational(g);
            if (gr.eval(Rational(s)) == 0) {
                c.at_pm2 += mult;
                ++c.pm2_distinct;
                g = zpoly::from_rational(gr / RatPoly::linear_root(Rational(s)));
                divided = true;
            }
        }
        if (zpoly::degree(g) < 1)
            continue;
        SturmChain chain = divided ? SturmChain(g) : std::move(sf.chain);
        int in = sturm_count(chain, Bound(-2), Bound(2));
        int right = sturm_count(chain, Bound(2), Bound::pos_inf());
        int left = sturm_count(chain, Bound::neg_inf(), Bound(-2));
        c.inside += mult * in;
        c.right += mult * right;
        c.left += mult * left;
        c.outside += mult * (left + right);
        c.outside_distinct += left + right;
    }
    return c;
}

} // namespace detail

/// Certified zero partition of R_{k,l}. `width` bounds the alpha enclosure.
inline ZeroCertificate certify_zeros(unsigned k, unsigned ell, const Rational& width = default_alpha_width())
{
    const FamilyInstance inst = build_M(k, ell);
    ZeroCertificate cert;
    cert.k = k;
    cert.ell = ell;
    cert.sigma = inst.sigma;
    cert.parity = inst.parity;

    auto r_factors = squarefree_chains(inst.R);
    cert.simple = r_factors.size() == 1 && r_factors.front().multiplicity == 1;

    const BoundaryProfile profile = boundary_profile(inst);
    const auto tc = detail::count_transform(profile.transform.poly);
    const int cofactor_pairs = profile.transform.cofactor == Cofactor::z_squared_minus_one ? 1 : 0;
    cert.transform_degree = tc.degree;
    cert.transform_inside = tc.inside;
    cert.transform_at_pm2 = tc.at_pm2;
    cert.transform_outside = tc.outside;
    cert.transform_nonreal = static_cast<int>(tc.degree) - tc.inside - tc.at_pm2 - tc.outside;
    if (cert.transform_nonreal < 0 || cert.transform_nonreal % 2 != 0)
        throw AccountingError("non-real transform root count is negative or odd");
    if (tc.left != tc.right)
        throw AccountingError("transform roots are not symmetric under w -> -w");

    // unimodular zeros of M: 2 per inside root, 2 per root at +-2 (a double
    // zero at z = +-1), 2 from the z^2 - 1 cofactor; halve for R
    const int m_unimodular = 2 * tc.inside + 2 * tc.at_pm2 + 2 * cofactor_pairs;
    cert.on_circle_count = m_unimodular / 2;
    const int r_off_circle = tc.outside + cert.transform_nonreal;

    // distinct real zeros of M: w outside [-2, 2] gives z and 1/z, w = +-2
    // gives z = +-1, which the cofactor already contributes when present
    cert.m_real_zero_count = 2 * tc.outside_distinct + (cofactor_pairs ? 2 : tc.pm2_distinct);

    // real zeros of R off the circle, isolated on R itself
    int positive_off = 0, real_off = 0;
    for (std::size_t fi = 0; fi < r_factors.size(); ++fi) {
        const int mult = r_factors[fi].multiplicity;
        const SturmChain& chain = r_factors[fi].chain;
        const Bound ranges[4][2] = {{Bound::neg_inf(), Bound(-1)},
                                    {Bound(-1), Bound(0)},
                                    {Bound(0), Bound(1)},
                                    {Bound(1), Bound::pos_inf()}};
        for (int r = 0; r < 4; ++r) {
            for (const auto& box : isolate_real_roots(chain, ranges[r][0], ranges[r][1])) {
                cert.off_circle_real.push_back(RealRootBox{box, mult, fi});
                real_off += mult;
                if (r >= 2)
                    positive_off += mult;
            }
        }
    }
    std::sort(cert.off_circle_real.begin(), cert.off_circle_real.end(),
              [](const RealRootBox& a, const RealRootBox& b) { return a.box.lo < b.box.lo; });
    if (positive_off != tc.outside)
        throw AccountingError("positive real zeros of R disagree with real transform roots outside [-2, 2]");
    cert.off_circle_complex_count = r_off_circle - real_off;
    if (cert.off_circle_complex_count < 0)
        throw AccountingError("more real zeros off the circle than off-circle zeros");
    if (cert.on_circle_count + r_off_circle != static_cast<int>(k) + 1)
        throw AccountingError("zero counts do not add up to deg R");

    // alpha and 1/alpha
    const RealRootBox* top = nullptr;
    const RealRootBox* bottom = nullptr;
    int above_one = 0, in_unit = 0, negative = 0;
    for (const auto& rb : cert.off_circle_real) {
        if (rb.box.lo >= 1) {
            ++above_one;
            if (!top || rb.box.lo > top->box.lo)
                top = &rb;
        } else if (rb.box.lo >= 0) {
            ++in_unit;
            if (!bottom)
                bottom = &rb;
        } else {
            ++negative;
        }
    }
    if (top)
        cert.alpha = refine_root(r_factors[top->factor].poly, top->box, width).enclosure();
    if (bottom)
        cert.alpha_inverse = refine_root(r_factors[bottom->factor].poly, bottom->box, width).enclosure();

    cert.unity_roots = roots_of_unity_zeros(inst.R);

    cert.conforms = cert.simple && cert.off_circle_complex_count == 0 && above_one == 1 && in_unit == 1 &&
                    negative == 0 && cert.on_circle_count == static_cast<int>(k) - 1;
    return cert;
}

/// alpha_{k,l} refined to width <= `width`.
inline IntervalReal alpha_enclosure(unsigned k, unsigned ell, const Rational& width)
{
    ZeroCertificate cert = certify_zeros(k, ell, width);
    if (cert.alpha.width() == 0 && cert.alpha.lo() == 0)
        throw std::domain_error("alpha_enclosure: R has no real zero above 1");
    return cert.alpha;
}

} // namespace reczeros

#endif // RECZEROS_CERTIFY_HPP
