#include "reczeros/certify.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>

using namespace reczeros;

namespace {

// |R(e^(2 pi i / n))| relative to the coefficient mass, in doubles
double relative_value_at_root_of_unity(const RatPoly& p, unsigned long n)
{
    const std::complex<double> z = std::polar(1.0, 2.0 * M_PI / static_cast<double>(n));
    std::complex<double> acc = 0;
    double mass = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * z + to_double(*it);
        mass += std::abs(to_double(*it));
    }
    return std::abs(acc) / mass;
}

// alpha is the root above 1 of x^2 - s x + 1 when alpha + 1/alpha = s
bool encloses_quadratic_root(const IntervalReal& a, const Rational& s)
{
    auto g = [&](const Rational& x) -> Rational { return x * x - s * x + 1; };
    return g(a.lo()) < 0 && g(a.hi()) > 0;
}

// frozen 30+ digit values of alpha_{k,1}, from an independent mpmath root
// solve of R_{k,1} at 60 digits
struct FrozenAlpha {
    unsigned k;
    const char* value;
    const char* tol;
};
const FrozenAlpha frozen_alpha[] = {
    {7, "4.0007417766350317269761719378737660266471597310429", "1e-45"},
    {8, "4.0002102293398134928", "1e-18"},
    {10, "4.0000162331443334911", "1e-18"},
    {20, "4.0000000000302255541", "1e-18"},
};

} // namespace

TEST(Certify, OneOne)
{
    ZeroCertificate c = certify_zeros(1, 1, parse_rational("1e-30"));
    EXPECT_TRUE(c.simple);
    EXPECT_TRUE(c.conforms);
    EXPECT_EQ(c.on_circle_count, 0);
    EXPECT_EQ(c.off_circle_real.size(), 2u);
    EXPECT_EQ(c.off_circle_complex_count, 0);
    EXPECT_TRUE(c.unity_roots.empty());
    EXPECT_LE(c.alpha.width(), parse_rational("1e-30"));
    // alpha = (5 + sqrt 21)/2, so (2 alpha - 5)^2 = 21 with 2 alpha - 5 > 0
    EXPECT_TRUE(encloses_quadratic_root(c.alpha, Rational(5)));
    IntervalReal prod = c.alpha * c.alpha_inverse;
    EXPECT_TRUE(prod.contains(Rational(1)));
}

TEST(Certify, TwoOne)
{
    ZeroCertificate c = certify_zeros(2, 1, parse_rational("1e-20"));
    EXPECT_TRUE(c.conforms);
    EXPECT_EQ(c.on_circle_count, 1);
    EXPECT_EQ(c.unity_roots, (std::vector<unsigned long>{2}));
    EXPECT_LE(c.alpha.width(), parse_rational("1e-20"));
    EXPECT_TRUE(encloses_quadratic_root(c.alpha, make_rational(9, 2)));
    EXPECT_GT(c.alpha.lo(), parse_rational("4.2655"));
    EXPECT_LT(c.alpha.hi(), parse_rational("4.2656"));
}

TEST(Certify, AlphaEnclosureWidth)
{
    for (const char* w : {"1e-5", "1e-30", "1/3"}) {
        IntervalReal a = alpha_enclosure(1, 1, parse_rational(w));
        EXPECT_LE(a.width(), parse_rational(w)) << w;
        EXPECT_TRUE(encloses_quadratic_root(a, Rational(5)));
    }
}

TEST(Certify, OddRamanujanWindow)
{
    for (unsigned k = 3; k <= 10; ++k) {
        ZeroCertificate c = certify_zeros(k, 1);
        EXPECT_GT(c.alpha.lo(), 4) << k;
        EXPECT_LT(c.alpha.hi(), parse_rational("4.84")) << k;
    }
}

TEST(Certify, AgreesWithFrozenAlphaValues)
{
    for (const auto& f : frozen_alpha) {
        IntervalReal a = alpha_enclosure(f.k, 1, pow2(-160));
        const Rational v = parse_rational(f.value), t = parse_rational(f.tol);
        EXPECT_TRUE(a.overlaps(IntervalReal(v - t, v + t))) << f.k << " " << to_string(a);
    }
}

TEST(Certify, UnityExamples)
{
    EXPECT_EQ(roots_of_unity_zeros(2, 1), (std::vector<unsigned long>{2}));
    EXPECT_EQ(roots_of_unity_zeros(2, 2), (std::vector<unsigned long>{1}));
    EXPECT_TRUE(roots_of_unity_zeros(1, 1).empty());
    // (x + 1)(x^2 + x + 1)(x^2 + 1)(x - 3)
    RatPoly p = RatPoly({Rational(1), Rational(1)}) * RatPoly({Rational(1), Rational(1), Rational(1)}) *
                RatPoly({Rational(1), Rational(0), Rational(1)}) * RatPoly::linear_root(Rational(3));
    EXPECT_EQ(roots_of_unity_zeros(p), (std::vector<unsigned long>{2, 3, 4}));
}

TEST(Certify, UnityScanMatchesNumericEvaluation)
{
    for (unsigned k = 1; k <= 14; ++k)
        for (unsigned l = 1; l <= 4; ++l) {
            const RatPoly r = build_R(k, l);
            auto found = roots_of_unity_zeros(r);
            for (unsigned long n = 1; n <= 2UL * (k + 1) * (k + 1); ++n) {
                if (euler_phi(n) > k + 1)
                    continue;
                const bool listed = std::find(found.begin(), found.end(), n) != found.end();
                const double v = relative_value_at_root_of_unity(r, n);
                if (listed)
                    EXPECT_LT(v, 1e-9) << k << " " << l << " n=" << n;
                else
                    EXPECT_GT(v, 1e-9) << k << " " << l << " n=" << n;
            }
        }
}

TEST(Cyclotomic, ProductOverDivisors)
{
    for (unsigned long n = 1; n <= 60; ++n) {
        RatPoly prod = RatPoly::constant(Rational(1));
        for (unsigned long d = 1; d <= n; ++d)
            if (n % d == 0)
                prod = prod * zpoly::to_rational(cyclotomic(d));
        EXPECT_EQ(prod, RatPoly::monomial(Rational(1), n) - RatPoly::constant(Rational(1))) << n;
        EXPECT_EQ(zpoly::degree(cyclotomic(n)), static_cast<long>(euler_phi(n)));
    }
    EXPECT_EQ(cyclotomic(1), (ZPoly{-1, 1}));
    EXPECT_EQ(cyclotomic(6), (ZPoly{1, -1, 1}));
}

TEST(Cyclotomic, EulerPhiMatchesGcdCount)
{
    for (unsigned long n = 1; n <= 500; ++n) {
        unsigned long count = 0;
        for (unsigned long a = 1; a <= n; ++a)
            if (std::gcd(a, n) == 1)
                ++count;
        EXPECT_EQ(euler_phi(n), count) << n;
    }
}

TEST(Squarefree, KnownFactorization)
{
    // 5 (x - 1)^3 (x + 2)^2 (x^2 + 1)
    RatPoly a = RatPoly::linear_root(Rational(1)), b = RatPoly::linear_root(Rational(-2));
    RatPoly c({Rational(1), Rational(0), Rational(1)});
    RatPoly p = Rational(5) * a * a * a * b * b * c;
    auto f = squarefree_factors(p);
    ASSERT_EQ(f.size(), 3u);
    EXPECT_EQ(f[0].second, 1);
    EXPECT_EQ(zpoly::to_rational(f[0].first).monic(), c);
    EXPECT_EQ(f[1].second, 2);
    EXPECT_EQ(zpoly::to_rational(f[1].first).monic(), b);
    EXPECT_EQ(f[2].second, 3);
    EXPECT_EQ(zpoly::to_rational(f[2].first).monic(), a);
    auto chains = squarefree_chains(p);
    ASSERT_EQ(chains.size(), 3u);
    for (const auto& sf : chains)
        EXPECT_TRUE(sf.chain.squarefree());
    EXPECT_EQ(squarefree_chains(c).size(), 1u);
}

// The full grid. Every instance conforms; the counts add up; alpha and its
// partner multiply to 1; M has 4 real zeros, or 6 when k and l are both even.
TEST(Certify, GridInvariants)
{
    for (unsigned k = 1; k <= 40; ++k)
        for (unsigned l = 1; l <= 6; ++l) {
            const ZeroCertificate c = certify_zeros(k, l, pow2(-64));
            ASSERT_TRUE(c.conforms) << k << " " << l;
            ASSERT_TRUE(c.simple);
            ASSERT_EQ(c.on_circle_count, static_cast<int>(k) - 1);
            ASSERT_EQ(c.off_circle_complex_count, 0);
            ASSERT_EQ(c.on_circle_count + static_cast<int>(c.off_circle_real.size()) + c.off_circle_complex_count,
                      static_cast<int>(k) + 1);
            ASSERT_GT(c.alpha.lo(), 1);
            ASSERT_TRUE((c.alpha * c.alpha_inverse).contains(Rational(1))) << k << " " << l;
            ASSERT_EQ(c.m_real_zero_count, (k % 2 == 0 && l % 2 == 0) ? 6 : 4) << k << " " << l;
            // unimodular zeros of M come in conjugate pairs and double under z -> -z
            ASSERT_EQ(2 * c.transform_inside + 2 * c.transform_at_pm2 + (c.sigma == -1 ? 2 : 0),
                      2 * c.on_circle_count);
            ASSERT_EQ(c.transform_nonreal, 0);
        }
}
