#include "reczeros/analysis.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace reczeros;

namespace {

RatPoly random_poly(std::mt19937_64& rng, int degree, long span)
{
    std::uniform_int_distribution<long> coef(-span, span);
    std::vector<Rational> v;
    for (int i = 0; i <= degree; ++i)
        v.emplace_back(make_rational(coef(rng), 1 + static_cast<long>(rng() % 3)));
    if (v.back() == 0)
        v.back() = 1;
    return RatPoly(std::move(v));
}

Rational disc_oracle(const RatPoly& p)
{
    const long d = p.degree();
    Rational r = oracle::sylvester_resultant(p.coeffs(), p.derivative().coeffs()) / p.lc();
    return (d * (d - 1) / 2) % 2 == 0 ? r : Rational(-r);
}

} // namespace

TEST(Resultant, MatchesSylvesterDeterminant)
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 150; ++t) {
        RatPoly a = random_poly(rng, 1 + static_cast<int>(rng() % 7), 12);
        RatPoly b = random_poly(rng, 1 + static_cast<int>(rng() % 7), 12);
        EXPECT_EQ(resultant(a, b), oracle::sylvester_resultant(a.coeffs(), b.coeffs()))
            << to_string(a) << " ; " << to_string(b);
    }
}

TEST(Resultant, CommonRootGivesZero)
{
    RatPoly c = RatPoly::linear_root(make_rational(2, 3));
    std::mt19937_64 rng(22);
    for (int t = 0; t < 30; ++t)
        EXPECT_EQ(resultant(random_poly(rng, 3, 9) * c, random_poly(rng, 2, 9) * c), 0);
}

TEST(Discriminant, Examples)
{
    EXPECT_EQ(discriminant(RatPoly({Rational(1), Rational(-5), Rational(1)})), 21);
    EXPECT_EQ(discriminant(build_R(1, 1)), make_rational(21, 518400));
    EXPECT_EQ(discriminant(RatPoly({Rational(1), Rational(-2), Rational(1)})), 0);
    EXPECT_THROW(discriminant(RatPoly::constant(Rational(3))), std::invalid_argument);
    // cubic x^3 + p x + q: -4p^3 - 27q^2
    EXPECT_EQ(discriminant(RatPoly({Rational(1), Rational(-2), Rational(0), Rational(1)})), -4 * -8 - 27);
}

TEST(Discriminant, ScalesWithLeadingFactor)
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        RatPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 8), 10);
        Rational c = make_rational(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 5));
        if (c == 0)
            c = 7;
        const unsigned long d = static_cast<unsigned long>(p.degree());
        EXPECT_EQ(discriminant(c * p), pow(c, 2 * d - 2) * discriminant(p));
    }
}

TEST(Discriminant, ZeroExactlyWhenNotSquarefree)
{
    std::mt19937_64 rng(24);
    for (int t = 0; t < 120; ++t) {
        RatPoly p = random_poly(rng, 1 + static_cast<int>(rng() % 6), 6);
        if (t % 3 == 0)
            p = p * RatPoly::linear_root(Rational(static_cast<long>(rng() % 5)));
        if (t % 3 == 1) {
            RatPoly f = random_poly(rng, 1, 4);
            p = p * f * f;
        }
        if (p.degree() > 12)
            continue;
        const bool squarefree = gcd(p, p.derivative()).degree() == 0;
        EXPECT_EQ(discriminant(p) != 0, squarefree) << to_string(p);
        EXPECT_EQ(discriminant(p), disc_oracle(p)) << to_string(p);
    }
}

TEST(Discriminant, FamilyAgreesWithOracle)
{
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned l = 1; l <= 3; ++l) {
            const RatPoly r = build_R(k, l);
            const Rational d = discriminant(r);
            EXPECT_EQ(d, disc_oracle(r)) << k << " " << l;
            EXPECT_NE(d, 0);
        }
}

TEST(Mahler, SmallInstances)
{
    // (1/720) (5 + sqrt 21)/2: 1440 M = 5 + sqrt 21
    IntervalReal m11 = mahler_measure(1, 1);
    EXPECT_GT(m11.lo(), 0);
    IntervalReal a11 = m11 * Rational(1440) - Rational(5);
    EXPECT_LT(a11.lo() * a11.lo(), 21);
    EXPECT_GT(a11.hi() * a11.hi(), 21);
    EXPECT_TRUE(m11.lo() > parse_rational("0.0066545") && m11.hi() < parse_rational("0.0066546"));
    // 30240 M = alpha with alpha + 1/alpha = 9/2
    IntervalReal a21 = mahler_measure(2, 1) * Rational(30240);
    auto g = [](const Rational& x) -> Rational { return x * x - make_rational(9, 2) * x + 1; };
    EXPECT_LT(g(a21.lo()), 0);
    EXPECT_GT(g(a21.hi()), 0);

    ZeroCertificate bad = certify_zeros(1, 1);
    bad.conforms = false;
    EXPECT_THROW(mahler_measure(bad), NonConforming);
    EXPECT_THROW(section5_interval(bad, Rational(1)), NonConforming);
}

TEST(Mahler, InequalityOneOne)
{
    ZeroCertificate c = certify_zeros(1, 1);
    MahlerCheck mc = mahler_inequality_check(c, discriminant(build_R(1, 1)));
    EXPECT_EQ(mc.holds, Tri::yes);
    EXPECT_EQ(mc.abs_disc, make_rational(21, 518400));
    // 2^2 M^2
    IntervalReal m = mahler_measure(c);
    EXPECT_TRUE(mc.rhs.overlaps(m * m * Rational(4)));
    EXPECT_TRUE(mc.rhs.lo() > parse_rational("1.77e-4") && mc.rhs.hi() < parse_rational("1.78e-4"));
}

TEST(Window, OneOne)
{
    ZeroCertificate c = certify_zeros(1, 1);
    Section5Window w = section5_interval(c, discriminant(build_R(1, 1)));
    // lower = sqrt(21)/2, upper = 4 (1 + 3/4) = 7
    IntervalReal sq = w.lower * w.lower;
    EXPECT_TRUE(sq.contains(make_rational(21, 4)));
    EXPECT_LE(w.lower.width(), pow2(-100));
    EXPECT_TRUE(w.upper.contains(Rational(7)));
    EXPECT_EQ(w.contains_alpha, Tri::yes);
}

TEST(Analyze, SmallGrid)
{
    for (unsigned k = 1; k <= 6; ++k)
        for (unsigned l = 1; l <= 4; ++l) {
            AnalysisRecord r = analyze_instance(k, l);
            ASSERT_TRUE(r.conforms);
            EXPECT_NE(r.discriminant, 0);
            EXPECT_EQ(r.mahler_inequality, Tri::yes) << k << " " << l;
            EXPECT_EQ(r.alpha_in_interval, Tri::yes) << k << " " << l;
            EXPECT_LT(r.section5_lower.hi(), r.alpha.lo());
        }
}

// The window's upper end is the same 4 (1 + 3/4^k) that alpha_{7,1} exceeds.
TEST(Analyze, UpperEndpointExceededAtSevenOne)
{
    AnalysisRecord r = analyze_instance(7, 1);
    EXPECT_EQ(r.mahler_inequality, Tri::yes);
    EXPECT_EQ(r.alpha_in_interval, Tri::no);
    EXPECT_GT(r.alpha.lo(), r.section5_upper.hi());
}
