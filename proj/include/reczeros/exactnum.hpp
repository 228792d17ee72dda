#ifndef RECZEROS_EXACTNUM_HPP
#define RECZEROS_EXACTNUM_HPP

// Bernoulli numbers, rational parts of even zeta values and the constants
// that feed the family's inequalities. Everything here is exact except the
// enclosures of pi, zeta(n) and cos(r*pi), which are certified intervals.

#include "reczeros/interval.hpp"
#include "reczeros/rational.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace reczeros {

namespace constants {
/// Bound on epsilon_{k,2}; also the b in c_l = c_of(b, l) for the Delta majorant.
inline const Rational eps_bound = make_rational(306, 1000);
/// Numerical factor of the Delta majorant 2^l * c_l * 0.2762.
inline const Rational delta_factor = make_rational(2762, 10000);
/// b = 0.75 for d_l.
inline const Rational d_base = make_rational(3, 4);
/// Strict upper bound of the root-ratio lemma.
inline const Rational ratio_bound = make_rational(25, 9);
} // namespace constants

namespace detail {

struct BernoulliTable {
    std::mutex mu;
    std::vector<Rational> values{Rational(1)};
};

inline BernoulliTable& bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

} // namespace detail

/// B_n with B_1 = -1/2, from sum_{j=0}^{n} C(n+1, j) B_j = 0. Memoized.
inline Rational bernoulli(unsigned n)
{
    auto& table = detail::bernoulli_table();
    std::lock_guard lock(table.mu);
    auto& b = table.values;
    while (b.size() <= n) {
        const unsigned m = static_cast<unsigned>(b.size());
        if (m >= 3 && m % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        Rational acc(0);
        Integer binom(1); // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            if (b[j] != 0)
                acc += binom * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b.push_back(-acc / (m + 1));
    }
    return b[n];
}

inline Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// r_m with zeta(2m) = r_m * pi^(2m).
inline Rational zeta_even_rational(unsigned m)
{
    if (m == 0)
        throw std::invalid_argument("zeta_even_rational needs m >= 1");
    Rational r = pow2(2 * static_cast<long>(m) - 1) * bernoulli(2 * m) / Rational(factorial(2 * m));
    return (m % 2 == 1) ? r : Rational(-r);
}

/// q_j = zeta(2j) zeta(2k+2-2j) / zeta(2k+2); the powers of pi cancel.
inline Rational q(unsigned k, unsigned j)
{
    if (k < 1 || j < 1 || j > k)
        throw std::out_of_range("q(k, j) needs 1 <= j <= k, got k=" + std::to_string(k) +
                                " j=" + std::to_string(j));
    return zeta_even_rational(j) * zeta_even_rational(k + 1 - j) / zeta_even_rational(k + 1);
}

/// c_l(b) = ((1+b)^l - 1) / b.
inline Rational c_of(const Rational& b, unsigned ell)
{
    if (b <= 0)
        throw std::invalid_argument("c_of needs b > 0");
    if (ell < 1)
        throw std::invalid_argument("c_of needs l >= 1");
    return (pow(Rational(1 + b), ell) - 1) / b;
}

inline Rational d(unsigned ell) { return c_of(constants::d_base, ell); }

/// The c_l used by the Delta majorant, c_of(0.306, l).
inline Rational c_delta(unsigned ell) { return c_of(constants::eps_bound, ell); }

/// epsilon_{k,j}: the three-term excess in the bound q_j < 1 + epsilon_{k,j}.
inline Rational epsilon(unsigned k, unsigned j)
{
    if (k < 3 || j < 2 || j + 1 > k)
        throw std::out_of_range("epsilon(k, j) needs k >= 3 and 2 <= j <= k-1");
    const long kk = k, jj = j;
    Rational a = make_rational(2 * jj + 1, 2 * jj - 1) * pow2(-2 * jj);
    Rational b = make_rational(2 * kk + 3 - 2 * jj, 2 * kk + 1 - 2 * jj) * pow2(-2 * (kk + 1 - jj));
    Rational c = make_rational((2 * jj + 1) * (2 * kk + 3 - 2 * jj), (2 * jj - 1) * (2 * kk + 1 - 2 * jj)) *
                 pow2(-2 * (kk + 1));
    return a + b + c;
}

// ---------------------------------------------------------------------------
// pi

namespace detail {

// floor(2^bits * arctan(1/x)) error window: arctan(1/x) in [lo, hi] / 2^bits.
inline std::pair<Integer, Integer> arctan_inv_fixed(unsigned long x, unsigned long bits)
{
    const Integer one = pow_int(Integer(2), bits);
    const Integer x2 = Integer(x) * x;
    Integer power = Integer(x); // x^(2n+1)
    Integer sum = 0;
    unsigned long n = 0;
    Integer term;
    for (;; ++n) {
        mpz_fdiv_q(term.get_mpz_t(), one.get_mpz_t(), power.get_mpz_t());
        term /= (2 * n + 1); // floor of floor is floor of the exact quotient
        if (term == 0)
            break;
        if (n % 2 == 0)
            sum += term;
        else
            sum -= term;
        power *= x2;
    }
    // each term truncated by < 1 ulp, omitted tail < 1 ulp
    Integer slack = Integer(n) + 2;
    return {sum - slack, sum + slack};
}

struct PiCache {
    std::mutex mu;
    unsigned long bits = 0;
    IntervalReal value;
};

inline PiCache& pi_cache()
{
    static PiCache cache;
    return cache;
}

inline IntervalReal pi_master(unsigned long bits)
{
    auto& cache = pi_cache();
    std::lock_guard lock(cache.mu);
    if (cache.bits < bits) {
        unsigned long work = std::max<unsigned long>(bits, 8192) + 64;
        auto [a_lo, a_hi] = arctan_inv_fixed(5, work);
        auto [b_lo, b_hi] = arctan_inv_fixed(239, work);
        // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
        Integer lo = 16 * a_lo - 4 * b_hi;
        Integer hi = 16 * a_hi - 4 * b_lo;
        Rational scale = pow2(-static_cast<long>(work));
        cache.value = IntervalReal(Rational(lo) * scale, Rational(hi) * scale);
        cache.bits = work - 32;
    }
    return cache.value;
}

} // namespace detail

/// Enclosure of pi with width <= 2^(4 - precision); nested in precision.
inline IntervalReal pi_enclosure(long precision)
{
    if (precision < 16)
        throw std::invalid_argument("pi_enclosure needs precision >= 16");
    IntervalReal master = detail::pi_master(static_cast<unsigned long>(precision) + 32);
    return IntervalReal(round_down_abs(master.lo(), precision), round_up_abs(master.hi(), precision));
}

/// zeta(2m) = r_m * pi^(2m), rounded outward to about `precision` bits.
inline IntervalReal zeta_even_enclosure(unsigned m, long precision)
{
    if (m == 0)
        throw std::invalid_argument("zeta_even_enclosure needs m >= 1");
    long guard = 16;
    for (unsigned t = 2 * m; t > 0; t >>= 1)
        ++guard;
    const long work = precision + guard;
    IntervalReal pi = pi_enclosure(work + 4);
    IntervalReal p = pow(pi, 2UL * m, work);
    return (p * zeta_even_rational(m)).rounded(precision);
}

/// zeta(n), n >= 2, by partial sums to `terms` with the integral tail bound
///   int_{N+1}^inf x^-n dx <= sum_{i>N} i^-n <= int_N^inf x^-n dx.
/// Independent of Euler's formula.
inline IntervalReal zeta_partial_enclosure(unsigned n, unsigned terms)
{
    if (n < 2)
        throw std::invalid_argument("zeta_partial_enclosure needs n >= 2");
    if (terms < 1)
        throw std::invalid_argument("zeta_partial_enclosure needs terms >= 1");
    Rational s(0);
    for (unsigned i = 1; i <= terms; ++i)
        s += Rational(Integer(1), pow_int(Integer(i), n));
    Rational tail_lo = Rational(Integer(1), pow_int(Integer(terms + 1), n - 1) * (n - 1));
    Rational tail_hi = Rational(Integer(1), pow_int(Integer(terms), n - 1) * (n - 1));
    return IntervalReal(s + tail_lo, s + tail_hi);
}

namespace detail {

// cos(x) for a rational point 0 <= x <= 2 by Taylor series with remainder.
inline IntervalReal cos_point(const Rational& x, long bits)
{
    const long work = bits + 16;
    IntervalReal sq = IntervalReal(Rational(x * x)).rounded(work);
    IntervalReal term(Rational(1));
    IntervalReal sum(Rational(1));
    const Rational eps = pow2(-work - 2);
    for (unsigned long n = 1;; ++n) {
        term = (term * sq * Rational(Integer(-1), Integer((2 * n - 1) * (2 * n)))).rounded(work);
        sum = (sum + term).rounded(work);
        if (term.abs().hi() < eps) {
            // alternating series with decreasing terms (x <= 2): remainder
            // bounded by the next term, itself smaller than |term|
            Rational r = term.abs().hi();
            return IntervalReal(sum.lo() - r, sum.hi() + r);
        }
    }
}

} // namespace detail

/// Enclosure of cos(num/den * pi), den > 0. Exact at multiples of pi/3 and pi/2.
inline IntervalReal cos_pi_enclosure(long num, long den, long bits)
{
    if (den <= 0)
        throw std::invalid_argument("cos_pi_enclosure needs den > 0");
    // reduce a = num/den into [0, 2)
    long period = 2 * den;
    long r = ((num % period) + period) % period;
    // cos(a pi) = cos((2 - a) pi)
    if (r > den)
        r = period - r;
    int s = 1;
    // cos(a pi) = -cos((1 - a) pi) for a in (1/2, 1]
    if (2 * r > den) {
        r = den - r;
        s = -1;
    }
    Rational a = make_rational(r, den); // in [0, 1/2]
    if (a == 0)
        return IntervalReal(Rational(s));
    if (a == make_rational(1, 2))
        return IntervalReal(Rational(0));
    if (a == make_rational(1, 3))
        return IntervalReal(make_rational(s, 2));
    const long work = bits + 8;
    IntervalReal x = (pi_enclosure(work + 4) * a).rounded(work);
    // cos is decreasing on [0, pi/2]
    IntervalReal at_hi = detail::cos_point(x.hi(), work);
    IntervalReal at_lo = detail::cos_point(x.lo(), work);
    IntervalReal c(at_hi.lo(), at_lo.hi());
    if (s < 0)
        c = -c;
    return c.rounded(bits);
}

/// Upper cap of the precision ladder: REC_ZEROS_PREC_CAP or 4096 bits.
inline long precision_cap()
{
    if (const char* env = std::getenv("REC_ZEROS_PREC_CAP")) {
        try {
            long v = std::stol(env);
            if (v >= 64)
                return v;
        } catch (const std::exception&) {
        }
    }
    return 4096;
}

} // namespace reczeros

#endif // RECZEROS_EXACTNUM_HPP
