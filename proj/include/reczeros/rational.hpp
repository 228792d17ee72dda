#ifndef RECZEROS_RATIONAL_HPP
#define RECZEROS_RATIONAL_HPP

// Exact rationals backed by GMP, plus the handful of helpers the rest of the
// library needs: integer powers, dyadic outward rounding and "num/den" text.

#include <gmpxx.h>

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reczeros {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }

inline Integer pow_int(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, unsigned long e)
{
    Rational r(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
    return r; // already canonical: gcd(num,den)=1 is preserved by powers
}

inline Rational pow2(long e)
{
    if (e >= 0)
        return Rational(pow_int(Integer(2), static_cast<unsigned long>(e)), Integer(1));
    return Rational(Integer(1), pow_int(Integer(2), static_cast<unsigned long>(-e)));
}

inline Integer floor(const Rational& x)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline Integer ceil(const Rational& x)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

// floor(log2|x|) up to +-1; enough to place a relative rounding grid.
inline long approx_log2(const Rational& x)
{
    return static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 2));
}

// Largest multiple of 2^-bits that is <= x.
inline Rational round_down_abs(const Rational& x, long bits)
{
    Rational scaled = x * pow2(bits);
    return Rational(floor(scaled)) / pow2(bits);
}

inline Rational round_up_abs(const Rational& x, long bits)
{
    Rational scaled = x * pow2(bits);
    return Rational(ceil(scaled)) / pow2(bits);
}

// Outward rounding to about `bits` significant bits.
inline Rational round_down(const Rational& x, long bits)
{
    if (x == 0)
        return x;
    long grid = bits - approx_log2(x);
    Rational r = round_down_abs(x, grid);
    return r;
}

inline Rational round_up(const Rational& x, long bits)
{
    if (x == 0)
        return x;
    long grid = bits - approx_log2(x);
    return round_up_abs(x, grid);
}

// Always "num/den", including integers ("5/1").
inline std::string to_string(const Rational& x)
{
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

// Accepts "a", "a/b" and decimals such as "0.306", "-1.5" or "1e-30".
inline Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    if (auto ex = s.find_first_of("eE"); ex != std::string::npos && s.find('/') == std::string::npos) {
        std::string mant = s.substr(0, ex), expo = s.substr(ex + 1);
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(expo, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (mant.empty() || expo.empty() || used != expo.size() || e > 100000 || e < -100000)
            throw std::invalid_argument("malformed decimal: " + s);
        Rational m = parse_rational(mant);
        Integer p = pow_int(Integer(10), static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? Rational(m / p) : Rational(m * p);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool neg = !whole.empty() && whole[0] == '-';
        if (neg || (!whole.empty() && whole[0] == '+'))
            whole = whole.substr(1);
        if (whole.empty())
            whole = "0";
        if (frac.empty())
            frac = "0";
        for (char c : whole + frac)
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed decimal: " + s);
        Integer num(whole + frac, 10);
        Integer den = pow_int(Integer(10), frac.size());
        Rational r(neg ? Integer(-num) : num, den);
        r.canonicalize();
        return r;
    }
    Rational r;
    if (r.set_str(s, 10) != 0 || r.get_den() == 0)
        throw std::invalid_argument("malformed rational: " + s);
    r.canonicalize();
    return r;
}

// Decimal with `digits` significant digits, rounded toward -inf (down) or
// +inf (up). Scientific notation, e.g. "4.79128784747792e+00".
inline std::string to_decimal(const Rational& x, int digits, bool round_up_dir)
{
    if (x == 0)
        return "0";
    bool neg = x < 0;
    Rational a = neg ? Rational(-x) : x;
    // find e with 10^e <= a < 10^(e+1)
    long e = static_cast<long>(approx_log2(a) * 0.30102999566398120);
    auto pow10 = [](long n) {
        return n >= 0 ? Rational(pow_int(Integer(10), static_cast<unsigned long>(n)))
                      : Rational(Integer(1), pow_int(Integer(10), static_cast<unsigned long>(-n)));
    };
    while (pow10(e) > a)
        --e;
    while (pow10(e + 1) <= a)
        ++e;
    Rational scaled = a * pow10(digits - 1 - e);
    // magnitude rounding direction flips for negatives
    bool up = neg ? !round_up_dir : round_up_dir;
    Integer m = up ? ceil(scaled) : floor(scaled);
    std::string ds = m.get_str();
    if (static_cast<int>(ds.size()) > digits) { // carried into a new digit
        ++e;
        ds = ds.substr(0, static_cast<size_t>(digits));
        // the dropped digit was 0 after a carry, so truncation keeps direction
    }
    std::string out = neg ? "-" : "";
    out += ds.substr(0, 1);
    if (ds.size() > 1)
        out += "." + ds.substr(1);
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%+03ld", e);
    out += buf;
    return out;
}

inline double to_double(const Rational& x) { return x.get_d(); }

} // namespace reczeros

#endif // RECZEROS_RATIONAL_HPP
