#ifndef RECZEROS_PAPERCHECKS_HPP
#define RECZEROS_PAPERCHECKS_HPP

// Mechanical verification of the quantitative claims behind the zero
// theorem: zeta inequalities, the q_j / epsilon / c_l estimates, the Delta
// majorant, sign patterns of F on the circle grids, the +-1 zeros and G/H
// signs, and the alpha windows. Every claim yields one ClaimResult.

#include "reczeros/certify.hpp"
#include "reczeros/exactnum.hpp"
#include "reczeros/family.hpp"
#include "reczeros/runner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace reczeros {

enum class ClaimStatus { pass, fail, inconclusive, finding };

inline const char* to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::pass:
        return "pass";
    case ClaimStatus::fail:
        return "fail";
    case ClaimStatus::inconclusive:
        return "inconclusive";
    case ClaimStatus::finding:
        return "finding";
    }
    return "?";
}

using Witness = std::vector<std::pair<std::string, std::string>>;

struct ClaimResult {
    std::string id;
    std::string params;
    ClaimStatus status = ClaimStatus::pass;
    Witness witness;
    std::string note;
};

struct VerificationReport {
    std::vector<ClaimResult> claims;

    bool any(ClaimStatus s) const
    {
        return std::any_of(claims.begin(), claims.end(), [s](const ClaimResult& c) { return c.status == s; });
    }
    const ClaimResult* find(const std::string& id) const
    {
        for (const auto& c : claims)
            if (c.id == id)
                return &c;
        return nullptr;
    }
};

// ---------------------------------------------------------------------------
// helpers

enum class Tri { yes, no, unknown };

/// Run `decide(p)` at p = start, 2 start, ... up to the precision cap.
/// Returns the first definite answer and the precision that produced it.
template <class F>
std::pair<Tri, long> precision_ladder(long start, F&& decide)
{
    const long cap = precision_cap();
    long p = start;
    for (;;) {
        Tri t = decide(p);
        if (t != Tri::unknown || p >= cap)
            return {t, p};
        p = std::min(2 * p, cap);
    }
}

/// value strictly inside (lo, hi)?
inline Tri strictly_between(const Rational& lo, const IntervalReal& v, const Rational& hi)
{
    if (v.lo() > lo && v.hi() < hi)
        return Tri::yes;
    if (v.hi() <= lo || v.lo() >= hi)
        return Tri::no;
    return Tri::unknown;
}

inline std::string decimal(const Rational& x, int digits = 20) { return to_decimal(x, digits, false); }

inline std::string decimal(const IntervalReal& x, int digits = 20)
{
    return "[" + to_decimal(x.lo(), digits, false) + ", " + to_decimal(x.hi(), digits, true) + "]";
}

/// "3..7" for a contiguous run, "1,3,5" otherwise; "" for an empty list.
inline std::string format_values(std::vector<unsigned> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    if (v.empty())
        return "";
    if (v.size() >= 2 && v.back() - v.front() + 1 == v.size())
        return std::to_string(v.front()) + ".." + std::to_string(v.back());
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out;
}

inline std::vector<unsigned> range_values(unsigned lo, unsigned hi)
{
    std::vector<unsigned> out;
    for (unsigned v = lo; v <= hi && lo <= hi; ++v)
        out.push_back(v);
    return out;
}

inline ClaimResult empty_range(std::string id, std::string params)
{
    return ClaimResult{std::move(id), std::move(params), ClaimStatus::pass, {}, "empty range"};
}

// ---------------------------------------------------------------------------
// zeta inequalities

/// zeta(n) for n >= 2: Euler's formula for even n, partial sums with an
/// integral tail for odd n (terms grow with the precision).
inline IntervalReal zeta_enclosure(unsigned n, long precision)
{
    if (n < 2)
        throw std::invalid_argument("zeta_enclosure needs n >= 2");
    if (n % 2 == 0)
        return zeta_even_enclosure(n / 2, precision);
    unsigned terms = 16;
    for (long p = 128; p < precision; p *= 2)
        terms *= 2;
    return zeta_partial_enclosure(n, terms).rounded(precision + 16);
}

/// 1 + 2^-n < zeta(n) < 1 + (n+1)/(n-1) 2^-n for 2 <= n <= n_max.
inline ClaimResult check_zeta_bounds(unsigned n_max, long precision = 128)
{
    const std::string params = "n=2.." + std::to_string(n_max);
    if (n_max < 2)
        return empty_range("zeta-bounds", params);
    ClaimResult res{"zeta-bounds", params, ClaimStatus::pass, {}, ""};
    long worst_precision = precision;
    for (unsigned n = 2; n <= n_max; ++n) {
        const Rational lower = 1 + pow2(-static_cast<long>(n));
        const Rational upper = 1 + make_rational(n + 1, n - 1) * pow2(-static_cast<long>(n));
        IntervalReal last;
        auto [t, p] = precision_ladder(precision, [&](long prec) {
            last = zeta_enclosure(n, prec);
            return strictly_between(lower, last, upper);
        });
        worst_precision = std::max(worst_precision, p);
        if (t == Tri::yes)
            continue;
        res.status = t == Tri::no ? ClaimStatus::fail : ClaimStatus::inconclusive;
        res.witness = {{"n", std::to_string(n)},
                       {"lower", to_string(lower)},
                       {"zeta", decimal(last, 40)},
                       {"upper", to_string(upper)},
                       {"precision", std::to_string(p)}};
        return res;
    }
    res.witness = {{"max_precision", std::to_string(worst_precision)}};
    return res;
}

/// zeta(2k+2-2j)/zeta(2k+2) - 1 < 3 * 4^(j-k-1) for 1 <= j <= k <= k_max.
/// The ratio is (r_{k+1-j} / r_{k+1}) pi^(-2j).
inline ClaimResult check_quotient_bound(unsigned k_max, long precision = 128)
{
    const std::string params = "k=1.." + std::to_string(k_max) + ", j=1..k";
    if (k_max < 1)
        return empty_range("zeta-quotient-bound", params);
    ClaimResult res{"zeta-quotient-bound", params, ClaimStatus::pass, {}, ""};

    // pi^(-2j) enclosures per precision, built on demand
    std::map<long, std::vector<IntervalReal>> inv_pi_powers;
    auto inv_pi_pow = [&](unsigned j, long prec) -> const IntervalReal& {
        auto& table = inv_pi_powers[prec];
        if (table.empty()) {
            IntervalReal pi = pi_enclosure(prec + 32);
            IntervalReal inv_sq = (IntervalReal(Rational(1)) / (pi * pi)).rounded(prec + 24);
            table.push_back(IntervalReal(Rational(1)));
            table.reserve(k_max + 1);
            for (unsigned i = 1; i <= k_max; ++i)
                table.push_back((table.back() * inv_sq).rounded(prec + 24));
        }
        return table[j];
    };

    Rational best_ratio(-1);
    unsigned best_k = 0, best_j = 0;
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned j = 1; j <= k; ++j) {
            const Rational bound = 3 * pow2(2 * (static_cast<long>(j) - static_cast<long>(k) - 1));
            const Rational rat = zeta_even_rational(k + 1 - j) / zeta_even_rational(k + 1);
            IntervalReal value;
            auto [t, p] = precision_ladder(precision, [&](long prec) {
                value = inv_pi_pow(j, prec) * rat - Rational(1);
                if (value.hi() < bound)
                    return Tri::yes;
                if (value.lo() >= bound)
                    return Tri::no;
                return Tri::unknown;
            });
            if (t != Tri::yes) {
                res.status = t == Tri::no ? ClaimStatus::fail : ClaimStatus::inconclusive;
                res.witness = {{"k", std::to_string(k)},
                               {"j", std::to_string(j)},
                               {"value", decimal(value, 40)},
                               {"bound", to_string(bound)},
                               {"precision", std::to_string(p)}};
                return res;
            }
            Rational ratio = value.hi() / bound;
            if (ratio > best_ratio) {
                best_ratio = ratio;
                best_k = k;
                best_j = j;
            }
        }
    }
    res.witness = {{"tightest_k", std::to_string(best_k)},
                   {"tightest_j", std::to_string(best_j)},
                   {"value_over_bound", decimal(best_ratio)}};
    return res;
}

inline Rational lemma_ratio(unsigned k, unsigned j)
{
    const long kk = k, jj = j;
    return make_rational((2 * jj + 1) * (2 * kk + 3 - 2 * jj), (2 * jj - 1) * (2 * kk + 1 - 2 * jj));
}

inline ClaimResult check_delta_bound(const std::vector<unsigned>& ks, const std::vector<unsigned>& ells);

/// (2j+1)(2k+3-2j) / ((2j-1)(2k+1-2j)) < 25/9 for 3 <= k <= k_max,
/// 2 <= j <= k-1. The pair (3, 2) gives exactly 25/9 and is reported as a
/// finding, together with the Delta majorant at k = 3 that it feeds.
inline ClaimResult check_ratio_max(unsigned k_max)
{
    const std::string params = "k=3.." + std::to_string(k_max) + ", j=2..k-1";
    if (k_max < 3)
        return empty_range("ratio-max", params);
    ClaimResult res{"ratio-max", params, ClaimStatus::pass, {}, ""};
    std::vector<std::pair<unsigned, unsigned>> equal;
    for (unsigned k = 3; k <= k_max; ++k) {
        for (unsigned j = 2; j + 1 <= k; ++j) {
            Rational r = lemma_ratio(k, j);
            if (r > constants::ratio_bound) {
                res.status = ClaimStatus::fail;
                res.witness = {{"k", std::to_string(k)}, {"j", std::to_string(j)}, {"ratio", to_string(r)}};
                return res;
            }
            if (r == constants::ratio_bound)
                equal.emplace_back(k, j);
        }
    }
    if (equal.empty())
        return res;
    res.status = ClaimStatus::finding;
    for (auto [k, j] : equal)
        res.witness.emplace_back("equality", "k=" + std::to_string(k) + " j=" + std::to_string(j) + " ratio=25/9");
    ClaimResult downstream = check_delta_bound({3}, range_values(1, 6));
    res.witness.emplace_back("delta_majorant_k3_l1..6", to_string(downstream.status));
    if (downstream.status == ClaimStatus::fail)
        res.status = ClaimStatus::fail;
    res.note = "ratio reaches 25/9 exactly; strict inequality holds on every other pair";
    return res;
}

/// Certified bracket for sum_{j>=1} zeta(2j)/4^j: partial sum of `terms`
/// enclosures plus the tail sum_{j>T} in [4^-T/3, 4^-T/3 + 16^-T/5], which
/// uses 1 < zeta(2j) < 1 + 3 * 4^-j.
inline IntervalReal zeta_sum_bracket(unsigned terms, long precision = 128)
{
    if (terms < 1)
        throw std::invalid_argument("zeta_sum_bracket needs terms >= 1");
    IntervalReal sum(Rational(0));
    for (unsigned j = 1; j <= terms; ++j)
        sum = sum + zeta_even_enclosure(j, precision + 16) * pow2(-2 * static_cast<long>(j));
    const long t = terms;
    const Rational tail_lo = pow2(-2 * t) / 3;
    const Rational tail_hi = tail_lo + pow2(-4 * t) / 5;
    return IntervalReal(sum.lo() + tail_lo, sum.hi() + tail_hi);
}

inline ClaimResult check_zeta_sum_identity(unsigned terms, long precision = 128)
{
    ClaimResult res{"zeta-sum-identity", "terms=" + std::to_string(terms), ClaimStatus::pass, {}, ""};
    const Rational half = make_rational(1, 2);
    IntervalReal bracket;
    auto [t, p] = precision_ladder(precision, [&](long prec) {
        bracket = zeta_sum_bracket(terms, prec);
        if (bracket.lo() < half && half < bracket.hi())
            return Tri::yes;
        if (bracket.hi() < half || bracket.lo() > half)
            return Tri::no;
        return Tri::unknown;
    });
    res.status = t == Tri::yes ? ClaimStatus::pass : t == Tri::no ? ClaimStatus::fail : ClaimStatus::inconclusive;
    res.witness = {{"bracket", decimal(bracket, 40)},
                   {"width", to_decimal(bracket.width(), 6, true)},
                   {"precision", std::to_string(p)}};
    return res;
}

// ---------------------------------------------------------------------------
// q_j, epsilon, c_l

/// q(k, 1) > q(k, 2) > ... > q(k, floor((k+1)/2)) for 2 <= k <= k_max.
inline ClaimResult check_qj_monotone(unsigned k_max)
{
    const std::string params = "k=2.." + std::to_string(k_max);
    if (k_max < 2)
        return empty_range("q-monotone", params);
    ClaimResult res{"q-monotone", params, ClaimStatus::pass, {}, ""};
    for (unsigned k = 2; k <= k_max; ++k) {
        const unsigned top = (k + 1) / 2;
        Rational prev = q(k, 1);
        for (unsigned j = 2; j <= top; ++j) {
            Rational cur = q(k, j);
            if (!(cur < prev)) {
                res.status = ClaimStatus::fail;
                res.witness = {{"k", std::to_string(k)},
                               {"j", std::to_string(j)},
                               {"q_prev", to_string(prev)},
                               {"q_j", to_string(cur)}};
                return res;
            }
            prev = cur;
        }
    }
    return res;
}

/// max_j epsilon(k, j) = epsilon(k, 2) <= 0.306 for 3 <= k <= k_max.
inline ClaimResult check_epsilon_max(unsigned k_max)
{
    const std::string params = "k=3.." + std::to_string(k_max) + ", j=2..k-1";
    if (k_max < 3)
        return empty_range("epsilon-max", params);
    ClaimResult res{"epsilon-max", params, ClaimStatus::pass, {}, ""};
    Rational largest(0);
    for (unsigned k = 3; k <= k_max; ++k) {
        const Rational e2 = epsilon(k, 2);
        for (unsigned j = 3; j + 1 <= k; ++j) {
            Rational e = epsilon(k, j);
            if (e > e2) {
                res.status = ClaimStatus::fail;
                res.witness = {{"k", std::to_string(k)},
                               {"j", std::to_string(j)},
                               {"epsilon_j", to_string(e)},
                               {"epsilon_2", to_string(e2)}};
                return res;
            }
        }
        if (e2 > constants::eps_bound) {
            res.status = ClaimStatus::fail;
            res.witness = {{"k", std::to_string(k)}, {"epsilon_2", to_string(e2)}, {"bound", "153/500"}};
            return res;
        }
        largest = std::max(largest, e2);
    }
    res.witness = {{"largest_epsilon", to_string(largest)}, {"largest_decimal", decimal(largest)}};
    return res;
}

/// (1 + epsilon(k, j))^l <= 1 + c_l epsilon(k, j).
inline ClaimResult check_c_bound(unsigned k_max, const std::vector<unsigned>& ells)
{
    const std::string params = "k=3.." + std::to_string(k_max) + ", j=2..k-1, l=" + format_values(ells);
    if (k_max < 3 || ells.empty())
        return empty_range("c-bound", params);
    ClaimResult res{"c-bound", params, ClaimStatus::pass, {}, ""};
    for (unsigned ell : ells) {
        const Rational c = c_delta(ell);
        for (unsigned k = 3; k <= k_max; ++k) {
            for (unsigned j = 2; j + 1 <= k; ++j) {
                const Rational e = epsilon(k, j);
                if (pow(Rational(1 + e), ell) > 1 + c * e) {
                    res.status = ClaimStatus::fail;
                    res.witness = {{"k", std::to_string(k)}, {"j", std::to_string(j)}, {"l", std::to_string(ell)}};
                    return res;
                }
            }
        }
    }
    return res;
}

/// S = 2^l sum_{j=2}^{k-1} (q_j^l - 1); bounds |Delta| on |z| = 1.
inline Rational delta_majorant(unsigned k, unsigned ell)
{
    Rational s(0);
    for (unsigned j = 2; j + 1 <= k; ++j)
        s += pow(q(k, j), ell) - 1;
    return pow2(ell) * s;
}

inline Rational delta_bound(unsigned ell) { return pow2(ell) * c_delta(ell) * constants::delta_factor; }

/// S < 2^l c_l * 0.2762 for the given k >= 3 and l.
inline ClaimResult check_delta_bound(const std::vector<unsigned>& ks, const std::vector<unsigned>& ells)
{
    std::vector<unsigned> kk;
    for (unsigned k : ks)
        if (k >= 3)
            kk.push_back(k);
    const std::string params = "k=" + format_values(kk) + ", l=" + format_values(ells);
    if (kk.empty() || ells.empty())
        return empty_range("delta-majorant", params);
    ClaimResult res{"delta-majorant", params, ClaimStatus::pass, {}, ""};
    Rational worst(-1);
    unsigned wk = 0, wl = 0;
    for (unsigned ell : ells) {
        const Rational bound = delta_bound(ell);
        for (unsigned k : kk) {
            const Rational s = delta_majorant(k, ell);
            if (!(s < bound)) {
                res.status = ClaimStatus::fail;
                res.witness = {{"k", std::to_string(k)},
                               {"l", std::to_string(ell)},
                               {"S", to_string(s)},
                               {"bound", to_string(bound)}};
                return res;
            }
            Rational ratio = s / bound;
            if (ratio > worst) {
                worst = ratio;
                wk = k;
                wl = ell;
            }
        }
    }
    res.witness = {{"tightest_k", std::to_string(wk)},
                   {"tightest_l", std::to_string(wl)},
                   {"S_over_bound", decimal(worst)}};
    return res;
}

// ---------------------------------------------------------------------------
// sign patterns of F on the circle

struct GridPoint {
    long j = 0;
    long num = 0; ///< theta = num/den * pi
    long den = 1;
    int expected = 0;
};

/// The evaluation grid for F and the alternating signs it must show.
///   l odd, or l even with k odd:  theta_j = j pi/(k-1), j = 0..2k-3, sign (-1)^(j+1)
///   k and l both even:            theta_j = (2j-1) pi/(2(k-1)), j = 1..2k-2, sign (-1)^j
inline std::vector<GridPoint> sign_grid(unsigned k, unsigned ell)
{
    if (k < 3)
        throw std::invalid_argument("sign_grid needs k >= 3");
    std::vector<GridPoint> g;
    const long kk = k;
    if (parity_case(k, ell) != ParityCase::ell_even_k_even) {
        for (long j = 0; j <= 2 * kk - 3; ++j)
            g.push_back(GridPoint{j, j, kk - 1, j % 2 == 0 ? -1 : 1});
    } else {
        for (long j = 1; j <= 2 * kk - 2; ++j)
            g.push_back(GridPoint{j, 2 * j - 1, 2 * (kk - 1), j % 2 == 0 ? 1 : -1});
    }
    return g;
}

/// F(theta) = P(2 cos theta) when sigma = +1, 2 sin(theta) Q(2 cos theta)
/// when sigma = -1. Returns the certified sign, or 0 if undetermined at
/// `precision` bits.
inline int profile_sign(const BoundaryProfile& profile, long num, long den, long precision)
{
    IntervalReal w = cos_pi_enclosure(num, den, precision) * Rational(2);
    IntervalReal v = eval_interval(profile.transform.poly, w, precision + 16);
    int s = v.certain_sign();
    if (s == 0)
        return 0;
    if (profile.transform.cofactor == Cofactor::z_squared_minus_one) {
        // sign of sin(num/den pi); theta never hits 0 or pi on this grid
        long r = ((num % (2 * den)) + 2 * den) % (2 * den);
        if (r == 0 || r == den)
            return 0;
        if (r > den)
            s = -s;
    }
    return s;
}

struct SignObservation {
    GridPoint point;
    int observed = 0; ///< 0: undetermined at the precision cap
    long precision = 0;
};

inline std::vector<SignObservation> observe_signs(unsigned k, unsigned ell, long precision)
{
    const BoundaryProfile profile = boundary_profile(build_M(k, ell));
    std::vector<SignObservation> out;
    for (const GridPoint& gp : sign_grid(k, ell)) {
        int s = 0;
        auto [t, p] = precision_ladder(precision, [&](long prec) {
            s = profile_sign(profile, gp.num, gp.den, prec);
            return s == 0 ? Tri::unknown : Tri::yes;
        });
        out.push_back(SignObservation{gp, t == Tri::yes ? s : 0, p});
    }
    return out;
}

/// Sign changes around the closed grid (theta = 2 pi identified with 0).
inline int cyclic_sign_changes(const std::vector<SignObservation>& obs)
{
    int n = 0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
        int a = obs[i].observed, b = obs[(i + 1) % obs.size()].observed;
        if (a != 0 && b != 0 && a != b)
            ++n;
    }
    return n;
}

inline ClaimResult check_sign_pattern(unsigned k, unsigned ell, long precision = 128)
{
    ClaimResult res{"sign-pattern", "k=" + std::to_string(k) + ", l=" + std::to_string(ell), ClaimStatus::pass, {}, ""};
    if (k < 3)
        return empty_range("sign-pattern", res.params);
    long used = precision;
    for (const auto& o : observe_signs(k, ell, precision)) {
        used = std::max(used, o.precision);
        if (o.observed == 0) {
            res.status = ClaimStatus::inconclusive;
            res.witness = {{"j", std::to_string(o.point.j)}, {"precision", std::to_string(o.precision)}};
            return res;
        }
        if (o.observed != o.point.expected) {
            res.status = ClaimStatus::fail;
            res.witness = {{"j", std::to_string(o.point.j)},
                           {"theta_over_pi", std::to_string(o.point.num) + "/" + std::to_string(o.point.den)},
                           {"expected", std::to_string(o.point.expected)},
                           {"observed", std::to_string(o.observed)}};
            return res;
        }
    }
    res.witness = {{"max_precision", std::to_string(used)}};
    return res;
}

// ---------------------------------------------------------------------------
// +-1 zeros, G and H

/// k even: R(1) = 0 for l even, R(-1) = 0 for l odd. k odd: R(+-1) != 0.
inline ClaimResult check_pm1_zero(unsigned k_max, unsigned ell_max)
{
    const std::string params = "k=1.." + std::to_string(k_max) + ", l=1.." + std::to_string(ell_max);
    if (k_max < 1 || ell_max < 1)
        return empty_range("pm1-zero", params);
    ClaimResult res{"pm1-zero", params, ClaimStatus::pass, {}, ""};
    for (unsigned k = 1; k <= k_max; ++k) {
        for (unsigned ell = 1; ell <= ell_max; ++ell) {
            const RatPoly r = build_R(k, ell);
            const Rational at_one = r.eval(Rational(1)), at_minus = r.eval(Rational(-1));
            bool ok;
            if (k % 2 == 0)
                ok = ell % 2 == 0 ? at_one == 0 : at_minus == 0;
            else
                ok = at_one != 0 && at_minus != 0;
            if (!ok) {
                res.status = ClaimStatus::fail;
                res.witness = {{"k", std::to_string(k)},
                               {"l", std::to_string(ell)},
                               {"R(1)", to_string(at_one)},
                               {"R(-1)", to_string(at_minus)}};
                return res;
            }
        }
    }
    return res;
}

/// G = sum_{j=1}^{k} (-1)^j q_j^l.
inline Rational G_value(unsigned k, unsigned ell)
{
    Rational g(0);
    for (unsigned j = 1; j <= k; ++j)
        g += pow(q(k, j), ell) * neg_one_pow(j);
    return g;
}

/// H = (2^l / (k+1)) sum_{j=1}^{k} (-1)^j j q_j^l.
inline Rational H_value(unsigned k, unsigned ell)
{
    Rational h(0);
    for (unsigned j = 1; j <= k; ++j)
        h += pow(q(k, j), ell) * static_cast<long>(j) * neg_one_pow(j);
    return pow2(ell) * h / static_cast<long>(k + 1);
}

/// For even l: G < -1 (k odd) and H > 1 (k even), plus the closed form
/// H_{2,l} = (2 zeta(2) zeta(4))^l / (3 zeta(6)^l).
inline ClaimResult check_GH_signs(unsigned k_max, unsigned ell_max)
{
    const std::string params = "k=1.." + std::to_string(k_max) + ", l even <= " + std::to_string(ell_max);
    if (k_max < 1 || ell_max < 2)
        return empty_range("g-h-signs", params);
    ClaimResult res{"g-h-signs", params, ClaimStatus::pass, {}, ""};
    Rational g_max(-1000000), h_min(1000000);
    for (unsigned ell = 2; ell <= ell_max; ell += 2) {
        for (unsigned k = 1; k <= k_max; ++k) {
            if (k % 2 == 1) {
                Rational g = G_value(k, ell);
                g_max = std::max(g_max, g);
                if (!(g < -1)) {
                    res.status = ClaimStatus::fail;
                    res.witness = {{"k", std::to_string(k)}, {"l", std::to_string(ell)}, {"G", to_string(g)}};
                    return res;
                }
            } else {
                Rational h = H_value(k, ell);
                h_min = std::min(h_min, h);
                if (!(h > 1)) {
                    res.status = ClaimStatus::fail;
                    res.witness = {{"k", std::to_string(k)}, {"l", std::to_string(ell)}, {"H", to_string(h)}};
                    return res;
                }
                if (k == 2) {
                    Rational closed = pow(Rational(2 * zeta_even_rational(1) * zeta_even_rational(2)), ell) /
                                      (3 * pow(zeta_even_rational(3), ell));
                    if (closed != h || !(closed > 1)) {
                        res.status = ClaimStatus::fail;
                        res.witness = {{"k", "2"}, {"l", std::to_string(ell)}, {"H", to_string(h)},
                                       {"closed_form", to_string(closed)}};
                        return res;
                    }
                }
            }
        }
    }
    if (k_max >= 1)
        res.witness.emplace_back("largest_G", decimal(g_max));
    if (k_max >= 2)
        res.witness.emplace_back("smallest_H", decimal(h_min));
    return res;
}

// ---------------------------------------------------------------------------
// alpha windows

struct AlphaWindow {
    Rational lower;     ///< (2 q_1)^l, exact
    IntervalReal upper; ///< 2^(l+1) zeta(2)^(l-1) (1 + 3 d_l / 4^k)
};

inline IntervalReal alpha_upper_enclosure(unsigned k, unsigned ell, long precision)
{
    IntervalReal z2 = zeta_even_enclosure(1, precision + 16);
    Rational tail = 1 + 3 * d(ell) * pow2(-2 * static_cast<long>(k));
    return (pow(z2, ell - 1, precision + 16) * Rational(pow2(ell + 1) * tail)).rounded(precision);
}

inline AlphaWindow alpha_window(unsigned k, unsigned ell, long precision)
{
    return AlphaWindow{pow(Rational(2 * q(k, 1)), ell), alpha_upper_enclosure(k, ell, precision)};
}

/// alpha strictly inside the window, refining alpha and the upper endpoint
/// along the precision ladder when needed.
inline Tri alpha_in_window(unsigned k, unsigned ell, const IntervalReal& alpha0, long precision,
                           IntervalReal* alpha_used = nullptr, AlphaWindow* window_used = nullptr)
{
    IntervalReal alpha = alpha0;
    AlphaWindow win;
    auto [t, p] = precision_ladder(precision, [&](long prec) {
        win = alpha_window(k, ell, prec);
        if (alpha.width() > pow2(-prec))
            alpha = alpha_enclosure(k, ell, pow2(-prec));
        return strictly_between(win.lower, alpha, win.upper.lo()) == Tri::yes ? Tri::yes
               : (alpha.hi() <= win.lower || alpha.lo() >= win.upper.hi()) ? Tri::no
                                                                          : Tri::unknown;
    });
    if (alpha_used)
        *alpha_used = alpha;
    if (window_used)
        *window_used = win;
    return t;
}

using CertificateMap = std::map<std::pair<unsigned, unsigned>, ZeroCertificate>;

inline ClaimResult check_alpha_interval(const std::vector<unsigned>& ks, const std::vector<unsigned>& ells,
                                        const CertificateMap& certs, long precision = 128)
{
    std::vector<unsigned> kk, ll;
    for (unsigned k : ks)
        if (k >= 3)
            kk.push_back(k);
    for (unsigned l : ells)
        if (l % 2 == 1)
            ll.push_back(l);
    const std::string params = "k=" + format_values(kk) + ", l=" + format_values(ll);
    if (kk.empty() || ll.empty())
        return empty_range("alpha-interval", params);
    ClaimResult res{"alpha-interval", params, ClaimStatus::pass, {}, ""};
    for (unsigned ell : ll) {
        for (unsigned k : kk) {
            auto it = certs.find({k, ell});
            IntervalReal alpha = it != certs.end() ? it->second.alpha : alpha_enclosure(k, ell, default_alpha_width());
            IntervalReal used;
            AlphaWindow win;
            Tri t = alpha_in_window(k, ell, alpha, precision, &used, &win);
            const bool empty_window = !(win.lower < win.upper.lo());
            if (t != Tri::yes || empty_window) {
                if (empty_window)
                    res.note = "window is empty";
                res.status = t == Tri::unknown ? ClaimStatus::inconclusive : ClaimStatus::fail;
                res.witness = {{"k", std::to_string(k)},
                               {"l", std::to_string(ell)},
                               {"lower", to_string(win.lower)},
                               {"alpha", decimal(used, 40)},
                               {"upper", decimal(win.upper, 40)}};
                return res;
            }
        }
    }
    return res;
}

/// The same window at k = 2, reported without being asserted.
inline ClaimResult check_alpha_interval_k2(const std::vector<unsigned>& ells, const CertificateMap& certs,
                                           long precision = 128)
{
    std::vector<unsigned> ll;
    for (unsigned l : ells)
        if (l % 2 == 1)
            ll.push_back(l);
    const std::string params = "k=2, l=" + format_values(ll);
    if (ll.empty())
        return empty_range("alpha-interval-k2", params);
    ClaimResult res{"alpha-interval-k2", params, ClaimStatus::pass, {}, "informational; not asserted"};
    for (unsigned ell : ll) {
        auto it = certs.find({2u, ell});
        IntervalReal alpha = it != certs.end() ? it->second.alpha : alpha_enclosure(2, ell, default_alpha_width());
        IntervalReal used;
        AlphaWindow win;
        Tri t = alpha_in_window(2, ell, alpha, precision, &used, &win);
        const std::string key = "l=" + std::to_string(ell);
        res.witness.emplace_back(key, t == Tri::yes ? "inside" : t == Tri::no ? "outside" : "undetermined");
        if (t != Tri::yes)
            res.status = ClaimStatus::finding;
    }
    return res;
}

/// alpha_{k,1} in (4, 4.84): the square of the (2, 2.2) window for the
/// largest zero of the odd-index Ramanujan polynomial.
inline ClaimResult check_msw_window(const std::vector<unsigned>& ks, const CertificateMap& certs)
{
    const std::string params = "k=" + format_values(ks) + ", l=1";
    if (ks.empty())
        return empty_range("msw-window", params);
    ClaimResult res{"msw-window", params, ClaimStatus::pass, {}, ""};
    const Rational lo(4), hi = make_rational(484, 100);
    for (unsigned k : ks) {
        auto it = certs.find({k, 1u});
        IntervalReal alpha = it != certs.end() ? it->second.alpha : alpha_enclosure(k, 1, default_alpha_width());
        Tri t = strictly_between(lo, alpha, hi);
        if (t != Tri::yes) {
            res.status = t == Tri::no ? ClaimStatus::fail : ClaimStatus::inconclusive;
            res.witness = {{"k", std::to_string(k)}, {"alpha", decimal(alpha, 40)}};
            return res;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// claims read off the certificates

inline std::string instance_params(const CertificateMap& certs)
{
    std::vector<unsigned> ks, ls;
    for (const auto& [key, c] : certs) {
        ks.push_back(key.first);
        ls.push_back(key.second);
    }
    return "k=" + format_values(ks) + ", l=" + format_values(ls);
}

inline ClaimResult check_certify_conformance(const CertificateMap& certs)
{
    if (certs.empty())
        return empty_range("certify-conformance", instance_params(certs));
    ClaimResult res{"certify-conformance", instance_params(certs), ClaimStatus::pass, {}, ""};
    for (const auto& [key, c] : certs) {
        if (!c.conforms) {
            res.status = ClaimStatus::fail;
            res.witness = {{"k", std::to_string(key.first)},
                           {"l", std::to_string(key.second)},
                           {"simple", c.simple ? "true" : "false"},
                           {"on_circle_count", std::to_string(c.on_circle_count)},
                           {"off_circle_real", std::to_string(c.off_circle_real.size())},
                           {"off_circle_complex_count", std::to_string(c.off_circle_complex_count)}};
            return res;
        }
    }
    return res;
}

/// Expected distinct real zeros of M: 4, or 6 when k and l are both even.
inline int expected_m_real_zeros(unsigned k, unsigned ell)
{
    return parity_case(k, ell) == ParityCase::ell_even_k_even ? 6 : 4;
}

inline ClaimResult check_m_real_zero_count(const CertificateMap& certs)
{
    if (certs.empty())
        return empty_range("m-real-zero-count", instance_params(certs));
    ClaimResult res{"m-real-zero-count", instance_params(certs), ClaimStatus::pass, {}, ""};
    for (const auto& [key, c] : certs) {
        int want = expected_m_real_zeros(key.first, key.second);
        if (c.m_real_zero_count != want) {
            res.status = ClaimStatus::fail;
            res.witness = {{"k", std::to_string(key.first)},
                           {"l", std::to_string(key.second)},
                           {"expected", std::to_string(want)},
                           {"observed", std::to_string(c.m_real_zero_count)}};
            return res;
        }
    }
    return res;
}

/// For l >= 2 no root of unity other than +-1 is a zero of R. A violation
/// is a finding, not a failure.
inline ClaimResult check_unity_roots(const CertificateMap& certs)
{
    CertificateMap even;
    for (const auto& [key, c] : certs)
        if (key.second >= 2)
            even.emplace(key, c);
    if (even.empty())
        return empty_range("unity-roots", instance_params(even));
    ClaimResult res{"unity-roots", instance_params(even), ClaimStatus::pass, {}, ""};
    for (const auto& [key, c] : even) {
        for (unsigned long n : c.unity_roots) {
            if (n > 2) {
                res.status = ClaimStatus::finding;
                res.witness.emplace_back("k=" + std::to_string(key.first) + " l=" + std::to_string(key.second),
                                         "n=" + std::to_string(n));
            }
        }
    }
    if (res.status == ClaimStatus::finding)
        res.note = "primitive roots of unity of order > 2 divide R";
    return res;
}

/// The grid gives 2k-2 cyclic sign changes of F, which forces at least
/// 2k-2 zeros of M on the circle. The proof text counts 2k-1; the grid has
/// an even number of alternating points, so 2k-1 is not attainable.
inline ClaimResult check_sign_change_count(const std::vector<unsigned>& ks, const std::vector<unsigned>& ells,
                                           long precision = 128)
{
    std::vector<unsigned> kk;
    for (unsigned k : ks)
        if (k >= 3)
            kk.push_back(k);
    const std::string params = "k=" + format_values(kk) + ", l=" + format_values(ells);
    if (kk.empty() || ells.empty())
        return empty_range("sign-change-count", params);
    ClaimResult res{"sign-change-count", params, ClaimStatus::pass, {}, ""};
    bool below_claim = false;
    for (unsigned ell : ells) {
        for (unsigned k : kk) {
            auto obs = observe_signs(k, ell, precision);
            int changes = cyclic_sign_changes(obs);
            const int needed = 2 * static_cast<int>(k) - 2;
            if (changes < needed) {
                res.status = ClaimStatus::fail;
                res.witness = {{"k", std::to_string(k)}, {"l", std::to_string(ell)},
                               {"changes", std::to_string(changes)}, {"needed", std::to_string(needed)}};
                return res;
            }
            if (changes < needed + 1)
                below_claim = true;
        }
    }
    if (below_claim) {
        res.status = ClaimStatus::finding;
        res.witness = {{"changes", "2k-2"}, {"stated", "2k-1"}};
        res.note = "2k-2 sign changes on the grid, enough for 2k-2 zeros of M on the circle";
    }
    return res;
}

// ---------------------------------------------------------------------------
// the suite

enum class Suite { lemmas, props, intervals, all };

inline std::optional<Suite> parse_suite(const std::string& s)
{
    if (s == "lemmas")
        return Suite::lemmas;
    if (s == "props")
        return Suite::props;
    if (s == "intervals")
        return Suite::intervals;
    if (s == "all")
        return Suite::all;
    return std::nullopt;
}

struct VerifyConfig {
    std::vector<unsigned> ks;   ///< instances for per-(k, l) claims
    std::vector<unsigned> ells;
    long precision = 128;
    Suite suite = Suite::all;
    unsigned jobs = 1;
    unsigned zeta_sum_terms = 64;
};

/// Certificates for every (k, l) in the grid, computed on `jobs` workers.
inline CertificateMap certify_grid(const std::vector<unsigned>& ks, const std::vector<unsigned>& ells, unsigned jobs)
{
    std::vector<std::pair<unsigned, unsigned>> grid;
    for (unsigned k : ks)
        for (unsigned l : ells)
            grid.emplace_back(k, l);
    if (!ks.empty())
        warm_constants(*std::max_element(ks.begin(), ks.end()));
    auto certs = parallel_map(grid, jobs, [](const std::pair<unsigned, unsigned>& kl) {
        return certify_zeros(kl.first, kl.second);
    });
    CertificateMap out;
    for (std::size_t i = 0; i < grid.size(); ++i)
        out.emplace(grid[i], std::move(certs[i]));
    return out;
}

inline VerificationReport run_all(const VerifyConfig& cfg)
{
    const unsigned k_max = cfg.ks.empty() ? 0 : *std::max_element(cfg.ks.begin(), cfg.ks.end());
    const unsigned ell_max = cfg.ells.empty() ? 0 : *std::max_element(cfg.ells.begin(), cfg.ells.end());
    const bool lemmas = cfg.suite == Suite::lemmas || cfg.suite == Suite::all;
    const bool props = cfg.suite == Suite::props || cfg.suite == Suite::all;
    const bool intervals = cfg.suite == Suite::intervals || cfg.suite == Suite::all;
    const long p = cfg.precision;
    warm_constants(k_max);

    std::vector<std::function<ClaimResult()>> tasks;
    if (lemmas) {
        tasks.push_back([=] { return check_zeta_bounds(k_max == 0 ? 0 : 2 * k_max + 2, p); });
        tasks.push_back([=] { return check_quotient_bound(k_max, p); });
        tasks.push_back([=] { return check_ratio_max(k_max); });
        tasks.push_back([=] {
            if (k_max == 0)
                return empty_range("zeta-sum-identity", "terms=" + std::to_string(cfg.zeta_sum_terms));
            return check_zeta_sum_identity(cfg.zeta_sum_terms, p);
        });
        tasks.push_back([=] { return check_qj_monotone(k_max); });
        tasks.push_back([=] { return check_epsilon_max(k_max); });
        tasks.push_back([=, &cfg] { return check_c_bound(k_max, cfg.ells); });
    }

    CertificateMap certs;
    std::vector<unsigned> odd_ells;
    for (unsigned l : cfg.ells)
        if (l % 2 == 1)
            odd_ells.push_back(l);
    if (props || intervals) {
        std::vector<unsigned> cert_ells = props ? cfg.ells : odd_ells;
        std::vector<unsigned> cert_ks = cfg.ks;
        if (intervals && !props && std::find(cfg.ks.begin(), cfg.ks.end(), 2u) == cfg.ks.end() && k_max >= 2)
            cert_ks.push_back(2);
        certs = certify_grid(cert_ks, cert_ells, cfg.jobs);
    }
    CertificateMap grid_certs;
    for (const auto& [key, c] : certs)
        if (std::find(cfg.ks.begin(), cfg.ks.end(), key.first) != cfg.ks.end())
            grid_certs.emplace(key, c);

    if (props) {
        tasks.push_back([&] { return check_pm1_zero(k_max, ell_max); });
        tasks.push_back([&] { return check_GH_signs(k_max, ell_max); });
        tasks.push_back([&] { return check_delta_bound(cfg.ks, cfg.ells); });
        tasks.push_back([&] {
            std::vector<unsigned> kk;
            for (unsigned k : cfg.ks)
                if (k >= 3)
                    kk.push_back(k);
            ClaimResult agg{"sign-pattern", "k=" + format_values(kk) + ", l=" + format_values(cfg.ells),
                            ClaimStatus::pass, {}, ""};
            if (kk.empty() || cfg.ells.empty())
                return empty_range(agg.id, agg.params);
            for (unsigned l : cfg.ells)
                for (unsigned k : kk) {
                    ClaimResult one = check_sign_pattern(k, l, p);
                    if (one.status != ClaimStatus::pass) {
                        agg.status = one.status;
                        agg.witness = {{"k", std::to_string(k)}, {"l", std::to_string(l)}};
                        agg.witness.insert(agg.witness.end(), one.witness.begin(), one.witness.end());
                        return agg;
                    }
                }
            return agg;
        });
        tasks.push_back([&] { return check_sign_change_count(cfg.ks, cfg.ells, p); });
        tasks.push_back([&] { return check_certify_conformance(grid_certs); });
        tasks.push_back([&] { return check_m_real_zero_count(grid_certs); });
        tasks.push_back([&] { return check_unity_roots(grid_certs); });
    }
    if (intervals) {
        tasks.push_back([&] { return check_alpha_interval(cfg.ks, odd_ells, certs, p); });
        tasks.push_back([&] {
            if (k_max < 2)
                return empty_range("alpha-interval-k2", "k=2, l=" + format_values(odd_ells));
            return check_alpha_interval_k2(odd_ells, certs, p);
        });
        tasks.push_back([&] {
            if (std::find(cfg.ells.begin(), cfg.ells.end(), 1u) == cfg.ells.end())
                return empty_range("msw-window", "k=" + format_values(cfg.ks) + ", l=1");
            return check_msw_window(cfg.ks, certs);
        });
    }

    VerificationReport report;
    report.claims = parallel_map(tasks, cfg.jobs, [](const std::function<ClaimResult()>& f) { return f(); });
    return report;
}

} // namespace reczeros

#endif // RECZEROS_PAPERCHECKS_HPP
