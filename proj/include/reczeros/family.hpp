#ifndef RECZEROS_FAMILY_HPP
#define RECZEROS_FAMILY_HPP

// The Bernoulli-coefficient family R_{k,l}(x), its monic even counterpart
// M_{k,l}(z) = scale * R_{k,l}(z^2), and the approximant A_{k,l} used to
// bound M on the unit circle.

#include "reczeros/exactnum.hpp"
#include "reczeros/ratpoly.hpp"
#include "reczeros/reciprocal.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace reczeros {

enum class ParityCase { ell_odd, ell_even_k_odd, ell_even_k_even };

inline const char* to_string(ParityCase p)
{
    switch (p) {
    case ParityCase::ell_odd:
        return "ell-odd";
    case ParityCase::ell_even_k_odd:
        return "ell-even-k-odd";
    case ParityCase::ell_even_k_even:
        return "ell-even-k-even";
    }
    return "?";
}

inline ParityCase parity_case(unsigned k, unsigned ell)
{
    if (ell % 2 == 1)
        return ParityCase::ell_odd;
    return k % 2 == 1 ? ParityCase::ell_even_k_odd : ParityCase::ell_even_k_even;
}

/// (-1)^n for n >= 0.
inline int neg_one_pow(unsigned long n) { return n % 2 == 0 ? 1 : -1; }

/// sigma = (-1)^((l+1)(k+1)): -1 exactly when k and l are both even.
inline int family_sigma(unsigned k, unsigned ell) { return neg_one_pow((ell + 1UL) * (k + 1UL)); }

struct FamilyInstance {
    unsigned k = 0;
    unsigned ell = 0;
    RatPoly R;      ///< degree k+1
    RatPoly M;      ///< degree 2k+2, monic, even
    int sigma = 1;  ///< z^(2k+2) M(1/z) = sigma M(z)
    ParityCase parity = ParityCase::ell_odd;
};

inline void check_family_args(unsigned k, unsigned ell)
{
    if (k < 1 || ell < 1)
        throw std::invalid_argument("family needs k >= 1 and l >= 1, got k=" + std::to_string(k) +
                                    " l=" + std::to_string(ell));
}

/// R_{k,l}(x) = sum_j (-1)^((l+1)j) (B_2j B_{2k+2-2j} / ((2j)! (2k+2-2j)!))^l x^j
inline RatPoly build_R(unsigned k, unsigned ell)
{
    check_family_args(k, ell);
    std::vector<Rational> c(k + 2);
    for (unsigned j = 0; j <= k + 1; ++j) {
        Rational base = bernoulli(2 * j) * bernoulli(2 * k + 2 - 2 * j) /
                        Rational(factorial(2 * j) * factorial(2 * k + 2 - 2 * j));
        c[j] = pow(base, ell) * neg_one_pow((ell + 1UL) * j);
    }
    return RatPoly(std::move(c));
}

/// M_{k,l} from the q_j form; cross-checked against scale * R(z^2).
inline FamilyInstance build_M(unsigned k, unsigned ell)
{
    check_family_args(k, ell);
    FamilyInstance inst;
    inst.k = k;
    inst.ell = ell;
    inst.R = build_R(k, ell);
    inst.sigma = family_sigma(k, ell);
    inst.parity = parity_case(k, ell);

    std::vector<Rational> c(2 * k + 3, Rational(0));
    c[2 * k + 2] = 1;
    c[0] = inst.sigma;
    const Rational two_l = pow2(ell);
    for (unsigned j = 1; j <= k; ++j)
        c[2 * j] = -two_l * pow(q(k, j), ell) * neg_one_pow((ell + 1UL) * (k + j));
    inst.M = RatPoly(std::move(c));

    Rational lead = bernoulli(2 * k + 2) / Rational(factorial(2 * k + 2));
    Rational scale = Rational(inst.sigma) / pow(lead, ell);
    if (inst.M != inst.R.stretch(2) * scale)
        throw std::logic_error("build_M: q_j form disagrees with scale * R(z^2) for k=" +
                               std::to_string(k) + " l=" + std::to_string(ell));
    if (inst.M.lc() != 1)
        throw std::logic_error("build_M: M is not monic");
    return inst;
}

/// scale with M(z) = scale * R(z^2).
inline Rational family_scale(unsigned k, unsigned ell)
{
    Rational lead = bernoulli(2 * k + 2) / Rational(factorial(2 * k + 2));
    return Rational(family_sigma(k, ell)) / pow(lead, ell);
}

struct ApproximantPair {
    RatPoly A;
    RatPoly Delta;        ///< M - A
    Rational majorant;    ///< S = 2^l sum_{j=2}^{k-1} (q_j^l - 1) = sum |coeff(Delta)|
};

/// A_{k,l}: M with q_1-weighted end terms kept and every middle q_j^l
/// replaced by 1. Needs k >= 3.
inline ApproximantPair build_approximant(unsigned k, unsigned ell)
{
    if (k < 3)
        throw std::invalid_argument("build_approximant needs k >= 3, got k=" + std::to_string(k));
    check_family_args(k, ell);
    const FamilyInstance inst = build_M(k, ell);
    const int s = inst.sigma;
    const Rational two_l = pow2(ell);
    const Rational end_weight = pow(Rational(2 * q(k, 1)), ell);

    std::vector<Rational> a(2 * k + 3, Rational(0));
    a[2 * k + 2] = 1;
    a[0] = s;
    a[2 * k] = -end_weight;
    a[2] = -end_weight * s;
    for (unsigned j = 2; j + 1 <= k; ++j)
        a[2 * j] = -two_l * neg_one_pow((ell + 1UL) * (k + j));

    ApproximantPair out;
    out.A = RatPoly(std::move(a));
    out.Delta = inst.M - out.A;

    std::vector<Rational> closed(2 * k + 3, Rational(0));
    Rational s_sum(0);
    for (unsigned j = 2; j + 1 <= k; ++j) {
        Rational excess = pow(q(k, j), ell) - 1;
        closed[2 * j] = -two_l * neg_one_pow((ell + 1UL) * (k + j)) * excess;
        s_sum += excess;
    }
    if (out.Delta != RatPoly(std::move(closed)))
        throw std::logic_error("build_approximant: Delta differs from its closed form");
    out.majorant = two_l * s_sum;
    return out;
}

struct BoundaryProfile {
    ReciprocalTransform transform;
    ParityCase parity = ParityCase::ell_odd;
};

/// The w-transform of M: P (sigma = +1) or Q with the (z^2 - 1) cofactor.
inline BoundaryProfile boundary_profile(const FamilyInstance& inst)
{
    return BoundaryProfile{reciprocal_transform(inst.M, inst.sigma), inst.parity};
}

} // namespace reczeros

#endif // RECZEROS_FAMILY_HPP
