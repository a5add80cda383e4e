#pragma once

#include "yzq/bi_series.hpp"
#include "yzq/report.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace yzq {

struct HypergeometricParams {
    Rat a;
    Rat b;
    Rat c;
};

/// sum (a)_n (b)_n / ((c)_n n!) t^n modulo t^order. Throws
/// std::invalid_argument when c is a nonpositive integer.
LaurentSeries hyp2f1(const HypergeometricParams& p, int order);

/// t(1-t) g'' + (c - (1+a+b) t) g' - ab g.
LaurentSeries hypergeometric_operator(const HypergeometricParams& p, const LaurentSeries& g);

/// The operator annihilates hyp2f1(p) below t^order.
VerifyReport verify_hyp2f1_operator(const HypergeometricParams& p, int order);

/// 2F1(1/12, 5/12; 1; 1728/j(q)) = E4(q)^(1/4) below q^order.
VerifyReport verify_fricke(int order);

/// With D = E4/(-j E6) theta, (j-1728) j^2 D^2 g + (j-864) j D g - 60 g = 0
/// for g = E4^(1/4), for exponents below order.
VerifyReport verify_ode_solution(int order);

/// Which two-variable slot carries q-hat_1 = exp(2 pi i tau_1).
enum class Orientation { tau1_outer, tau1_inner };

/// Lifts a one-variable series in q-hat_1 (or q-hat_2) into the chosen slot.
BiSeries lift_tau1(const LaurentSeries& s, Orientation o);
BiSeries lift_tau2(const LaurentSeries& s, Orientation o);

/// d/d tau_1 (normalized as q d/dq) in the chosen orientation.
BiSeries theta_tau1(const BiSeries& s, Orientation o);

struct MirrorMaps {
    BiSeries u1;
    BiSeries u2;
};

/// Leading (q3 -> 0) mirror maps in the E4/E6 form:
///   u1 = (1 - E6(t1)E6(t2)/(E4(t1)E4(t2))^(3/2)) / 864,
///   u2 = (E4(t1)^3 - E6(t1)^2)(E4(t2)^3 - E6(t2)^2) / (4((E4(t1)E4(t2))^(3/2) - E6(t1)E6(t2))^2),
/// built from one-variable inputs known modulo q^order1 (outer slot) and
/// q^order2 (inner slot).
MirrorMaps mirror_maps(int order1, int order2, Orientation o = Orientation::tau1_outer);

/// The same maps through j: with R = sqrt(j(j - 1728)) = E4^(3/2) E6 / eta24,
///   u1 = 2(j1 + j2 - 1728) / (j1 j2 + R1 R2),
///   u2 = (j1 j2 + R1 R2)^2 / (4 j1 j2 (j1 + j2 - 1728)^2).
MirrorMaps mirror_maps_j_form(int order1, int order2, Orientation o = Orientation::tau1_outer);

/// sqrt(j(j - 1728)) on the branch q^-1 (1 + ...), as q^-1 (q^2 j (j - 1728))^(1/2).
LaurentSeries sqrt_j_j_minus_mu(int order);

/// Closed forms for du1/dtau1 and du2/dtau1 at q3 = 0.
MirrorMaps mirror_map_derivatives(int order1, int order2, Orientation o = Orientation::tau1_outer);

/// j-form against E-form for u1 and u2 on bi-order (order, order), together
/// with j - 1728 = E6^2/eta24 and R^2 = j(j - 1728).
VerifyReport verify_vvh_equivalence(int order);

/// theta_tau1 of the E-form maps against the closed-form derivatives.
VerifyReport verify_mirror_derivatives(int order);

// ---------------------------------------------------------------------------
// Yukawa couplings in the rescaled variables x = 432 u1, y = 4 u2, z = 4 u3.

/// corrected: the table with Y112/Y113 carrying the factor 2 on the whole
/// numerator and the factor (2x - 1) in Y222, Y223, Y233, Y333.
/// printed: the table as usually quoted, kept for comparison.
enum class YukawaVariant { corrected, printed };

inline Rat inverse(const Rat& x) { return Rat(1) / x; }
inline LaurentSeries inverse(const LaurentSeries& x) { return invert(x); }
inline BiSeries inverse(const BiSeries& x) { return bi_invert(x); }

template <class T>
struct YukawaTable {
    T x;
    T y;
    T z;
    YukawaVariant variant = YukawaVariant::corrected;

    T delta1() const
    {
        const T w = Rat(1) - x;
        const T w2 = w * w;
        const T x2 = x * x;
        const T d = y - z;
        return T(w2 * w2) - T(Rat(2) * T(T(y + z) * T(x2 * w2))) + T(T(d * d) * T(x2 * x2));
    }

    T delta2() const
    {
        const T s = T(Rat(1) - y) - z;
        return T(s * s) - T(Rat(4) * T(y * z));
    }

    T a2() const
    {
        const T w = Rat(1) - x;
        return T(T(T(Rat(1) + y) - z) * T(w * w)) + T(T(x * x) * T(T(T(Rat(1) - z) - T(Rat(3) * y)) * T(y - z)));
    }

    T a3() const
    {
        const T w = Rat(1) - x;
        return T(T(T(Rat(1) + z) - y) * T(w * w)) + T(T(x * x) * T(T(T(Rat(1) - y) - T(Rat(3) * z)) * T(z - y)));
    }

    /// Y_ijk for indices in {1, 2, 3}, in any order.
    T coupling(int i, int j, int k) const
    {
        std::array<int, 3> idx{i, j, k};
        std::sort(idx.begin(), idx.end());
        const int key = idx[0] * 100 + idx[1] * 10 + idx[2];
        const T w = Rat(1) - x;
        const T w2 = w * w;
        const T x2 = x * x;
        const T d1 = delta1();
        const bool fixed = variant == YukawaVariant::corrected;
        const T lead = fixed ? T(T(Rat(2) * x) - Rat(1)) : T(Rat(1) - T(Rat(2) * x));
        switch (key) {
        case 111:
            return T(Rat(8) * w) * inverse(T(T(x2 * x) * d1));
        case 112:
            return T(fixed ? T(Rat(2) * T(w2 + T(x2 * T(y - z)))) : T(T(Rat(2) * w2) + T(x2 * T(y - z))))
                * inverse(T(T(x2 * y) * d1));
        case 113:
            return T(fixed ? T(Rat(2) * T(w2 + T(x2 * T(z - y)))) : T(T(Rat(2) * w2) + T(x2 * T(z - y))))
                * inverse(T(T(x2 * z) * d1));
        case 122:
            return T(Rat(2) * T(x * w)) * inverse(T(y * d1));
        case 123:
            return T(w * T(w2 - T(T(y + z) * x2))) * inverse(T(T(T(x * y) * z) * d1));
        case 133:
            return T(Rat(2) * T(x * w)) * inverse(T(z * d1));
        case 222:
            return T(lead * a2()) * inverse(T(Rat(2) * T(T(y * y) * T(d1 * delta2()))));
        case 223:
            return T(lead * a3()) * inverse(T(Rat(2) * T(T(z * y) * T(d1 * delta2()))));
        case 233:
            return T(lead * a2()) * inverse(T(Rat(2) * T(T(z * y) * T(d1 * delta2()))));
        case 333:
            return T(lead * a3()) * inverse(T(Rat(2) * T(T(z * z) * T(d1 * delta2()))));
        default:
            break;
        }
        throw std::invalid_argument("Yukawa coupling indices must lie in {1, 2, 3}");
    }
};

/// The couplings that survive u3 -> 0, as functions of (x, y): Y111, Y112,
/// Y122, Y222 at z = 0 and the finite limits L_ij3 = lim z Y_ij3.
template <class T>
struct YukawaLimits {
    T y111;
    T y112;
    T y122;
    T y222;
    T l113;
    T l123;
    T l223;
};

template <class T>
YukawaLimits<T> yukawa_limits(const T& x, const T& y, YukawaVariant variant = YukawaVariant::corrected)
{
    const bool fixed = variant == YukawaVariant::corrected;
    const T w = Rat(1) - x;
    const T w2 = w * w;
    const T x2 = x * x;
    const T d1 = T(w2 * w2) - T(Rat(2) * T(y * T(x2 * w2))) + T(T(y * y) * T(x2 * x2));
    const T one_minus_y = Rat(1) - y;
    const T d2 = one_minus_y * one_minus_y;
    const T a2 = T(T(Rat(1) + y) * w2) + T(x2 * T(T(Rat(1) - T(Rat(3) * y)) * y));
    const T a3 = T(one_minus_y * w2) - T(x2 * T(one_minus_y * y));
    const T lead = fixed ? T(T(Rat(2) * x) - Rat(1)) : T(Rat(1) - T(Rat(2) * x));
    const T inv_d1 = inverse(d1);
    const T inv_x = inverse(x);
    const T inv_y = inverse(y);
    const T inv_x2 = inv_x * inv_x;
    const T inv_d2 = inverse(d2);

    YukawaLimits<T> out;
    out.y111 = T(T(Rat(8) * w) * T(inv_x2 * inv_x)) * inv_d1;
    const T n112 = fixed ? T(Rat(2) * T(w2 + T(x2 * y))) : T(T(Rat(2) * w2) + T(x2 * y));
    out.y112 = T(n112 * T(inv_x2 * inv_y)) * inv_d1;
    out.y122 = T(Rat(2) * T(x * w)) * T(inv_y * inv_d1);
    out.y222 = T(T(lead * a2) * Rat(1, 2)) * T(T(inv_y * inv_y) * T(inv_d1 * inv_d2));
    const T n113 = fixed ? T(Rat(2) * T(w2 - T(x2 * y))) : T(T(Rat(2) * w2) - T(x2 * y));
    out.l113 = T(n113 * inv_x2) * inv_d1;
    out.l123 = T(w * T(w2 - T(y * x2))) * T(T(inv_x * inv_y) * inv_d1);
    out.l223 = T(T(lead * a3) * Rat(1, 2)) * T(inv_y * T(inv_d1 * inv_d2));
    return out;
}

/// L113 du1^2 + 2 L123 du1 du2 + L223 du2^2 = 0 on bi-order (bi_order, bi_order),
/// with du the closed-form derivatives rescaled to x, y.
VerifyReport verify_f3_cancellation(int bi_order, YukawaVariant variant = YukawaVariant::corrected,
                                    Orientation o = Orientation::tau1_outer);

/// Right side of the Yukawa limit identity:
/// -2 E4(t2)E4(t1)E6(t2)(E4(t1)^3 - E6(t1)^2) / (E4(t2)^3 E6(t1)^2 - E4(t1)^3 E6(t2)^2),
/// returned as (numerator, denominator).
MirrorMaps v678_rhs_parts(int order1, int order2, Orientation o);

/// Contraction sum dx^a dy^b Y (multiplicities 1, 3, 3, 1) divided by
/// varpi0^2 = E4(t1)^(1/2) E4(t2)^(1/2), cleared against the right side's
/// denominator and compared on bi-order (bi_order, bi_order). With
/// check_swap, also compares the right side in the swapped orientation with
/// 2 f(q1) E4(q2)/(j(q1) - j(q2)), and that with the lattice sum and with the
/// degree-(d1, d2) invariants read from the closed form.
VerifyReport verify_v678(int bi_order, YukawaVariant variant = YukawaVariant::corrected,
                         Orientation o = Orientation::tau1_outer, bool check_swap = true);

/// Picard-Fuchs operators of the three-parameter mirror family, kept as
/// reference text only; nothing solves them.
struct PFOperator {
    const char* name;
    const char* expression;
};
const std::array<PFOperator, 3>& pf_operators();

} // namespace yzq
