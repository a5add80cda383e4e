#include "yzq/mirror_symmetry.hpp"

#include "yzq/bps_solver.hpp"
#include "yzq/harvey_moore.hpp"
#include "yzq/modular_forms.hpp"
#include "yzq/precision.hpp"

#include <stdexcept>

namespace yzq {

namespace {

constexpr long kMu = 1728;

void require(bool ok, const char* what)
{
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

// One-variable ingredients shared by the two-variable constructions.
struct Forms {
    LaurentSeries e4, e6, e4_half, e4_3half, e4_5half, disc, a;

    explicit Forms(int order)
    {
        e4 = eisenstein(4, order).series;
        e6 = eisenstein(6, order).series;
        e4_half = pow_rat(e4, Rat(1, 2));
        e4_3half = pow_rat(e4, Rat(3, 2));
        e4_5half = pow_rat(e4, Rat(5, 2));
        disc = pow_int(e4, 3) - e6 * e6;
        a = e6 * pow_rat(e4, Rat(-3, 2));
    }
};

// Places q-hat_1 / q-hat_2 series into their slots with the slot's truncation.
struct Slots {
    Orientation o;
    int order1;
    int order2;

    int tau1_order() const { return o == Orientation::tau1_outer ? order1 : order2; }
    int tau2_order() const { return o == Orientation::tau1_outer ? order2 : order1; }
    BiSeries t1(const LaurentSeries& s) const { return lift_tau1(s.truncated(tau1_order()), o); }
    BiSeries t2(const LaurentSeries& s) const { return lift_tau2(s.truncated(tau2_order()), o); }
};

// Compares on outer exponents [lo, n) and inner exponents [-n, n), where lo
// is the lower of the two outer valuations (not below -n).
VerifyReport compare_box(const std::string& name, const BiSeries& expected, const BiSeries& actual, int n)
{
    int lo = 0;
    if (!expected.is_zero()) {
        lo = std::min(lo, expected.outer_valuation());
    }
    if (!actual.is_zero()) {
        lo = std::min(lo, actual.outer_valuation());
    }
    lo = std::max(lo, -n);
    return compare_bi(name, expected, actual, lo, n, -n, n);
}

} // namespace

LaurentSeries hyp2f1(const HypergeometricParams& p, int order)
{
    require(order >= 1, "hyp2f1: order must be at least 1");
    if (is_integer(p.c) && p.c <= 0) {
        throw std::invalid_argument("hyp2f1: c must not be a nonpositive integer");
    }
    std::vector<Rat> c(static_cast<std::size_t>(order));
    Rat term = 1;
    for (int n = 0; n < order; ++n) {
        c[static_cast<std::size_t>(n)] = term;
        term *= (p.a + n) * (p.b + n) / ((p.c + n) * Rat(n + 1));
    }
    return LaurentSeries(0, std::move(c), order);
}

LaurentSeries hypergeometric_operator(const HypergeometricParams& p, const LaurentSeries& g)
{
    const LaurentSeries d1 = derivative(g);
    const LaurentSeries d2 = derivative(d1);
    const LaurentSeries t_one_minus_t(1, {Rat(1), Rat(-1)});
    const LaurentSeries first_coeff(0, {p.c, -(Rat(1) + p.a + p.b)});
    return t_one_minus_t * d2 + first_coeff * d1 - (p.a * p.b) * g;
}

VerifyReport verify_hyp2f1_operator(const HypergeometricParams& p, int order)
{
    require(order >= 1, "verify_hyp2f1_operator: order must be at least 1");
    const LaurentSeries residual = hypergeometric_operator(p, hyp2f1(p, order + 1));
    VerifyReport r = compare_series("hypergeometric operator", LaurentSeries::zero(order), residual, 0, order);
    r.name = "hyp2f1-operator";
    return r;
}

VerifyReport verify_fricke(int order)
{
    require(order >= 2, "verify_fricke: order must be at least 2");
    const HypergeometricParams p{Rat(1, 12), Rat(5, 12), Rat(1)};
    const LaurentSeries t = scale(invert(j_norm(order)), Rat(kMu));
    const LaurentSeries lhs = compose(hyp2f1(p, order), t);
    const LaurentSeries rhs = pow_rat(eisenstein(4, order).series, Rat(1, 4));
    VerifyReport r = compare_series("fricke", rhs, lhs, 0, order);
    r.name = "fricke";
    return r;
}

VerifyReport verify_ode_solution(int order)
{
    require(order >= 2, "verify_ode_solution: order must be at least 2");
    return with_working_margin(4, [&](int margin) {
        const int w = order + margin;
        const LaurentSeries e4 = eisenstein(4, w).series;
        const LaurentSeries e6 = eisenstein(6, w).series;
        const LaurentSeries j = j_norm(w);
        const LaurentSeries g = pow_rat(e4, Rat(1, 4));
        // d/dj = (dj/dtau)^-1 d/dtau with theta j = -j E6/E4
        const LaurentSeries k = neg(e4 * invert(j * e6));
        const LaurentSeries dg = k * theta(g);
        const LaurentSeries ddg = k * theta(dg);
        const LaurentSeries residual = (j - Rat(kMu)) * j * j * ddg + (j - Rat(kMu / 2)) * j * dg - Rat(60) * g;
        VerifyReport r = compare_series("ode", LaurentSeries::zero(order), residual, -3, order);
        r.name = "klm-ode";
        return r;
    });
}

BiSeries lift_tau1(const LaurentSeries& s, Orientation o)
{
    return o == Orientation::tau1_outer ? bi_lift_outer(s) : bi_lift_inner(s);
}

BiSeries lift_tau2(const LaurentSeries& s, Orientation o)
{
    return o == Orientation::tau1_outer ? bi_lift_inner(s) : bi_lift_outer(s);
}

BiSeries theta_tau1(const BiSeries& s, Orientation o)
{
    return o == Orientation::tau1_outer ? bi_theta_outer(s) : bi_theta_inner(s);
}

MirrorMaps mirror_maps(int order1, int order2, Orientation o)
{
    require(order1 >= 1 && order2 >= 1, "mirror_maps: orders must be positive");
    const Forms f(std::max(order1, order2));
    const Slots s{o, order1, order2};
    MirrorMaps m;
    m.u1 = bi_scale(Rat(1) - s.t1(f.a) * s.t2(f.a), Rat(1, 864));
    const BiSeries x = s.t1(f.e4_3half) * s.t2(f.e4_3half) - s.t1(f.e6) * s.t2(f.e6);
    const BiSeries inv_x = bi_invert(x);
    m.u2 = bi_scale(s.t1(f.disc) * s.t2(f.disc) * inv_x * inv_x, Rat(1, 4));
    return m;
}

LaurentSeries sqrt_j_j_minus_mu(int order)
{
    require(order >= 1, "sqrt_j_j_minus_mu: order must be positive");
    const LaurentSeries j = j_norm(order + 1);
    const LaurentSeries p = (j * (j - Rat(kMu))).shifted(2);
    return pow_rat(p, Rat(1, 2)).shifted(-1).truncated(order);
}

MirrorMaps mirror_maps_j_form(int order1, int order2, Orientation o)
{
    require(order1 >= 1 && order2 >= 1, "mirror_maps_j_form: orders must be positive");
    const int w = std::max(order1, order2);
    const LaurentSeries j = j_norm(w);
    const LaurentSeries root = sqrt_j_j_minus_mu(w);
    const Slots s{o, order1, order2};
    const BiSeries j1 = s.t1(j);
    const BiSeries j2 = s.t2(j);
    const BiSeries n = j1 * j2 + s.t1(root) * s.t2(root);
    const BiSeries sum = j1 + j2 - Rat(kMu);
    MirrorMaps m;
    m.u1 = bi_scale(sum * bi_invert(n), Rat(2));
    m.u2 = n * n * bi_invert(bi_scale(j1 * j2 * sum * sum, Rat(4)));
    return m;
}

MirrorMaps mirror_map_derivatives(int order1, int order2, Orientation o)
{
    require(order1 >= 1 && order2 >= 1, "mirror_map_derivatives: orders must be positive");
    const Forms f(std::max(order1, order2));
    const Slots s{o, order1, order2};
    MirrorMaps d;
    d.u1 = s.t2(f.e6) * s.t1(f.disc) * bi_invert(bi_scale(s.t2(f.e4_3half) * s.t1(f.e4_5half), Rat(kMu)));
    const BiSeries x = s.t2(f.e4_3half) * s.t1(f.e4_3half) - s.t2(f.e6) * s.t1(f.e6);
    const BiSeries mixed = s.t2(f.e4_3half) * s.t1(f.e6) - s.t1(f.e4_3half) * s.t2(f.e6);
    d.u2 = s.t1(f.e4_half) * s.t2(f.disc) * mixed * s.t1(f.disc) * bi_invert(bi_scale(bi_pow_int(x, 3), Rat(4)));
    return d;
}

VerifyReport verify_vvh_equivalence(int order)
{
    require(order >= 2, "verify_vvh_equivalence: order must be at least 2");
    VerifyReport r;
    r.name = "vvh";

    const int w = order + 2;
    const LaurentSeries j = j_norm(w);
    const LaurentSeries e4 = eisenstein(4, w).series;
    const LaurentSeries e6 = eisenstein(6, w).series;
    const LaurentSeries eta_inv = invert(eta24(w + 2).series);
    r.merge(compare_series("j - 1728 = E6^2/eta24", e6 * e6 * eta_inv, j - Rat(kMu), -1, order));
    const LaurentSeries root = sqrt_j_j_minus_mu(w);
    r.merge(compare_series("R^2 = j(j - 1728)", j * (j - Rat(kMu)), root * root, -2, order));
    r.merge(compare_series("R = E4^(3/2) E6/eta24", pow_rat(e4, Rat(3, 2)) * e6 * eta_inv, root, -1, order));

    r.merge(with_working_margin(order, [&](int margin) {
        const int outer = order + margin;
        const int inner = order + 3 * margin;
        const MirrorMaps e = mirror_maps(outer, inner);
        const MirrorMaps jf = mirror_maps_j_form(outer, inner);
        VerifyReport part = compare_box("u1 j-form", e.u1, jf.u1, order);
        part.merge(compare_box("u2 j-form", e.u2, jf.u2, order));
        return part;
    }));
    return r;
}

VerifyReport verify_mirror_derivatives(int order)
{
    require(order >= 2, "verify_mirror_derivatives: order must be at least 2");
    return with_working_margin(order, [&](int margin) {
        const int outer = order + margin;
        const int inner = order + 3 * margin;
        const MirrorMaps m = mirror_maps(outer, inner);
        const MirrorMaps d = mirror_map_derivatives(outer, inner);
        VerifyReport r = compare_box("du1/dtau1", d.u1, bi_theta_outer(m.u1), order);
        r.merge(compare_box("du2/dtau1", d.u2, bi_theta_outer(m.u2), order));
        r.name = "mirror-derivatives";
        return r;
    });
}

VerifyReport verify_f3_cancellation(int bi_order, YukawaVariant variant, Orientation o)
{
    require(bi_order >= 2, "verify_f3_cancellation: bi_order must be at least 2");
    return with_working_margin(bi_order, [&](int margin) {
        const int outer = bi_order + margin;
        const int inner = bi_order + 3 * margin;
        const MirrorMaps m = mirror_maps(outer, inner, o);
        const MirrorMaps d = mirror_map_derivatives(outer, inner, o);
        const BiSeries x = bi_scale(m.u1, Rat(432));
        const BiSeries y = bi_scale(m.u2, Rat(4));
        const BiSeries dx = bi_scale(d.u1, Rat(432));
        const BiSeries dy = bi_scale(d.u2, Rat(4));
        const YukawaLimits<BiSeries> lim = yukawa_limits(x, y, variant);
        const BiSeries q = lim.l113 * dx * dx + bi_scale(lim.l123 * dx * dy, Rat(2)) + lim.l223 * dy * dy;
        VerifyReport r = compare_box("f3 coefficient", BiSeries::zero(), q, bi_order);
        r.name = "f3";
        return r;
    });
}

MirrorMaps v678_rhs_parts(int order1, int order2, Orientation o)
{
    const Forms f(std::max(order1, order2));
    const Slots s{o, order1, order2};
    MirrorMaps parts;
    parts.u1 = bi_scale(s.t2(f.e4) * s.t1(f.e4) * s.t2(f.e6) * s.t1(f.disc), Rat(-2));
    parts.u2 = s.t2(pow_int(f.e4, 3)) * s.t1(f.e6 * f.e6) - s.t1(pow_int(f.e4, 3)) * s.t2(f.e6 * f.e6);
    return parts;
}

VerifyReport verify_v678(int bi_order, YukawaVariant variant, Orientation o, bool check_swap)
{
    require(bi_order >= 2, "verify_v678: bi_order must be at least 2");
    VerifyReport r;
    r.name = "v678";
    r.merge(with_working_margin(bi_order, [&](int margin) {
        const int outer = bi_order + margin;
        const int inner = bi_order + 3 * margin;
        const Slots s{o, outer, inner};
        const Forms f(std::max(outer, inner));
        const MirrorMaps m = mirror_maps(outer, inner, o);
        const MirrorMaps d = mirror_map_derivatives(outer, inner, o);
        const BiSeries x = bi_scale(m.u1, Rat(432));
        const BiSeries y = bi_scale(m.u2, Rat(4));
        const BiSeries dx = bi_scale(d.u1, Rat(432));
        const BiSeries dy = bi_scale(d.u2, Rat(4));
        const YukawaLimits<BiSeries> lim = yukawa_limits(x, y, variant);
        const BiSeries dx2 = dx * dx;
        const BiSeries dy2 = dy * dy;
        const BiSeries g = dx2 * dx * lim.y111 + bi_scale(dx2 * dy * lim.y112, Rat(3))
            + bi_scale(dx * dy2 * lim.y122, Rat(3)) + dy2 * dy * lim.y222;
        const MirrorMaps rhs = v678_rhs_parts(outer, inner, o);
        const BiSeries varpi0_sq = s.t1(f.e4_half) * s.t2(f.e4_half);
        VerifyReport part = compare_box("v678 cleared", varpi0_sq * rhs.u1, g * rhs.u2, bi_order);
        return part;
    }));
    if (!check_swap) {
        return r;
    }

    // q-hat_1 = q2 (inner), q-hat_2 = q1 (outer): the right side becomes the
    // two-variable function 2 f(q1) E4(q2)/(j(q1) - j(q2)).
    const int n = bi_order;
    r.merge(with_working_margin(n, [&](int margin) {
        const int outer = n + 1;
        const int inner = n + 1 + 3 * margin;
        const MirrorMaps rhs = v678_rhs_parts(outer + margin, inner, Orientation::tau1_inner);
        const BiSeries swapped = (rhs.u1 * bi_invert(rhs.u2)).truncated_outer(outer);
        const BiSeries btxg = bi_scale(harvey_moore_lhs(outer, inner), Rat(2));
        VerifyReport part = compare_bi("v678 swap image", btxg, swapped, 0, outer, -n, n + 1);
        part.merge(compare_bi("btxg - 2 = lattice sum", lattice_sum(outer, n + 1), btxg - Rat(2), 0, outer, -n,
                              n + 1));
        const GwTable gw = gw_closed_form(n, n);
        for (const auto& [key, value] : gw.values) {
            const long d2 = key.second;
            part.record({key.first, key.second}, Rat(d2 * d2 * d2) * value, btxg.coeff(key.first, key.second));
        }
        return part;
    }));
    return r;
}

const std::array<PFOperator, 3>& pf_operators()
{
    static const std::array<PFOperator, 3> ops{{
        {"L1", "th1 (th1 - 2 th2 - 2 th3) - 12 (6 th1 - 5)(6 th1 - 1) u1"},
        {"L2", "th2^2 - (2 th2 + 2 th3 - th1 - 2)(2 th2 + 2 th3 - th1 - 1) u2"},
        {"L3", "th3^2 - (2 th2 + 2 th3 - th1 - 2)(2 th2 + 2 th3 - th1 - 1) u3"},
    }};
    return ops;
}

} // namespace yzq
