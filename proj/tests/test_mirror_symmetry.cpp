#include "oracles.hpp"

#include "yzq/mirror_symmetry.hpp"
#include "yzq/modular_forms.hpp"

#include <doctest.h>

#include <random>

using namespace yzq;

namespace {

const HypergeometricParams kFricke{Rat(1, 12), Rat(5, 12), Rat(1)};

} // namespace

TEST_CASE("hypergeometric series")
{
    const LaurentSeries f = hyp2f1(kFricke, 6);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(1) == Rat(5, 144));
    // (a)_2 (b)_2 / ((c)_2 2!) = (1/12)(13/12)(5/12)(17/12) / 4
    CHECK(f.coeff(2) == Rat(1 * 13 * 5 * 17, 12 * 12 * 12 * 12 * 4));
    CHECK_THROWS_AS(hyp2f1({Rat(1), Rat(1), Rat(-2)}, 4), std::invalid_argument);
    CHECK_THROWS_AS(hyp2f1({Rat(1), Rat(1), Rat(0)}, 4), std::invalid_argument);
    // 2F1(1, 1; 2; t) = -log(1 - t)/t
    const LaurentSeries g = hyp2f1({Rat(1), Rat(1), Rat(2)}, 8);
    for (int n = 0; n < 8; ++n) {
        CHECK(g.coeff(n) == Rat(1, n + 1));
    }
    for (const auto& p : {kFricke, HypergeometricParams{Rat(1, 2), Rat(1, 3), Rat(7, 5)}}) {
        const VerifyReport r = verify_hyp2f1_operator(p, 20);
        INFO(r.describe());
        CHECK(r.ok);
    }
    // a wrong parameter does not solve the equation
    const LaurentSeries wrong = hypergeometric_operator(kFricke, hyp2f1({Rat(1, 12), Rat(5, 12), Rat(2)}, 10));
    CHECK(wrong.coeff(0) != 0);
}

TEST_CASE("Fricke identity for E4^(1/4)")
{
    const LaurentSeries e4q = pow_rat(eisenstein(4, 4).series, Rat(1, 4));
    CHECK(e4q.coeff(1) == 60);
    CHECK(e4q.coeff(2) == -4860);
    const VerifyReport r = verify_fricke(25);
    INFO(r.describe());
    CHECK(r.ok);
    CHECK(r.checked == 25);
}

TEST_CASE("ODE in j solved by E4^(1/4)")
{
    const VerifyReport r = verify_ode_solution(20);
    INFO(r.describe());
    CHECK(r.ok);
}

TEST_CASE("mirror maps at the expansion point")
{
    const MirrorMaps m = mirror_maps(6, 6);
    CHECK(m.u1.coeff(0, 0) == 0);
    // E6/E4^(3/2) = 1 - 864 q + ..., so u1 = q1 + q2 + ...
    CHECK(m.u1.coeff(1, 0) == 1);
    CHECK(m.u1.coeff(0, 1) == 1);
    // u2 ~ q1 q2 / (q1 + q2)^2: the numerator vanishes at both origins, and
    // for |q1| < |q2| the rows carry poles in q2.
    CHECK(m.u2.outer_valuation() == 1);
    CHECK(m.u2.coeff(1, -1) == 1);
    CHECK(m.u2.coeff(2, -2) == -2);
    CHECK(m.u2.coeff(1, -2) == 0);
    // u1 is a power series in both variables, symmetric under exchanging them
    const MirrorMaps s = mirror_maps(6, 6, Orientation::tau1_inner);
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            CHECK(m.u1.coeff(a, b) == s.u1.coeff(a, b));
            CHECK(m.u1.coeff(a, b) == m.u1.coeff(b, a));
        }
    }
}

TEST_CASE("square-root branch of j(j - 1728)")
{
    const LaurentSeries r = sqrt_j_j_minus_mu(10);
    CHECK(r.valuation() == -1);
    CHECK(r.coeff(-1) == 1);
    const VerifyReport v = verify_vvh_equivalence(8);
    INFO(v.describe());
    CHECK(v.ok);

    // The other branch -R gives a different u1.
    const int n = 6;
    const LaurentSeries j = j_norm(3 * n);
    const LaurentSeries root = sqrt_j_j_minus_mu(3 * n);
    const BiSeries j1 = lift_tau1(j.truncated(n + 2), Orientation::tau1_outer);
    const BiSeries j2 = lift_tau2(j, Orientation::tau1_outer);
    const BiSeries r1 = lift_tau1(root.truncated(n + 2), Orientation::tau1_outer);
    const BiSeries r2 = lift_tau2(root, Orientation::tau1_outer);
    const BiSeries other = bi_scale((j1 + j2 - Rat(1728)) * bi_invert(j1 * j2 - r1 * r2), Rat(2));
    const MirrorMaps e = mirror_maps(3 * n, 3 * n);
    CHECK_FALSE(compare_bi("opposite branch", e.u1, other, 0, n, -n, n).ok);
}

TEST_CASE("derivatives of the mirror maps two ways")
{
    const VerifyReport r = verify_mirror_derivatives(8);
    INFO(r.describe());
    CHECK(r.ok);
}

TEST_CASE("Yukawa table structure")
{
    const YukawaTable<Rat> t{Rat(1, 5), Rat(2, 7), Rat(1, 3)};
    CHECK(t.coupling(1, 1, 2) == t.coupling(2, 1, 1));
    CHECK(t.coupling(1, 2, 3) == t.coupling(3, 2, 1));
    CHECK(t.coupling(2, 3, 3) == t.coupling(3, 3, 2));
    CHECK_THROWS_AS(t.coupling(1, 2, 4), std::invalid_argument);
    const YukawaTable<Rat> origin{Rat(0), Rat(0), Rat(0)};
    CHECK(origin.delta2() == 1);
    CHECK(origin.a2() == 1);
    CHECK(origin.a3() == 1);
    CHECK(origin.delta1() == 1);
}

TEST_CASE("finite limits match z Y_ij3 as z -> 0")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(1, 9);
    const LaurentSeries eps(1, {Rat(1)}, 6);
    for (const YukawaVariant v : {YukawaVariant::corrected, YukawaVariant::printed}) {
        for (int trial = 0; trial < 12; ++trial) {
            const Rat x0(num(rng), 11);
            const Rat y0(num(rng), 13);
            const YukawaLimits<Rat> lim = yukawa_limits(x0, y0, v);
            const YukawaTable<LaurentSeries> t{LaurentSeries::constant(x0), LaurentSeries::constant(y0), eps, v};
            CHECK((eps * t.coupling(1, 1, 3)).coeff(0) == lim.l113);
            CHECK((eps * t.coupling(1, 2, 3)).coeff(0) == lim.l123);
            CHECK((eps * t.coupling(2, 2, 3)).coeff(0) == lim.l223);
            CHECK(t.coupling(1, 1, 1).coeff(0) == lim.y111);
            CHECK(t.coupling(1, 1, 2).coeff(0) == lim.y112);
            CHECK(t.coupling(1, 2, 2).coeff(0) == lim.y122);
            CHECK(t.coupling(2, 2, 2).coeff(0) == lim.y222);
        }
    }
}

TEST_CASE("Y111 carries 8 / x^3 at the origin")
{
    const LaurentSeries eps(1, {Rat(1)}, 8);
    const YukawaLimits<LaurentSeries> lim = yukawa_limits(eps, eps);
    CHECK((pow_int(eps, 3) * lim.y111).coeff(0) == 8);
}

TEST_CASE("f3 cancels with the corrected table, in both orientations")
{
    const VerifyReport r = verify_f3_cancellation(8);
    INFO(r.describe());
    CHECK(r.ok);
    const VerifyReport s = verify_f3_cancellation(6, YukawaVariant::corrected, Orientation::tau1_inner);
    INFO(s.describe());
    CHECK(s.ok);
}

TEST_CASE("the table as usually printed breaks both endpoint identities")
{
    CHECK_FALSE(verify_f3_cancellation(4, YukawaVariant::printed).ok);
    CHECK_FALSE(verify_v678(4, YukawaVariant::printed, Orientation::tau1_outer, false).ok);
}

TEST_CASE("Yukawa limit identity and its swap image")
{
    const VerifyReport r = verify_v678(6);
    INFO(r.describe());
    CHECK(r.ok);
    const VerifyReport s = verify_v678(5, YukawaVariant::corrected, Orientation::tau1_inner, false);
    INFO(s.describe());
    CHECK(s.ok);
}

TEST_CASE("Picard-Fuchs operators are reference text")
{
    const auto& ops = pf_operators();
    CHECK(ops.size() == 3);
    CHECK(std::string(ops[0].name) == "L1");
}
