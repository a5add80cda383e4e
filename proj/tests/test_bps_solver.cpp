#include "oracles.hpp"

#include "yzq/bps_solver.hpp"
#include "yzq/modular_forms.hpp"
#include "yzq/noether_lefschetz.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace yzq;

TEST_CASE("positive cone")
{
    CHECK(in_positive_cone(0, 1));
    CHECK(in_positive_cone(1, -1));
    CHECK(in_positive_cone(3, 0));
    CHECK_FALSE(in_positive_cone(0, 0));
    CHECK_FALSE(in_positive_cone(0, -1));
    CHECK_FALSE(in_positive_cone(1, -2));
    CHECK_FALSE(in_positive_cone(-1, 2));
}

TEST_CASE("multiple-cover conversion on small keys")
{
    GwTable gw;
    gw.values = {{{1, 1}, Rat(5)}, {{2, 2}, Rat(7)}, {{1, 2}, Rat(3)}, {{3, 3}, Rat(11)}};
    const BpsTable n = bps_from_gw(gw);
    CHECK(n.values.at({1, 1}) == 5);
    CHECK(n.values.at({1, 2}) == 3);
    CHECK(n.values.at({2, 2}) == Rat(7) - Rat(5, 8));
    CHECK(n.values.at({3, 3}) == Rat(11) - Rat(5, 27));
    // substitute back into N = sum d^-3 n(key/d)
    CHECK(n.values.at({2, 2}) + n.values.at({1, 1}) / 8 == 7);
    CHECK(gw_from_bps(n).values == gw.values);

    GwTable missing;
    missing.values = {{{2, 2}, Rat(1)}};
    CHECK_THROWS_AS(bps_from_gw(missing), std::invalid_argument);
}

TEST_CASE("conversion round trips on random tables")
{
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> v(-50, 50);
    for (int trial = 0; trial < 20; ++trial) {
        BpsTable b;
        for (int d1 = 0; d1 <= 6; ++d1) {
            for (int d2 = 1; d2 <= 6; ++d2) {
                b.values[{d1, d2}] = make_rat(v(rng), 1 + trial % 4);
            }
        }
        const GwTable g = gw_from_bps(b);
        CHECK(bps_from_gw(g).values == b.values);
        // direct Moebius sum as the oracle
        for (const auto& [key, value] : g.values) {
            const int gcd = std::gcd(key.first, key.second);
            Rat expect = 0;
            for (int d = 1; d <= gcd; ++d) {
                if (gcd % d == 0) {
                    expect += make_rat(oracle::mobius(d), d * d * d) * g.values.at({key.first / d, key.second / d});
                }
            }
            CHECK(b.values.at(key) == expect);
        }
    }
}

TEST_CASE("closed-form counts of both models")
{
    const int n = 5;
    const BpsTable resolved = bps_closed_form(n, n);
    const BpsTable original = bps_closed_form(n, n, BpsModel::original);
    CHECK(original.values.at({0, 1}) == 480);
    CHECK(original.values.at({1, 1}) == 282888);
    CHECK(resolved.values.at({0, 1}) == 960);
    CHECK(resolved.values.at({1, 1}) == 565776);
    for (const auto& [key, value] : resolved.values) {
        CHECK(key.second >= 1);
        CHECK(value == 2 * original.values.at(key));
        if (key.first >= 1) {
            CHECK(value == Rat(-4) * f_coefficient(key.first * key.second));
            CHECK(original.values.at(key) == Rat(-2) * f_coefficient(key.first * key.second));
        }
    }
    // d1 = 0 row: d2^3 N = 2 * 240 sigma_3(d2)
    const GwTable gw = gw_closed_form(n, n);
    for (int d2 = 1; d2 <= n; ++d2) {
        CHECK(Rat(d2 * d2 * d2) * gw.values.at({0, d2}) == Rat(480) * Rat(oracle::divisor_power_sum(3, d2)));
    }
    CHECK(gw.values.count({0, 0}) == 0);
    CHECK(bps_from_gw(gw).values == original.values);
}

TEST_CASE("boundary conventions of the reduced table")
{
    ReducedInvariantTable r;
    CHECK(reduced_value(r, 1, -1) == 0);
    CHECK(reduced_value(r, 1, 0) == 1);
    CHECK(reduced_value(r, 2, 0) == 0);
    CHECK(reduced_value(r, 2, 2) == 0);  // 4 does not divide 1
    CHECK_THROWS_AS(reduced_value(r, 1, 1), std::out_of_range);
}

TEST_CASE("first constraint by hand")
{
    // (m, s) = (1, 1): key (0, 1), target h = 1. The only other term is
    // r_(1,0) NL_(1,0,(0,1)) = 1 * (-4)(-264) = 1056.
    ReducedInvariantTable r;
    CHECK(assemble_constraint(1, 1, r) == 1056);
    CHECK(nl_refined(1, 0, 0, 1) == 1056);
    CHECK(nl_refined(1, 1, 0, 1) == -4);
}

TEST_CASE("solving recovers prod (1 - q^n)^-24")
{
    const YauZaslowRun run = verify_yau_zaslow(25, 4);
    INFO(run.report.describe());
    CHECK(run.report.ok);
    CHECK(run.report.checked >= 30);
    const LaurentSeries yz = yz_series(26);
    const auto& v = run.reduced.values;
    CHECK(v.at({1, 1}) == 24);
    CHECK(v.at({1, 2}) == 324);
    CHECK(v.at({1, 3}) == 3200);
    CHECK(v.at({2, 5}) == yz.coeff(5));
    // independence of m wherever several m are solvable
    for (const auto& [key, value] : v) {
        if (key.second >= 1) {
            CHECK(value == v.at({1, key.second}));
        }
    }
    CHECK(v.count({3, 10}) == 1);
    CHECK(v.count({4, 17}) == 1);
}

TEST_CASE("the undoubled counts do not solve to the Yau-Zaslow series")
{
    const BpsTable original = bps_closed_form(3, 2, BpsModel::original);
    const ReducedInvariantTable r = solve_reduced(3, 1, original);
    CHECK(r.values.at({1, 1}) == 144);
    CHECK(r.values.at({1, 1}) != 24);
}
