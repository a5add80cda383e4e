#include "oracles.hpp"

#include "yzq/modular_forms.hpp"

#include <doctest.h>

using namespace yzq;

TEST_CASE("Bernoulli numbers and divisor sums")
{
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == Rat(-1, 2));
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
    CHECK(bernoulli(12) == Rat(-691, 2730));
    CHECK(bernoulli(7) == 0);
    for (long n = 1; n < 40; ++n) {
        CHECK(sigma(3, n) == oracle::divisor_power_sum(3, n));
        CHECK(sigma(9, n) == oracle::divisor_power_sum(9, n));
    }
}

TEST_CASE("Eisenstein series match the divisor-sum expansions")
{
    const int n = 30;
    const oracle::Poly e4 = oracle::e4(n);
    const oracle::Poly e6 = oracle::e6(n);
    const oracle::Poly e10 = oracle::eisenstein_like(-264, 9, n);
    const oracle::Poly e2 = oracle::eisenstein_like(-24, 1, n);
    const WeightedForm w4 = eisenstein(4, n);
    CHECK(w4.weight == 4);
    CHECK_FALSE(w4.quasi_modular);
    CHECK(eisenstein(2, 3).quasi_modular);
    for (int k = 0; k < n; ++k) {
        CHECK(w4.series.coeff(k) == e4[k]);
        CHECK(eisenstein(6, n).series.coeff(k) == e6[k]);
        CHECK(eisenstein(10, n).series.coeff(k) == e10[k]);
        CHECK(eisenstein(2, n).series.coeff(k) == e2[k]);
    }
    CHECK(eisenstein(4, n).series.truncation() == n);
    CHECK_THROWS_AS(eisenstein(3, 5), std::invalid_argument);
}

TEST_CASE("E10 begins 1 - 264 q - 135432 q^2")
{
    const LaurentSeries e10 = eisenstein(10, 3).series;
    CHECK(e10.coeff(0) == 1);
    CHECK(e10.coeff(1) == -264);
    CHECK(e10.coeff(2) == -135432);
    // E12 carries the denominator 691
    CHECK(eisenstein(12, 2).series.coeff(1) == Rat(65520, 691));
}

TEST_CASE("eta24 against the naive product; Ramanujan tau")
{
    const int n = 25;
    const oracle::Poly p = oracle::eta24_shifted(n);
    const LaurentSeries eta = eta24(n + 1).series;
    CHECK(eta.valuation() == 1);
    for (int k = 0; k < n; ++k) {
        CHECK(eta.coeff(k + 1) == p[k]);
    }
    CHECK(eta.coeff(2) == -24);
    CHECK(eta.coeff(3) == 252);
    CHECK(eta.coeff(4) == -1472);
    CHECK(eta.coeff(5) == 4830);
    const LaurentSeries e = euler_product(30);
    const oracle::Poly ep = oracle::euler_power(1, 30);
    for (int k = 0; k < 30; ++k) {
        CHECK(e.coeff(k) == ep[k]);
    }
}

TEST_CASE("j has the classical coefficients")
{
    const LaurentSeries j = j_norm(4);
    CHECK(j.valuation() == -1);
    CHECK(j.coeff(-1) == 1);
    CHECK(j.coeff(0) == 744);
    CHECK(j.coeff(1) == 196884);
    CHECK(j.coeff(2) == 21493760);
    CHECK(j.coeff(3) == 864299970);
    CHECK(j.truncation() == 4);
}

TEST_CASE("f = E4 E6 / eta24 matches the naive quotient")
{
    const int n = 20;
    const oracle::Poly c = oracle::f_coefficients(n);
    const WeightedForm f = f_series(n - 1);
    CHECK(f.weight == -2);
    for (int k = -1; k < n - 1; ++k) {
        CHECK(f.series.coeff(k) == c[k + 1]);
        CHECK(f_coefficient(k) == c[k + 1]);
    }
    CHECK(f_coefficient(-1) == 1);
    CHECK(f_coefficient(0) == -240);
    CHECK(f_coefficient(1) == -141444);
    CHECK(f_coefficient(2) == -8529280);
    CHECK(f_coefficient(-2) == 0);
    CHECK(f_coefficient(-7) == 0);
}

TEST_CASE("the Yau-Zaslow series is prod (1 - q^n)^-24")
{
    const int n = 26;
    const oracle::Poly p = oracle::euler_power(-24, n);
    const LaurentSeries yz = yz_series(n);
    for (int k = 0; k < n; ++k) {
        CHECK(yz.coeff(k) == p[k]);
    }
    CHECK(yz.coeff(1) == 24);
    CHECK(yz.coeff(2) == 324);
    CHECK(yz.coeff(3) == 3200);
    CHECK(yz.coeff(4) == 25650);
    CHECK(yz.coeff(5) == 176256);
}

TEST_CASE("named forms")
{
    CHECK(named_form("j", 2) == j_norm(2));
    CHECK(named_form("E10", 5) == eisenstein(10, 5).series);
    CHECK(named_form("yz", 5) == yz_series(5));
    CHECK_THROWS_AS(named_form("E3", 5), std::invalid_argument);
    CHECK(form_names().size() == 11);
}

TEST_CASE("Ramanujan derivative identities and the product identities")
{
    const VerifyReport r = ramanujan_check(30);
    INFO(r.describe());
    CHECK(r.ok);
    const VerifyReport p = product_identities_check(30);
    INFO(p.describe());
    CHECK(p.ok);
    CHECK(p.checked > 0);
}

TEST_CASE("memoized expansions are consistent across orders")
{
    const LaurentSeries longer = eisenstein(6, 40).series;
    const LaurentSeries shorter = eisenstein(6, 10).series;
    CHECK(shorter == longer.truncated(10));
}
