#include "oracles.hpp"

#include "yzq/noether_lefschetz.hpp"

#include <doctest.h>

#include <numeric>

using namespace yzq;

TEST_CASE("discriminant equals the extended Gram determinant")
{
    for (int h = -3; h <= 12; ++h) {
        for (int d1 = -6; d1 <= 6; ++d1) {
            for (int d2 = -6; d2 <= 6; ++d2) {
                CHECK(discriminant(h, d1, d2) == oracle::discriminant_by_determinant(h, d1, d2));
            }
        }
    }
    CHECK(StuLattice::gram[0][1] == 1);
    CHECK(StuLattice::gram[0][0] == 0);
}

TEST_CASE("NL numbers are -4 times coefficients of E4 E6")
{
    const int n = 30;
    const oracle::Poly e4e6 = oracle::mul(oracle::e4(n), oracle::e6(n), n);
    for (int h = 0; h <= 20; ++h) {
        for (int d1 = -4; d1 <= 4; ++d1) {
            for (int d2 = -4; d2 <= 4; ++d2) {
                const long delta = discriminant(h, d1, d2);
                const Rat expect = delta < 0 ? Rat(0) : Rat(-4) * e4e6[static_cast<std::size_t>(delta / 2)];
                CHECK(nl_number(h, d1, d2) == expect);
            }
        }
    }
}

TEST_CASE("NL anchors")
{
    CHECK(nl_number(0, 0, 0) == 1056);
    CHECK(nl_number(NLKey{1, 0, 0}) == -4);
    CHECK(nl_number(3, 2, 1) == -4);
    CHECK(nl_number(2, 0, 0) == 0);
    CHECK(nl_number(3, 1, -1) == 0);
}

TEST_CASE("refined numbers")
{
    CHECK(nl_refined(1, 1, 0, 1) == -4);
    CHECK(nl_refined(RefinedNLKey{1, 0, 0, 1}) == 1056);
    CHECK_THROWS_AS(nl_refined(1, 1, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(nl_refined(0, 1, 1, 1), std::invalid_argument);
    // primitive (d1, d2): only m = 1 contributes
    for (int h = 0; h <= 8; ++h) {
        CHECK(nl_refined(1, h, 1, 3) == nl_number(h, 1, 3));
        CHECK(nl_refined(2, h, 1, 3) == 0);
    }
    // (m, s) = (2, 2): the diagonal key (2, 2) at h = 5 has Delta = 0
    CHECK(nl_refined(2, 5, 2, 2) == -4);
    CHECK(nl_refined(2, 2, 2, 2) == 0);
}

TEST_CASE("refined numbers sum to the unrefined ones")
{
    for (int h = 0; h <= 20; ++h) {
        for (int d1 = -6; d1 <= 6; ++d1) {
            for (int d2 = -6; d2 <= 6; ++d2) {
                if (d1 == 0 && d2 == 0) {
                    continue;
                }
                Rat sum = 0;
                for (int m = 1; m <= 6; ++m) {
                    sum += nl_refined(m, h, d1, d2);
                }
                CHECK(sum == nl_number(h, d1, d2));
                const int g = std::gcd(d1, d2);
                for (int m = 1; m <= 6; ++m) {
                    if (g % m != 0) {
                        CHECK(nl_refined(m, h, d1, d2) == 0);
                    }
                }
            }
        }
    }
}
