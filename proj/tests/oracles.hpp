#pragma once

// Naive reference computations used as independent oracles. Nothing here
// calls the series kernel: power series are plain coefficient vectors from
// q^0, multiplied by schoolbook convolution.

#include "yzq/rational.hpp"

#include <array>
#include <cstddef>
#include <vector>

namespace oracle {

using yzq::Int;
using yzq::Rat;
using Poly = std::vector<Rat>;

inline Poly mul(const Poly& a, const Poly& b, std::size_t n)
{
    Poly c(n, Rat(0));
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
            c[i + j] += a[i] * b[j];
        }
    }
    return c;
}

// 1/a for a[0] != 0, by solving a * b = 1 term by term.
inline Poly inverse(const Poly& a, std::size_t n)
{
    Poly b(n, Rat(0));
    b[0] = Rat(1) / a[0];
    for (std::size_t k = 1; k < n; ++k) {
        Rat s = 0;
        for (std::size_t i = 1; i <= k && i < a.size(); ++i) {
            s += a[i] * b[k - i];
        }
        b[k] = -s / a[0];
    }
    return b;
}

inline Int divisor_power_sum(int k, long n)
{
    Int s = 0;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) {
            Int p = 1;
            for (int i = 0; i < k; ++i) {
                p *= d;
            }
            s += p;
        }
    }
    return s;
}

// 1 + c * sum sigma_{k}(n) q^n.
inline Poly eisenstein_like(long c, int k, std::size_t n)
{
    Poly e(n, Rat(0));
    e[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        e[m] = Rat(c) * Rat(divisor_power_sum(k, static_cast<long>(m)));
    }
    return e;
}

inline Poly e4(std::size_t n) { return eisenstein_like(240, 3, n); }
inline Poly e6(std::size_t n) { return eisenstein_like(-504, 5, n); }

// prod_{m >= 1} (1 - q^m)^e by repeated multiplication (e may be negative).
inline Poly euler_power(int e, std::size_t n)
{
    Poly r(n, Rat(0));
    r[0] = 1;
    for (std::size_t m = 1; m < n; ++m) {
        Poly f(n, Rat(0));
        f[0] = 1;
        if (e >= 0) {
            f[m] = -1;
        } else {
            for (std::size_t k = m; k < n; k += m) {
                f[k] = 1;
            }
        }
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) {
            r = mul(r, f, n);
        }
    }
    return r;
}

// Coefficients of prod (1 - q^n)^24 from q^0; eta24 is this shifted by one.
inline Poly eta24_shifted(std::size_t n) { return euler_power(24, n); }

// c(-1), c(0), ... of E4 E6 / eta24, i.e. (E4 E6 / prod(1-q^n)^24) shifted.
inline Poly f_coefficients(std::size_t n)
{
    return mul(mul(e4(n), e6(n), n), inverse(eta24_shifted(n), n), n);
}

inline long det3(const std::array<std::array<long, 3>, 3>& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// (-1)^2 det of the Gram matrix of U extended by a class of norm 2h - 2 and
// intersections d1, d2.
inline long discriminant_by_determinant(int h, int d1, int d2)
{
    return det3({{{0, 1, d1}, {1, 0, d2}, {d1, d2, 2L * h - 2}}});
}

// Generalized binomial coefficient binom(p, k).
inline Rat binomial(const Rat& p, int k)
{
    Rat r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (p - i) / Rat(i + 1);
    }
    return r;
}

inline int mobius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    return n > 1 ? -result : result;
}

} // namespace oracle
