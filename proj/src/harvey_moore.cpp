#include "yzq/harvey_moore.hpp"

#include "yzq/modular_forms.hpp"
#include "yzq/precision.hpp"
#include "yzq/weakly_holomorphic.hpp"

#include <stdexcept>

namespace yzq {

namespace {

void check_integral(VerifyReport& r, const BiSeries& s, int a_lo, int a_hi, int b_lo, int b_hi)
{
    for (int a = a_lo; a < a_hi; ++a) {
        const LaurentSeries row = s.row(a);
        for (int b = b_lo; b < b_hi; ++b) {
            const Rat c = row.coeff(b);
            if (!is_integer(c)) {
                r.flag({a, b}, c, "non-integral coefficient");
            }
        }
    }
}

} // namespace

BiSeries harvey_moore_lhs(int outer, int inner)
{
    if (outer < 1) {
        throw std::invalid_argument("harvey_moore_lhs: outer order must be positive");
    }
    // Row n of 1/(j1 - j2) has an inner pole of order n and loses about n
    // inner exponents to the pole of j2, hence the extra 2*outer.
    const int w = inner + 2 * outer + 2;
    const BiSeries den = bi_lift_outer(j_norm(outer + 1)) - bi_lift_inner(j_norm(w));
    const BiSeries num = bi_lift_outer(f_series(outer + 1).series) * bi_lift_inner(eisenstein(4, w).series);
    return (num * bi_invert(den)).truncated_outer(outer);
}

BiSeries harvey_moore_rhs(int outer, int inner)
{
    if (outer < 1) {
        throw std::invalid_argument("harvey_moore_rhs: outer order must be positive");
    }
    const LaurentSeries f = f_series(std::max(outer * std::max(inner, 1), 2) + 1).series;
    std::vector<LaurentSeries> rows;
    for (int a = 0; a < outer; ++a) {
        const int lo = std::min(-a, 0);
        if (inner <= lo) {
            rows.push_back(LaurentSeries::zero(inner));
            continue;
        }
        std::vector<Rat> c(static_cast<std::size_t>(inner - lo));
        const auto at = [&](int e) -> Rat& { return c[static_cast<std::size_t>(e - lo)]; };
        if (a == 0) {
            const LaurentSeries e4 = eisenstein(4, inner).series;
            for (int e = 0; e < inner; ++e) {
                at(e) += e4.coeff(e);
            }
        } else {
            at(-a) += 1;
            for (int d = 1; d <= a; ++d) {
                if (a % d != 0) {
                    continue;
                }
                const int k = a / d;
                for (int l = 1; l * d < inner; ++l) {
                    at(l * d) -= Rat(static_cast<long>(l) * l * l) * f.coeff(k * l);
                }
            }
        }
        rows.push_back(LaurentSeries(lo, std::move(c), inner));
    }
    return BiSeries(0, std::move(rows), outer);
}

BiSeries lattice_sum(int outer, int inner)
{
    if (outer < 1) {
        throw std::invalid_argument("lattice_sum: outer order must be positive");
    }
    const int lo = -(outer - 1);
    const int hi = std::max(inner, lo);
    const LaurentSeries f = f_series(std::max((outer - 1) * std::max(inner - 1, 1), 1) + 1).series;
    std::vector<std::vector<Rat>> grid(static_cast<std::size_t>(outer),
                                       std::vector<Rat>(static_cast<std::size_t>(hi - lo)));
    const auto add_tower = [&](int d1, int d2) {
        const long prod = static_cast<long>(d1) * d2;
        if (prod < -1) {
            return;
        }
        const Rat weight = Rat(static_cast<long>(d2) * d2 * d2) * Rat(-2) * f.coeff(static_cast<int>(prod));
        if (weight == 0) {
            return;
        }
        for (int k = 1;; ++k) {
            const long a = static_cast<long>(k) * d1;
            const long b = static_cast<long>(k) * d2;
            if (a >= outer || b >= hi || b < lo) {
                break;
            }
            grid[static_cast<std::size_t>(a)][static_cast<std::size_t>(b - lo)] += weight;
        }
    };
    for (int d2 = 1; d2 < hi; ++d2) {
        add_tower(0, d2);
    }
    for (int d1 = 1; d1 < outer; ++d1) {
        for (int d2 = -d1; d2 < hi; ++d2) {
            if (d2 != 0) {
                add_tower(d1, d2);
            }
        }
    }
    std::vector<LaurentSeries> rows;
    for (auto& g : grid) {
        rows.push_back(LaurentSeries(lo, std::move(g), hi));
    }
    return BiSeries(0, std::move(rows), outer);
}

VerifyReport verify_harmoo(int n1, int window)
{
    if (n1 < 1 || window < 0) {
        throw std::invalid_argument("verify_harmoo: need n1 >= 1 and window >= 0");
    }
    const int outer = n1 + 1;
    const int inner = window + 1;
    const BiSeries lhs = with_working_margin(2, [&](int margin) {
        BiSeries s = harvey_moore_lhs(outer, inner + margin);
        static_cast<void>(s.coeff(outer - 1, window));
        for (int a = 0; a < outer; ++a) {
            static_cast<void>(s.row(a).coeff(window));
        }
        return s;
    });
    const BiSeries rhs = harvey_moore_rhs(outer, inner);

    VerifyReport r;
    r.name = "harvey-moore";
    r.merge(compare_bi("harvey-moore", rhs, lhs, 0, outer, -window, window + 1));
    const BiSeries via_fn = fn_generating_series(n1, inner);
    r.merge(compare_bi("harvey-moore F_n route", via_fn, lhs, 0, outer, -window, window + 1));
    return r;
}

VerifyReport verify_ppx(int n1, int n2)
{
    if (n1 < 1 || n2 < 1) {
        throw std::invalid_argument("verify_ppx: need n1, n2 >= 1");
    }
    const int outer = n1 + 1;
    const int inner = n2 + 1;
    const BiSeries lhs = with_working_margin(2, [&](int margin) {
        BiSeries s = harvey_moore_lhs(outer, inner + margin);
        for (int a = 0; a < outer; ++a) {
            static_cast<void>(s.row(a).coeff(n2));
        }
        return s;
    });
    const BiSeries btxg = bi_scale(lhs, Rat(2)) - Rat(2);
    const BiSeries sum = lattice_sum(outer, inner);

    VerifyReport r;
    r.name = "ppx";
    r.merge(compare_bi("ppx", btxg, sum, 0, outer, -n2, n2 + 1));
    r.merge(compare_bi("ppx vs harvey-moore rhs", bi_scale(harvey_moore_rhs(outer, inner), Rat(2)) - Rat(2), sum,
                       0, outer, -n2, n2 + 1));
    check_integral(r, sum, 0, outer, -n2, n2 + 1);
    check_integral(r, btxg, 0, outer, -n2, n2 + 1);
    return r;
}

} // namespace yzq
