#include "yzq/weakly_holomorphic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace yzq {

WhBasisElement fn_basis(int n, int order)
{
    if (n < 0) {
        throw std::invalid_argument("fn_basis: index must be nonnegative");
    }
    if (order < 1) {
        throw std::invalid_argument("fn_basis: order must be at least 1");
    }
    const int work = order + n + 1;
    const LaurentSeries e4 = eisenstein(4, work).series;
    const LaurentSeries j = j_norm(work);

    // span[k] = E4 j^k, with leading term q^-k
    std::vector<LaurentSeries> span{e4};
    LaurentSeries jk = LaurentSeries::constant(Rat(1));
    for (int k = 1; k <= n; ++k) {
        jk = mul(jk, j);
        span.push_back(mul(e4, jk));
    }

    std::vector<Rat> poly(static_cast<std::size_t>(n) + 1);
    poly[static_cast<std::size_t>(n)] = 1;
    LaurentSeries fn = span[static_cast<std::size_t>(n)];
    for (int e = -n + 1; e <= 0; ++e) {
        const Rat c = fn.coeff(e);
        if (c != 0) {
            fn = sub(fn, scale(span[static_cast<std::size_t>(-e)], c));
            poly[static_cast<std::size_t>(-e)] -= c;
        }
    }
    return WhBasisElement{n, WeightedForm{4, fn.truncated(order)}, std::move(poly)};
}

WeightedForm hecke(const WeightedForm& form, int n, std::optional<int> output_order)
{
    if (n < 1) {
        throw std::invalid_argument("hecke: n must be positive");
    }
    const LaurentSeries& a = form.series;
    if (a.is_exact()) {
        throw std::invalid_argument("hecke: input must carry a finite truncation");
    }
    const int out_trunc = a.truncation() >= 0 ? a.truncation() / n
                                               : -((-a.truncation() + n - 1) / n);
    if (output_order && out_trunc < *output_order) {
        throw std::invalid_argument("hecke: T_" + std::to_string(n) + " to order " + std::to_string(*output_order)
                                    + " needs input order " + std::to_string(n * *output_order) + ", got "
                                    + std::to_string(a.truncation()));
    }
    const int trunc = output_order ? *output_order : out_trunc;
    const int lo = a.valuation() < 0 ? a.valuation() * n : 0;
    std::vector<Rat> dpow(static_cast<std::size_t>(n) + 1);
    for (int d = 1; d <= n; ++d) {
        dpow[static_cast<std::size_t>(d)] = pow(Rat(d), form.weight - 1);
    }
    auto b = LaurentSeries::generate(std::min(lo, trunc), trunc, [&](int m) {
        Rat s = 0;
        const int g = std::gcd(m, n);
        for (int d = 1; d <= g; ++d) {
            if (g % d != 0) {
                continue;
            }
            const long idx = static_cast<long>(m) * n / (static_cast<long>(d) * d);
            if (idx >= a.valuation()) {
                s += dpow[static_cast<std::size_t>(d)] * a.coeff(static_cast<int>(idx));
            }
        }
        return s;
    });
    return WeightedForm{form.weight, std::move(b), form.quasi_modular};
}

WeightedForm fn_via_hecke(int n, int order)
{
    if (n < 1) {
        throw std::invalid_argument("fn_via_hecke: n must be positive");
    }
    if (order < 1) {
        throw std::invalid_argument("fn_via_hecke: order must be at least 1");
    }
    const LaurentSeries f = f_series(n * order + 1).series;
    std::vector<Rat> c(static_cast<std::size_t>(order + n));
    const auto at = [&](int e) -> Rat& { return c[static_cast<std::size_t>(e + n)]; };
    at(-n) = 1;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const int k = n / d;
        for (int l = 1; l * d < order; ++l) {
            at(l * d) -= Rat(static_cast<long>(l) * l * l) * f.coeff(k * l);
        }
    }
    return WeightedForm{4, LaurentSeries(-n, std::move(c), order)};
}

VerifyReport bol_check(int order)
{
    if (order < 2) {
        throw std::invalid_argument("bol_check: order must be at least 2");
    }
    const LaurentSeries lhs = neg(theta(theta(theta(f_series(order).series))));
    VerifyReport r = compare_series("bol", fn_basis(1, order).form.series, lhs, -1, order);
    r.name = "bol";
    return r;
}

VerifyReport hecke_suite(int n_max, int order)
{
    if (n_max < 1 || order < 1) {
        throw std::invalid_argument("hecke_suite: n_max and order must be positive");
    }
    VerifyReport r;
    r.name = "hecke";
    const int input_order = n_max * order;
    const WeightedForm f1 = fn_basis(1, input_order).form;
    for (int n = 1; n <= n_max; ++n) {
        const WhBasisElement fn = fn_basis(n, order);
        const WeightedForm tn = hecke(f1, n, order);
        const Rat n3 = Rat(static_cast<long>(n) * n * n);
        r.merge(compare_series("F1|T" + std::to_string(n), scale(fn.form.series, n3), tn.series, -n, order));
        r.merge(compare_series("vp2 n=" + std::to_string(n), fn.form.series, fn_via_hecke(n, order).series, -n,
                               order));
    }
    return r;
}

BiSeries fn_generating_series(int N, int inner_order)
{
    std::vector<LaurentSeries> rows;
    rows.reserve(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) {
        rows.push_back(fn_basis(n, inner_order).form.series);
    }
    return BiSeries(0, std::move(rows), N + 1);
}

VerifyReport expansion_iii_check(int N, int window)
{
    if (N < 1 || window < 0) {
        throw std::invalid_argument("expansion_iii_check: need N >= 1 and window >= 0");
    }
    const int inner = window + N + 2;
    const LaurentSeries j = j_norm(inner);
    const BiSeries lhs = bi_lift_outer(f_series(N + 1).series) * bi_lift_inner(eisenstein(4, inner).series);
    const BiSeries diff = bi_lift_outer(j_norm(N + 2)) - bi_lift_inner(j);
    const BiSeries rhs = diff * fn_generating_series(N, inner);
    VerifyReport r = compare_bi("expansion-iii", lhs, rhs, -1, N, -window, window + 1);
    r.name = "expansion-iii";
    return r;
}

} // namespace yzq
