#pragma once

#include "yzq/bi_series.hpp"
#include "yzq/modular_forms.hpp"
#include "yzq/report.hpp"

#include <optional>
#include <vector>

namespace yzq {

/// F_n = q^-n + O(q) in weight 4, written as E4 * P(j).
struct WhBasisElement {
    int index = 0;
    WeightedForm form;
    std::vector<Rat> j_polynomial;  // coefficients of j^0, ..., j^n
};

/// F_n known modulo q^order.
WhBasisElement fn_basis(int n, int order);

/// Weight-k Hecke operator T_n on Fourier coefficients:
/// b(m) = sum_{d | gcd(m, n)} d^(k-1) a(mn/d^2). The result is known modulo
/// q^floor(T/n) for input truncation T. When output_order is given and the
/// input is too short to reach it, throws std::invalid_argument.
WeightedForm hecke(const WeightedForm& form, int n, std::optional<int> output_order = std::nullopt);

/// q^-n - sum_{k d = n} sum_{l > 0} l^3 c(k l) q^(l d), known modulo q^order.
WeightedForm fn_via_hecke(int n, int order);

/// -theta^3 f = F_1 for exponents below order.
VerifyReport bol_check(int order);

/// F_1 | T_n = n^3 F_n at output order `order` from input order n_max * order,
/// and fn_via_hecke(n) = fn_basis(n), for 1 <= n <= n_max.
VerifyReport hecke_suite(int n_max, int order);

/// f(q1) E4(q2) = (j(q1) - j(q2)) * sum_{n=0}^{N} F_n(q2) q1^n for outer
/// exponents -1 .. N-1 and inner exponents -window .. window.
VerifyReport expansion_iii_check(int N, int window);

/// sum_{n=0}^{N} F_n(q2) q1^n with every F_n known modulo q2^inner_order.
BiSeries fn_generating_series(int N, int inner_order);

} // namespace yzq
