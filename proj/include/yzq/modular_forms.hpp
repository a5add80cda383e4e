#pragma once

#include "yzq/laurent_series.hpp"
#include "yzq/report.hpp"

#include <string>
#include <vector>

namespace yzq {

/// A q-expansion tagged with its weight. E2 is stored with weight 2 and
/// quasi_modular set; nothing modular is asserted about it.
struct WeightedForm {
    int weight = 0;
    LaurentSeries series;
    bool quasi_modular = false;
};

/// B_n with B_1 = -1/2.
Rat bernoulli(int n);

/// Sum of k-th powers of the divisors of n (n >= 1).
Int sigma(int k, long n);

// In every constructor below `order` is the exclusive truncation: the
// result is known modulo q^order.

/// E_{2k} = 1 - (4k / B_{2k}) sum sigma_{2k-1}(n) q^n, for two_k = 2 or two_k >= 4 even.
WeightedForm eisenstein(int two_k, int order);

/// prod_{n>=1} (1 - q^n), via the pentagonal number theorem.
LaurentSeries euler_product(int order);

/// q prod (1 - q^n)^24, weight 12. order >= 2.
WeightedForm eta24(int order);

/// E4^3 / eta24 = 1/q + 744 + 196884 q + ...
LaurentSeries j_norm(int order);

/// E4 E6 / eta24 = sum_{n >= -1} c(n) q^n, weight -2.
WeightedForm f_series(int order);

/// c(n) from f_series; zero for n < -1.
Rat f_coefficient(int n);

/// prod (1 - q^n)^(-24).
LaurentSeries yz_series(int order);

/// Lookup by name: E2, E4, E6, E8, E10, E12, E14, eta24, j, f, yz.
/// Throws std::invalid_argument on an unknown name.
LaurentSeries named_form(const std::string& name, int order);
const std::vector<std::string>& form_names();

/// theta E2 = (E2^2 - E4)/12, theta E4 = (E2 E4 - E6)/3,
/// theta E6 = (E2 E6 - E4^2)/2, theta j = -j E6/E4, for exponents below order.
VerifyReport ramanujan_check(int order);

/// 1728 eta24 = E4^3 - E6^2, j eta24 = E4^3 and E4 E6 = E10, for exponents below order.
VerifyReport product_identities_check(int order);

} // namespace yzq
