#include "yzq/modular_forms.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace yzq {

namespace {

// Keeps the longest expansion computed so far for each named series and
// answers shorter requests by truncation.
class FormMemo {
public:
    template <class Compute>
    LaurentSeries get(const std::string& key, int order, Compute&& compute)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = table_.find(key);
            if (it != table_.end() && it->second.truncation() >= order) {
                return it->second.truncated(order);
            }
        }
        LaurentSeries value = compute(order);
        std::unique_lock lock(mutex_);
        auto& slot = table_[key];
        if (slot.truncation() < value.truncation() || slot.is_exact()) {
            slot = value;
        }
        return value;
    }

private:
    std::shared_mutex mutex_;
    std::map<std::string, LaurentSeries> table_;
};

FormMemo& memo()
{
    static FormMemo m;
    return m;
}

void require_order(int order, int minimum, const char* what)
{
    if (order < minimum) {
        throw std::invalid_argument(std::string(what) + ": order must be at least " + std::to_string(minimum));
    }
}

} // namespace

Rat bernoulli(int n)
{
    if (n < 0) {
        throw std::invalid_argument("bernoulli: negative index");
    }
    static std::mutex mutex;
    static std::vector<Rat> table{Rat(1)};
    std::lock_guard lock(mutex);
    while (static_cast<int>(table.size()) <= n) {
        const long m = static_cast<long>(table.size());
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        Rat s = 0;
        Int binom = 1;
        for (long k = 0; k < m; ++k) {
            s += Rat(binom) * table[static_cast<std::size_t>(k)];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        table.push_back(-s / Rat(m + 1));
    }
    return table[static_cast<std::size_t>(n)];
}

Int sigma(int k, long n)
{
    if (n < 1) {
        throw std::invalid_argument("sigma: n must be positive");
    }
    Int total = 0;
    Int p;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d != 0) {
            continue;
        }
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        total += p;
        const long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
            total += p;
        }
    }
    return total;
}

WeightedForm eisenstein(int two_k, int order)
{
    if (two_k < 2 || two_k % 2 != 0) {
        throw std::invalid_argument("eisenstein: weight must be even and at least 2");
    }
    require_order(order, 1, "eisenstein");
    const std::string key = "E" + std::to_string(two_k);
    LaurentSeries s = memo().get(key, order, [two_k](int t) {
        const Rat factor = -Rat(2 * two_k) / bernoulli(two_k);
        return LaurentSeries::generate(0, t, [&](int n) {
            return n == 0 ? Rat(1) : factor * Rat(sigma(two_k - 1, n));
        });
    });
    return WeightedForm{two_k, std::move(s), two_k == 2};
}

LaurentSeries euler_product(int order)
{
    require_order(order, 1, "euler_product");
    return memo().get("euler", order, [](int t) {
        std::vector<Rat> c(static_cast<std::size_t>(t));
        for (long k = 0;; ++k) {
            const long e1 = k * (3 * k - 1) / 2;
            const long e2 = k * (3 * k + 1) / 2;
            if (e1 >= t) {
                break;
            }
            const int sign = (k % 2 == 0) ? 1 : -1;
            c[static_cast<std::size_t>(e1)] = sign;
            if (k > 0 && e2 < t) {
                c[static_cast<std::size_t>(e2)] = sign;
            }
        }
        return LaurentSeries(0, std::move(c), t);
    });
}

WeightedForm eta24(int order)
{
    require_order(order, 2, "eta24");
    LaurentSeries s = memo().get("eta24", order, [](int t) {
        return pow_int(euler_product(t - 1), 24).shifted(1);
    });
    return WeightedForm{12, std::move(s)};
}

LaurentSeries yz_series(int order)
{
    require_order(order, 1, "yz_series");
    return memo().get("yz", order, [](int t) { return invert(pow_int(euler_product(t), 24)); });
}

LaurentSeries j_norm(int order)
{
    require_order(order, 1, "j_norm");
    return memo().get("j", order, [](int t) {
        const LaurentSeries e4 = eisenstein(4, t + 1).series;
        return mul(pow_int(e4, 3), invert(eta24(t + 2).series)).truncated(t);
    });
}

WeightedForm f_series(int order)
{
    require_order(order, 0, "f_series");
    LaurentSeries s = memo().get("f", order, [](int t) {
        const int w = std::max(t, 1) + 1;
        const LaurentSeries e4e6 = mul(eisenstein(4, w).series, eisenstein(6, w).series);
        return mul(e4e6, invert(eta24(w + 1).series)).truncated(t);
    });
    return WeightedForm{-2, std::move(s)};
}

Rat f_coefficient(int n)
{
    if (n < -1) {
        return Rat(0);
    }
    return f_series(std::max(n + 1, 32)).series.coeff(n);
}

const std::vector<std::string>& form_names()
{
    static const std::vector<std::string> names{"E2", "E4", "E6", "E8", "E10", "E12", "E14",
                                                "eta24", "j", "f", "yz"};
    return names;
}

LaurentSeries named_form(const std::string& name, int order)
{
    if (name.size() >= 2 && name[0] == 'E' && name != "E") {
        for (const int w : {2, 4, 6, 8, 10, 12, 14}) {
            if (name == "E" + std::to_string(w)) {
                return eisenstein(w, order).series;
            }
        }
    }
    if (name == "eta24") {
        return eta24(order).series;
    }
    if (name == "j") {
        return j_norm(order);
    }
    if (name == "f") {
        return f_series(order).series;
    }
    if (name == "yz") {
        return yz_series(order);
    }
    throw std::invalid_argument("unknown form '" + name + "'");
}

VerifyReport ramanujan_check(int order)
{
    require_order(order, 1, "ramanujan_check");
    const int w = order + 2;
    const LaurentSeries e2 = eisenstein(2, w).series;
    const LaurentSeries e4 = eisenstein(4, w).series;
    const LaurentSeries e6 = eisenstein(6, w).series;
    const LaurentSeries j = j_norm(w);

    VerifyReport r;
    r.name = "ramanujan";
    r.merge(compare_series("theta E2", theta(e2), (e2 * e2 - e4) * Rat(1, 12), 0, order));
    r.merge(compare_series("theta E4", theta(e4), (e2 * e4 - e6) * Rat(1, 3), 0, order));
    r.merge(compare_series("theta E6", theta(e6), (e2 * e6 - e4 * e4) * Rat(1, 2), 0, order));
    r.merge(compare_series("theta j", theta(j), -(j * e6 * invert(e4)), -1, order));
    return r;
}

VerifyReport product_identities_check(int order)
{
    require_order(order, 2, "product_identities_check");
    const int w = order + 2;
    const LaurentSeries e4 = eisenstein(4, w).series;
    const LaurentSeries e6 = eisenstein(6, w).series;
    const LaurentSeries eta = eta24(w).series;

    VerifyReport r;
    r.name = "products";
    r.merge(compare_series("1728 eta24", eta * Rat(1728), pow_int(e4, 3) - e6 * e6, 0, order));
    r.merge(compare_series("j eta24", j_norm(w) * eta, pow_int(e4, 3), 0, order));
    r.merge(compare_series("E4 E6", eisenstein(10, w).series, e4 * e6, 0, order));
    return r;
}

} // namespace yzq
