#include "yzq/laurent_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace yzq {

int clamp_truncation(std::int64_t t)
{
    if (t >= LaurentSeries::kExact) {
        return LaurentSeries::kExact;
    }
    if (t <= -LaurentSeries::kExact) {
        return -LaurentSeries::kExact;
    }
    return static_cast<int>(t);
}

LaurentSeries::LaurentSeries() : valuation_(kExact), truncation_(kExact) {}

LaurentSeries::LaurentSeries(int valuation, std::vector<Rat> coefficients, int truncation)
    : valuation_(valuation), truncation_(clamp_truncation(truncation)), coefficients_(std::move(coefficients))
{
    if (static_cast<std::int64_t>(valuation_) + static_cast<std::int64_t>(coefficients_.size())
        > truncation_) {
        throw std::invalid_argument("LaurentSeries: coefficients extend past the truncation");
    }
    normalize();
}

LaurentSeries LaurentSeries::zero(int truncation)
{
    LaurentSeries s;
    s.truncation_ = clamp_truncation(truncation);
    s.valuation_ = s.truncation_;
    return s;
}

LaurentSeries LaurentSeries::constant(const Rat& c, int truncation)
{
    if (truncation <= 0) {
        return zero(truncation);
    }
    return LaurentSeries(0, {c}, truncation);
}

LaurentSeries LaurentSeries::monomial(int exponent, const Rat& c, int truncation)
{
    if (truncation <= exponent) {
        return zero(truncation);
    }
    return LaurentSeries(exponent, {c}, truncation);
}

LaurentSeries LaurentSeries::generate(int lo, int truncation, const std::function<Rat(int)>& gen)
{
    if (truncation >= kExact) {
        throw std::invalid_argument("LaurentSeries::generate needs a finite truncation");
    }
    std::vector<Rat> c;
    if (truncation > lo) {
        c.reserve(static_cast<std::size_t>(truncation - lo));
        for (int n = lo; n < truncation; ++n) {
            c.push_back(gen(n));
        }
    }
    return LaurentSeries(std::min(lo, truncation), std::move(c), truncation);
}

void LaurentSeries::normalize()
{
    std::size_t first = 0;
    while (first < coefficients_.size() && coefficients_[first] == 0) {
        ++first;
    }
    if (first == coefficients_.size()) {
        coefficients_.clear();
        valuation_ = truncation_;
        return;
    }
    std::size_t last = coefficients_.size();
    while (coefficients_[last - 1] == 0) {
        --last;
    }
    if (first > 0 || last < coefficients_.size()) {
        coefficients_ = std::vector<Rat>(coefficients_.begin() + static_cast<std::ptrdiff_t>(first),
                                         coefficients_.begin() + static_cast<std::ptrdiff_t>(last));
    }
    valuation_ += static_cast<int>(first);
}

Rat LaurentSeries::coeff(int n) const
{
    if (n >= truncation_) {
        throw std::out_of_range("coefficient of q^" + std::to_string(n) + " requested from a series known mod q^"
                                + std::to_string(truncation_));
    }
    if (n < valuation_) {
        return Rat(0);
    }
    const auto idx = static_cast<std::size_t>(n - valuation_);
    return idx < coefficients_.size() ? coefficients_[idx] : Rat(0);
}

LaurentSeries LaurentSeries::truncated(int t) const
{
    if (t >= truncation_) {
        return *this;
    }
    std::vector<Rat> c;
    if (t > valuation_) {
        const auto keep = std::min<std::size_t>(coefficients_.size(), static_cast<std::size_t>(t - valuation_));
        c.assign(coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(keep));
    }
    return LaurentSeries(std::min(valuation_, t), std::move(c), t);
}

LaurentSeries LaurentSeries::shifted(int k) const
{
    if (is_zero()) {
        return zero(is_exact() ? kExact : clamp_truncation(std::int64_t{truncation_} + k));
    }
    const int t = is_exact() ? kExact : clamp_truncation(std::int64_t{truncation_} + k);
    return LaurentSeries(valuation_ + k, coefficients_, t);
}

bool LaurentSeries::operator==(const LaurentSeries& other) const
{
    return valuation_ == other.valuation_ && truncation_ == other.truncation_
        && coefficients_ == other.coefficients_;
}

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b)
{
    const int t = std::min(a.truncation(), b.truncation());
    if (a.is_zero() && b.is_zero()) {
        return LaurentSeries::zero(t);
    }
    const int lo = std::min(a.valuation(), b.valuation());
    if (lo >= t) {
        return LaurentSeries::zero(t);
    }
    const auto end_of = [lo](const LaurentSeries& s) {
        return s.is_zero() ? lo : s.valuation() + static_cast<int>(s.coefficients().size());
    };
    const int hi = std::min(t, std::max(end_of(a), end_of(b)));
    std::vector<Rat> c(static_cast<std::size_t>(std::max(0, hi - lo)));
    for (const auto* s : {&a, &b}) {
        const auto& sc = s->coefficients();
        for (std::size_t i = 0; i < sc.size(); ++i) {
            const int n = s->valuation() + static_cast<int>(i);
            if (n >= hi) {
                break;
            }
            c[static_cast<std::size_t>(n - lo)] += sc[i];
        }
    }
    return LaurentSeries(lo, std::move(c), t);
}

LaurentSeries neg(const LaurentSeries& a)
{
    std::vector<Rat> c = a.coefficients();
    for (auto& x : c) {
        x = -x;
    }
    return a.is_zero() ? a : LaurentSeries(a.valuation(), std::move(c), a.truncation());
}

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b)
{
    return add(a, neg(b));
}

LaurentSeries scale(const LaurentSeries& a, const Rat& c)
{
    if (c == 0 || a.is_zero()) {
        return LaurentSeries::zero(a.truncation());
    }
    std::vector<Rat> out = a.coefficients();
    for (auto& x : out) {
        x *= c;
    }
    return LaurentSeries(a.valuation(), std::move(out), a.truncation());
}

namespace {

// Integer numerators over a common denominator.
struct ScaledIntegers {
    std::vector<Int> num;
    Int den{1};
};

ScaledIntegers to_common_denominator(const std::vector<Rat>& c, std::size_t count)
{
    ScaledIntegers out;
    for (std::size_t i = 0; i < count; ++i) {
        if (c[i].get_den() != 1) {
            mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c[i].get_den().get_mpz_t());
        }
    }
    out.num.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        if (out.den == 1) {
            out.num[i] = c[i].get_num();
        } else {
            out.num[i] = c[i].get_num() * (out.den / c[i].get_den());
        }
    }
    return out;
}

bool is_monomial(const LaurentSeries& a)
{
    return a.coefficients().size() == 1;
}

} // namespace

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b)
{
    const int t = clamp_truncation(std::min(std::int64_t{a.valuation()} + b.truncation(),
                                            std::int64_t{b.valuation()} + a.truncation()));
    if (a.is_zero() || b.is_zero()) {
        return LaurentSeries::zero(t);
    }
    const int v = a.valuation() + b.valuation();
    if (v >= t) {
        return LaurentSeries::zero(t);
    }
    const std::size_t la = a.coefficients().size();
    const std::size_t lb = b.coefficients().size();
    const std::size_t len = std::min<std::size_t>(la + lb - 1, static_cast<std::size_t>(t - v));
    const std::size_t ua = std::min(la, len);
    const std::size_t ub = std::min(lb, len);

    const auto A = to_common_denominator(a.coefficients(), ua);
    const auto B = to_common_denominator(b.coefficients(), ub);

    std::vector<Int> acc(len);
    for (std::size_t i = 0; i < ua; ++i) {
        if (A.num[i] == 0) {
            continue;
        }
        const std::size_t jmax = std::min(ub, len - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            mpz_addmul(acc[i + j].get_mpz_t(), A.num[i].get_mpz_t(), B.num[j].get_mpz_t());
        }
    }
    const Int den = A.den * B.den;
    std::vector<Rat> c(len);
    for (std::size_t k = 0; k < len; ++k) {
        c[k] = Rat(acc[k], den);
        if (den != 1) {
            c[k].canonicalize();
        }
    }
    return LaurentSeries(v, std::move(c), t);
}

LaurentSeries invert(const LaurentSeries& a)
{
    if (a.is_zero()) {
        throw std::domain_error("invert: series is zero modulo q^" + std::to_string(a.truncation()));
    }
    const int v = a.valuation();
    const auto& ac = a.coefficients();
    if (a.is_exact()) {
        if (!is_monomial(a)) {
            throw std::domain_error("invert: exact non-monomial series needs a truncation");
        }
        return LaurentSeries(-v, {Rat(1) / ac[0]});
    }
    const int t = a.truncation() - 2 * v;
    const std::size_t len = static_cast<std::size_t>(a.truncation() - v);
    const auto coeff_at = [&](std::size_t k) -> const Rat* { return k < ac.size() ? &ac[k] : nullptr; };

    std::vector<Rat> b(len);
    const bool unit_integral = (ac[0] == 1 || ac[0] == -1)
        && std::all_of(ac.begin(), ac.end(), [](const Rat& x) { return x.get_den() == 1; });
    if (unit_integral) {
        // Integer recurrence: every b_n is an integer.
        std::vector<Int> bi(len);
        const Int a0 = ac[0].get_num();
        bi[0] = a0;
        for (std::size_t n = 1; n < len; ++n) {
            Int s = 0;
            const std::size_t kmax = std::min(n, ac.size() - 1);
            for (std::size_t k = 1; k <= kmax; ++k) {
                mpz_addmul(s.get_mpz_t(), ac[k].get_num_mpz_t(), bi[n - k].get_mpz_t());
            }
            bi[n] = (a0 == 1) ? Int(-s) : s;
        }
        for (std::size_t n = 0; n < len; ++n) {
            b[n] = Rat(bi[n]);
        }
    } else {
        const Rat inv0 = Rat(1) / ac[0];
        b[0] = inv0;
        for (std::size_t n = 1; n < len; ++n) {
            Rat s = 0;
            for (std::size_t k = 1; k <= n; ++k) {
                if (const Rat* ak = coeff_at(k); ak != nullptr && *ak != 0) {
                    s += *ak * b[n - k];
                }
            }
            b[n] = -s * inv0;
        }
    }
    return LaurentSeries(-v, std::move(b), t);
}

LaurentSeries pow_int(const LaurentSeries& a, long n)
{
    if (n == 0) {
        return LaurentSeries::constant(Rat(1), a.is_exact() ? LaurentSeries::kExact
                                                            : a.truncation() - a.valuation());
    }
    if (n < 0) {
        return pow_int(invert(a), -n);
    }
    LaurentSeries result;
    bool have = false;
    LaurentSeries base = a;
    while (n > 0) {
        if (n & 1) {
            result = have ? mul(result, base) : base;
            have = true;
        }
        n >>= 1;
        if (n > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

LaurentSeries pow_rat(const LaurentSeries& a, const Rat& p)
{
    if (a.is_zero() || a.valuation() != 0 || a.coefficients()[0] != 1) {
        throw std::domain_error("pow_rat: series must have valuation 0 and constant term 1");
    }
    if (is_integer(p)) {
        return pow_int(a, p.get_num().get_si());
    }
    if (a.is_exact()) {
        if (is_monomial(a)) {
            return a;
        }
        throw std::domain_error("pow_rat: exact non-constant series needs a truncation");
    }
    const auto& ac = a.coefficients();
    const std::size_t len = static_cast<std::size_t>(a.truncation());
    std::vector<Rat> b(len);
    b[0] = 1;
    for (std::size_t n = 1; n < len; ++n) {
        Rat s = 0;
        const std::size_t kmax = std::min(n, ac.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) {
            if (ac[k] == 0) {
                continue;
            }
            const Rat w = p * static_cast<long>(k) - static_cast<long>(n - k);
            s += w * ac[k] * b[n - k];
        }
        b[n] = s / static_cast<long>(n);
    }
    return LaurentSeries(0, std::move(b), a.truncation());
}

LaurentSeries theta(const LaurentSeries& a)
{
    std::vector<Rat> c = a.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] *= a.valuation() + static_cast<long>(i);
    }
    return a.is_zero() ? a : LaurentSeries(a.valuation(), std::move(c), a.truncation());
}

LaurentSeries derivative(const LaurentSeries& a)
{
    const int t = a.is_exact() ? LaurentSeries::kExact : a.truncation() - 1;
    if (a.is_zero()) {
        return LaurentSeries::zero(t);
    }
    std::vector<Rat> c = a.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] *= a.valuation() + static_cast<long>(i);
    }
    return LaurentSeries(a.valuation() - 1, std::move(c), t);
}

LaurentSeries compose(const LaurentSeries& a, const LaurentSeries& t)
{
    if (t.valuation() <= 0) {
        throw std::domain_error("compose: inner series must have positive valuation");
    }
    if (!a.is_zero() && a.valuation() < 0) {
        throw std::domain_error("compose: outer series must be a power series");
    }
    const std::int64_t vt = t.valuation();
    std::int64_t bound = LaurentSeries::kExact;
    if (!a.is_exact()) {
        bound = vt * a.truncation();
    }
    const auto& ac = a.coefficients();
    const int a_val = a.is_zero() ? 0 : a.valuation();
    for (std::size_t i = 0; i < ac.size(); ++i) {
        const int n = a_val + static_cast<int>(i);
        if (n >= 1 && ac[i] != 0) {
            if (!t.is_exact()) {
                bound = std::min(bound, (n - 1) * vt + t.truncation());
            }
            break;
        }
    }
    const int r = clamp_truncation(bound);
    LaurentSeries result = LaurentSeries::zero(r);
    if (!a.is_zero() && a_val == 0) {
        result = add(result, LaurentSeries::constant(ac[0], r));
    }
    LaurentSeries power = LaurentSeries::constant(Rat(1));
    for (int n = 1; n < a_val + static_cast<int>(ac.size()); ++n) {
        if (std::int64_t{n} * vt >= r) {
            break;
        }
        power = mul(power, t).truncated(r);
        if (n >= a_val) {
            const Rat& an = ac[static_cast<std::size_t>(n - a_val)];
            if (an != 0) {
                result = add(result, scale(power, an));
            }
        }
    }
    return result.truncated(r);
}

} // namespace yzq
