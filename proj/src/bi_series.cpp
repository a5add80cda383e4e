#include "yzq/bi_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace yzq {

namespace {

bool exactly_zero(const LaurentSeries& s)
{
    return s.is_zero() && s.is_exact();
}

int row_end(const BiSeries& s)
{
    return s.outer_valuation() + static_cast<int>(s.rows().size());
}

} // namespace

BiSeries::BiSeries() : outer_valuation_(kExact), outer_truncation_(kExact) {}

BiSeries::BiSeries(int outer_valuation, std::vector<LaurentSeries> rows, int outer_truncation)
    : outer_valuation_(outer_valuation), outer_truncation_(clamp_truncation(outer_truncation)),
      rows_(std::move(rows))
{
    if (std::int64_t{outer_valuation_} + static_cast<std::int64_t>(rows_.size()) > outer_truncation_) {
        throw std::invalid_argument("BiSeries: rows extend past the outer truncation");
    }
    normalize();
}

BiSeries BiSeries::zero(int outer_truncation)
{
    BiSeries s;
    s.outer_truncation_ = clamp_truncation(outer_truncation);
    s.outer_valuation_ = s.outer_truncation_;
    return s;
}

void BiSeries::normalize()
{
    std::size_t first = 0;
    while (first < rows_.size() && exactly_zero(rows_[first])) {
        ++first;
    }
    if (first == rows_.size()) {
        rows_.clear();
        outer_valuation_ = outer_truncation_;
        return;
    }
    std::size_t last = rows_.size();
    while (exactly_zero(rows_[last - 1])) {
        --last;
    }
    if (first > 0 || last < rows_.size()) {
        rows_ = std::vector<LaurentSeries>(rows_.begin() + static_cast<std::ptrdiff_t>(first),
                                           rows_.begin() + static_cast<std::ptrdiff_t>(last));
    }
    outer_valuation_ += static_cast<int>(first);
}

LaurentSeries BiSeries::row(int n) const
{
    if (n >= outer_truncation_) {
        throw std::out_of_range("row q1^" + std::to_string(n) + " requested from a series known mod q1^"
                                + std::to_string(outer_truncation_));
    }
    if (n < outer_valuation_ || n >= row_end(*this)) {
        return LaurentSeries();
    }
    return rows_[static_cast<std::size_t>(n - outer_valuation_)];
}

Rat BiSeries::coeff(int a, int b) const
{
    if (a >= outer_truncation_) {
        throw std::out_of_range("coefficient of q1^" + std::to_string(a) + " requested from a series known mod q1^"
                                + std::to_string(outer_truncation_));
    }
    if (a < outer_valuation_ || a >= row_end(*this)) {
        return Rat(0);
    }
    return rows_[static_cast<std::size_t>(a - outer_valuation_)].coeff(b);
}

std::pair<int, int> BiSeries::inner_window() const
{
    int lo = kExact;
    int hi = kExact;
    for (const auto& r : rows_) {
        if (!r.is_zero()) {
            lo = std::min(lo, r.valuation());
        }
        hi = std::min(hi, r.truncation());
    }
    return {lo, hi};
}

BiSeries BiSeries::truncated_outer(int t) const
{
    if (t >= outer_truncation_) {
        return *this;
    }
    std::vector<LaurentSeries> r;
    if (t > outer_valuation_) {
        const auto keep = std::min<std::size_t>(rows_.size(), static_cast<std::size_t>(t - outer_valuation_));
        r.assign(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(keep));
    }
    return BiSeries(std::min(outer_valuation_, t), std::move(r), t);
}

BiSeries BiSeries::truncated_inner(int t) const
{
    std::vector<LaurentSeries> r;
    r.reserve(rows_.size());
    for (const auto& x : rows_) {
        r.push_back(x.truncated(t));
    }
    return is_zero() ? *this : BiSeries(outer_valuation_, std::move(r), outer_truncation_);
}

bool BiSeries::operator==(const BiSeries& other) const
{
    return outer_valuation_ == other.outer_valuation_ && outer_truncation_ == other.outer_truncation_
        && rows_ == other.rows_;
}

BiSeries bi_lift_outer(const LaurentSeries& a)
{
    if (a.is_zero()) {
        return BiSeries::zero(a.truncation());
    }
    std::vector<LaurentSeries> rows;
    rows.reserve(a.coefficients().size());
    for (const auto& c : a.coefficients()) {
        rows.push_back(LaurentSeries::constant(c));
    }
    return BiSeries(a.valuation(), std::move(rows), a.truncation());
}

BiSeries bi_lift_inner(const LaurentSeries& a)
{
    return BiSeries(0, {a});
}

BiSeries bi_add(const BiSeries& a, const BiSeries& b)
{
    const int t = std::min(a.outer_truncation(), b.outer_truncation());
    if (a.is_zero() && b.is_zero()) {
        return BiSeries::zero(t);
    }
    const int lo = std::min(a.outer_valuation(), b.outer_valuation());
    if (lo >= t) {
        return BiSeries::zero(t);
    }
    const auto end_of = [lo](const BiSeries& s) { return s.is_zero() ? lo : row_end(s); };
    const int hi = std::min(t, std::max(end_of(a), end_of(b)));
    std::vector<LaurentSeries> rows(static_cast<std::size_t>(std::max(0, hi - lo)));
    for (int n = lo; n < hi; ++n) {
        rows[static_cast<std::size_t>(n - lo)] = add(a.row(n), b.row(n));
    }
    return BiSeries(lo, std::move(rows), t);
}

BiSeries bi_neg(const BiSeries& a)
{
    return bi_scale(a, Rat(-1));
}

BiSeries bi_sub(const BiSeries& a, const BiSeries& b)
{
    return bi_add(a, bi_neg(b));
}

BiSeries bi_scale(const BiSeries& a, const Rat& c)
{
    std::vector<LaurentSeries> rows;
    rows.reserve(a.rows().size());
    for (const auto& r : a.rows()) {
        rows.push_back(scale(r, c));
    }
    return a.is_zero() ? a : BiSeries(a.outer_valuation(), std::move(rows), a.outer_truncation());
}

BiSeries bi_mul(const BiSeries& a, const BiSeries& b)
{
    const int t = clamp_truncation(std::min(std::int64_t{a.outer_valuation()} + b.outer_truncation(),
                                            std::int64_t{b.outer_valuation()} + a.outer_truncation()));
    if (a.is_zero() || b.is_zero()) {
        return BiSeries::zero(t);
    }
    const int v = a.outer_valuation() + b.outer_valuation();
    if (v >= t) {
        return BiSeries::zero(t);
    }
    const std::size_t la = a.rows().size();
    const std::size_t lb = b.rows().size();
    const std::size_t len = std::min<std::size_t>(la + lb - 1, static_cast<std::size_t>(t - v));
    std::vector<LaurentSeries> rows(len);
    for (std::size_t k = 0; k < len; ++k) {
        LaurentSeries acc;
        const std::size_t imin = k >= lb ? k - lb + 1 : 0;
        const std::size_t imax = std::min(k, la - 1);
        for (std::size_t i = imin; i <= imax; ++i) {
            acc = add(acc, mul(a.rows()[i], b.rows()[k - i]));
        }
        rows[k] = std::move(acc);
    }
    return BiSeries(v, std::move(rows), t);
}

BiSeries bi_invert(const BiSeries& a)
{
    if (a.is_zero()) {
        throw std::domain_error("bi_invert: series is zero modulo q1^" + std::to_string(a.outer_truncation()));
    }
    const int v = a.outer_valuation();
    const auto& ar = a.rows();
    if (ar[0].is_zero()) {
        throw std::domain_error("bi_invert: lowest outer coefficient vanishes to the known inner order");
    }
    const LaurentSeries b0 = invert(ar[0]);
    if (a.is_exact()) {
        if (ar.size() != 1) {
            throw std::domain_error("bi_invert: exact series with several rows needs an outer truncation");
        }
        return BiSeries(-v, {b0});
    }
    const int t = a.outer_truncation() - 2 * v;
    const std::size_t len = static_cast<std::size_t>(a.outer_truncation() - v);
    std::vector<LaurentSeries> b(len);
    b[0] = b0;
    for (std::size_t n = 1; n < len; ++n) {
        LaurentSeries s;
        const std::size_t kmax = std::min(n, ar.size() - 1);
        for (std::size_t k = 1; k <= kmax; ++k) {
            s = add(s, mul(ar[k], b[n - k]));
        }
        b[n] = neg(mul(b0, s));
    }
    return BiSeries(-v, std::move(b), t);
}

BiSeries bi_pow_int(const BiSeries& a, long n)
{
    if (n < 0) {
        return bi_pow_int(bi_invert(a), -n);
    }
    BiSeries result = bi_lift_outer(LaurentSeries::constant(Rat(1)));
    if (n == 0) {
        return a.is_exact() ? result : result.truncated_outer(a.outer_truncation() - a.outer_valuation());
    }
    BiSeries base = a;
    bool have = false;
    while (n > 0) {
        if (n & 1) {
            result = have ? bi_mul(result, base) : base;
            have = true;
        }
        n >>= 1;
        if (n > 0) {
            base = bi_mul(base, base);
        }
    }
    return result;
}

BiSeries bi_theta_outer(const BiSeries& a)
{
    std::vector<LaurentSeries> rows;
    rows.reserve(a.rows().size());
    for (std::size_t i = 0; i < a.rows().size(); ++i) {
        rows.push_back(scale(a.rows()[i], Rat(a.outer_valuation() + static_cast<long>(i))));
    }
    return a.is_zero() ? a : BiSeries(a.outer_valuation(), std::move(rows), a.outer_truncation());
}

BiSeries bi_theta_inner(const BiSeries& a)
{
    std::vector<LaurentSeries> rows;
    rows.reserve(a.rows().size());
    for (const auto& r : a.rows()) {
        rows.push_back(theta(r));
    }
    return a.is_zero() ? a : BiSeries(a.outer_valuation(), std::move(rows), a.outer_truncation());
}

} // namespace yzq
