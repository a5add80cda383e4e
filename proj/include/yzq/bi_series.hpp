#pragma once

#include "yzq/laurent_series.hpp"

#include <utility>
#include <vector>

namespace yzq {

/// Two-variable series: a truncated Laurent series in an outer variable q1
/// whose coefficients are truncated Laurent series in an inner variable q2.
///
/// rows()[i] is the coefficient of q1^(outer_valuation + i). Leading and
/// trailing rows that are exactly zero are dropped; rows that are only known
/// to vanish modulo some power of q2 are kept.
class BiSeries {
public:
    static constexpr int kExact = LaurentSeries::kExact;

    BiSeries();
    BiSeries(int outer_valuation, std::vector<LaurentSeries> rows, int outer_truncation = kExact);

    static BiSeries zero(int outer_truncation = kExact);

    int outer_valuation() const { return outer_valuation_; }
    int outer_truncation() const { return outer_truncation_; }
    bool is_exact() const { return outer_truncation_ >= kExact; }
    bool is_zero() const { return rows_.empty(); }
    const std::vector<LaurentSeries>& rows() const { return rows_; }

    /// Coefficient of q1^n. Throws std::out_of_range when n >= outer truncation.
    LaurentSeries row(int n) const;

    /// Coefficient of q1^a q2^b.
    Rat coeff(int a, int b) const;

    /// (lowest inner valuation, lowest inner truncation) over all stored rows.
    std::pair<int, int> inner_window() const;

    BiSeries truncated_outer(int t) const;
    BiSeries truncated_inner(int t) const;

    bool operator==(const BiSeries& other) const;

private:
    void normalize();

    int outer_valuation_;
    int outer_truncation_;
    std::vector<LaurentSeries> rows_;
};

/// a(q1), constant in q2.
BiSeries bi_lift_outer(const LaurentSeries& a);
/// a(q2), constant in q1.
BiSeries bi_lift_inner(const LaurentSeries& a);

BiSeries bi_add(const BiSeries& a, const BiSeries& b);
BiSeries bi_sub(const BiSeries& a, const BiSeries& b);
BiSeries bi_neg(const BiSeries& a);
BiSeries bi_scale(const BiSeries& a, const Rat& c);
BiSeries bi_mul(const BiSeries& a, const BiSeries& b);

/// Throws std::domain_error unless the lowest row is invertible.
BiSeries bi_invert(const BiSeries& a);

BiSeries bi_pow_int(const BiSeries& a, long n);

BiSeries bi_theta_outer(const BiSeries& a);
BiSeries bi_theta_inner(const BiSeries& a);

inline BiSeries operator+(const BiSeries& a, const BiSeries& b) { return bi_add(a, b); }
inline BiSeries operator-(const BiSeries& a, const BiSeries& b) { return bi_sub(a, b); }
inline BiSeries operator-(const BiSeries& a) { return bi_neg(a); }
inline BiSeries operator*(const BiSeries& a, const BiSeries& b) { return bi_mul(a, b); }
inline BiSeries operator*(const Rat& c, const BiSeries& a) { return bi_scale(a, c); }
inline BiSeries operator*(const BiSeries& a, const Rat& c) { return bi_scale(a, c); }
inline BiSeries operator+(const BiSeries& a, const Rat& c) { return bi_add(a, bi_lift_outer(LaurentSeries::constant(c))); }
inline BiSeries operator+(const Rat& c, const BiSeries& a) { return bi_add(bi_lift_outer(LaurentSeries::constant(c)), a); }
inline BiSeries operator-(const Rat& c, const BiSeries& a) { return bi_sub(bi_lift_outer(LaurentSeries::constant(c)), a); }
inline BiSeries operator-(const BiSeries& a, const Rat& c) { return bi_sub(a, bi_lift_outer(LaurentSeries::constant(c))); }

} // namespace yzq
