#pragma once

#include "yzq/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace yzq {

/// Truncated Laurent series in one variable with exact rational coefficients.
///
/// A series is known modulo q^truncation: coefficients at exponents below the
/// valuation are zero, coefficients in [valuation, truncation) are stored (or
/// zero past the last stored one), and nothing is known at or above the
/// truncation. The sentinel truncation `kExact` marks a finite expression that
/// is known exactly (polynomials, monomials, constants).
///
/// Normalization: the coefficient at the valuation is nonzero, trailing zeros
/// are not stored, and a series that is zero modulo q^truncation has
/// valuation == truncation and no stored coefficients.
class LaurentSeries {
public:
    static constexpr int kExact = 1 << 28;

    /// Exact zero.
    LaurentSeries();

    /// Coefficients for exponents valuation, valuation+1, ...; throws
    /// std::invalid_argument if they reach past the truncation.
    LaurentSeries(int valuation, std::vector<Rat> coefficients, int truncation = kExact);

    static LaurentSeries zero(int truncation = kExact);
    static LaurentSeries constant(const Rat& c, int truncation = kExact);
    static LaurentSeries monomial(int exponent, const Rat& c = Rat(1), int truncation = kExact);

    /// Series whose coefficient at n (lo <= n < truncation) is gen(n).
    static LaurentSeries generate(int lo, int truncation, const std::function<Rat(int)>& gen);

    int valuation() const { return valuation_; }
    int truncation() const { return truncation_; }
    bool is_exact() const { return truncation_ >= kExact; }
    bool is_zero() const { return coefficients_.empty(); }

    /// Coefficient of q^n. Throws std::out_of_range when n >= truncation.
    Rat coeff(int n) const;

    /// Stored coefficients, starting at the valuation.
    const std::vector<Rat>& coefficients() const { return coefficients_; }

    /// Same series known only modulo q^t (no-op when t >= truncation).
    LaurentSeries truncated(int t) const;

    /// Multiply by q^k.
    LaurentSeries shifted(int k) const;

    bool operator==(const LaurentSeries& other) const;

private:
    void normalize();

    int valuation_;
    int truncation_;
    std::vector<Rat> coefficients_;
};

// Clamp a 64-bit exponent bound into the representable truncation range.
int clamp_truncation(std::int64_t t);

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries neg(const LaurentSeries& a);
LaurentSeries scale(const LaurentSeries& a, const Rat& c);
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse. Throws std::domain_error on a zero series.
LaurentSeries invert(const LaurentSeries& a);

LaurentSeries pow_int(const LaurentSeries& a, long n);

/// (1 + x)^p on the branch with value 1 at q = 0. Requires valuation 0 and
/// constant coefficient 1; throws std::domain_error otherwise.
LaurentSeries pow_rat(const LaurentSeries& a, const Rat& p);

/// q d/dq.
LaurentSeries theta(const LaurentSeries& a);

/// d/dq.
LaurentSeries derivative(const LaurentSeries& a);

/// a(t(q)) for a power series a and t with positive valuation. Throws
/// std::domain_error when t.valuation() <= 0 or a has a pole.
LaurentSeries compose(const LaurentSeries& a, const LaurentSeries& t);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return neg(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
inline LaurentSeries operator*(const Rat& c, const LaurentSeries& a) { return scale(a, c); }
inline LaurentSeries operator*(const LaurentSeries& a, const Rat& c) { return scale(a, c); }
inline LaurentSeries operator+(const LaurentSeries& a, const Rat& c) { return add(a, LaurentSeries::constant(c)); }
inline LaurentSeries operator+(const Rat& c, const LaurentSeries& a) { return add(LaurentSeries::constant(c), a); }
inline LaurentSeries operator-(const LaurentSeries& a, const Rat& c) { return sub(a, LaurentSeries::constant(c)); }
inline LaurentSeries operator-(const Rat& c, const LaurentSeries& a) { return sub(LaurentSeries::constant(c), a); }

} // namespace yzq
