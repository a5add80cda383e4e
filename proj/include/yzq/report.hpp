#pragma once

#include "yzq/bi_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace yzq {

struct Mismatch {
    std::vector<int> exponents;  // (n) for one variable, (a, b) for two
    Rat expected;
    Rat actual;
};

/// Outcome of a verification run. Failing checks are reported here rather
/// than thrown; exceptions are reserved for usage and precision errors.
struct VerifyReport {
    std::string name;
    bool ok = true;
    std::size_t checked = 0;
    std::optional<Mismatch> mismatch;
    std::string note;

    void record(const std::vector<int>& exponents, const Rat& expected, const Rat& actual);
    void merge(const VerifyReport& other);
    /// Marks a failure that is not a two-sided mismatch (e.g. a non-integral coefficient).
    void flag(const std::vector<int>& exponents, const Rat& value, const std::string& why);
    std::string describe() const;
};

/// Compares coefficients for exponents lo <= n < hi. Throws std::out_of_range
/// if either side is not known that far.
VerifyReport compare_series(const std::string& name, const LaurentSeries& expected,
                            const LaurentSeries& actual, int lo, int hi);

/// Compares coefficients of q1^a q2^b for a in [a_lo, a_hi), b in [b_lo, b_hi).
VerifyReport compare_bi(const std::string& name, const BiSeries& expected, const BiSeries& actual,
                        int a_lo, int a_hi, int b_lo, int b_hi);

} // namespace yzq
