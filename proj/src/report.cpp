#include "yzq/report.hpp"

#include <sstream>

namespace yzq {

void VerifyReport::record(const std::vector<int>& exponents, const Rat& expected, const Rat& actual)
{
    ++checked;
    if (expected != actual && ok) {
        ok = false;
        mismatch = Mismatch{exponents, expected, actual};
    }
}

void VerifyReport::flag(const std::vector<int>& exponents, const Rat& value, const std::string& why)
{
    if (ok) {
        ok = false;
        mismatch = Mismatch{exponents, value, value};
        note = why;
    }
}

void VerifyReport::merge(const VerifyReport& other)
{
    checked += other.checked;
    if (!other.ok && ok) {
        ok = false;
        mismatch = other.mismatch;
        if (!other.name.empty()) {
            note = other.name + (other.note.empty() ? "" : ": " + other.note);
        }
    }
}

std::string VerifyReport::describe() const
{
    std::ostringstream out;
    out << name << ": " << (ok ? "ok" : "MISMATCH") << " (" << checked << " coefficients)";
    if (mismatch) {
        out << " at (";
        for (std::size_t i = 0; i < mismatch->exponents.size(); ++i) {
            out << (i ? ", " : "") << mismatch->exponents[i];
        }
        out << ") expected " << to_string(mismatch->expected) << " got " << to_string(mismatch->actual);
    }
    if (!note.empty()) {
        out << " [" << note << "]";
    }
    return out.str();
}

VerifyReport compare_series(const std::string& name, const LaurentSeries& expected,
                            const LaurentSeries& actual, int lo, int hi)
{
    VerifyReport r;
    r.name = name;
    for (int n = lo; n < hi; ++n) {
        r.record({n}, expected.coeff(n), actual.coeff(n));
    }
    return r;
}

VerifyReport compare_bi(const std::string& name, const BiSeries& expected, const BiSeries& actual,
                        int a_lo, int a_hi, int b_lo, int b_hi)
{
    VerifyReport r;
    r.name = name;
    for (int a = a_lo; a < a_hi; ++a) {
        const LaurentSeries e = expected.row(a);
        const LaurentSeries g = actual.row(a);
        for (int b = b_lo; b < b_hi; ++b) {
            r.record({a, b}, e.coeff(b), g.coeff(b));
        }
    }
    return r;
}

} // namespace yzq
