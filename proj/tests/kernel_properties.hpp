#pragma once

// Randomized identities for the one-variable kernel: ring laws, Leibniz,
// inversion and fractional-power round trips, theta = q d/dq.

#include "yzq/laurent_series.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

namespace kernel_props {

using yzq::LaurentSeries;
using yzq::Rat;

struct Outcome {
    int cases = 0;
    int identities = 0;
    int failures = 0;
    std::string first_failure;
};

class Gen {
public:
    explicit Gen(unsigned seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rat rat()
    {
        Rat r(uniform(-9, 9), uniform(1, 6));
        r.canonicalize();
        return r;
    }

    Rat nonzero_rat()
    {
        Rat r = rat();
        return r == 0 ? Rat(1) : r;
    }

    // Valuation in [-2, 2], 1..6 stored terms, 0..3 unknown-but-free slots.
    LaurentSeries series(bool unit_lead = false, int valuation = 99)
    {
        const int v = valuation == 99 ? uniform(-2, 2) : valuation;
        const int len = uniform(1, 6);
        std::vector<Rat> c(static_cast<std::size_t>(len));
        for (auto& x : c) {
            x = rat();
        }
        c[0] = unit_lead ? Rat(1) : nonzero_rat();
        return LaurentSeries(v, std::move(c), v + len + uniform(0, 3));
    }

private:
    std::mt19937 rng_;
};

// Agreement on every exponent both sides know.
inline bool agree(const LaurentSeries& x, const LaurentSeries& y, std::string& where)
{
    const int hi = std::min(x.truncation(), y.truncation());
    int lo = hi;
    if (!x.is_zero()) {
        lo = std::min(lo, x.valuation());
    }
    if (!y.is_zero()) {
        lo = std::min(lo, y.valuation());
    }
    for (int n = lo; n < hi; ++n) {
        if (x.coeff(n) != y.coeff(n)) {
            std::ostringstream s;
            s << "q^" << n << ": " << yzq::to_string(x.coeff(n)) << " vs " << yzq::to_string(y.coeff(n));
            where = s.str();
            return false;
        }
    }
    return true;
}

inline Outcome run(int cases, unsigned seed = 20240611u)
{
    Outcome out;
    Gen g(seed);
    const Rat powers[] = {Rat(1, 2), Rat(-1, 2), Rat(1, 3), Rat(3, 2), Rat(-2, 3), Rat(5, 4), Rat(2), Rat(-1)};
    auto check = [&](const char* what, const LaurentSeries& x, const LaurentSeries& y) {
        ++out.identities;
        std::string where;
        if (!agree(x, y, where)) {
            ++out.failures;
            if (out.first_failure.empty()) {
                out.first_failure = std::string(what) + " case " + std::to_string(out.cases) + " at " + where;
            }
        }
    };
    for (int i = 0; i < cases; ++i) {
        ++out.cases;
        const LaurentSeries a = g.series();
        const LaurentSeries b = g.series();
        const LaurentSeries c = g.series();
        check("commutativity", a * b, b * a);
        check("associativity", (a * b) * c, a * (b * c));
        check("distributivity", a * (b + c), a * b + a * c);
        check("leibniz", theta(a * b), theta(a) * b + a * theta(b));
        check("theta = q d/dq", theta(a), LaurentSeries::monomial(1) * derivative(a));
        const LaurentSeries ia = invert(a);
        check("a / a", a * ia, LaurentSeries::constant(Rat(1), a.truncation() - a.valuation()));
        check("1/(1/a)", invert(ia), a);
        check("1/(ab)", invert(a * b), ia * invert(b));

        const LaurentSeries u = g.series(true, 0);
        const Rat p = powers[g.uniform(0, 7)];
        const Rat r = powers[g.uniform(0, 7)];
        check("u^p u^r", yzq::pow_rat(u, p) * yzq::pow_rat(u, r), yzq::pow_rat(u, p + r));
        check("(u^(1/3))^3", yzq::pow_int(yzq::pow_rat(u, Rat(1, 3)), 3), u);
        check("theta u^p", theta(yzq::pow_rat(u, p)), p * yzq::pow_rat(u, p - 1) * theta(u));
        check("u^2 by pow_rat", yzq::pow_rat(u, Rat(2)), u * u);
    }
    return out;
}

} // namespace kernel_props
