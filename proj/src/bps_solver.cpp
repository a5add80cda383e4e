#include "yzq/bps_solver.hpp"

#include "yzq/modular_forms.hpp"
#include "yzq/noether_lefschetz.hpp"
#include "yzq/weakly_holomorphic.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace yzq {

namespace {

int moebius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    return n > 1 ? -result : result;
}

std::string key_text(const DegreeKey& k)
{
    return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
}

void require_cone(const DegreeKey& k)
{
    if (!in_positive_cone(k.first, k.second)) {
        throw std::invalid_argument("degree " + key_text(k) + " lies outside the positive cone");
    }
}

const Rat& lookup(const std::map<DegreeKey, Rat>& t, const DegreeKey& k)
{
    auto it = t.find(k);
    if (it == t.end()) {
        throw std::invalid_argument("missing entry for degree " + key_text(k));
    }
    return it->second;
}

bool divides(long m, long x)
{
    return ((x % m) + m) % m == 0;
}

} // namespace

bool in_positive_cone(int d1, int d2)
{
    return !(d1 == 0 && d2 == 0) && d1 >= 0 && d1 >= -d2;
}

BpsTable bps_from_gw(const GwTable& gw)
{
    BpsTable out;
    for (const auto& [key, value] : gw.values) {
        require_cone(key);
        const int g = std::gcd(key.first, key.second);
        Rat n = value;
        for (int d = 2; d <= g; ++d) {
            if (g % d != 0) {
                continue;
            }
            const int mu = moebius(d);
            if (mu != 0) {
                const Rat& sub = lookup(gw.values, {key.first / d, key.second / d});
                n += Rat(mu) * sub / Rat(static_cast<long>(d) * d * d);
            }
        }
        out.values.emplace(key, n);
    }
    return out;
}

GwTable gw_from_bps(const BpsTable& bps)
{
    GwTable out;
    for (const auto& [key, value] : bps.values) {
        require_cone(key);
        const int g = std::gcd(key.first, key.second);
        Rat n = value;
        for (int d = 2; d <= g; ++d) {
            if (g % d == 0) {
                n += lookup(bps.values, {key.first / d, key.second / d}) / Rat(static_cast<long>(d) * d * d);
            }
        }
        out.values.emplace(key, n);
    }
    return out;
}

GwTable gw_closed_form(int d1max, int d2max)
{
    if (d1max < 0 || d2max < 1) {
        throw std::invalid_argument("gw_closed_form: need d1max >= 0 and d2max >= 1");
    }
    GwTable out;
    for (int d1 = 0; d1 <= d1max; ++d1) {
        const LaurentSeries fn = fn_basis(d1, d2max + 1).form.series;
        for (int d2 = 1; d2 <= d2max; ++d2) {
            out.values.emplace(DegreeKey{d1, d2}, Rat(2) * fn.coeff(d2) / Rat(static_cast<long>(d2) * d2 * d2));
        }
    }
    return out;
}

BpsTable bps_closed_form(int d1max, int d2max, BpsModel model)
{
    BpsTable out = bps_from_gw(gw_closed_form(d1max, d2max));
    if (model == BpsModel::resolved) {
        for (auto& entry : out.values) {
            entry.second *= 2;
        }
    }
    return out;
}

Rat reduced_value(const ReducedInvariantTable& r, int m, int h)
{
    if (h < 0 || !divides(static_cast<long>(m) * m, h - 1L)) {
        return Rat(0);
    }
    if (h == 0) {
        return m == 1 ? Rat(1) : Rat(0);
    }
    auto it = r.values.find({m, h});
    if (it == r.values.end()) {
        throw std::out_of_range("reduced invariant r(" + std::to_string(m) + "," + std::to_string(h)
                                + ") not yet solved");
    }
    return it->second;
}

Rat assemble_constraint(int m, int s, const ReducedInvariantTable& r)
{
    if (m < 1 || s < 1) {
        throw std::invalid_argument("assemble_constraint: m and s must be positive");
    }
    const int d1 = m * (s - 1);
    const int d2 = m;
    const int h = m * m * (s - 1) + 1;
    const int g = std::gcd(d1, d2);
    // Delta(h', d1, d2) >= 0 bounds h' by d1 d2 + 1.
    const int hbound = d1 * d2 + 1;
    Rat total = 0;
    for (int mp = 1; mp <= g; ++mp) {
        if (g % mp != 0) {
            continue;
        }
        for (int hp = 0; hp <= hbound; ++hp) {
            if (mp == m && hp == h) {
                continue;
            }
            const Rat nl = nl_refined(mp, hp, d1, d2);
            if (nl == 0) {
                continue;
            }
            const Rat rv = reduced_value(r, mp, hp);
            if (rv == 0) {
                continue;
            }
            if (!(mp < m || (mp == m && hp < h))) {
                throw std::logic_error("constraint for (m,s) = (" + std::to_string(m) + "," + std::to_string(s)
                                       + ") is not upper triangular at (" + std::to_string(mp) + ","
                                       + std::to_string(hp) + ")");
            }
            total += rv * nl;
        }
    }
    return total;
}

ReducedInvariantTable solve_reduced(int hmax, int mmax, const BpsTable& bps)
{
    if (hmax < 0 || mmax < 1) {
        throw std::invalid_argument("solve_reduced: need hmax >= 0 and mmax >= 1");
    }
    ReducedInvariantTable r;
    r.hmax = hmax;
    r.mmax = mmax;
    for (int m = 1; m <= mmax; ++m) {
        r.values[{m, 0}] = m == 1 ? Rat(1) : Rat(0);
    }
    for (int h = 1; h <= hmax; ++h) {
        for (int m = 1; m <= mmax; ++m) {
            const long mm = static_cast<long>(m) * m;
            if (!divides(mm, h - 1L)) {
                continue;
            }
            const int s = static_cast<int>((h - 1) / mm) + 1;
            const DegreeKey key{m * (s - 1), m};
            auto it = bps.values.find(key);
            if (it == bps.values.end()) {
                throw std::invalid_argument("solve_reduced: BPS count for degree " + key_text(key) + " is absent");
            }
            const Rat lead = nl_refined(m, h, key.first, key.second);
            if (lead != -4) {
                throw std::logic_error("solve_reduced: leading coefficient " + to_string(lead) + " at (m,h) = ("
                                       + std::to_string(m) + "," + std::to_string(h) + ")");
            }
            r.values[{m, h}] = (it->second - assemble_constraint(m, s, r)) / lead;
        }
    }
    return r;
}

YauZaslowRun verify_yau_zaslow(int hmax, int mmax)
{
    YauZaslowRun run;
    run.bps = bps_closed_form(std::max(hmax - 1, 0), mmax);
    run.reduced = solve_reduced(hmax, mmax, run.bps);
    const LaurentSeries yz = yz_series(hmax + 1);
    run.report.name = "yau-zaslow";
    for (const auto& [key, value] : run.reduced.values) {
        const auto [m, h] = key;
        if (h == 0 && m >= 2) {
            continue;  // seed, zero by convention
        }
        run.report.record({m, h}, yz.coeff(h), value);
    }
    return run;
}

} // namespace yzq
