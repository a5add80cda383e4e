#pragma once

#include "yzq/rational.hpp"
#include "yzq/report.hpp"

#include <map>
#include <utility>

namespace yzq {

using DegreeKey = std::pair<int, int>;  // (d1, d2)

/// (d1, d2) != (0, 0), d1 >= 0, d1 >= -d2.
bool in_positive_cone(int d1, int d2);

/// Genus-0 Gromov-Witten invariants N_(d1,d2).
struct GwTable {
    std::map<DegreeKey, Rat> values;
};

/// Genus-0 BPS counts n_(d1,d2).
struct BpsTable {
    std::map<DegreeKey, Rat> values;
};

/// Reduced K3 invariants r_(m,h), keyed by (m, h). Holds solved entries and
/// the boundary seeds at h = 0.
struct ReducedInvariantTable {
    std::map<std::pair<int, int>, Rat> values;
    int hmax = 0;
    int mmax = 0;
};

/// Which threefold the counts refer to: the resolved model doubles every
/// count of the original one.
enum class BpsModel { resolved, original };

/// n = sum_{d | gcd} mu(d) d^-3 N(key / d). Throws std::invalid_argument on a
/// missing sub-key or a key outside the positive cone.
BpsTable bps_from_gw(const GwTable& gw);

/// N = sum_{d | gcd} d^-3 n(key / d).
GwTable gw_from_bps(const BpsTable& bps);

/// Degree-(d1, d2) Gromov-Witten invariants of the original model for
/// 0 <= d1 <= d1max, 1 <= d2 <= d2max, read off from
/// 2 + sum d2^3 N q1^d1 q2^d2 = 2 sum_n F_n(q2) q1^n.
GwTable gw_closed_form(int d1max, int d2max);

/// BPS counts on the same range, Moebius-inverted from gw_closed_form and
/// doubled for the resolved model.
BpsTable bps_closed_form(int d1max, int d2max, BpsModel model = BpsModel::resolved);

/// r_(m,h) with the boundary conventions: 0 for h < 0, 0 when m^2 does not
/// divide h - 1, r_(1,0) = 1, r_(m,0) = 0 for m >= 2. Throws
/// std::out_of_range when the entry should be solved but is absent.
Rat reduced_value(const ReducedInvariantTable& r, int m, int h);

/// sum r_(m',h') NL_(m',h',(m(s-1),m)) over all contributing (m', h') except
/// the target (m, m^2(s-1)+1). Throws std::logic_error if a contributing term
/// breaks upper-triangularity.
Rat assemble_constraint(int m, int s, const ReducedInvariantTable& r);

/// Solves r_(m,h) for 1 <= h <= hmax, 1 <= m <= mmax in (h, m) order.
ReducedInvariantTable solve_reduced(int hmax, int mmax, const BpsTable& bps);

struct YauZaslowRun {
    BpsTable bps;
    ReducedInvariantTable reduced;
    VerifyReport report;
};

/// Closed-form BPS counts -> solve -> compare every solved r_(m,h) with the
/// coefficient of q^h in prod (1 - q^n)^-24.
YauZaslowRun verify_yau_zaslow(int hmax, int mmax);

} // namespace yzq
