#pragma once

#include "yzq/bi_series.hpp"
#include "yzq/report.hpp"

namespace yzq {

/// f(q1) E4(q2) / (j(q1) - j(q2)) by nested inversion, with rows 0..outer-1
/// known to inner exponent at least `inner`.
BiSeries harvey_moore_lhs(int outer, int inner);

/// q1/(q2 - q1) + E4(q2) - sum_{d,k,l>0} l^3 c(kl) q1^(kd) q2^(ld), expanded
/// for |q1| < |q2|; rows 0..outer-1, inner exponents below `inner`.
BiSeries harvey_moore_rhs(int outer, int inner);

/// sum over the positive cone of d2^3 c(d1,d2) q1^d1 q2^d2 / (1 - q1^d1 q2^d2),
/// c(d1,d2) = -2 c(d1 d2); rows 0..outer-1, inner exponents below `inner`.
BiSeries lattice_sum(int outer, int inner);

/// Left side against right side for 0 <= a <= n1, -window <= b <= window,
/// plus the cross-check of the left side against sum F_n(q2) q1^n.
VerifyReport verify_harmoo(int n1, int window);

/// Lattice sum against 2 f E4/(j1 - j2) - 2 for 0 <= a <= n1, |b| <= n2,
/// plus integrality of every compared coefficient and agreement with twice
/// the Harvey-Moore right side minus 2.
VerifyReport verify_ppx(int n1, int n2);

} // namespace yzq
