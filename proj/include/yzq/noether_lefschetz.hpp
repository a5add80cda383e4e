#pragma once

#include "yzq/rational.hpp"

#include <array>

namespace yzq {

/// Gram matrix of the rank-2 hyperbolic lattice U.
struct StuLattice {
    static constexpr std::array<std::array<int, 2>, 2> gram{{{0, 1}, {1, 0}}};
};

struct NLKey {
    int h = 0;
    int d1 = 0;
    int d2 = 0;
};

struct RefinedNLKey {
    int m = 1;
    int h = 0;
    int d1 = 0;
    int d2 = 0;
};

/// 2 d1 d2 + 2 - 2h.
long discriminant(int h, int d1, int d2);

/// -4 times the coefficient of q^(Delta/2) in E4 E6; zero when Delta < 0.
Rat nl_number(int h, int d1, int d2);

/// Refined number for classes of divisibility m. Throws std::invalid_argument
/// when (d1, d2) = (0, 0) or m < 1.
Rat nl_refined(int m, int h, int d1, int d2);

inline Rat nl_number(const NLKey& k) { return nl_number(k.h, k.d1, k.d2); }
inline Rat nl_refined(const RefinedNLKey& k) { return nl_refined(k.m, k.h, k.d1, k.d2); }

} // namespace yzq
