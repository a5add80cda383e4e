#include "yzq/noether_lefschetz.hpp"

#include "yzq/modular_forms.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace yzq {

long discriminant(int h, int d1, int d2)
{
    return 2L * d1 * d2 + 2 - 2L * h;
}

Rat nl_number(int h, int d1, int d2)
{
    const long delta = discriminant(h, d1, d2);
    if (delta < 0) {
        return Rat(0);
    }
    const long n = delta / 2;
    if (n == 0) {
        return Rat(-4);
    }
    // E4 E6 = E10 = 1 - 264 sum sigma_9(n) q^n
    return Rat(-4) * Rat(-264) * Rat(sigma(9, n));
}

namespace {

using MemoKey = std::tuple<int, int, int, int>;

std::mutex& memo_mutex()
{
    static std::mutex m;
    return m;
}

std::map<MemoKey, Rat>& memo_table()
{
    static std::map<MemoKey, Rat> t;
    return t;
}

// Floor-style modulus so that negative h - 1 is handled.
bool divides(long m, long x)
{
    return ((x % m) + m) % m == 0;
}

Rat refined_uncached(int m, int h, int d1, int d2)
{
    const int g = std::gcd(d1, d2);
    if (g % m != 0) {
        return Rat(0);
    }
    const long delta = discriminant(h, d1, d2);
    if (delta < 0) {
        return Rat(0);
    }
    if (delta == 0) {
        return m == g ? nl_number(h, d1, d2) : Rat(0);
    }
    if (m >= 2) {
        const long mm = static_cast<long>(m) * m;
        if (!divides(mm, h - 1L)) {
            return Rat(0);
        }
        const long hp = (h - 1L) / mm + 1;
        return nl_refined(1, static_cast<int>(hp), d1 / m, d2 / m);
    }
    Rat total = nl_number(h, d1, d2);
    for (int mp = 2; mp <= g; ++mp) {
        if (g % mp == 0) {
            total -= nl_refined(mp, h, d1, d2);
        }
    }
    return total;
}

} // namespace

Rat nl_refined(int m, int h, int d1, int d2)
{
    if (d1 == 0 && d2 == 0) {
        throw std::invalid_argument("nl_refined: (d1, d2) must not both vanish");
    }
    if (m < 1) {
        throw std::invalid_argument("nl_refined: m must be positive");
    }
    const MemoKey key{m, h, d1, d2};
    {
        std::lock_guard lock(memo_mutex());
        auto it = memo_table().find(key);
        if (it != memo_table().end()) {
            return it->second;
        }
    }
    Rat value = refined_uncached(m, h, d1, d2);
    std::lock_guard lock(memo_mutex());
    memo_table().emplace(key, value);
    return value;
}

} // namespace yzq
