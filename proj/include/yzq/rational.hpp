#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace yzq {

// Exact rational backed by GMP. mpq_class keeps every value canonical
// (gcd(num, den) = 1, den > 0, zero is 0/1) after each arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& r);

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
// Throws std::invalid_argument on malformed input or a zero denominator.
Rat parse_rat(std::string_view text);

bool is_integer(const Rat& r);

inline Rat make_rat(long num, long den = 1)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// base^exp for a signed exponent; base must be nonzero when exp < 0.
Rat pow(const Rat& base, long exp);

} // namespace yzq
