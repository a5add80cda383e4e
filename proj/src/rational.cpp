#include "yzq/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace yzq {

std::string to_string(const Rat& r)
{
    if (r.get_den() == 1) {
        return r.get_num().get_str();
    }
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

Int parse_int(std::string_view s)
{
    if (!valid_integer_text(s)) {
        throw std::invalid_argument("malformed integer: '" + std::string(s) + "'");
    }
    if (s[0] == '+') {
        s.remove_prefix(1);
    }
    return Int(std::string(s), 10);
}

} // namespace

Rat parse_rat(std::string_view text)
{
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rat(parse_int(text));
    }
    Int num = parse_int(text.substr(0, slash));
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("denominator must be unsigned: '" + std::string(text) + "'");
    }
    Int den = parse_int(den_text);
    if (den == 0) {
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rat& r)
{
    return r.get_den() == 1;
}

Rat pow(const Rat& base, long exp)
{
    if (exp < 0) {
        if (base == 0) {
            throw std::domain_error("zero raised to a negative power");
        }
        return pow(Rat(1) / base, -exp);
    }
    Int num;
    Int den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace yzq
