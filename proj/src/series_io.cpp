#include "yzq/series_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace yzq {

void write_series(std::ostream& out, const LaurentSeries& s)
{
    out << s.valuation() << ' ';
    if (s.is_exact()) {
        out << "inf";
    } else {
        out << s.truncation();
    }
    out << '\n';
    const auto& c = s.coefficients();
    for (std::size_t i = 0; i < c.size(); ++i) {
        out << s.valuation() + static_cast<int>(i) << ' ' << to_string(c[i]) << '\n';
    }
}

LaurentSeries read_series(std::istream& in)
{
    int valuation = 0;
    std::string trunc_text;
    if (!(in >> valuation >> trunc_text)) {
        throw std::runtime_error("series text: missing header");
    }
    int truncation = LaurentSeries::kExact;
    if (trunc_text != "inf") {
        try {
            truncation = std::stoi(trunc_text);
        } catch (const std::exception&) {
            throw std::runtime_error("series text: bad truncation '" + trunc_text + "'");
        }
    }
    std::vector<Rat> coeffs;
    int exponent = 0;
    std::string value;
    int expected = valuation;
    while (in >> exponent >> value) {
        if (exponent < expected) {
            throw std::runtime_error("series text: exponents out of order");
        }
        coeffs.resize(coeffs.size() + static_cast<std::size_t>(exponent - expected));
        coeffs.push_back(parse_rat(value));
        expected = exponent + 1;
    }
    if (!in.eof()) {
        throw std::runtime_error("series text: malformed record");
    }
    const int start = coeffs.empty() ? truncation : valuation;
    return LaurentSeries(start, std::move(coeffs), truncation);
}

std::string series_to_text(const LaurentSeries& s)
{
    std::ostringstream out;
    write_series(out, s);
    return out.str();
}

LaurentSeries series_from_text(const std::string& text)
{
    std::istringstream in(text);
    return read_series(in);
}

} // namespace yzq
