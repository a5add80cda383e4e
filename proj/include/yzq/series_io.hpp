#pragma once

#include "yzq/laurent_series.hpp"

#include <iosfwd>
#include <string>

namespace yzq {

// Text format: a header line "valuation truncation" (truncation "inf" for an
// exact series), then one "exponent numerator/denominator" line per stored
// coefficient.
void write_series(std::ostream& out, const LaurentSeries& s);
LaurentSeries read_series(std::istream& in);

std::string series_to_text(const LaurentSeries& s);
LaurentSeries series_from_text(const std::string& text);

} // namespace yzq
