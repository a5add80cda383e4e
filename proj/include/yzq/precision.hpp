#pragma once

#include <stdexcept>

namespace yzq {

// Runs attempt(margin) with a growing working margin until no coefficient
// outside the known range is requested.
template <class Attempt>
auto with_working_margin(int margin, Attempt&& attempt, int tries = 6)
{
    for (int i = 1;; ++i) {
        try {
            return attempt(margin);
        } catch (const std::out_of_range&) {
            if (i >= tries) {
                throw;
            }
            margin *= 2;
        }
    }
}

} // namespace yzq
