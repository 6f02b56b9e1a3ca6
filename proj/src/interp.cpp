#include "ivr/interp.hpp"

#include <algorithm>
#include <vector>

#include "ivr/errors.hpp"

namespace ivr {

SegmentedSeries interpolate(std::span<const double> benchmarks, int s, std::int64_t first_segment) {
    if (s < 2) {
        throw InvalidParameter("interpolation needs s >= 2; with s = 1 the series is unchanged");
    }
    if (benchmarks.size() < 2) throw InsufficientData("interpolation needs at least 2 benchmarks");

    const double ds = s;
    std::vector<double> out;
    out.reserve((benchmarks.size() - 1) * static_cast<std::size_t>(s));
    for (std::size_t t = 1; t < benchmarks.size(); ++t) {
        const double left = benchmarks[t - 1];
        const double right = benchmarks[t];
        const auto [lo, hi] = std::minmax(left, right);
        for (int i = 1; i < s; ++i) {
            const double x = (i * right + (s - i) * left) / ds;
            // Rounding must never push a value outside its bracket.
            out.push_back(std::clamp(x, lo, hi));
        }
        out.push_back(right);
    }
    return {std::move(out), s, first_segment + 1};
}

}  // namespace ivr
