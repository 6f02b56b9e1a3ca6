#pragma once

#include <cstdint>
#include <span>

#include "ivr/series.hpp"

namespace ivr {

// Segmented linear interpolation between consecutive benchmarks.
//
// Benchmark j (0-based) is taken as the phase-s value of segment first_segment + j.
// The first benchmark only serves as the left anchor, so the result covers
// segments first_segment + 1 .. first_segment + n - 1 and has (n - 1) * s values.
// Phase s reproduces the benchmark bit-for-bit.
[[nodiscard]] SegmentedSeries interpolate(std::span<const double> benchmarks, int s,
                                          std::int64_t first_segment = 1);

}  // namespace ivr
