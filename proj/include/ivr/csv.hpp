#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ivr/grids.hpp"
#include "ivr/series.hpp"

namespace ivr::csv {

// Shortest decimal representation that parses back to the same double.
[[nodiscard]] std::string format_double(double x);

// Series schema: header "t,i,value", one row per observation.
void write_series(std::ostream& out, const SegmentedSeries& series);
// Reads the series schema, or a single "value" column (treated as s = 1).
// Throws IoError on malformed input.
[[nodiscard]] SegmentedSeries read_series(std::istream& in);

// Grid schema: header "alpha,theta,value", row-major over alpha then theta,
// masked cells written as NA. decimals < 0 writes full precision.
void write_grid(std::ostream& out, const ParamGrid& grid, int decimals = -1);

struct GridRow {
    double alpha;
    double theta;
    bool na;
    double value;
};
[[nodiscard]] std::vector<GridRow> read_grid(std::istream& in);

}  // namespace ivr::csv
