#include "ivr/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>
#include <string>
#include <system_error>

#include "ivr/errors.hpp"

namespace ivr::csv {

namespace {

std::string_view trim(std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t' || v.back() == '\r')) v.remove_suffix(1);
    return v;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <class T>
T parse_number(std::string_view text, std::size_t line_no) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw IoError("line " + std::to_string(line_no) + ": cannot parse '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, ptr};
}

void write_series(std::ostream& out, const SegmentedSeries& series) {
    out << "t,i,value\n";
    const auto v = series.values();
    for (std::size_t p = 0; p < v.size(); ++p) {
        const auto idx = series.index_at(p);
        out << idx.t << ',' << idx.i << ',' << format_double(v[p]) << '\n';
    }
}

SegmentedSeries read_series(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    if (!std::getline(in, line)) throw IoError("empty series file");
    ++line_no;
    const auto header = split(line);
    const bool indexed = header.size() == 3 && header[0] == "t" && header[1] == "i" && header[2] == "value";
    const bool plain = header.size() == 1 && header[0] == "value";
    if (!indexed && !plain) throw IoError("series header must be 't,i,value' or 'value'");

    std::vector<double> values;
    std::int64_t first_t = 0;
    std::int64_t prev_t = 0;
    int prev_i = 0;
    int s = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto fields = split(line);
        if (fields.size() != header.size()) {
            throw IoError("line " + std::to_string(line_no) + ": expected " +
                          std::to_string(header.size()) + " fields");
        }
        if (plain) {
            values.push_back(parse_number<double>(fields[0], line_no));
            continue;
        }
        const auto t = parse_number<std::int64_t>(fields[0], line_no);
        const auto i = parse_number<int>(fields[1], line_no);
        if (values.empty()) {
            if (i != 1) throw IoError("series must start at phase i = 1");
            first_t = t;
        } else {
            const bool next_phase = t == prev_t && i == prev_i + 1;
            const bool next_segment = t == prev_t + 1 && i == 1 && (s == 0 || prev_i == s);
            if (!next_phase && !next_segment) {
                throw IoError("line " + std::to_string(line_no) + ": rows are not consecutive (t, i) pairs");
            }
            if (next_segment && s == 0) s = prev_i;
        }
        if (s != 0 && i > s) throw IoError("line " + std::to_string(line_no) + ": phase exceeds segment length");
        prev_t = t;
        prev_i = i;
        values.push_back(parse_number<double>(fields[2], line_no));
    }
    if (values.empty()) throw IoError("series file has no observations");
    if (plain) return {std::move(values), 1, 1};
    if (s == 0) s = prev_i;  // a single segment
    if (prev_i != s) throw IoError("last segment is incomplete");
    return {std::move(values), s, first_t};
}

void write_grid(std::ostream& out, const ParamGrid& grid, int decimals) {
    out << "alpha,theta,value\n";
    for (std::size_t r = 0; r < grid.rows(); ++r) {
        for (std::size_t c = 0; c < grid.cols(); ++c) {
            out << format_double(grid.alphas[r]) << ',' << format_double(grid.thetas[c]) << ',';
            if (grid.is_na(r, c)) {
                out << "NA";
            } else {
                const double v = grid.at(r, c);
                out << format_double(decimals >= 0 ? round_half_away(v, decimals) : v);
            }
            out << '\n';
        }
    }
}

std::vector<GridRow> read_grid(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || split(line) != std::vector<std::string_view>{"alpha", "theta", "value"}) {
        throw IoError("grid header must be 'alpha,theta,value'");
    }
    std::vector<GridRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto f = split(line);
        if (f.size() != 3) throw IoError("line " + std::to_string(line_no) + ": expected 3 fields");
        GridRow row{parse_number<double>(f[0], line_no), parse_number<double>(f[1], line_no), f[2] == "NA",
                    0.0};
        if (!row.na) row.value = parse_number<double>(f[2], line_no);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace ivr::csv
