#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ivr {

struct SegmentIndex {
    std::int64_t t;
    int i;
    friend bool operator==(const SegmentIndex&, const SegmentIndex&) = default;
};

// Linear period T (1-based) to segment t and phase i, with T = s(t - 1) + i and 1 <= i <= s.
[[nodiscard]] SegmentIndex to_segment_index(std::int64_t T, int s);
[[nodiscard]] std::int64_t to_linear_index(SegmentIndex idx, int s);

// A series stored as whole segments of length s. The first stored value is
// phase 1 of segment origin_segment.
class SegmentedSeries {
public:
    SegmentedSeries(std::vector<double> values, int s, std::int64_t origin_segment = 1);

    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] int s() const noexcept { return s_; }
    [[nodiscard]] std::int64_t origin_segment() const noexcept { return origin_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::int64_t n_segments() const noexcept {
        return static_cast<std::int64_t>(values_.size()) / s_;
    }

    // Segment index of the value stored at 0-based position pos.
    [[nodiscard]] SegmentIndex index_at(std::size_t pos) const noexcept {
        return {origin_ + static_cast<std::int64_t>(pos) / s_, static_cast<int>(pos % s_) + 1};
    }
    [[nodiscard]] double at(SegmentIndex idx) const;

    // New series with every value multiplied by scale and then shifted by shift.
    [[nodiscard]] SegmentedSeries affine(double scale, double shift) const;

private:
    std::vector<double> values_;
    int s_;
    std::int64_t origin_;
};

}  // namespace ivr
