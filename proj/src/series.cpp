#include "ivr/series.hpp"

#include <string>

#include "ivr/errors.hpp"

namespace ivr {

SegmentIndex to_segment_index(std::int64_t T, int s) {
    if (T < 1) throw InvalidParameter("linear index T must be >= 1");
    if (s < 1) throw InvalidParameter("segment length s must be >= 1");
    return {(T - 1) / s + 1, static_cast<int>((T - 1) % s) + 1};
}

std::int64_t to_linear_index(SegmentIndex idx, int s) {
    if (s < 1) throw InvalidParameter("segment length s must be >= 1");
    if (idx.i < 1 || idx.i > s) throw InvalidParameter("phase i must lie in 1..s");
    return static_cast<std::int64_t>(s) * (idx.t - 1) + idx.i;
}

SegmentedSeries::SegmentedSeries(std::vector<double> values, int s, std::int64_t origin_segment)
    : values_(std::move(values)), s_(s), origin_(origin_segment) {
    if (s_ < 1) throw InvalidParameter("segment length s must be >= 1");
    if (values_.size() % static_cast<std::size_t>(s_) != 0) {
        throw InvalidParameter("series length " + std::to_string(values_.size()) +
                               " is not a multiple of s = " + std::to_string(s_));
    }
}

double SegmentedSeries::at(SegmentIndex idx) const {
    if (idx.i < 1 || idx.i > s_ || idx.t < origin_ || idx.t >= origin_ + n_segments()) {
        throw InvalidParameter("segment index outside the stored range");
    }
    return values_[static_cast<std::size_t>((idx.t - origin_) * s_ + (idx.i - 1))];
}

SegmentedSeries SegmentedSeries::affine(double scale, double shift) const {
    std::vector<double> out(values_.size());
    for (std::size_t p = 0; p < values_.size(); ++p) out[p] = values_[p] * scale + shift;
    return {std::move(out), s_, origin_};
}

}  // namespace ivr
