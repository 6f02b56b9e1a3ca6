#pragma once

#include <cstdint>
#include <vector>

#include "ivr/analytic.hpp"
#include "ivr/series.hpp"

namespace ivr {

// Sample variance (divisor m - 1) of the m = n - k overlapping differences Y_T - Y_{T-k}.
// Without demeaning the squared differences are summed about zero.
[[nodiscard]] double diff_var(const SegmentedSeries& series, int k, bool demean = true);

// diff_var(k) / (k * diff_var(1)). No small-sample correction.
[[nodiscard]] double vr_hat(const SegmentedSeries& series, int k, bool demean = true);

// Demeaned sample variance of the k-differences ending at each phase i = 1..s.
// k defaults to the segment length.
[[nodiscard]] std::vector<double> phase_vars(const SegmentedSeries& series, int k = 0);

struct McReport {
    DgpSpec spec;
    int s;
    Variant variant;
    int n_reps;
    std::int64_t n_segments;
    double vr_mean;
    double vr_stderr;
    double vr_analytic;
    double z_score;
};

struct McOptions {
    int threads = 0;  // 0: hardware concurrency
    int burn_in = -1;  // < 0: default_burn_in
};

// Replication r simulates with replication_seed(seed, r). Results are combined in
// replication order, so the report does not depend on the thread count.
[[nodiscard]] McReport mc_compare(const DgpSpec& spec, int s, Variant variant, int n_reps,
                                  std::int64_t n_segments, std::uint64_t seed,
                                  const McOptions& opts = {});

// The per-replication statistic used by mc_compare.
[[nodiscard]] double mc_replication_vr(const DgpSpec& spec, int s, Variant variant,
                                       std::int64_t n_segments, std::uint64_t rep_seed,
                                       int burn_in = -1);

}  // namespace ivr
