#include "ivr/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include "ivr/dgp.hpp"
#include "ivr/errors.hpp"
#include "ivr/interp.hpp"

namespace ivr {

double diff_var(const SegmentedSeries& series, int k, bool demean) {
    if (k < 1) throw InvalidParameter("difference lag k must be >= 1");
    const auto v = series.values();
    const auto uk = static_cast<std::size_t>(k);
    if (v.size() < uk + 2) {
        throw InsufficientData("series of length " + std::to_string(v.size()) +
                               " is too short for lag " + std::to_string(k));
    }
    const std::size_t m = v.size() - uk;

    double mean = 0.0;
    if (demean) {
        for (std::size_t p = uk; p < v.size(); ++p) mean += v[p] - v[p - uk];
        mean /= static_cast<double>(m);
    }
    double ss = 0.0;
    for (std::size_t p = uk; p < v.size(); ++p) {
        const double e = (v[p] - v[p - uk]) - mean;
        ss += e * e;
    }
    return ss / static_cast<double>(m - 1);
}

double vr_hat(const SegmentedSeries& series, int k, bool demean) {
    if (k < 2) throw InvalidParameter("variance-ratio lag k must be >= 2");
    if (series.size() < static_cast<std::size_t>(k) + 2) {
        throw InsufficientData("series of length " + std::to_string(series.size()) +
                               " is too short for lag " + std::to_string(k));
    }
    const double v1 = diff_var(series, 1, demean);
    if (!(v1 > 0.0)) {
        throw DegenerateSeries("one-period differences have zero variance; variance ratio undefined");
    }
    return diff_var(series, k, demean) / (k * v1);
}

std::vector<double> phase_vars(const SegmentedSeries& series, int k) {
    const int s = series.s();
    if (k == 0) k = s;
    if (k < 1) throw InvalidParameter("difference lag k must be >= 1");
    if (series.n_segments() < 3) throw InsufficientData("phase variances need at least 3 segments");

    const auto v = series.values();
    const auto uk = static_cast<std::size_t>(k);
    std::vector<double> sum(s, 0.0);
    std::vector<double> ss(s, 0.0);
    std::vector<std::size_t> count(s, 0);
    for (std::size_t p = uk; p < v.size(); ++p) {
        const int i = series.index_at(p).i - 1;
        sum[i] += v[p] - v[p - uk];
        ++count[i];
    }
    for (int i = 0; i < s; ++i) {
        if (count[i] < 2) throw InsufficientData("too few differences at phase " + std::to_string(i + 1));
        sum[i] /= static_cast<double>(count[i]);
    }
    for (std::size_t p = uk; p < v.size(); ++p) {
        const int i = series.index_at(p).i - 1;
        const double e = (v[p] - v[p - uk]) - sum[i];
        ss[i] += e * e;
    }
    for (int i = 0; i < s; ++i) ss[i] /= static_cast<double>(count[i] - 1);
    return ss;
}

double mc_replication_vr(const DgpSpec& spec, int s, Variant variant, std::int64_t n_segments,
                         std::uint64_t rep_seed, int burn_in) {
    const auto path = simulate(spec, s, n_segments, rep_seed, burn_in);
    if (variant == Variant::Original) return vr_hat(path, s, true);
    const auto bench = benchmarks(path);
    return vr_hat(interpolate(bench, s), s, true);
}

McReport mc_compare(const DgpSpec& spec, int s, Variant variant, int n_reps, std::int64_t n_segments,
                    std::uint64_t seed, const McOptions& opts) {
    if (n_reps < 2) throw InvalidParameter("n_reps must be >= 2");
    const double analytic = variance_ratio(spec, variant, s).vr;

    std::vector<double> vr(static_cast<std::size_t>(n_reps));
    int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::clamp(threads, 1, n_reps);

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (int r = next++; r < n_reps && !failed; r = next++) {
            try {
                vr[r] = mc_replication_vr(spec, s, variant, n_segments,
                                          replication_seed(seed, static_cast<std::uint64_t>(r)),
                                          opts.burn_in);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    // Summed in replication order so the result does not depend on scheduling.
    double mean = 0.0;
    for (double x : vr) mean += x;
    mean /= n_reps;
    double ss = 0.0;
    for (double x : vr) ss += (x - mean) * (x - mean);
    const double stderr_ = std::sqrt(ss / (n_reps - 1)) / std::sqrt(static_cast<double>(n_reps));

    double z = 0.0;
    if (stderr_ > 0.0) {
        z = (mean - analytic) / stderr_;
    } else if (mean != analytic) {
        z = std::copysign(std::numeric_limits<double>::infinity(), mean - analytic);
    }
    return {spec, s, variant, n_reps, n_segments, mean, stderr_, analytic, z};
}

}  // namespace ivr
