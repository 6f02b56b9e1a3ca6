#pragma once

#include <string_view>
#include <utility>

#include "ivr/dgp.hpp"

namespace ivr {

enum class Variant { Original, Interpolated };

[[nodiscard]] std::string_view to_string(Variant v) noexcept;
[[nodiscard]] Variant parse_variant(std::string_view name);

struct ArmaMoments {
    double gamma0;            // variance of the ARMA(1,1) process
    double gamma1;            // lag-1 autocovariance
    double rho1;              // gamma1 / gamma0
    double process_variance;  // sigma_y^2 of the stationary level series (equals gamma0)

    // gamma_j for j >= 0; gamma_j = alpha^(j-1) * gamma1 for j >= 1.
    [[nodiscard]] double gamma(int j, double alpha) const;
};

[[nodiscard]] ArmaMoments arma_moments(double alpha, double theta, double sigma2);

// Arithmetic-geometric sums that appear in the random walk with ARMA(1,1) errors:
//   d = sum_{j=1}^{s-1} (s-j) a^(j-1)
//   b = sum_{j=0}^{s-1} (s-j) a^(s+j-1)
//   c = sum_{j=1}^{s-1} (s-j) a^(s-j-1)
struct AgSums {
    double d;
    double b;
    double c;
};

[[nodiscard]] AgSums ag_sums(double alpha, int s);

struct VarianceSummary {
    DgpSpec model;
    Variant variant;
    int s;
    int k;
    double short_var;
    double long_var;
    double vr;
};

// Variance of one-period differences.
[[nodiscard]] double short_var(const DgpSpec& spec, Variant variant, int s);
// Variance of s-period differences; for the interpolated variant this is the
// average over the s phases of long_var_phase.
[[nodiscard]] double long_var(const DgpSpec& spec, Variant variant, int s);
// Variance of x_{t,i} - x_{t-1,i} for the interpolated series at phase i.
[[nodiscard]] double long_var_phase(const DgpSpec& spec, int s, int i);
// long_var / (s * short_var), with k = s.
[[nodiscard]] VarianceSummary variance_ratio(const DgpSpec& spec, Variant variant, int s);

// Closed-form variance ratios written directly in terms of (alpha, theta, s),
// used to cross-check variance_ratio().
[[nodiscard]] double closed_form_vr(const DgpSpec& spec, Variant variant, int s);

// The interpolated ARMA(1,1) ratio as it is sometimes printed, with
// (1 + 2*alpha*theta + theta^2) in the denominator instead of (1 + alpha*theta + theta^2).
// It disagrees with long_var / (s * short_var) whenever alpha*theta != 0 and is kept
// only so that the discrepancy stays visible in tests.
[[nodiscard]] double printed_interpolated_arma_vr(double alpha, double theta, int s);

// rho1 threshold (s-1)/(s - alpha^(s-1)) below which the ARMA(1,1) ratio is below one.
[[nodiscard]] double arma_vy_threshold(double alpha, int s);

struct Shrinkage {
    double short_ratio;  // short_var(Interpolated) / short_var(Original)
    double long_ratio;   // long_var(Interpolated) / long_var(Original)
};

[[nodiscard]] Shrinkage variance_shrinkage(const DgpSpec& spec, int s);

}  // namespace ivr
