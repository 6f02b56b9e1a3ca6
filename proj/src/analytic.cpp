#include "ivr/analytic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "ivr/errors.hpp"

namespace ivr {

namespace {

void require_s(int s) {
    if (s < 2) throw InvalidParameter("segment length s must be >= 2 (got " + std::to_string(s) + ")");
}

void require_coefficient(double v, const char* name) {
    if (!(std::abs(v) < 1.0)) {
        throw InvalidParameter(std::string("|") + name + "| must be < 1 (got " + std::to_string(v) +
                               ")");
    }
}

// 1 - a^n without cancellation when |a| is close to 1.
double one_minus_pow(double a, int n) {
    if (n == 0) return 0.0;
    if (a == 0.0) return 1.0;
    const double lg = n * std::log(std::abs(a));
    if (a > 0.0 || n % 2 == 0) return -std::expm1(lg);
    return 1.0 + std::exp(lg);
}

double ipow(double a, int n) { return std::pow(a, n); }

// Lag structure of the ARMA(1,1) part in units of sigma2 / (1 - a^2):
// gamma0 = A * u, gamma1 = B * u.
struct ArmaTerms {
    double A;  // 1 + th^2 + 2 a th
    double B;  // (1 + a th)(a + th)
    double u;  // sigma2 / (1 - a^2)
};

ArmaTerms arma_terms(const DgpSpec& m) {
    const double a = m.alpha;
    const double th = m.theta;
    return {1.0 + th * th + 2.0 * a * th, (1.0 + a * th) * (a + th), m.sigma2 / ((1.0 - a) * (1.0 + a))};
}

// Phase weights of the interpolated k-difference: x_{t,i} - x_{t-1,i} combines the
// two benchmark differences ending at t and t-1 with weights i/s and (s-i)/s.
double phase_weight_sq(int s, int i) {
    return static_cast<double>(i) * i + static_cast<double>(s - i) * (s - i);
}
double phase_weight_cross(int s, int i) { return 2.0 * i * (s - i); }

// Averages of the phase weights over i = 1..s.
double mean_weight_sq(int s) { return (2.0 * s * s + 1.0) / 3.0; }
double mean_weight_cross(int s) { return (static_cast<double>(s) * s - 1.0) / 3.0; }

// Variance of one benchmark difference of the random walk with ARMA(1,1) errors,
// i.e. of a sum of s consecutive error terms.
double block_variance(const ArmaTerms& t, const AgSums& g, int s) {
    return (s * t.A + 2.0 * t.B * g.d) * t.u;
}

// Covariance of two consecutive benchmark differences of the random walk with
// ARMA(1,1) errors: sum over lags h = 1..2s-1 of (s - |h - s|) gamma_h.
double block_covariance(const ArmaTerms& t, const AgSums& g) { return t.B * (g.c + g.b) * t.u; }

// Covariance of two consecutive benchmark differences of a stationary ARMA(1,1):
// 2 gamma_s - gamma_{2s} - gamma_0 = (2 a^(s-1) - a^(2s-1)) gamma1 - gamma0.
double stationary_block_covariance(const ArmaTerms& t, double a, int s) {
    return ((2.0 * ipow(a, s - 1) - ipow(a, 2 * s - 1)) * t.B - t.A) * t.u;
}

void check(const DgpSpec& spec, int s) {
    spec.validate();
    require_s(s);
}

}  // namespace

std::string_view to_string(Variant v) noexcept {
    return v == Variant::Original ? "original" : "interpolated";
}

Variant parse_variant(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (key == "original") return Variant::Original;
    if (key == "interpolated") return Variant::Interpolated;
    throw InvalidParameter("unknown variant '" + std::string(name) +
                           "' (expected original or interpolated)");
}

double ArmaMoments::gamma(int j, double alpha) const {
    if (j < 0) throw InvalidParameter("autocovariance lag must be >= 0");
    if (j == 0) return gamma0;
    return ipow(alpha, j - 1) * gamma1;
}

ArmaMoments arma_moments(double alpha, double theta, double sigma2) {
    require_coefficient(alpha, "alpha");
    require_coefficient(theta, "theta");
    if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) throw InvalidParameter("sigma2 must be > 0");
    const auto t = arma_terms(DgpSpec::arma11(alpha, theta, sigma2));
    const double g0 = t.A * t.u;
    const double g1 = t.B * t.u;
    return {g0, g1, t.B / t.A, g0};
}

AgSums ag_sums(double alpha, int s) {
    require_coefficient(alpha, "alpha");
    require_s(s);
    const double a = alpha;
    if (a == 0.0) {
        // Only the terms with a zero exponent survive.
        return {static_cast<double>(s - 1), 0.0, 1.0};
    }
    const double w = 1.0 - a;
    const double w2 = w * w;
    const double as1 = ipow(a, s - 1);
    const double d = (s * w - one_minus_pow(a, s)) / w2;
    const double b = as1 * (s * w - a * one_minus_pow(a, s)) / w2;
    const double c = (one_minus_pow(a, s - 1) - (s - 1) * w * as1) / w2;
    return {d, b, c};
}

double short_var(const DgpSpec& spec, Variant variant, int s) {
    check(spec, s);
    const double a = spec.alpha;
    const double th = spec.theta;
    const double sig = spec.sigma2;
    const double s2 = static_cast<double>(s) * s;
    const bool interp = variant == Variant::Interpolated;

    switch (spec.model) {
        case Model::AR1:
            if (!interp) return 2.0 * sig / (1.0 + a);
            return 2.0 * one_minus_pow(a, s) * sig / (s2 * (1.0 - a) * (1.0 + a));
        case Model::MA1:
            if (!interp) return 2.0 * (1.0 + th * th - th) * sig;
            return 2.0 * (1.0 + th * th) * sig / s2;
        case Model::ARMA11: {
            const auto t = arma_terms(spec);
            if (!interp) return 2.0 * (t.A - t.B) * t.u;
            return 2.0 * (t.A - ipow(a, s - 1) * t.B) * t.u / s2;
        }
        case Model::RW:
            return interp ? sig / s : sig;
        case Model::RW_ARMA11: {
            const auto t = arma_terms(spec);
            if (!interp) return t.A * t.u;
            return block_variance(t, ag_sums(a, s), s) / s2;
        }
    }
    throw InvalidSpec("unknown model");
}

double long_var(const DgpSpec& spec, Variant variant, int s) {
    check(spec, s);
    const double a = spec.alpha;
    const double th = spec.theta;
    const double sig = spec.sigma2;
    const double s2 = static_cast<double>(s) * s;
    const bool interp = variant == Variant::Interpolated;

    switch (spec.model) {
        case Model::AR1: {
            const double oma = one_minus_pow(a, s);
            const double as = 1.0 - oma;
            if (!interp) return 2.0 * oma * sig / ((1.0 - a) * (1.0 + a));
            return sig / (3.0 * s2 * (1.0 - a) * (1.0 + a)) * (oma * (3.0 * s2 + as * s2 - as + 3.0));
        }
        case Model::MA1:
            if (!interp) return 2.0 * (1.0 + th * th) * sig;
            return (s2 + 1.0) * (1.0 + th * th) * sig / s2;
        case Model::ARMA11: {
            const auto t = arma_terms(spec);
            if (!interp) return 2.0 * (t.A - ipow(a, s - 1) * t.B) * t.u;
            return mean_weight_sq(s) * short_var(spec, variant, s) +
                   mean_weight_cross(s) / s2 * stationary_block_covariance(t, a, s);
        }
        case Model::RW:
            return interp ? (2.0 * s2 + 1.0) * sig / (3.0 * s) : s * sig;
        case Model::RW_ARMA11: {
            const auto t = arma_terms(spec);
            const auto g = ag_sums(a, s);
            const double vb = block_variance(t, g, s);
            if (!interp) return vb;
            return (mean_weight_sq(s) * vb + mean_weight_cross(s) * block_covariance(t, g)) / s2;
        }
    }
    throw InvalidSpec("unknown model");
}

double long_var_phase(const DgpSpec& spec, int s, int i) {
    check(spec, s);
    if (i < 1 || i > s) {
        throw InvalidParameter("phase i must lie in 1.." + std::to_string(s) + " (got " +
                               std::to_string(i) + ")");
    }
    const double a = spec.alpha;
    const double th = spec.theta;
    const double sig = spec.sigma2;
    const double s2 = static_cast<double>(s) * s;
    const double wsq = phase_weight_sq(s, i);
    const double wx = phase_weight_cross(s, i);

    switch (spec.model) {
        case Model::AR1: {
            const double cov = -ipow(one_minus_pow(a, s), 2) * sig / ((1.0 - a) * (1.0 + a));
            return wsq * short_var(spec, Variant::Interpolated, s) + wx / s2 * cov;
        }
        case Model::MA1:
            return (1.0 + th * th) * sig / s2 * (2.0 * wsq - wx);
        case Model::ARMA11: {
            const auto t = arma_terms(spec);
            return wsq * short_var(spec, Variant::Interpolated, s) +
                   wx / s2 * stationary_block_covariance(t, a, s);
        }
        case Model::RW:
            return wsq / s * sig;
        case Model::RW_ARMA11: {
            const auto t = arma_terms(spec);
            const auto g = ag_sums(a, s);
            return (wsq * block_variance(t, g, s) + wx * block_covariance(t, g)) / s2;
        }
    }
    throw InvalidSpec("unknown model");
}

VarianceSummary variance_ratio(const DgpSpec& spec, Variant variant, int s) {
    const double sv = short_var(spec, variant, s);
    const double lv = long_var(spec, variant, s);
    return {spec, variant, s, s, sv, lv, lv / (s * sv)};
}

double closed_form_vr(const DgpSpec& spec, Variant variant, int s) {
    check(spec, s);
    const double a = spec.alpha;
    const double th = spec.theta;
    const double sd = s;
    const double s2 = sd * sd;
    const bool interp = variant == Variant::Interpolated;

    switch (spec.model) {
        case Model::AR1: {
            const double oma = one_minus_pow(a, s);
            if (!interp) return oma / (sd * (1.0 - a));
            const double as = 1.0 - oma;
            return (s2 * (3.0 + as) + (3.0 - as)) / (6.0 * sd);
        }
        case Model::MA1:
            if (!interp) return (1.0 + th * th) / (sd * (1.0 + th * th - th));
            return (s2 + 1.0) / (2.0 * sd);
        case Model::ARMA11: {
            const auto t = arma_terms(spec);
            const double as1 = ipow(a, s - 1);
            if (!interp) return (t.A - as1 * t.B) / (sd * (t.A - t.B));
            const double num = as1 * (2.0 - a * as1) * t.B - t.A;
            const double den = one_minus_pow(a, s) * (1.0 + a * th + th * th) +
                               a * th * one_minus_pow(a, s - 2);
            return (2.0 * s2 + 1.0) / (3.0 * sd) + (s2 - 1.0) / (6.0 * sd) * num / den;
        }
        case Model::RW:
            return interp ? (2.0 * s2 + 1.0) / (3.0 * sd) : 1.0;
        case Model::RW_ARMA11: {
            const auto t = arma_terms(spec);
            const double w = 1.0 - a;
            const double oma = one_minus_pow(a, s);
            if (!interp) {
                return 1.0 + 2.0 * (t.B / t.A) / sd * ag_sums(a, s).d;
            }
            const double num = t.B * (s2 - 1.0) * oma * oma;
            const double den = 3.0 * s2 * w * w * t.A + 6.0 * sd * t.B * (sd * w - oma);
            return (2.0 * s2 + 1.0) / (3.0 * sd) + num / den;
        }
    }
    throw InvalidSpec("unknown model");
}

double printed_interpolated_arma_vr(double alpha, double theta, int s) {
    require_coefficient(alpha, "alpha");
    require_coefficient(theta, "theta");
    require_s(s);
    const double a = alpha;
    const double th = theta;
    const double sd = s;
    const double p = 1.0 + 2.0 * a * th + th * th;
    const double num = ipow(a, s - 1) * (2.0 - ipow(a, s)) * (1.0 + a * th) * (a + th) - p;
    const double den = (1.0 - ipow(a, s)) * p + a * th * (1.0 - ipow(a, s - 2));
    return (2.0 * sd * sd + 1.0) / (3.0 * sd) + (sd * sd - 1.0) / (6.0 * sd) * num / den;
}

double arma_vy_threshold(double alpha, int s) {
    require_coefficient(alpha, "alpha");
    require_s(s);
    return (s - 1.0) / (s - ipow(alpha, s - 1));
}

Shrinkage variance_shrinkage(const DgpSpec& spec, int s) {
    check(spec, s);
    const double a = spec.alpha;
    const double th = spec.theta;
    const double sd = s;
    const double s2 = sd * sd;
    switch (spec.model) {
        case Model::AR1: {
            const double oma = one_minus_pow(a, s);
            const double as = 1.0 - oma;
            return {oma / (s2 * (1.0 - a)), (s2 * (3.0 + as) + 3.0 - as) / (6.0 * s2)};
        }
        case Model::MA1:
            return {(1.0 + th * th) / (s2 * (1.0 + th * th - th)), (s2 + 1.0) / (2.0 * s2)};
        case Model::RW:
            return {1.0 / sd, (2.0 * s2 + 1.0) / (3.0 * s2)};
        case Model::ARMA11:
        case Model::RW_ARMA11:
            return {short_var(spec, Variant::Interpolated, s) / short_var(spec, Variant::Original, s),
                    long_var(spec, Variant::Interpolated, s) / long_var(spec, Variant::Original, s)};
    }
    throw InvalidSpec("unknown model");
}

}  // namespace ivr
