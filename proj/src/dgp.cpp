#include "ivr/dgp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "ivr/errors.hpp"

namespace ivr {

std::string_view to_string(Model m) noexcept {
    switch (m) {
        case Model::AR1: return "ar1";
        case Model::MA1: return "ma1";
        case Model::ARMA11: return "arma11";
        case Model::RW: return "rw";
        case Model::RW_ARMA11: return "rw-arma11";
    }
    return "?";
}

Model parse_model(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char ch) {
        return ch == '_' ? '-' : static_cast<char>(std::tolower(ch));
    });
    for (Model m : {Model::AR1, Model::MA1, Model::ARMA11, Model::RW, Model::RW_ARMA11}) {
        if (key == to_string(m)) return m;
    }
    throw InvalidSpec("unknown model '" + std::string(name) +
                      "' (expected ar1, ma1, arma11, rw or rw-arma11)");
}

void DgpSpec::validate(bool allow_zero_noise) const {
    const std::string name(to_string(model));
    if (!std::isfinite(alpha) || !std::isfinite(theta) || !std::isfinite(mu) ||
        !std::isfinite(sigma2)) {
        throw InvalidSpec(name + ": parameters must be finite");
    }
    if (uses_alpha(model) && !(std::abs(alpha) < 1.0)) {
        throw InvalidSpec(name + ": |alpha| must be < 1 (got " + std::to_string(alpha) + ")");
    }
    if (!uses_alpha(model) && alpha != 0.0) {
        throw InvalidSpec(name + ": alpha must be 0 for this model");
    }
    if (uses_theta(model) && !(std::abs(theta) < 1.0)) {
        throw InvalidSpec(name + ": |theta| must be < 1 (got " + std::to_string(theta) + ")");
    }
    if (!uses_theta(model) && theta != 0.0) {
        throw InvalidSpec(name + ": theta must be 0 for this model");
    }
    if (allow_zero_noise ? !(sigma2 >= 0.0) : !(sigma2 > 0.0)) {
        throw InvalidSpec(name + ": sigma2 must be " + (allow_zero_noise ? ">= 0" : "> 0") +
                          " (got " + std::to_string(sigma2) + ")");
    }
    if (is_stationary(model) && mu != 0.0) {
        throw InvalidSpec(name + ": drift mu must be 0 for a stationary model");
    }
}

DgpSpec DgpSpec::ar1(double alpha, double sigma2) { return {Model::AR1, alpha, 0.0, 0.0, sigma2}; }
DgpSpec DgpSpec::ma1(double theta, double sigma2) { return {Model::MA1, 0.0, theta, 0.0, sigma2}; }
DgpSpec DgpSpec::arma11(double alpha, double theta, double sigma2) {
    return {Model::ARMA11, alpha, theta, 0.0, sigma2};
}
DgpSpec DgpSpec::rw(double mu, double sigma2) { return {Model::RW, 0.0, 0.0, mu, sigma2}; }
DgpSpec DgpSpec::rw_arma11(double alpha, double theta, double mu, double sigma2) {
    return {Model::RW_ARMA11, alpha, theta, mu, sigma2};
}

InnovationStream::InnovationStream(std::uint64_t seed, double sigma2)
    : engine_(seed), normal_(0.0, 1.0), scale_(std::sqrt(sigma2)) {}

double InnovationStream::next() { return scale_ * normal_(engine_); }

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t replication_seed(std::uint64_t master, std::uint64_t rep) noexcept {
    return splitmix64(splitmix64(master) ^ (rep * 0xD1B54A32D192ED03ULL + 1));
}

int default_burn_in(const DgpSpec& spec) {
    if (spec.model == Model::RW) return 0;
    const double memory = std::ceil(20.0 / (1.0 - std::abs(spec.alpha)));
    return static_cast<int>(std::max(200.0, memory));
}

SegmentedSeries simulate(const DgpSpec& spec, int s, std::int64_t n_segments, std::uint64_t seed,
                         int burn_in) {
    spec.validate(/*allow_zero_noise=*/true);
    if (s < 2) throw InvalidParameter("segment length s must be >= 2");
    if (n_segments < 2) throw InsufficientData("n_segments must be >= 2");
    if (burn_in < 0) burn_in = default_burn_in(spec);

    const auto n = static_cast<std::size_t>(n_segments) * static_cast<std::size_t>(s);
    std::vector<double> out(n);
    InnovationStream eps(seed, spec.sigma2);
    const double a = spec.alpha;
    const double th = spec.theta;

    // Error process u: AR1, MA1 and ARMA11 are special cases of
    // u_T = a u_{T-1} + e_T + th e_{T-1}. The random walk uses u_T = e_T.
    const bool has_ma = uses_theta(spec.model);
    double e_prev = has_ma ? eps.next() : 0.0;
    double u = 0.0;
    auto step = [&] {
        const double e = eps.next();
        u = a * u + e + th * e_prev;
        e_prev = e;
        return u;
    };
    for (int b = 0; b < burn_in; ++b) (void)step();

    if (is_stationary(spec.model)) {
        for (auto& v : out) v = step();
    } else {
        double level = 0.0;
        for (auto& v : out) {
            level += spec.mu + step();
            v = level;
        }
    }
    return {std::move(out), s, 1};
}

std::vector<double> benchmarks(const SegmentedSeries& series) {
    const auto vals = series.values();
    const auto s = static_cast<std::size_t>(series.s());
    std::vector<double> out;
    out.reserve(vals.size() / s);
    for (std::size_t p = s - 1; p < vals.size(); p += s) out.push_back(vals[p]);
    return out;
}

}  // namespace ivr
