#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivr/series.hpp"

namespace ivr {

enum class Model { AR1, MA1, ARMA11, RW, RW_ARMA11 };

[[nodiscard]] std::string_view to_string(Model m) noexcept;
// Accepts "ar1", "ma1", "arma11", "rw", "rw-arma11" (case-insensitive, '_' allowed for '-').
[[nodiscard]] Model parse_model(std::string_view name);

[[nodiscard]] constexpr bool is_stationary(Model m) noexcept {
    return m == Model::AR1 || m == Model::MA1 || m == Model::ARMA11;
}
[[nodiscard]] constexpr bool uses_alpha(Model m) noexcept {
    return m == Model::AR1 || m == Model::ARMA11 || m == Model::RW_ARMA11;
}
[[nodiscard]] constexpr bool uses_theta(Model m) noexcept {
    return m == Model::MA1 || m == Model::ARMA11 || m == Model::RW_ARMA11;
}

struct DgpSpec {
    Model model = Model::AR1;
    double alpha = 0.0;
    double theta = 0.0;
    double mu = 0.0;
    double sigma2 = 1.0;

    // Throws InvalidSpec unless the parameters are admissible for the model.
    // allow_zero_noise admits sigma2 == 0, which only the simulator accepts
    // (it yields a deterministic drift line).
    void validate(bool allow_zero_noise = false) const;

    [[nodiscard]] static DgpSpec ar1(double alpha, double sigma2 = 1.0);
    [[nodiscard]] static DgpSpec ma1(double theta, double sigma2 = 1.0);
    [[nodiscard]] static DgpSpec arma11(double alpha, double theta, double sigma2 = 1.0);
    [[nodiscard]] static DgpSpec rw(double mu = 0.0, double sigma2 = 1.0);
    [[nodiscard]] static DgpSpec rw_arma11(double alpha, double theta, double mu = 0.0,
                                           double sigma2 = 1.0);

    friend bool operator==(const DgpSpec&, const DgpSpec&) = default;
};

// Source of i.i.d. N(0, sigma2) innovations. Exposed so that callers (and tests)
// can reproduce exactly the draws consumed by simulate().
class InnovationStream {
public:
    InnovationStream(std::uint64_t seed, double sigma2);
    [[nodiscard]] double next();

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_;
    double scale_;
};

// Deterministic 64-bit mixer used to derive per-replication seeds.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x) noexcept;
[[nodiscard]] std::uint64_t replication_seed(std::uint64_t master, std::uint64_t rep) noexcept;

// max(200, ceil(20 / (1 - |alpha|))) for models with an autoregressive part,
// 200 for MA(1) (the pre-sample innovation is drawn before it), 0 for the random walk.
[[nodiscard]] int default_burn_in(const DgpSpec& spec);

// Simulates s * n_segments observations. burn_in < 0 selects default_burn_in(spec).
// For the random-walk models the level is 0 immediately before the first retained
// observation; only the error process is burned in.
[[nodiscard]] SegmentedSeries simulate(const DgpSpec& spec, int s, std::int64_t n_segments,
                                       std::uint64_t seed, int burn_in = -1);

// Phase-s value of every segment.
[[nodiscard]] std::vector<double> benchmarks(const SegmentedSeries& series);

}  // namespace ivr
