#include "ivr/grids.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "ivr/errors.hpp"

namespace ivr {

std::string_view to_string(Family f) noexcept {
    return f == Family::StationaryArma ? "stationary" : "nonstationary";
}

Family parse_family(std::string_view name) {
    std::string key(name);
    std::transform(key.begin(), key.end(), key.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (key == "stationary") return Family::StationaryArma;
    if (key == "nonstationary") return Family::NonstationaryArma;
    throw InvalidParameter("unknown family '" + std::string(name) +
                           "' (expected stationary or nonstationary)");
}

DgpSpec family_spec(Family f, double alpha, double theta) {
    return f == Family::StationaryArma ? DgpSpec::arma11(alpha, theta)
                                       : DgpSpec::rw_arma11(alpha, theta);
}

ParamGrid evaluate_grid(Family family, Variant variant, int s, std::vector<double> alphas,
                        std::vector<double> thetas) {
    ParamGrid g{family, variant, s, std::move(alphas), std::move(thetas), {}, {}};
    g.cells.resize(g.rows() * g.cols());
    g.na_mask.assign(g.rows() * g.cols(), false);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t c = 0; c < g.cols(); ++c) {
            g.cells[r * g.cols() + c] =
                variance_ratio(family_spec(family, g.alphas[r], g.thetas[c]), variant, s).vr;
        }
    }
    return g;
}

std::pair<ParamGrid, ParamGrid> table(Family family, int s) {
    if (s != 4 && s != 10) {
        throw InvalidParameter("tables exist only for s = 4 and s = 10 (got " + std::to_string(s) + ")");
    }
    const std::vector<double> axis(kTableAxis.begin(), kTableAxis.end());
    auto vy = evaluate_grid(family, Variant::Original, s, axis, axis);
    auto vx = evaluate_grid(family, Variant::Interpolated, s, axis, axis);
    if (family == Family::StationaryArma) {
        // White noise: printed as NA in the reference tables.
        for (std::size_t r = 0; r < axis.size(); ++r) {
            for (std::size_t c = 0; c < axis.size(); ++c) {
                if (axis[r] == 0.0 && axis[c] == 0.0) {
                    vy.na_mask[r * axis.size() + c] = true;
                    vx.na_mask[r * axis.size() + c] = true;
                }
            }
        }
    }
    return {std::move(vy), std::move(vx)};
}

std::vector<double> surface_axis(int n, double margin) {
    if (n < 3) throw InvalidParameter("grid resolution n must be >= 3");
    if (!(margin > 0.0 && margin < 0.5)) throw InvalidParameter("margin must lie in (0, 0.5)");
    std::vector<double> axis(static_cast<std::size_t>(n));
    const double half = 1.0 - margin;
    for (int k = 0; k < n; ++k) {
        axis[k] = half * static_cast<double>(2 * k - (n - 1)) / static_cast<double>(n - 1);
    }
    return axis;
}

ParamGrid surface(Family family, Variant variant, int s, int n, double margin) {
    if (s < 2) throw InvalidParameter("segment length s must be >= 2");
    auto axis = surface_axis(n, margin);
    return evaluate_grid(family, variant, s, axis, axis);
}

double round_half_away(double x, int decimals) {
    const double scale = std::pow(10.0, decimals);
    const double y = x * scale;
    // A value that is a tie up to floating-point noise (2.125 computed as
    // 2.12499999999) is rounded as the tie it represents.
    const double frac = std::abs(y - std::trunc(y));
    if (std::abs(frac - 0.5) <= 1e-9 * std::max(1.0, std::abs(y))) {
        return (std::trunc(y) + std::copysign(1.0, y)) / scale;
    }
    return std::round(y) / scale;
}

}  // namespace ivr
