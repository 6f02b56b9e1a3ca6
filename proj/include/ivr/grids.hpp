#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "ivr/analytic.hpp"

namespace ivr {

enum class Family { StationaryArma, NonstationaryArma };

[[nodiscard]] std::string_view to_string(Family f) noexcept;
// "stationary" / "nonstationary".
[[nodiscard]] Family parse_family(std::string_view name);

[[nodiscard]] DgpSpec family_spec(Family f, double alpha, double theta);

struct ParamGrid {
    Family family;
    Variant variant;
    int s;
    std::vector<double> alphas;  // rows
    std::vector<double> thetas;  // columns
    std::vector<double> cells;   // row-major
    std::vector<bool> na_mask;   // row-major

    [[nodiscard]] std::size_t rows() const noexcept { return alphas.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return thetas.size(); }
    [[nodiscard]] double at(std::size_t r, std::size_t c) const { return cells.at(r * cols() + c); }
    [[nodiscard]] bool is_na(std::size_t r, std::size_t c) const {
        return na_mask.at(r * cols() + c);
    }
};

// Axis used by the reference tables, in printed order.
inline constexpr std::array<double, 11> kTableAxis{0.99, 0.90,  0.75,  0.50,  0.10, 0.00,
                                                   -0.10, -0.50, -0.75, -0.90, -0.99};

[[nodiscard]] ParamGrid evaluate_grid(Family family, Variant variant, int s,
                                      std::vector<double> alphas, std::vector<double> thetas);

// (vy, vx) on the table axis for s in {4, 10}. The white-noise cell of the
// stationary family is computed but flagged in na_mask.
[[nodiscard]] std::pair<ParamGrid, ParamGrid> table(Family family, int s);

// n x n grid over [-1 + margin, 1 - margin]^2, ascending. The axis is exactly
// symmetric: value k equals minus value n - 1 - k.
[[nodiscard]] std::vector<double> surface_axis(int n, double margin);
[[nodiscard]] ParamGrid surface(Family family, Variant variant, int s, int n = 99,
                                double margin = 0.01);

// Round half away from zero to the given number of decimals. Values within
// 1e-9 (relative) of a tie are treated as the tie.
[[nodiscard]] double round_half_away(double x, int decimals);

}  // namespace ivr
