#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "advicegame/trust.hpp"

namespace advicegame {

enum class SweepParam { p, t, rE, rP };
enum class SweepQuantity { delta, loss, threshold };

const char* to_string(SweepParam param);
const char* to_string(SweepQuantity quantity);
std::optional<SweepParam> sweep_param_from(std::string_view name);
std::optional<SweepQuantity> sweep_quantity_from(std::string_view name);

// One-dimensional sweep request. t sweeps hold the base rE fixed and set
// rP = t (1 + rE) at every grid point. Threshold sweeps need the trust
// supplement and only vary p.
struct SweepSpec {
    Scenario base;
    SweepParam param = SweepParam::p;
    double from = 0.0;
    double to = 1.0;
    std::int64_t steps = 101;
    SweepQuantity quantity = SweepQuantity::loss;
    std::optional<TrustInvestmentProblem> trust;
};

struct SweepRow {
    double param_value;
    double quantity_value;
};

// Grid extremum plus its three-point parabolic refinement. The refinement
// falls back to the raw grid point at a boundary or on locally flat data.
struct SweepExtremum {
    double param_value;
    double quantity_value;
    double refined_param;
    double refined_value;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::optional<SweepExtremum> argmax;
    std::optional<SweepExtremum> argmin;
    // Ordered key/value pairs describing every fixed parameter of the run.
    std::vector<std::pair<std::string, std::string>> metadata;
};

// Evaluates the grid, locates extrema, and cross-checks the rows against
// the documented shape for the quantity/parameter pair (monotone or
// single-peaked, with rounding slack). A shape violation means a bug in
// the closed forms and throws std::logic_error.
SweepResult run_sweep(const SweepSpec& spec);

struct DualCheck {
    double analytic;
    double numeric;
};

// Locates the loss-maximizing adoption rate two ways: the closed form and
// the argmin of the reciprocal form B/p + A/(1-p) on an interior grid.
// They agree to grid resolution.
DualCheck peak_adoption_dual_check(double rE, double rP, std::int64_t steps);

// '#'-prefixed metadata lines (fixed parameters, then raw and refined
// extrema), a "param,value" header, then one row per grid point, all
// numbers at 17 significant digits.
void emit_csv(const SweepResult& res, std::ostream& out);

// Self-contained SVG line chart with axes, tick labels, and a marker at
// the argmax.
void emit_svg_chart(const SweepResult& res, std::ostream& out);

// Chart geometry, exposed so tests can recompute marker positions.
namespace chart {
inline constexpr double kWidth = 800.0;
inline constexpr double kHeight = 500.0;
inline constexpr double kMarginLeft = 70.0;
inline constexpr double kMarginRight = 24.0;
inline constexpr double kMarginTop = 24.0;
inline constexpr double kMarginBottom = 56.0;

double x_px(double v, double vmin, double vmax);
double y_px(double v, double vmin, double vmax);
}  // namespace chart

}  // namespace advicegame
