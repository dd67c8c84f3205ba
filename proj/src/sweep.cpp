#include "advicegame/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "advicegame/equilibrium.hpp"
#include "advicegame/format.hpp"

namespace advicegame {

namespace {

double sq(double x) { return x * x; }

// Minimum admissible lower end for t grids; keeps rP = t (1 + rE) clear
// of the precision floor for any rE.
constexpr double kMinTFrom = 1e-6;

Scenario with_param(const SweepSpec& spec, double x) {
    Scenario s = spec.base;
    switch (spec.param) {
        case SweepParam::p:
            s.p = x;
            break;
        case SweepParam::t:
            s.beliefs.rP = x * (1.0 + s.beliefs.rE);
            break;
        case SweepParam::rE:
            s.beliefs.rE = x;
            break;
        case SweepParam::rP:
            s.beliefs.rP = x;
            break;
    }
    return s;
}

double evaluate(const SweepSpec& spec, double x) {
    const Scenario s = with_param(spec, x);
    switch (spec.quantity) {
        case SweepQuantity::delta:
            return counteraction_intensity(s);
        case SweepQuantity::loss:
            return equilibrium_loss(s);
        case SweepQuantity::threshold: {
            TrustInvestmentProblem tp = *spec.trust;
            tp.scenario = s;
            return trust_threshold(tp);
        }
    }
    throw std::logic_error("sweep: unhandled quantity");
}

void validate_spec(const SweepSpec& spec) {
    validate(spec.base);
    if (!std::isfinite(spec.from) || !std::isfinite(spec.to) || !(spec.from < spec.to))
        throw std::invalid_argument("SweepSpec: need from < to");
    if (spec.steps < 2) throw std::invalid_argument("SweepSpec: need steps >= 2");
    switch (spec.param) {
        case SweepParam::p:
            if (!(spec.from >= 0.0 && spec.to <= 1.0))
                throw std::invalid_argument("SweepSpec: p grid must stay inside [0, 1]");
            break;
        case SweepParam::t:
            if (!(spec.from >= kMinTFrom))
                throw std::invalid_argument("SweepSpec: t grid must start at or above 1e-6");
            break;
        case SweepParam::rE:
        case SweepParam::rP:
            if (!(spec.from >= kMinPrecision))
                throw std::invalid_argument("SweepSpec: weight grid must start at or above 1e-12");
            break;
    }
    if (spec.quantity == SweepQuantity::threshold) {
        if (spec.param != SweepParam::p)
            throw std::invalid_argument("SweepSpec: threshold sweeps only vary p");
        if (!spec.trust)
            throw std::invalid_argument("SweepSpec: threshold sweeps need the trust supplement");
        if (spec.trust->rE_base != spec.base.beliefs.rE)
            throw std::invalid_argument(
                "SweepSpec: trust supplement must carry the base scenario's rE as rE_base");
        TrustInvestmentProblem tp = *spec.trust;
        tp.scenario = spec.base;
        validate(tp);
    }
}

enum class Shape { none, increasing, decreasing, single_peaked, affine };

Shape expected_shape(SweepParam param, SweepQuantity quantity) {
    if (quantity == SweepQuantity::delta) {
        switch (param) {
            case SweepParam::p:
                return Shape::increasing;
            case SweepParam::t:
            case SweepParam::rP:
                return Shape::single_peaked;
            case SweepParam::rE:
                // With rP held fixed, counteraction is not monotone in rE
                // (it rises before the documented decline kicks in), so
                // there is nothing safe to assert.
                return Shape::none;
        }
    }
    if (quantity == SweepQuantity::loss) {
        switch (param) {
            case SweepParam::p:
                return Shape::single_peaked;
            case SweepParam::t:
            case SweepParam::rP:
                return Shape::increasing;
            case SweepParam::rE:
                return Shape::decreasing;
        }
    }
    return Shape::affine;  // threshold vs p
}

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::increasing: return "nondecreasing";
        case Shape::decreasing: return "nonincreasing";
        case Shape::single_peaked: return "single-peaked";
        case Shape::affine: return "affine";
        case Shape::none: return "unconstrained";
    }
    return "?";
}

// Post-hoc sanity on the computed rows. Tolerant of rounding noise;
// genuine violations mean the closed forms are wrong, which is worth a
// hard stop rather than a quietly misleading figure.
void check_shape(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    const Shape shape = expected_shape(spec.param, spec.quantity);
    if (shape == Shape::none) return;
    double scale = 0.0;
    for (const SweepRow& row : rows) scale = std::max(scale, std::fabs(row.quantity_value));
    const double slack = 1e-9 * scale + 1e-15;
    auto fail = [&](std::size_t i) {
        throw std::logic_error(std::string("sweep: rows violate the expected ") +
                               shape_name(shape) + " shape near index " + std::to_string(i));
    };
    if (shape == Shape::affine) {
        // Constant second difference on a uniform grid.
        for (std::size_t i = 2; i < rows.size(); ++i) {
            const double second = rows[i].quantity_value - 2.0 * rows[i - 1].quantity_value +
                                  rows[i - 2].quantity_value;
            if (std::fabs(second) > 4.0 * slack) fail(i);
        }
        return;
    }
    std::size_t peak = 0;
    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].quantity_value > rows[peak].quantity_value) peak = i;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double step = rows[i].quantity_value - rows[i - 1].quantity_value;
        switch (shape) {
            case Shape::increasing:
                if (step < -slack) fail(i);
                break;
            case Shape::decreasing:
                if (step > slack) fail(i);
                break;
            case Shape::single_peaked:
                if (i <= peak ? step < -slack : step > slack) fail(i);
                break;
            default:
                break;
        }
    }
}

SweepExtremum locate(const std::vector<SweepRow>& rows, double h, bool maximum) {
    std::size_t idx = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool better = maximum ? rows[i].quantity_value > rows[idx].quantity_value
                                    : rows[i].quantity_value < rows[idx].quantity_value;
        if (better) idx = i;
    }
    SweepExtremum ex{rows[idx].param_value, rows[idx].quantity_value,
                     rows[idx].param_value, rows[idx].quantity_value};
    if (idx == 0 || idx + 1 == rows.size()) return ex;  // boundary: keep the raw point
    const double ym = rows[idx - 1].quantity_value;
    const double y0 = rows[idx].quantity_value;
    const double yp = rows[idx + 1].quantity_value;
    const double second = (ym - y0) + (yp - y0);
    const double noise =
        std::numeric_limits<double>::epsilon() * (std::fabs(ym) + 2.0 * std::fabs(y0) + std::fabs(yp));
    if (std::fabs(second) <= 16.0 * noise) return ex;  // locally flat
    if (maximum ? second >= 0.0 : second <= 0.0) return ex;
    double vertex = rows[idx].param_value + 0.5 * h * (ym - yp) / second;
    vertex = std::clamp(vertex, rows[idx - 1].param_value, rows[idx + 1].param_value);
    ex.refined_param = vertex;
    ex.refined_value = y0 - sq(yp - ym) / (8.0 * second);
    return ex;
}

void push_scenario_metadata(const SweepSpec& spec, SweepResult& res) {
    auto add = [&](const char* key, double v) {
        res.metadata.emplace_back(key, format_number(v));
    };
    res.metadata.emplace_back("param", to_string(spec.param));
    res.metadata.emplace_back("quantity", to_string(spec.quantity));
    add("from", spec.from);
    add("to", spec.to);
    res.metadata.emplace_back("steps", std::to_string(spec.steps));
    add("mu0", spec.base.beliefs.mu0);
    if (spec.param != SweepParam::rE) add("rE", spec.base.beliefs.rE);
    if (spec.param != SweepParam::rP && spec.param != SweepParam::t)
        add("rP", spec.base.beliefs.rP);
    if (spec.param != SweepParam::p) add("p", spec.base.p);
    add("r", spec.base.r);
    add("sP", spec.base.sP);
    if (spec.quantity == SweepQuantity::threshold) {
        add("rE_high", spec.trust->rE_high);
        add("cost", spec.trust->cost);
    }
    // Everything here is deterministic; the marker says so explicitly so
    // downstream tooling never goes hunting for a missing seed.
    res.metadata.emplace_back("seed", "irrelevant");
}

}  // namespace

const char* to_string(SweepParam param) {
    switch (param) {
        case SweepParam::p: return "p";
        case SweepParam::t: return "t";
        case SweepParam::rE: return "rE";
        case SweepParam::rP: return "rP";
    }
    return "?";
}

const char* to_string(SweepQuantity quantity) {
    switch (quantity) {
        case SweepQuantity::delta: return "delta";
        case SweepQuantity::loss: return "loss";
        case SweepQuantity::threshold: return "threshold";
    }
    return "?";
}

std::optional<SweepParam> sweep_param_from(std::string_view name) {
    if (name == "p") return SweepParam::p;
    if (name == "t") return SweepParam::t;
    if (name == "rE") return SweepParam::rE;
    if (name == "rP") return SweepParam::rP;
    return std::nullopt;
}

std::optional<SweepQuantity> sweep_quantity_from(std::string_view name) {
    if (name == "delta") return SweepQuantity::delta;
    if (name == "loss") return SweepQuantity::loss;
    if (name == "threshold") return SweepQuantity::threshold;
    return std::nullopt;
}

SweepResult run_sweep(const SweepSpec& spec) {
    validate_spec(spec);
    SweepResult res;
    res.rows.reserve(static_cast<std::size_t>(spec.steps));
    const double denom = static_cast<double>(spec.steps - 1);
    for (std::int64_t i = 0; i < spec.steps; ++i) {
        const double x = std::lerp(spec.from, spec.to, static_cast<double>(i) / denom);
        res.rows.push_back({x, evaluate(spec, x)});
    }
    check_shape(spec, res.rows);
    const double h = (spec.to - spec.from) / denom;
    res.argmax = locate(res.rows, h, true);
    res.argmin = locate(res.rows, h, false);
    push_scenario_metadata(spec, res);
    return res;
}

DualCheck peak_adoption_dual_check(double rE, double rP, std::int64_t steps) {
    if (steps < 1000)
        throw std::invalid_argument("peak_adoption_dual_check: need steps >= 1000");
    const double analytic = peak_adoption(rE, rP);  // validates the weights
    const double a = sq(1.0 + rE);
    const double b = sq(1.0 + rE + rP);
    // The loss peak is the minimum of the reciprocal form B/p + A/(1-p),
    // scanned on an interior grid to dodge the poles at 0 and 1.
    double best_p = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t i = 1; i <= steps; ++i) {
        const double p = static_cast<double>(i) / static_cast<double>(steps + 1);
        const double v = b / p + a / (1.0 - p);
        if (v < best) {
            best = v;
            best_p = p;
        }
    }
    return {analytic, best_p};
}

void emit_csv(const SweepResult& res, std::ostream& out) {
    for (const auto& [key, value] : res.metadata) out << "# " << key << "=" << value << "\n";
    auto extremum = [&](const char* name, const std::optional<SweepExtremum>& ex) {
        if (!ex) return;
        out << "# " << name << "_param=" << format_number(ex->param_value) << "\n";
        out << "# " << name << "_value=" << format_number(ex->quantity_value) << "\n";
        out << "# " << name << "_param_refined=" << format_number(ex->refined_param) << "\n";
        out << "# " << name << "_value_refined=" << format_number(ex->refined_value) << "\n";
    };
    extremum("argmax", res.argmax);
    extremum("argmin", res.argmin);
    out << "param,value\n";
    for (const SweepRow& row : res.rows)
        out << format_number(row.param_value) << "," << format_number(row.quantity_value) << "\n";
    if (!out) throw std::runtime_error("emit_csv: write failure");
}

namespace chart {

double x_px(double v, double vmin, double vmax) {
    const double span = vmax > vmin ? vmax - vmin : 1.0;
    return kMarginLeft + (v - vmin) / span * (kWidth - kMarginLeft - kMarginRight);
}

double y_px(double v, double vmin, double vmax) {
    const double span = vmax > vmin ? vmax - vmin : 1.0;
    return kHeight - kMarginBottom - (v - vmin) / span * (kHeight - kMarginTop - kMarginBottom);
}

}  // namespace chart

void emit_svg_chart(const SweepResult& res, std::ostream& out) {
    if (res.rows.empty()) throw std::invalid_argument("emit_svg_chart: no rows");
    const double xmin = res.rows.front().param_value;
    const double xmax = res.rows.back().param_value;
    double ymin = res.rows.front().quantity_value;
    double ymax = ymin;
    for (const SweepRow& row : res.rows) {
        ymin = std::min(ymin, row.quantity_value);
        ymax = std::max(ymax, row.quantity_value);
    }
    // Pad the value axis so flat data does not collapse to a degenerate range.
    double pad = 0.05 * (ymax - ymin);
    if (!(pad > 0.0)) pad = std::max(1.0, std::fabs(ymax)) * 0.5;
    const double ylo = ymin - pad;
    const double yhi = ymax + pad;

    std::string param_name = "param";
    std::string quantity_name = "value";
    for (const auto& [key, value] : res.metadata) {
        if (key == "param") param_name = value;
        if (key == "quantity") quantity_name = value;
    }

    char buf[128];
    auto px = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    auto label = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return std::string(buf);
    };

    const double axis_y = chart::kHeight - chart::kMarginBottom;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << chart::kWidth
        << "\" height=\"" << chart::kHeight << "\" viewBox=\"0 0 " << chart::kWidth << " "
        << chart::kHeight << "\" font-family=\"monospace\" font-size=\"12\">\n";
    out << "<rect width=\"" << chart::kWidth << "\" height=\"" << chart::kHeight
        << "\" fill=\"white\"/>\n";
    out << "<line x1=\"" << px(chart::kMarginLeft) << "\" y1=\"" << px(axis_y) << "\" x2=\""
        << px(chart::kWidth - chart::kMarginRight) << "\" y2=\"" << px(axis_y)
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << px(chart::kMarginLeft) << "\" y1=\"" << px(chart::kMarginTop)
        << "\" x2=\"" << px(chart::kMarginLeft) << "\" y2=\"" << px(axis_y)
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << px(chart::kMarginLeft) << "\" y=\"" << px(axis_y + 18.0)
        << "\" text-anchor=\"middle\">" << label(xmin) << "</text>\n";
    out << "<text x=\"" << px(chart::kWidth - chart::kMarginRight) << "\" y=\""
        << px(axis_y + 18.0) << "\" text-anchor=\"middle\">" << label(xmax) << "</text>\n";
    out << "<text x=\"" << px(chart::kMarginLeft - 8.0) << "\" y=\"" << px(axis_y + 4.0)
        << "\" text-anchor=\"end\">" << label(ylo) << "</text>\n";
    out << "<text x=\"" << px(chart::kMarginLeft - 8.0) << "\" y=\""
        << px(chart::kMarginTop + 4.0) << "\" text-anchor=\"end\">" << label(yhi)
        << "</text>\n";
    out << "<text x=\"" << px(0.5 * (chart::kMarginLeft + chart::kWidth - chart::kMarginRight))
        << "\" y=\"" << px(chart::kHeight - 14.0) << "\" text-anchor=\"middle\">" << param_name
        << "</text>\n";
    out << "<text x=\"" << px(chart::kMarginLeft) << "\" y=\"" << px(chart::kMarginTop - 8.0)
        << "\">" << quantity_name << "</text>\n";

    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < res.rows.size(); ++i) {
        if (i) out << " ";
        out << px(chart::x_px(res.rows[i].param_value, xmin, xmax)) << ","
            << px(chart::y_px(res.rows[i].quantity_value, ylo, yhi));
    }
    out << "\"/>\n";
    if (res.argmax) {
        out << "<circle cx=\"" << px(chart::x_px(res.argmax->param_value, xmin, xmax))
            << "\" cy=\"" << px(chart::y_px(res.argmax->quantity_value, ylo, yhi))
            << "\" r=\"4\" fill=\"#d62728\"/>\n";
    }
    out << "</svg>\n";
    if (!out) throw std::runtime_error("emit_svg_chart: write failure");
}

}  // namespace advicegame
