#include "advicegame/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "advicegame/beliefs.hpp"
#include "advicegame/random.hpp"

namespace advicegame {

namespace {

double sq(double x) { return x * x; }

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct ParabolicFit {
    double vertex = 0.0;
    double second_diff = 0.0;  // y(-h) - 2 y(0) + y(+h) = curvature * h^2
    bool ok = false;
};

// Three-point quadratic fit around center with spacing h. Rejected when
// the second difference is not comfortably above the rounding noise of
// the three values, i.e. when the spacing is too small to see curvature.
ParabolicFit fit_parabola(const RawObjective& f, double center, double h) {
    ParabolicFit fit;
    const double ym = f(center - h);
    const double y0 = f(center);
    const double yp = f(center + h);
    if (!std::isfinite(ym) || !std::isfinite(y0) || !std::isfinite(yp)) return fit;
    const double second = (ym - y0) + (yp - y0);
    const double noise = kEps * (std::fabs(ym) + 2.0 * std::fabs(y0) + std::fabs(yp));
    if (!(second > 64.0 * noise)) return fit;
    fit.vertex = center + 0.5 * h * (ym - yp) / second;
    fit.second_diff = second;
    fit.ok = std::isfinite(fit.vertex);
    return fit;
}

}  // namespace

RawObjective::RawObjective(const Scenario& s) : scenario_(s) { validate(s); }

double RawObjective::operator()(double sE) const {
    const double e0 = scenario_.r - decision_without_ai(scenario_.beliefs, sE);
    const double e1 = scenario_.r - decision_with_ai(scenario_.beliefs, sE, scenario_.sP);
    return (1.0 - scenario_.p) * e0 * e0 + scenario_.p * e1 * e1;
}

double raw_loss(const Scenario& s, double sE) { return RawObjective(s)(sE); }

Bracket bracket_minimum(const Scenario& s) {
    const RawObjective f(s);
    const BeliefParams& b = s.beliefs;
    // How far the minimizer can sit from the target: the prior-bias pull
    // plus the largest counteraction the AI disagreement can demand.
    const double reach =
        (std::fabs(s.r - b.mu0) + b.rP * std::fabs(s.r - s.sP)) / b.rE;
    const double mid = s.r;
    const double fmid = f(mid);
    double w = 1.0 + reach;
    for (int i = 0; i < 64; ++i) {
        if (f(mid - w) > fmid && f(mid + w) > fmid) return {mid - w, mid + w};
        w *= 2.0;
    }
    throw std::runtime_error("bracket_minimum: no bracket after 64 doublings; "
                             "parameters are out of numerical range");
}

double golden_section_minimize(const Scenario& s, double lo, double hi, double tol) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::invalid_argument("golden_section_minimize: need lo < hi");
    if (!std::isfinite(tol) || !(tol > 0.0))
        throw std::invalid_argument("golden_section_minimize: tol must be > 0");
    const RawObjective f(s);

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - (b - a) * invphi;
    double d = a + (b - a) * invphi;
    double fc = f(c);
    double fd = f(d);
    if (!std::isfinite(fc) || !std::isfinite(fd))
        throw std::runtime_error("golden_section_minimize: objective is not finite on the interval");
    // The width contracts by invphi per step, so the cap is generous for
    // any sane (width, tol) pair; it only guards tols below ulp scale.
    for (int i = 0; i < 600 && (b - a) > tol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * invphi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * invphi;
            fd = f(d);
        }
    }
    const double shrunk = 0.5 * (a + b);

    // Polish. Comparison-based shrinking cannot localize the minimum past
    // the sqrt(eps * f / curvature) noise floor, but the objective is an
    // exact parabola in sE, so a three-point fit at wide spacing pins the
    // vertex: first fit at a quarter of the original interval to measure
    // curvature, second fit at the conditioning-optimal spacing
    // sqrt(f(min) / curvature).
    const double w0 = hi - lo;
    double best = shrunk;
    const ParabolicFit first = fit_parabola(f, best, 0.25 * w0);
    if (first.ok && std::fabs(first.vertex - shrunk) <= w0) {
        best = first.vertex;
        const double curvature = first.second_diff / (2.0 * sq(0.25 * w0));
        const double mags =
            1.0 + std::fabs(s.r) + std::fabs(s.beliefs.mu0) + std::fabs(s.sP) + std::fabs(best);
        const double floor_val = sq(mags) * kEps * 1048576.0;
        double h = std::sqrt(std::max(std::fabs(f(best)), floor_val) / curvature);
        h = std::min(h, 8.0 * w0);
        h = std::max(h, 1024.0 * kEps * (1.0 + std::fabs(best)));
        const ParabolicFit second = fit_parabola(f, best, h);
        if (second.ok && std::fabs(second.vertex - shrunk) <= w0) best = second.vertex;
    }
    return best;
}

GridMin grid_min(const Scenario& s, double lo, double hi, std::int64_t n) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
        throw std::invalid_argument("grid_min: need lo < hi");
    if (n < 2) throw std::invalid_argument("grid_min: need n >= 2");
    const RawObjective f(s);
    GridMin best{lo, f(lo)};
    const double denom = static_cast<double>(n - 1);
    for (std::int64_t i = 1; i < n; ++i) {
        const double x = std::lerp(lo, hi, static_cast<double>(i) / denom);
        const double v = f(x);
        if (v < best.min) best = {x, v};
    }
    if (!std::isfinite(best.min))
        throw std::runtime_error("grid_min: objective is not finite on the interval");
    return best;
}

McEstimate mc_expected_loss(const Scenario& s, double sE, std::int64_t n,
                            std::uint64_t seed) {
    validate(s);
    if (n < 2) throw std::invalid_argument("mc_expected_loss: need n >= 2");
    if (!std::isfinite(sE)) throw std::invalid_argument("mc_expected_loss: sE must be finite");
    const double loss0 = sq(s.r - decision_without_ai(s.beliefs, sE));
    const double loss1 = sq(s.r - decision_with_ai(s.beliefs, sE, s.sP));
    std::int64_t consults = 0;
    for (std::int64_t i = 0; i < n; ++i) {
        if (uniform01_at(seed, static_cast<std::uint64_t>(i)) < s.p) ++consults;
    }
    const double m = static_cast<double>(n);
    const double k = static_cast<double>(consults);
    McEstimate est{};
    est.n = n;
    est.seed = seed;
    if (consults == 0) {
        est.mean = loss0;  // degenerate sample; keep the value exact
    } else if (consults == n) {
        est.mean = loss1;
    } else {
        est.mean = ((m - k) * loss0 + k * loss1) / m;
    }
    const double var =
        ((m - k) * sq(loss0 - est.mean) + k * sq(loss1 - est.mean)) / (m - 1.0);
    est.std_error = std::sqrt(var / m);
    return est;
}

}  // namespace advicegame
