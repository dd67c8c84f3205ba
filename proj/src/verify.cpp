#include "advicegame/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "advicegame/equilibrium.hpp"
#include "advicegame/format.hpp"
#include "advicegame/oracle.hpp"

namespace advicegame {

namespace {
double sq(double x) { return x * x; }
}

Scenario sample_scenario(SplitMix64& rng) {
    Scenario s;
    s.beliefs.mu0 = rng.uniform(-10.0, 10.0);
    s.beliefs.rE = rng.log_uniform(0.05, 20.0);
    s.beliefs.rP = rng.log_uniform(0.05, 20.0);
    s.p = rng.uniform01();
    s.r = rng.uniform(-10.0, 10.0);
    s.sP = rng.uniform(-10.0, 10.0);
    return s;
}

VerifyReport run_verification(const Scenario& configured, const VerifyOptions& opt) {
    validate(configured);
    VerifyReport rep;
    rep.trials = opt.trials;
    auto violation = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };

    // Randomized scenarios: the golden-section oracle must land on the
    // closed-form recommendation and reproduce the closed-form loss.
    SplitMix64 rng(opt.seed);
    for (std::int64_t trial = 0; trial < opt.trials; ++trial) {
        const Scenario s = sample_scenario(rng);
        const EquilibriumOutcome eq = optimal_recommendation(s);
        const Bracket br = bracket_minimum(s);
        const double x = golden_section_minimize(s, br.lo, br.hi, opt.golden_tol);
        const double argmin_dev = std::fabs(x - eq.sE_star);
        rep.max_argmin_deviation = std::max(rep.max_argmin_deviation, argmin_dev);
        if (argmin_dev > opt.argmin_tol)
            violation("trial " + std::to_string(trial) + ": oracle argmin deviates by " +
                      format_number(argmin_dev));
        const double loss_dev = std::fabs(raw_loss(s, x) - eq.loss);
        rep.max_loss_deviation = std::max(rep.max_loss_deviation, loss_dev);
        if (loss_dev > std::max(opt.loss_abs_tol, opt.loss_rel_tol * std::fabs(eq.loss)))
            violation("trial " + std::to_string(trial) + ": oracle minimum deviates by " +
                      format_number(loss_dev));
    }

    // Dense grid scan of the configured scenario.
    const EquilibriumOutcome eq = optimal_recommendation(configured);
    const Bracket br = bracket_minimum(configured);
    const GridMin gm = grid_min(configured, br.lo, br.hi, opt.grid_n);
    const double spacing = (br.hi - br.lo) / static_cast<double>(opt.grid_n - 1);
    rep.grid_argmin_deviation = std::fabs(gm.argmin - eq.sE_star);
    if (rep.grid_argmin_deviation > spacing + 1e-12)
        violation("grid argmin deviates by " + format_number(rep.grid_argmin_deviation) +
                  " at spacing " + format_number(spacing));
    rep.grid_min_excess = gm.min - eq.loss;
    // The grid cannot beat the true minimum, and at spacing h it cannot
    // miss it by more than curvature * (h/2)^2.
    const double rE = configured.beliefs.rE;
    const double rP = configured.beliefs.rP;
    const double curvature = (1.0 - configured.p) * sq(rE / (1.0 + rE)) +
                             configured.p * sq(rE / (1.0 + rE + rP));
    const double value_scale = std::max(1.0, std::fabs(eq.loss));
    if (rep.grid_min_excess < -1e-9 * value_scale)
        violation("grid minimum undercuts the closed-form loss by " +
                  format_number(-rep.grid_min_excess));
    if (rep.grid_min_excess > curvature * sq(0.5 * spacing) + 1e-9 * value_scale)
        violation("grid minimum exceeds the closed-form loss by " +
                  format_number(rep.grid_min_excess));

    // Monte Carlo at the optimal recommendation, three seeds, 3-sigma gate.
    for (std::uint64_t k = 0; k < 3; ++k) {
        const McEstimate est =
            mc_expected_loss(configured, eq.sE_star, opt.mc_n, opt.seed + k);
        const double dev = std::fabs(est.mean - eq.loss);
        double z = 0.0;
        if (est.std_error > 0.0) {
            z = dev / est.std_error;
        } else if (dev > 1e-12 * value_scale) {
            z = std::numeric_limits<double>::infinity();
        }
        rep.mc_max_z = std::max(rep.mc_max_z, z);
        if (z > 3.0 && dev > 1e-12 * value_scale)
            violation("mc seed " + std::to_string(opt.seed + k) + ": z = " + format_number(z));
    }

    return rep;
}

}  // namespace advicegame
