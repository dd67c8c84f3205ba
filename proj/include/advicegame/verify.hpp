#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "advicegame/random.hpp"
#include "advicegame/scenario.hpp"

namespace advicegame {

struct VerifyOptions {
    std::int64_t trials = 1000;     // randomized closed-form-vs-oracle scenarios
    std::uint64_t seed = 0;
    std::int64_t grid_n = 1'000'000;
    std::int64_t mc_n = 1'000'000;
    double golden_tol = 1e-10;
    double argmin_tol = 1e-8;       // allowed |oracle argmin - closed form|
    double loss_abs_tol = 1e-10;    // allowed |oracle min - closed form| ...
    double loss_rel_tol = 1e-8;     // ... or this, relative, whichever is larger
};

struct VerifyReport {
    std::int64_t trials = 0;
    double max_argmin_deviation = 0.0;
    double max_loss_deviation = 0.0;   // absolute, worst trial
    double grid_argmin_deviation = 0.0;
    double grid_min_excess = 0.0;      // grid minimum minus closed-form loss
    double mc_max_z = 0.0;             // worst |mc mean - loss| / std_error
    bool ok = true;
    std::vector<std::string> violations;
};

// Scenario drawn from the documented desk-scale ranges: p uniform on
// [0,1], rE and rP log-uniform on [0.05, 20], mu0, r, sP uniform on
// [-10, 10].
Scenario sample_scenario(SplitMix64& rng);

// Cross-validates the closed forms against the independent oracles:
// golden-section argmin and minimum over randomized scenarios, a dense
// grid scan of the configured scenario, and seeded Monte Carlo at the
// optimal recommendation (three seeds, 3-sigma gate).
VerifyReport run_verification(const Scenario& configured, const VerifyOptions& opt);

}  // namespace advicegame
