#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "advicegame/scenario.hpp"
#include "advicegame/sweep.hpp"

namespace advicegame {

struct TrustConfig {
    double rE_high;
    double cost;
};

struct SweepConfig {
    SweepParam param;
    double from;
    double to;
    std::int64_t steps;
    SweepQuantity quantity;
};

struct McConfig {
    std::int64_t n = 1'000'000;
    std::uint64_t seed = 0;
};

// Parsed and validated scenario document. Belief weights are canonical by
// the time parsing returns: a variance-level document has already been
// folded into ratios.
struct ScenarioConfig {
    BeliefParams beliefs;
    double p = 0.5;
    double r = 1.0;
    double sP = 0.0;
    std::optional<TrustConfig> trust;
    std::optional<SweepConfig> sweep;
    McConfig mc;

    Scenario scenario() const { return {beliefs, p, r, sP}; }
};

// Parses a JSON scenario document. Exactly one belief parameterization is
// accepted: ratio keys (rE, rP) or variance keys (sigma0_sq, sigmaE_sq,
// sigmaP_sq); mixing them, unknown keys, wrong types, and out-of-range
// values all throw std::invalid_argument with the offending key named.
ScenarioConfig parse_config(const std::string& text);

// Reads the file and parses it; the failure message names the path.
ScenarioConfig load_config(const std::string& path);

}  // namespace advicegame
