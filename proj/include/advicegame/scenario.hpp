#pragma once

#include "advicegame/beliefs.hpp"

namespace advicegame {

// One full game instance: what the human believes, how often they consult
// the personal AI (p), the advisor's preferred action (r), and the AI
// recommendation the advisor anticipates (sP).
struct Scenario {
    BeliefParams beliefs;
    double p = 0.5;
    double r = 1.0;
    double sP = 0.0;
};

// Throws std::invalid_argument on violated invariants. Diffuse-prior
// beliefs are rejected here: the strategic quantities built on a Scenario
// contain a prior-bias correction with no diffuse limit.
void validate(const Scenario& s);

}  // namespace advicegame
