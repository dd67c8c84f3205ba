#include "advicegame/scenario.hpp"

#include <cmath>
#include <stdexcept>

namespace advicegame {

void validate(const Scenario& s) {
    validate(s.beliefs);
    if (s.beliefs.uninformative_prior)
        throw std::invalid_argument(
            "Scenario: diffuse-prior beliefs are not supported here; "
            "the prior-bias correction needs a finite prior weight");
    if (!std::isfinite(s.p) || !(s.p >= 0.0 && s.p <= 1.0))
        throw std::invalid_argument("Scenario: p must lie in [0, 1]");
    if (!std::isfinite(s.r)) throw std::invalid_argument("Scenario: r must be finite");
    if (!std::isfinite(s.sP)) throw std::invalid_argument("Scenario: sP must be finite");
}

}  // namespace advicegame
