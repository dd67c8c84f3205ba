#include "advicegame/random.hpp"

#include <cmath>
#include <stdexcept>

namespace advicegame {

double SplitMix64::log_uniform(double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo))
        throw std::invalid_argument("log_uniform: need 0 < lo <= hi");
    return std::exp(uniform(std::log(lo), std::log(hi)));
}

}  // namespace advicegame
