#include "advicegame/beliefs.hpp"

#include <cmath>
#include <stdexcept>

namespace advicegame {

void validate(const BeliefParams& b) {
    if (!std::isfinite(b.rE) || !(b.rE >= kMinPrecision))
        throw std::invalid_argument("BeliefParams: rE must be finite and >= 1e-12");
    if (!std::isfinite(b.rP) || !(b.rP >= kMinPrecision))
        throw std::invalid_argument("BeliefParams: rP must be finite and >= 1e-12");
    // mu0 is irrelevant under a diffuse prior, so only constrain it when used.
    if (!b.uninformative_prior && !std::isfinite(b.mu0))
        throw std::invalid_argument("BeliefParams: mu0 must be finite");
}

BeliefParams from_variances(const VariancePrior& v) {
    for (double var : {v.sigma0_sq, v.sigmaE_sq, v.sigmaP_sq}) {
        if (!std::isfinite(var) || !(var > 0.0))
            throw std::invalid_argument("VariancePrior: variances must be finite and positive");
    }
    BeliefParams b;
    b.rE = v.sigma0_sq / v.sigmaE_sq;
    b.rP = v.sigma0_sq / v.sigmaP_sq;
    b.uninformative_prior = false;
    validate(b);
    return b;
}

double decision_without_ai(const BeliefParams& b, double sE) {
    validate(b);
    if (!std::isfinite(sE)) throw std::invalid_argument("decision_without_ai: sE must be finite");
    if (b.uninformative_prior) return sE;
    return (b.mu0 + b.rE * sE) / (1.0 + b.rE);
}

double decision_with_ai(const BeliefParams& b, double sE, double sP) {
    validate(b);
    if (!std::isfinite(sE) || !std::isfinite(sP))
        throw std::invalid_argument("decision_with_ai: signals must be finite");
    if (b.uninformative_prior) return (b.rE * sE + b.rP * sP) / (b.rE + b.rP);
    return (b.mu0 + b.rE * sE + b.rP * sP) / (1.0 + b.rE + b.rP);
}

}  // namespace advicegame
