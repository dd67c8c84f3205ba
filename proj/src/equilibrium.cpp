#include "advicegame/equilibrium.hpp"

#include <cmath>
#include <stdexcept>

namespace advicegame {

namespace {

double sq(double x) { return x * x; }

// (1-p)(1+rE+rP)^2 + p(1+rE)^2, the mixture weight every closed form
// divides by. Strictly positive on the validated domain.
double mixture_denominator(double p, double rE, double rP) {
    return (1.0 - p) * sq(1.0 + rE + rP) + p * sq(1.0 + rE);
}

void check_probability(double p, const char* who) {
    if (!std::isfinite(p) || !(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(who) + ": p must lie in [0, 1]");
}

void check_weight(double w, const char* who, const char* name) {
    if (!std::isfinite(w) || !(w >= kMinPrecision))
        throw std::invalid_argument(std::string(who) + ": " + name +
                                    " must be finite and >= 1e-12");
}

}  // namespace

TrustRatio trust_ratio(const BeliefParams& b) {
    validate(b);
    return {b.rP / (1.0 + b.rE)};
}

double naive_recommendation(double r) {
    if (!std::isfinite(r)) throw std::invalid_argument("naive_recommendation: r must be finite");
    return r;
}

double counteraction_intensity(const Scenario& s) {
    validate(s);
    const double rE = s.beliefs.rE;
    const double rP = s.beliefs.rP;
    return s.p * rP * sq(1.0 + rE) / (rE * mixture_denominator(s.p, rE, rP));
}

double counteraction_intensity_tform(double p, double rE, double t) {
    check_probability(p, "counteraction_intensity_tform");
    check_weight(rE, "counteraction_intensity_tform", "rE");
    if (!std::isfinite(t) || !(t > 0.0))
        throw std::invalid_argument("counteraction_intensity_tform: t must be finite and > 0");
    return (1.0 + 1.0 / rE) * p * t / ((1.0 - p) * sq(1.0 + t) + p);
}

EquilibriumOutcome optimal_recommendation(const Scenario& s) {
    validate(s);
    EquilibriumOutcome out{};
    out.delta = counteraction_intensity(s);
    out.sE_star = s.r + (s.r - s.beliefs.mu0) / s.beliefs.rE + out.delta * (s.r - s.sP);
    out.loss = equilibrium_loss(s);
    out.d0 = decision_without_ai(s.beliefs, out.sE_star);
    out.d1 = decision_with_ai(s.beliefs, out.sE_star, s.sP);
    return out;
}

double equilibrium_loss(const Scenario& s) {
    validate(s);
    const double rE = s.beliefs.rE;
    const double rP = s.beliefs.rP;
    const double dev = s.r - s.sP;
    return s.p * (1.0 - s.p) * sq(rP) * sq(dev) / mixture_denominator(s.p, rE, rP);
}

double equilibrium_loss_tform(double p, double t, double dev_sq) {
    check_probability(p, "equilibrium_loss_tform");
    if (!std::isfinite(t) || !(t > 0.0))
        throw std::invalid_argument("equilibrium_loss_tform: t must be finite and > 0");
    if (!std::isfinite(dev_sq) || !(dev_sq >= 0.0))
        throw std::invalid_argument("equilibrium_loss_tform: dev_sq must be finite and >= 0");
    return sq(t) * p * (1.0 - p) * dev_sq / ((1.0 - p) * sq(1.0 + t) + p);
}

double peak_adoption(double rE, double rP) {
    check_weight(rE, "peak_adoption", "rE");
    check_weight(rP, "peak_adoption", "rP");
    return (1.0 + rE + rP) / (2.0 * (1.0 + rE) + rP);
}

double peak_trust(double p) {
    if (!std::isfinite(p) || !(p >= 0.0 && p < 1.0))
        throw std::domain_error("peak_trust: p must lie in [0, 1); counteraction has no "
                                "interior peak at p = 1");
    return 1.0 / std::sqrt(1.0 - p);
}

}  // namespace advicegame
