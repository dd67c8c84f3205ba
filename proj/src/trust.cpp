#include "advicegame/trust.hpp"

#include <cmath>
#include <stdexcept>

namespace advicegame {

namespace {
double sq(double x) { return x * x; }
}

void validate(const TrustInvestmentProblem& tp) {
    validate(tp.scenario);
    if (!std::isfinite(tp.rE_base) || !(tp.rE_base >= kMinPrecision))
        throw std::invalid_argument("TrustInvestmentProblem: rE_base must be finite and >= 1e-12");
    if (!std::isfinite(tp.rE_high) || !(tp.rE_high > tp.rE_base))
        throw std::invalid_argument("TrustInvestmentProblem: rE_high must exceed rE_base");
    if (tp.scenario.beliefs.rE != tp.rE_base)
        throw std::invalid_argument(
            "TrustInvestmentProblem: scenario beliefs must carry rE_base as the current rE");
    if (!std::isfinite(tp.cost) || !(tp.cost >= 0.0))
        throw std::invalid_argument("TrustInvestmentProblem: cost must be finite and >= 0");
}

double fixed_rec_expected_loss(const Scenario& s, double tau) {
    validate(s);
    if (!std::isfinite(tau) || !(tau >= kMinPrecision))
        throw std::invalid_argument("fixed_rec_expected_loss: tau must be finite and >= 1e-12");
    const double rP = s.beliefs.rP;
    const double bias = s.r - s.beliefs.mu0;
    const double pull = bias + rP * (s.r - s.sP);  // consulted-regime deviation scale
    return (1.0 - s.p) * sq(bias) / sq(1.0 + tau) + s.p * sq(pull) / sq(1.0 + tau + rP);
}

double trust_threshold(const TrustInvestmentProblem& tp) {
    validate(tp);
    const Scenario& s = tp.scenario;
    const double rP = s.beliefs.rP;
    const double bias = s.r - s.beliefs.mu0;
    const double pull = bias + rP * (s.r - s.sP);
    // Per-regime gains from the trust upgrade; both positive since
    // rE_high > rE_base.
    const double gain_solo = 1.0 / sq(1.0 + tp.rE_base) - 1.0 / sq(1.0 + tp.rE_high);
    const double gain_joint =
        1.0 / sq(1.0 + tp.rE_base + rP) - 1.0 / sq(1.0 + tp.rE_high + rP);
    return (1.0 - s.p) * sq(bias) * gain_solo + s.p * sq(pull) * gain_joint;
}

TrustDecision invest_decision(const TrustInvestmentProblem& tp) {
    TrustDecision d{};
    d.threshold = trust_threshold(tp);
    d.loss_base = fixed_rec_expected_loss(tp.scenario, tp.rE_base);
    d.loss_high = fixed_rec_expected_loss(tp.scenario, tp.rE_high);
    d.invest = tp.cost <= d.threshold;
    return d;
}

double alpha_ratio(double rE, double rE_high, double rP) {
    if (!std::isfinite(rE) || !(rE >= kMinPrecision))
        throw std::invalid_argument("alpha_ratio: rE must be finite and >= 1e-12");
    if (!std::isfinite(rE_high) || !(rE_high > rE))
        throw std::invalid_argument("alpha_ratio: rE_high must exceed rE");
    if (!std::isfinite(rP) || !(rP >= kMinPrecision))
        throw std::invalid_argument("alpha_ratio: rP must be finite and >= 1e-12");
    const double a = 1.0 / sq(1.0 + rE) - 1.0 / sq(1.0 + rE_high);
    const double b = 1.0 / sq(1.0 + rE + rP) - 1.0 / sq(1.0 + rE_high + rP);
    return std::sqrt(a / b);
}

SlopeCondition threshold_slope_condition(const TrustInvestmentProblem& tp) {
    validate(tp);
    const Scenario& s = tp.scenario;
    const double rP = s.beliefs.rP;
    const double alpha = alpha_ratio(tp.rE_base, tp.rE_high, rP);
    SlopeCondition cond{};
    cond.lhs = std::fabs(s.r - (s.beliefs.mu0 + rP * s.sP) / (1.0 + rP));
    cond.rhs = alpha / (1.0 + rP) * std::fabs(s.r - s.beliefs.mu0);
    cond.decreasing = cond.lhs < cond.rhs;
    return cond;
}

}  // namespace advicegame
