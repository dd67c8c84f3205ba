#pragma once

#include "advicegame/scenario.hpp"

namespace advicegame {

// Binary credibility investment: keep rE_base for free or buy the upgrade
// to rE_high at a fixed cost. The recommendation is pinned at the target r
// throughout (the honest-advisor regime this tradeoff lives in).
struct TrustInvestmentProblem {
    Scenario scenario;   // scenario.beliefs.rE must equal rE_base
    double rE_base = 1.0;
    double rE_high = 2.0;
    double cost = 0.0;
};

void validate(const TrustInvestmentProblem& tp);

struct TrustDecision {
    bool invest;
    double threshold;   // largest cost worth paying
    double loss_base;   // expected loss at rE_base
    double loss_high;   // expected loss at rE_high
};

// Expected squared deviation from the target when the advisor recommends
// exactly r and the human weighs that advice at trust level tau:
// (1-p)(r-mu0)^2/(1+tau)^2 + p[(r-mu0) + rP(r-sP)]^2/(1+tau+rP)^2.
double fixed_rec_expected_loss(const Scenario& s, double tau);

// Loss reduction the upgrade buys; investing is worthwhile for any cost
// up to this.
double trust_threshold(const TrustInvestmentProblem& tp);

// Weak-inequality policy: invest iff cost <= threshold.
TrustDecision invest_decision(const TrustInvestmentProblem& tp);

// sqrt(A/B) with A = 1/(1+rE)^2 - 1/(1+rE_high)^2 and B the same gap at
// trust shifted by rP. Exceeds 1 for every rP > 0.
double alpha_ratio(double rE, double rE_high, double rP);

// Whether the investment threshold falls as AI adoption rises. The
// threshold is affine in p, so its slope sign reduces to comparing the
// anticipated consulted deviation against the solo deviation scaled by
// alpha/(1+rP).
struct SlopeCondition {
    bool decreasing;
    double lhs;   // |r - (mu0 + rP sP)/(1+rP)|
    double rhs;   // alpha/(1+rP) * |r - mu0|
};

SlopeCondition threshold_slope_condition(const TrustInvestmentProblem& tp);

}  // namespace advicegame
