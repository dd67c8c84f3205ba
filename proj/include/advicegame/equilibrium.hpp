#pragma once

#include "advicegame/scenario.hpp"

namespace advicegame {

// Everything the advisor's best recommendation induces.
struct EquilibriumOutcome {
    double sE_star;  // the recommendation itself
    double delta;    // coefficient on (r - sP), always >= 0
    double loss;     // advisor's minimized expected squared deviation
    double d0;       // human action when the AI is not consulted
    double d1;       // human action when it is
};

// t = rP / (1 + rE): weight of the personal AI relative to everything
// else in the consulted decision rule. Two scenarios with equal (p, t)
// and equal target deviation produce the same loss.
struct TrustRatio {
    double t;
};

TrustRatio trust_ratio(const BeliefParams& b);

// Benchmark recommendation of an advisor who ignores the personal AI and
// assumes a diffuse zero-mean prior: just say the target.
double naive_recommendation(double r);

// Coefficient on (r - sP) in the optimal recommendation:
// p rP (1+rE)^2 / (rE [ (1-p)(1+rE+rP)^2 + p(1+rE)^2 ]).
double counteraction_intensity(const Scenario& s);

// Same quantity through the (p, rE, t) parameterization:
// (1 + 1/rE) p t / ((1-p)(1+t)^2 + p).
double counteraction_intensity_tform(double p, double rE, double t);

// sE* = r + (r - mu0)/rE + delta (r - sP), with the induced actions and
// the minimized loss.
EquilibriumOutcome optimal_recommendation(const Scenario& s);

// p(1-p) rP^2 (r-sP)^2 / [ (1-p)(1+rE+rP)^2 + p(1+rE)^2 ]. Does not
// depend on mu0: the advisor undoes prior bias for free.
double equilibrium_loss(const Scenario& s);

// Loss through (p, t) with the squared target deviation passed directly:
// t^2 p(1-p) dev_sq / ((1-p)(1+t)^2 + p).
double equilibrium_loss_tform(double p, double t, double dev_sq);

// Consultation probability at which the loss peaks:
// (1+rE+rP) / (2(1+rE)+rP).
double peak_adoption(double rE, double rP);

// Trust ratio at which counteraction peaks: 1/sqrt(1-p). Throws
// std::domain_error at p = 1, where counteraction grows without bound.
double peak_trust(double p);

}  // namespace advicegame
