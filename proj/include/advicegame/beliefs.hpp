#pragma once

namespace advicegame {

// Smallest admissible precision weight. Everything downstream divides by
// rE at some point, so zero and near-zero weights are rejected up front.
inline constexpr double kMinPrecision = 1e-12;

// Human belief structure reduced to the two relative precision weights:
// rE = sigma0^2/sigmaE^2 for the advisor, rP = sigma0^2/sigmaP^2 for the
// personal AI. A diffuse prior is carried as an explicit flag, never as a
// huge variance, so the limit decision rules stay exact.
struct BeliefParams {
    double mu0 = 0.0;
    double rE = 1.0;
    double rP = 1.0;
    bool uninformative_prior = false;
};

// Variance-level parameterization; canonicalized via from_variances.
struct VariancePrior {
    double sigma0_sq = 1.0;
    double sigmaE_sq = 1.0;
    double sigmaP_sq = 1.0;
};

// Throws std::invalid_argument on violated invariants.
void validate(const BeliefParams& b);

BeliefParams from_variances(const VariancePrior& v);

// Posterior-mean action when only the advisor was heard:
// (mu0 + rE sE) / (1 + rE); exactly sE under a diffuse prior.
double decision_without_ai(const BeliefParams& b, double sE);

// Posterior-mean action after consulting the personal AI as well:
// (mu0 + rE sE + rP sP) / (1 + rE + rP); the precision-weighted average
// of the two signals under a diffuse prior.
double decision_with_ai(const BeliefParams& b, double sE, double sP);

}  // namespace advicegame
