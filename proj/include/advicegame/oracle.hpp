#pragma once

#include <cstdint>

#include "advicegame/scenario.hpp"

namespace advicegame {

// The advisor's objective as a plain function of the recommendation,
// assembled from the two posterior decision rules and nothing else. It is
// a quadratic in sE with strictly positive leading coefficient, which is
// what makes bracketing and unimodal search safe. Deliberately ignorant of
// the closed-form minimizer so it can vouch for it.
class RawObjective {
public:
    explicit RawObjective(const Scenario& s);
    double operator()(double sE) const;
    const Scenario& scenario() const { return scenario_; }

private:
    Scenario scenario_;
};

// (1-p)(r - d0(sE))^2 + p(r - d1(sE, sP))^2.
double raw_loss(const Scenario& s, double sE);

struct Bracket {
    double lo;
    double hi;
};

// Interval guaranteed to contain the minimizer, found by doubling
// expansion around the target. Throws std::runtime_error if no bracket
// emerges after 64 doublings (pathological parameters).
Bracket bracket_minimum(const Scenario& s);

// Golden-section search on [lo, hi] followed by a three-point parabolic
// polish at curvature-scaled spacing. The shrinking phase alone cannot
// localize the minimum past the sqrt(eps * f / curvature) comparison
// noise floor; the objective is exactly quadratic, so one wide-spaced
// fit recovers the vertex to near machine precision. Returns x with
// |x - argmin| <= tol; the golden phase takes
// ceil(log((hi-lo)/tol) / log(1/0.618)) iterations.
double golden_section_minimize(const Scenario& s, double lo, double hi, double tol);

struct GridMin {
    double argmin;
    double min;
};

// Exhaustive scan over n equally spaced points; leftmost minimum wins.
GridMin grid_min(const Scenario& s, double lo, double hi, std::int64_t n);

struct McEstimate {
    double mean;
    double std_error;
    std::int64_t n;
    std::uint64_t seed;
};

// Monte Carlo estimate of the expected loss at a fixed recommendation,
// averaging over the consultation coin only (the sole source of
// randomness in the objective). Draw i is a pure function of (seed, i),
// and the two-valued sample is accumulated from consultation counts, so
// the result is independent of how the draws are partitioned.
McEstimate mc_expected_loss(const Scenario& s, double sE, std::int64_t n,
                            std::uint64_t seed);

}  // namespace advicegame
