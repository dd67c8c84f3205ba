#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "advicegame/equilibrium.hpp"
#include "advicegame/oracle.hpp"
#include "advicegame/random.hpp"
#include "advicegame/verify.hpp"

using namespace advicegame;

namespace {
double sq(double x) { return x * x; }

Scenario canonical() {
    Scenario s;
    s.beliefs.mu0 = 0.0;
    s.beliefs.rE = 1.0;
    s.beliefs.rP = 1.0;
    s.p = 0.5;
    s.r = 1.0;
    s.sP = 0.0;
    return s;
}
}  // namespace

TEST_CASE("raw loss composes the two decision branches") {
    Scenario s = canonical();
    s.p = 0.0;
    // With no consultation the loss vanishes exactly where the solo
    // decision hits the target.
    CHECK(raw_loss(s, 2.0) == 0.0);

    CHECK(raw_loss(canonical(), 30.0 / 13.0) ==
          doctest::Approx(1.0 / 26.0).epsilon(1e-12));

    // Strict convexity: positive second difference everywhere.
    SplitMix64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const Scenario q = sample_scenario(rng);
        const RawObjective f(q);
        const double x = rng.uniform(-20.0, 20.0);
        const double h = rng.log_uniform(0.01, 2.0);
        CHECK(f(x - h) - 2.0 * f(x) + f(x + h) > 0.0);
    }
}

TEST_CASE("bracket contains the minimizer") {
    SplitMix64 rng(42);
    for (int i = 0; i < 500; ++i) {
        const Scenario s = sample_scenario(rng);
        const Bracket br = bracket_minimum(s);
        CHECK(br.lo < br.hi);
        const double star = optimal_recommendation(s).sE_star;
        CHECK(br.lo < star);
        CHECK(star < br.hi);
        // And it genuinely brackets: both ends sit above the midpoint value.
        const RawObjective f(s);
        const double mid = 0.5 * (br.lo + br.hi);
        CHECK(f(br.lo) > f(mid));
        CHECK(f(br.hi) > f(mid));
    }
}

TEST_CASE("golden-section minimizer hits the closed form") {
    const Scenario s = canonical();
    const Bracket br = bracket_minimum(s);
    const double x = golden_section_minimize(s, br.lo, br.hi, 1e-10);
    CHECK(std::fabs(x - 30.0 / 13.0) <= 1e-10);

    Scenario never = canonical();
    never.p = 0.0;
    const Bracket nb = bracket_minimum(never);
    CHECK(std::fabs(golden_section_minimize(never, nb.lo, nb.hi, 1e-10) - 2.0) <= 1e-9);

    Scenario calm = canonical();
    calm.beliefs.mu0 = calm.r;
    calm.sP = calm.r;
    const double cx = golden_section_minimize(calm, calm.r - 2.0, calm.r + 2.0, 1e-10);
    CHECK(std::fabs(cx - calm.r) <= 1e-9);

    CHECK_THROWS_AS(golden_section_minimize(s, 1.0, 0.0, 1e-10), std::invalid_argument);
    CHECK_THROWS_AS(golden_section_minimize(s, 0.0, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("golden-section tracks the closed form across random scenarios") {
    SplitMix64 rng(43);
    for (int i = 0; i < 100; ++i) {
        const Scenario s = sample_scenario(rng);
        const EquilibriumOutcome eq = optimal_recommendation(s);
        const Bracket br = bracket_minimum(s);
        const double x = golden_section_minimize(s, br.lo, br.hi, 1e-10);
        CHECK(std::fabs(x - eq.sE_star) <= 1e-8);
        const double v = raw_loss(s, x);
        CHECK(std::fabs(v - eq.loss) <= std::max(1e-10, 1e-8 * std::fabs(eq.loss)));
    }
}

TEST_CASE("grid scan") {
    const Scenario s = canonical();
    const GridMin gm = grid_min(s, 0.0, 5.0, 1'000'000);
    CHECK(std::fabs(gm.argmin - 30.0 / 13.0) <= 5e-6);
    CHECK(std::fabs(gm.min - 1.0 / 26.0) <= 1e-10);

    // The scan can never undercut the true minimum.
    SplitMix64 rng(44);
    for (int i = 0; i < 100; ++i) {
        const Scenario q = sample_scenario(rng);
        const Bracket br = bracket_minimum(q);
        const GridMin g = grid_min(q, br.lo, br.hi, 1001);
        CHECK(g.min >= equilibrium_loss(q) - 1e-12 * (1.0 + std::fabs(equilibrium_loss(q))));
    }

    // Full adoption lets the advisor land the consulted branch exactly.
    Scenario full = canonical();
    full.p = 1.0;
    const Bracket fb = bracket_minimum(full);
    CHECK(grid_min(full, fb.lo, fb.hi, 1'000'000).min <= 1e-9);

    CHECK_THROWS_AS(grid_min(s, 0.0, 5.0, 1), std::invalid_argument);
}

TEST_CASE("grid scan keeps the leftmost of tied minima") {
    // Put the vertex exactly at zero (everything centered) so the
    // objective is an even function computed symmetrically: f(-1) and
    // f(+1) then agree bitwise and leftmost-wins is observable.
    Scenario s = canonical();
    s.r = 0.0;
    const GridMin g = grid_min(s, -1.0, 1.0, 3);
    CHECK(g.argmin == 0.0);
    CHECK(g.min == 0.0);
    const GridMin tie = grid_min(s, -1.0, 1.0, 2);
    CHECK(tie.argmin == -1.0);
}

TEST_CASE("monte carlo estimator") {
    const Scenario s = canonical();
    const double star = 30.0 / 13.0;

    // Degenerate coins are exact.
    Scenario never = s;
    never.p = 0.0;
    const double loss0 = sq(never.r - decision_without_ai(never.beliefs, star));
    McEstimate est = mc_expected_loss(never, star, 10'000, 7);
    CHECK(est.mean == loss0);
    CHECK(est.std_error == 0.0);

    Scenario always = s;
    always.p = 1.0;
    const double loss1 = sq(always.r - decision_with_ai(always.beliefs, star, always.sP));
    est = mc_expected_loss(always, star, 10'000, 7);
    CHECK(est.mean == loss1);
    CHECK(est.std_error == 0.0);

    // Reproducible and within three standard errors of the closed form.
    const McEstimate a = mc_expected_loss(s, star, 1'000'000, 42);
    const McEstimate b = mc_expected_loss(s, star, 1'000'000, 42);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    const double truth = equilibrium_loss(s);
    CHECK(std::fabs(a.mean - truth) <= 3.0 * a.std_error);
    CHECK(a.std_error > 0.0);
    CHECK(a.n == 1'000'000);
    CHECK(a.seed == 42);

    // Different seeds genuinely resample.
    const McEstimate c = mc_expected_loss(s, star, 1'000'000, 43);
    CHECK(c.mean != a.mean);

    CHECK_THROWS_AS(mc_expected_loss(s, star, 1, 0), std::invalid_argument);
}

TEST_CASE("mc estimate reduces to a coin count") {
    // Each draw only picks a branch, so the estimate must equal the
    // two-point mixture implied by counting the coin directly.
    const Scenario s = canonical();
    const double star = 1.7;
    const std::uint64_t seed = 99;
    const std::int64_t n = 100'000;
    std::int64_t consults = 0;
    for (std::int64_t i = 0; i < n; ++i)
        if (uniform01_at(seed, static_cast<std::uint64_t>(i)) < s.p) ++consults;
    const double loss0 = sq(s.r - decision_without_ai(s.beliefs, star));
    const double loss1 = sq(s.r - decision_with_ai(s.beliefs, star, s.sP));
    const double k = static_cast<double>(consults);
    const double nn = static_cast<double>(n);
    const double mean = ((nn - k) * loss0 + k * loss1) / nn;
    const McEstimate est = mc_expected_loss(s, star, n, seed);
    CHECK(est.mean == mean);
    CHECK(consults > 0);
    CHECK(consults < n);
}

TEST_CASE("oracle leading coefficient matches the mixture weights") {
    SplitMix64 rng(45);
    for (int i = 0; i < 300; ++i) {
        const Scenario s = sample_scenario(rng);
        const RawObjective f(s);
        // Extract the quadratic coefficient from second differences at a
        // wide, well-conditioned spacing.
        const double h = 10.0;
        const double second = f(-h) - 2.0 * f(0.0) + f(h);
        const double a = second / (2.0 * h * h);
        const double rE = s.beliefs.rE;
        const double rP = s.beliefs.rP;
        const double expected = (1.0 - s.p) * sq(rE / (1.0 + rE)) +
                                s.p * sq(rE / (1.0 + rE + rP));
        CHECK(a == doctest::Approx(expected).epsilon(1e-6));
    }
}

TEST_CASE("closed-form minimizer dominates random probes") {
    SplitMix64 rng(46);
    for (int i = 0; i < 20; ++i) {
        const Scenario s = sample_scenario(rng);
        const EquilibriumOutcome eq = optimal_recommendation(s);
        const RawObjective f(s);
        const double at_star = f(eq.sE_star);
        const double slack = 1e-12 * (1.0 + std::fabs(at_star));
        const Bracket br = bracket_minimum(s);
        for (int k = 0; k < 10'000; ++k) {
            const double x = rng.uniform(br.lo, br.hi);
            CHECK(at_star <= f(x) + slack);
        }
    }
}
