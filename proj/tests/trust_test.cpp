#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "advicegame/random.hpp"
#include "advicegame/trust.hpp"
#include "advicegame/verify.hpp"

using namespace advicegame;

namespace {

// The worked configuration used throughout: honest target 1, prior at 0,
// AI pinned at the target's opposite side, upgrade from rE=1 to 3.
TrustInvestmentProblem worked(double p) {
    TrustInvestmentProblem tp;
    tp.scenario.beliefs.mu0 = 0.0;
    tp.scenario.beliefs.rE = 1.0;
    tp.scenario.beliefs.rP = 1.0;
    tp.scenario.p = p;
    tp.scenario.r = 1.0;
    tp.scenario.sP = 1.0;
    tp.rE_base = 1.0;
    tp.rE_high = 3.0;
    tp.cost = 0.0;
    return tp;
}

}  // namespace

TEST_CASE("fixed-recommendation loss worked values") {
    Scenario s = worked(0.0).scenario;
    CHECK(fixed_rec_expected_loss(s, 1.0) == doctest::Approx(0.25).epsilon(1e-15));
    s.p = 1.0;
    // sP equals the target here, so only the prior bias leaks through.
    CHECK(fixed_rec_expected_loss(s, 1.0) == doctest::Approx(1.0 / 9.0).epsilon(1e-15));

    // Full agreement: no deviation in either consultation state.
    Scenario calm = s;
    calm.beliefs.mu0 = calm.r;
    calm.sP = calm.r;
    calm.p = 0.42;
    CHECK(fixed_rec_expected_loss(calm, 2.0) == 0.0);

    CHECK_THROWS_AS(fixed_rec_expected_loss(s, 0.0), std::invalid_argument);
}

TEST_CASE("threshold worked values") {
    CHECK(trust_threshold(worked(0.0)) == doctest::Approx(3.0 / 16.0).epsilon(1e-15));
    CHECK(trust_threshold(worked(1.0)) == doctest::Approx(16.0 / 225.0).epsilon(1e-15));
}

TEST_CASE("threshold is exactly the loss reduction") {
    SplitMix64 rng(31);
    for (int i = 0; i < 500; ++i) {
        TrustInvestmentProblem tp;
        tp.scenario = sample_scenario(rng);
        tp.rE_base = tp.scenario.beliefs.rE;
        tp.rE_high = tp.rE_base + rng.log_uniform(0.01, 10.0);
        tp.cost = rng.uniform(0.0, 1.0);
        const double threshold = trust_threshold(tp);
        const double gap = fixed_rec_expected_loss(tp.scenario, tp.rE_base) -
                           fixed_rec_expected_loss(tp.scenario, tp.rE_high);
        CHECK(threshold == doctest::Approx(gap).epsilon(1e-12));
        CHECK(threshold >= 0.0);

        const TrustDecision d = invest_decision(tp);
        CHECK(d.threshold == threshold);
        CHECK(d.loss_base >= d.loss_high);
        CHECK(d.invest == (tp.cost <= threshold));
    }
}

TEST_CASE("threshold is affine in adoption") {
    SplitMix64 rng(32);
    for (int i = 0; i < 200; ++i) {
        TrustInvestmentProblem tp;
        tp.scenario = sample_scenario(rng);
        tp.rE_base = tp.scenario.beliefs.rE;
        tp.rE_high = tp.rE_base + rng.log_uniform(0.01, 10.0);
        auto at = [&](double p) {
            TrustInvestmentProblem q = tp;
            q.scenario.p = p;
            return trust_threshold(q);
        };
        const double c0 = at(0.0);
        const double c1 = at(1.0);
        const double lambda = rng.uniform01();
        const double blend = (1.0 - lambda) * c0 + lambda * c1;
        CHECK(at(lambda) == doctest::Approx(blend).epsilon(1e-12));
    }
}

TEST_CASE("invest decision edges") {
    TrustInvestmentProblem tp = worked(0.0);
    tp.cost = 0.0;
    CHECK(invest_decision(tp).invest);
    tp.cost = 0.2;  // threshold is 3/16 = 0.1875
    CHECK_FALSE(invest_decision(tp).invest);
    tp.cost = trust_threshold(worked(0.0));
    CHECK(invest_decision(tp).invest);  // indifference resolves to investing

    // A vanishing upgrade is worth almost nothing.
    TrustInvestmentProblem tiny = worked(0.3);
    tiny.rE_high = tiny.rE_base + 1e-9;
    CHECK(trust_threshold(tiny) < 1e-8);
    tiny.cost = 0.01;
    CHECK_FALSE(invest_decision(tiny).invest);
}

TEST_CASE("alpha ratio") {
    // Worked upgrade 1 -> 3 with rP = 1: sqrt(675/256).
    const double alpha = alpha_ratio(1.0, 3.0, 1.0);
    CHECK(alpha == doctest::Approx(std::sqrt(675.0 / 256.0)).epsilon(1e-12));
    CHECK(alpha == doctest::Approx(1.62380).epsilon(5e-6));

    // The AI's presence always amplifies the solo gain relative to the
    // joint gain.
    SplitMix64 rng(33);
    for (int i = 0; i < 500; ++i) {
        const double rE = rng.log_uniform(0.05, 20.0);
        const double rE_high = rE + rng.log_uniform(0.01, 10.0);
        const double rP = rng.log_uniform(0.05, 20.0);
        CHECK(alpha_ratio(rE, rE_high, rP) > 1.0);
    }
    CHECK(alpha_ratio(1.0, 3.0, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK_THROWS_AS(alpha_ratio(1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("slope condition worked example") {
    const TrustInvestmentProblem tp = worked(0.5);
    const SlopeCondition cond = threshold_slope_condition(tp);
    CHECK(cond.lhs == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cond.rhs == doctest::Approx(0.81190).epsilon(5e-6));
    CHECK(cond.decreasing);
    // Consistent with the endpoint thresholds: 16/225 < 3/16.
    CHECK(trust_threshold(worked(1.0)) < trust_threshold(worked(0.0)));
}

TEST_CASE("slope condition agrees with endpoint comparison") {
    SplitMix64 rng(34);
    for (int i = 0; i < 500; ++i) {
        TrustInvestmentProblem tp;
        tp.scenario = sample_scenario(rng);
        tp.rE_base = tp.scenario.beliefs.rE;
        tp.rE_high = tp.rE_base + rng.log_uniform(0.01, 10.0);
        const SlopeCondition cond = threshold_slope_condition(tp);
        auto at = [&](double p) {
            TrustInvestmentProblem q = tp;
            q.scenario.p = p;
            return trust_threshold(q);
        };
        const double drop = at(0.0) - at(1.0);
        // Ignore razor-thin slopes where rounding could flip the sign.
        if (std::fabs(drop) > 1e-9) CHECK(cond.decreasing == (drop > 0.0));
    }
}

TEST_CASE("slope condition extremes") {
    // No prior bias: the rhs collapses, so more adoption always raises
    // the value of credibility when the AI disagrees.
    TrustInvestmentProblem tp = worked(0.5);
    tp.scenario.beliefs.mu0 = tp.scenario.r;
    tp.scenario.sP = -1.0;
    const SlopeCondition no_bias = threshold_slope_condition(tp);
    CHECK(no_bias.rhs == 0.0);
    CHECK_FALSE(no_bias.decreasing);

    // AI pinned on the target with prior bias present: adoption only
    // dilutes what credibility is worth.
    TrustInvestmentProblem agree = worked(0.5);
    agree.scenario.sP = agree.scenario.r;
    agree.scenario.beliefs.mu0 = -2.0;
    CHECK(threshold_slope_condition(agree).decreasing);
}

TEST_CASE("trust problem validation") {
    TrustInvestmentProblem tp = worked(0.5);
    tp.rE_high = 1.0;
    CHECK_THROWS_AS(validate(tp), std::invalid_argument);
    tp = worked(0.5);
    tp.rE_base = 2.0;  // no longer matches scenario.beliefs.rE
    CHECK_THROWS_AS(validate(tp), std::invalid_argument);
    tp = worked(0.5);
    tp.cost = -0.5;
    CHECK_THROWS_AS(validate(tp), std::invalid_argument);
}
