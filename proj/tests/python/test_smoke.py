import math

import pytest

import advicegame as ag


def canonical():
    return ag.Scenario(beliefs=ag.BeliefParams(mu0=0.0, rE=1.0, rP=1.0),
                       p=0.5, r=1.0, sP=0.0)


def test_package_exports():
    assert ag.__version__ == "0.1.0"
    assert 0.0 < ag.MIN_PRECISION < 1.0


def test_canonical_equilibrium():
    eq = ag.optimal_recommendation(canonical())
    assert math.isclose(eq.sE_star, 30 / 13, abs_tol=1e-12)
    assert math.isclose(eq.delta, 4 / 13, abs_tol=1e-12)
    assert math.isclose(eq.loss, 1 / 26, abs_tol=1e-12)
    assert math.isclose(eq.d0, 15 / 13, abs_tol=1e-12)
    assert math.isclose(eq.d1, 10 / 13, abs_tol=1e-12)


def test_decision_rules():
    b = ag.BeliefParams()
    assert ag.decision_without_ai(b, 2.0) == 1.0
    assert ag.decision_with_ai(b, 2.0, 1.0) == 1.0
    diffuse = ag.BeliefParams(mu0=float("nan"), rE=1.0, rP=1.0,
                              uninformative_prior=True)
    assert ag.decision_without_ai(diffuse, 7.25) == 7.25


def test_variance_parameterization():
    b = ag.from_variances(ag.VariancePrior(sigma0_sq=4.0, sigmaE_sq=2.0, sigmaP_sq=1.0))
    assert b.rE == 2.0
    assert b.rP == 4.0


def test_validation_raises_valueerror():
    with pytest.raises(ValueError):
        ag.BeliefParams(rE=0.0)
    with pytest.raises(ValueError):
        ag.Scenario(p=1.5)
    with pytest.raises(ValueError):
        ag.peak_trust(1.0)


def test_oracle_matches_closed_form():
    s = canonical()
    eq = ag.optimal_recommendation(s)
    br = ag.bracket_minimum(s)
    x = ag.golden_section_minimize(s, br.lo, br.hi, tol=1e-10)
    assert abs(x - eq.sE_star) <= 1e-10
    gm = ag.grid_min(s, 0.0, 5.0, 1_000_000)
    assert abs(gm.argmin - eq.sE_star) <= 5e-6
    assert abs(gm.min - eq.loss) <= 1e-10
    assert ag.raw_loss(s, eq.sE_star) == pytest.approx(eq.loss, abs=1e-15)


def test_comparative_statics():
    assert ag.peak_adoption(1.0, 1.0) == pytest.approx(0.6, abs=1e-15)
    assert ag.peak_trust(0.75) == 2.0
    assert ag.trust_ratio(ag.BeliefParams(rE=3.0, rP=2.0)) == 0.5
    dc = ag.peak_adoption_dual_check(1.0, 1.0, 9999)
    assert abs(dc.numeric - dc.analytic) <= 1e-4


def test_trust_worked_example():
    base = ag.Scenario(beliefs=ag.BeliefParams(), p=0.0, r=1.0, sP=1.0)
    tp = ag.TrustInvestmentProblem(scenario=base, rE_base=1.0, rE_high=3.0, cost=0.1)
    assert ag.trust_threshold(tp) == pytest.approx(3 / 16, rel=1e-12)
    decision = ag.invest_decision(tp)
    assert decision.invest
    assert decision.threshold == pytest.approx(decision.loss_base - decision.loss_high)
    assert ag.alpha_ratio(1.0, 3.0, 1.0) == pytest.approx(math.sqrt(675 / 256), rel=1e-12)
    assert ag.threshold_slope_condition(tp).decreasing


def test_sweep_and_serialization():
    spec = ag.SweepSpec(base=canonical(), param=ag.SweepParam.p, from_=0.0, to=1.0,
                        steps=11, quantity=ag.SweepQuantity.loss)
    res = ag.run_sweep(spec)
    assert len(res.rows) == 11
    assert res.rows[0].quantity_value == 0.0
    assert res.rows[-1].quantity_value == 0.0
    assert res.argmax.param_value == pytest.approx(0.6, abs=0.051)
    meta = dict(res.metadata)
    assert meta["param"] == "p"
    assert meta["seed"] == "irrelevant"

    csv = ag.csv_string(res)
    assert csv.startswith("# param=p\n")
    assert "param,value\n" in csv
    assert csv == ag.csv_string(res)

    svg = ag.svg_string(res)
    assert svg.startswith("<svg ")
    assert "<polyline" in svg


def test_mc_reproducibility():
    s = canonical()
    a = ag.mc_expected_loss(s, 2.0, n=100_000, seed=5)
    b = ag.mc_expected_loss(s, 2.0, n=100_000, seed=5)
    assert (a.mean, a.std_error) == (b.mean, b.std_error)
    assert a.n == 100_000 and a.seed == 5
    c = ag.mc_expected_loss(s, 2.0, n=100_000, seed=6)
    assert c.mean != a.mean
    truth = ag.raw_loss(s, 2.0)
    assert abs(a.mean - truth) <= 4 * a.std_error


def test_verification_passes():
    opts = ag.VerifyOptions()
    opts.trials = 50
    report = ag.run_verification(canonical(), opts)
    assert report.ok
    assert report.trials == 50
    assert report.max_argmin_deviation <= 1e-8
    assert report.violations == []
