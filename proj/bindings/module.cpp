#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "advicegame/beliefs.hpp"
#include "advicegame/equilibrium.hpp"
#include "advicegame/oracle.hpp"
#include "advicegame/sweep.hpp"
#include "advicegame/trust.hpp"
#include "advicegame/verify.hpp"

namespace py = pybind11;
using namespace advicegame;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Equilibrium objects of strategic advice facing a personal AI: "
              "Bayesian decision rules, optimal recommendations, counteraction "
              "intensity, trust investment, and the numeric oracles that "
              "cross-check the closed forms.";
    m.attr("__version__") = "0.1.0";
    m.attr("MIN_PRECISION") = kMinPrecision;

    py::class_<BeliefParams>(m, "BeliefParams")
        .def(py::init([](double mu0, double rE, double rP, bool uninformative_prior) {
                 BeliefParams b{mu0, rE, rP, uninformative_prior};
                 validate(b);
                 return b;
             }),
             py::arg("mu0") = 0.0, py::arg("rE") = 1.0, py::arg("rP") = 1.0,
             py::arg("uninformative_prior") = false)
        .def_readwrite("mu0", &BeliefParams::mu0)
        .def_readwrite("rE", &BeliefParams::rE)
        .def_readwrite("rP", &BeliefParams::rP)
        .def_readwrite("uninformative_prior", &BeliefParams::uninformative_prior)
        .def("__repr__", [](const BeliefParams& b) {
            std::ostringstream o;
            o << "BeliefParams(mu0=" << b.mu0 << ", rE=" << b.rE << ", rP=" << b.rP
              << (b.uninformative_prior ? ", uninformative_prior=True)" : ")");
            return o.str();
        });

    py::class_<VariancePrior>(m, "VariancePrior")
        .def(py::init([](double sigma0_sq, double sigmaE_sq, double sigmaP_sq) {
                 return VariancePrior{sigma0_sq, sigmaE_sq, sigmaP_sq};
             }),
             py::arg("sigma0_sq") = 1.0, py::arg("sigmaE_sq") = 1.0,
             py::arg("sigmaP_sq") = 1.0)
        .def_readwrite("sigma0_sq", &VariancePrior::sigma0_sq)
        .def_readwrite("sigmaE_sq", &VariancePrior::sigmaE_sq)
        .def_readwrite("sigmaP_sq", &VariancePrior::sigmaP_sq);

    py::class_<Scenario>(m, "Scenario")
        .def(py::init([](const BeliefParams& beliefs, double p, double r, double sP) {
                 Scenario s{beliefs, p, r, sP};
                 validate(s);
                 return s;
             }),
             py::arg("beliefs") = BeliefParams{}, py::arg("p") = 0.5, py::arg("r") = 1.0,
             py::arg("sP") = 0.0)
        .def_readwrite("beliefs", &Scenario::beliefs)
        .def_readwrite("p", &Scenario::p)
        .def_readwrite("r", &Scenario::r)
        .def_readwrite("sP", &Scenario::sP)
        .def("__repr__", [](const Scenario& s) {
            std::ostringstream o;
            o << "Scenario(mu0=" << s.beliefs.mu0 << ", rE=" << s.beliefs.rE
              << ", rP=" << s.beliefs.rP << ", p=" << s.p << ", r=" << s.r << ", sP=" << s.sP
              << ")";
            return o.str();
        });

    m.def("validate", py::overload_cast<const BeliefParams&>(&validate), py::arg("beliefs"));
    m.def("validate", py::overload_cast<const Scenario&>(&validate), py::arg("scenario"));
    m.def("validate", py::overload_cast<const TrustInvestmentProblem&>(&validate),
          py::arg("problem"));
    m.def("from_variances", &from_variances, py::arg("variances"),
          "Fold a variance-level prior into the two relative precision weights.");

    m.def("decision_without_ai", &decision_without_ai, py::arg("beliefs"), py::arg("sE"));
    m.def("decision_with_ai", &decision_with_ai, py::arg("beliefs"), py::arg("sE"),
          py::arg("sP"));

    py::class_<EquilibriumOutcome>(m, "EquilibriumOutcome")
        .def_readonly("sE_star", &EquilibriumOutcome::sE_star)
        .def_readonly("delta", &EquilibriumOutcome::delta)
        .def_readonly("loss", &EquilibriumOutcome::loss)
        .def_readonly("d0", &EquilibriumOutcome::d0)
        .def_readonly("d1", &EquilibriumOutcome::d1)
        .def("__repr__", [](const EquilibriumOutcome& e) {
            std::ostringstream o;
            o << "EquilibriumOutcome(sE_star=" << e.sE_star << ", delta=" << e.delta
              << ", loss=" << e.loss << ")";
            return o.str();
        });

    m.def("naive_recommendation", &naive_recommendation, py::arg("r"));
    m.def("optimal_recommendation", &optimal_recommendation, py::arg("scenario"));
    m.def("counteraction_intensity", &counteraction_intensity, py::arg("scenario"));
    m.def("counteraction_intensity_tform", &counteraction_intensity_tform, py::arg("p"),
          py::arg("rE"), py::arg("t"));
    m.def("equilibrium_loss", &equilibrium_loss, py::arg("scenario"));
    m.def("equilibrium_loss_tform", &equilibrium_loss_tform, py::arg("p"), py::arg("t"),
          py::arg("dev_sq"));
    m.def(
        "trust_ratio", [](const BeliefParams& b) { return trust_ratio(b).t; },
        py::arg("beliefs"), "rP / (1 + rE), the sufficient statistic for the loss.");
    m.def("peak_adoption", &peak_adoption, py::arg("rE"), py::arg("rP"));
    m.def("peak_trust", &peak_trust, py::arg("p"));

    py::class_<TrustInvestmentProblem>(m, "TrustInvestmentProblem")
        .def(py::init([](const Scenario& scenario, double rE_base, double rE_high,
                         double cost) {
                 TrustInvestmentProblem tp{scenario, rE_base, rE_high, cost};
                 validate(tp);
                 return tp;
             }),
             py::arg("scenario"), py::arg("rE_base"), py::arg("rE_high"),
             py::arg("cost") = 0.0)
        .def_readwrite("scenario", &TrustInvestmentProblem::scenario)
        .def_readwrite("rE_base", &TrustInvestmentProblem::rE_base)
        .def_readwrite("rE_high", &TrustInvestmentProblem::rE_high)
        .def_readwrite("cost", &TrustInvestmentProblem::cost);

    py::class_<TrustDecision>(m, "TrustDecision")
        .def_readonly("invest", &TrustDecision::invest)
        .def_readonly("threshold", &TrustDecision::threshold)
        .def_readonly("loss_base", &TrustDecision::loss_base)
        .def_readonly("loss_high", &TrustDecision::loss_high);

    py::class_<SlopeCondition>(m, "SlopeCondition")
        .def_readonly("decreasing", &SlopeCondition::decreasing)
        .def_readonly("lhs", &SlopeCondition::lhs)
        .def_readonly("rhs", &SlopeCondition::rhs);

    m.def("fixed_rec_expected_loss", &fixed_rec_expected_loss, py::arg("scenario"),
          py::arg("tau"));
    m.def("trust_threshold", &trust_threshold, py::arg("problem"));
    m.def("invest_decision", &invest_decision, py::arg("problem"));
    m.def("alpha_ratio", &alpha_ratio, py::arg("rE"), py::arg("rE_high"), py::arg("rP"));
    m.def("threshold_slope_condition", &threshold_slope_condition, py::arg("problem"));

    py::class_<Bracket>(m, "Bracket")
        .def_readonly("lo", &Bracket::lo)
        .def_readonly("hi", &Bracket::hi);

    py::class_<GridMin>(m, "GridMin")
        .def_readonly("argmin", &GridMin::argmin)
        .def_readonly("min", &GridMin::min);

    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("mean", &McEstimate::mean)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("n", &McEstimate::n)
        .def_readonly("seed", &McEstimate::seed);

    m.def("raw_loss", &raw_loss, py::arg("scenario"), py::arg("sE"),
          "Two-branch expected loss assembled from the decision rules alone; "
          "the brute-force objective the closed forms are checked against.");
    m.def("bracket_minimum", &bracket_minimum, py::arg("scenario"));
    m.def("golden_section_minimize", &golden_section_minimize, py::arg("scenario"),
          py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-10);
    m.def("grid_min", &grid_min, py::arg("scenario"), py::arg("lo"), py::arg("hi"),
          py::arg("n"));
    m.def("mc_expected_loss", &mc_expected_loss, py::arg("scenario"), py::arg("sE"),
          py::arg("n") = 1'000'000, py::arg("seed") = 0);

    py::enum_<SweepParam>(m, "SweepParam")
        .value("p", SweepParam::p)
        .value("t", SweepParam::t)
        .value("rE", SweepParam::rE)
        .value("rP", SweepParam::rP);

    py::enum_<SweepQuantity>(m, "SweepQuantity")
        .value("delta", SweepQuantity::delta)
        .value("loss", SweepQuantity::loss)
        .value("threshold", SweepQuantity::threshold);

    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init([](const Scenario& base, SweepParam param, double from, double to,
                         std::int64_t steps, SweepQuantity quantity,
                         std::optional<TrustInvestmentProblem> trust) {
                 SweepSpec spec{base, param, from, to, steps, quantity, std::move(trust)};
                 return spec;
             }),
             py::arg("base"), py::arg("param"), py::arg("from_"), py::arg("to"),
             py::arg("steps"), py::arg("quantity"), py::arg("trust") = py::none())
        .def_readwrite("base", &SweepSpec::base)
        .def_readwrite("param", &SweepSpec::param)
        .def_readwrite("from_", &SweepSpec::from)
        .def_readwrite("to", &SweepSpec::to)
        .def_readwrite("steps", &SweepSpec::steps)
        .def_readwrite("quantity", &SweepSpec::quantity)
        .def_readwrite("trust", &SweepSpec::trust);

    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("param_value", &SweepRow::param_value)
        .def_readonly("quantity_value", &SweepRow::quantity_value);

    py::class_<SweepExtremum>(m, "SweepExtremum")
        .def_readonly("param_value", &SweepExtremum::param_value)
        .def_readonly("quantity_value", &SweepExtremum::quantity_value)
        .def_readonly("refined_param", &SweepExtremum::refined_param)
        .def_readonly("refined_value", &SweepExtremum::refined_value);

    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("rows", &SweepResult::rows)
        .def_readonly("argmax", &SweepResult::argmax)
        .def_readonly("argmin", &SweepResult::argmin)
        .def_readonly("metadata", &SweepResult::metadata);

    py::class_<DualCheck>(m, "DualCheck")
        .def_readonly("analytic", &DualCheck::analytic)
        .def_readonly("numeric", &DualCheck::numeric);

    m.def("run_sweep", &run_sweep, py::arg("spec"));
    m.def("peak_adoption_dual_check", &peak_adoption_dual_check, py::arg("rE"), py::arg("rP"),
          py::arg("steps"));
    m.def(
        "csv_string",
        [](const SweepResult& res) {
            std::ostringstream out;
            emit_csv(res, out);
            return out.str();
        },
        py::arg("result"));
    m.def(
        "svg_string",
        [](const SweepResult& res) {
            std::ostringstream out;
            emit_svg_chart(res, out);
            return out.str();
        },
        py::arg("result"));

    py::class_<VerifyOptions>(m, "VerifyOptions")
        .def(py::init<>())
        .def_readwrite("trials", &VerifyOptions::trials)
        .def_readwrite("seed", &VerifyOptions::seed)
        .def_readwrite("grid_n", &VerifyOptions::grid_n)
        .def_readwrite("mc_n", &VerifyOptions::mc_n)
        .def_readwrite("golden_tol", &VerifyOptions::golden_tol)
        .def_readwrite("argmin_tol", &VerifyOptions::argmin_tol)
        .def_readwrite("loss_abs_tol", &VerifyOptions::loss_abs_tol)
        .def_readwrite("loss_rel_tol", &VerifyOptions::loss_rel_tol);

    py::class_<VerifyReport>(m, "VerifyReport")
        .def_readonly("trials", &VerifyReport::trials)
        .def_readonly("max_argmin_deviation", &VerifyReport::max_argmin_deviation)
        .def_readonly("max_loss_deviation", &VerifyReport::max_loss_deviation)
        .def_readonly("grid_argmin_deviation", &VerifyReport::grid_argmin_deviation)
        .def_readonly("grid_min_excess", &VerifyReport::grid_min_excess)
        .def_readonly("mc_max_z", &VerifyReport::mc_max_z)
        .def_readonly("ok", &VerifyReport::ok)
        .def_readonly("violations", &VerifyReport::violations);

    m.def("run_verification", &run_verification, py::arg("scenario"),
          py::arg("options") = VerifyOptions{});
}
