#include "advicegame/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "advicegame/config.hpp"
#include "advicegame/equilibrium.hpp"
#include "advicegame/format.hpp"
#include "advicegame/oracle.hpp"
#include "advicegame/sweep.hpp"
#include "advicegame/trust.hpp"
#include "advicegame/verify.hpp"

namespace advicegame {

namespace {

struct CommonOpts {
    std::string config_path;
    std::optional<double> mu0, rE, rP, p, r, sP;
    bool json = false;
    bool verbose = false;
};

void add_common(CLI::App* sub, CommonOpts& o) {
    sub->add_option("--config", o.config_path, "JSON scenario document")->required();
    sub->add_option("--mu0", o.mu0, "override the prior mean");
    sub->add_option("--rE", o.rE, "override the advisor weight");
    sub->add_option("--rP", o.rP, "override the personal-AI weight");
    sub->add_option("--p", o.p, "override the consultation probability");
    sub->add_option("--r", o.r, "override the advisor target");
    sub->add_option("--sP", o.sP, "override the anticipated AI recommendation");
    sub->add_flag("--json", o.json, "emit JSON instead of plain text");
    sub->add_flag("--verbose", o.verbose, "progress chatter on stderr");
}

ScenarioConfig load_and_override(const CommonOpts& o, std::ostream& err) {
    ScenarioConfig cfg = load_config(o.config_path);
    if (o.mu0) cfg.beliefs.mu0 = *o.mu0;
    if (o.rE) cfg.beliefs.rE = *o.rE;
    if (o.rP) cfg.beliefs.rP = *o.rP;
    if (o.p) cfg.p = *o.p;
    if (o.r) cfg.r = *o.r;
    if (o.sP) cfg.sP = *o.sP;
    if (o.verbose) err << "config: " << o.config_path << "\n";
    return cfg;
}

TrustInvestmentProblem trust_problem(const ScenarioConfig& cfg) {
    if (!cfg.trust)
        throw std::invalid_argument("config: a 'trust' block is required for this command");
    TrustInvestmentProblem tp;
    tp.scenario = cfg.scenario();
    tp.rE_base = cfg.beliefs.rE;
    tp.rE_high = cfg.trust->rE_high;
    tp.cost = cfg.trust->cost;
    return tp;
}

SweepSpec sweep_spec(const ScenarioConfig& cfg) {
    if (!cfg.sweep)
        throw std::invalid_argument("config: a 'sweep' block is required for this command");
    SweepSpec spec;
    spec.base = cfg.scenario();
    spec.param = cfg.sweep->param;
    spec.from = cfg.sweep->from;
    spec.to = cfg.sweep->to;
    spec.steps = cfg.sweep->steps;
    spec.quantity = cfg.sweep->quantity;
    if (spec.quantity == SweepQuantity::threshold) spec.trust = trust_problem(cfg);
    return spec;
}

void print_kv(std::ostream& out, const char* key, double v) {
    out << key << " = " << format_number(v) << "\n";
}

void print_kv_bool(std::ostream& out, const char* key, bool v) {
    out << key << " = " << (v ? "true" : "false") << "\n";
}

void write_file(const std::string& path, const SweepResult& res, bool svg) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    if (svg) {
        emit_svg_chart(res, f);
    } else {
        emit_csv(res, f);
    }
    f.flush();
    if (!f) throw std::runtime_error("write failure on '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"equilibrium calculator for strategic advice facing a personal AI"};
    app.name("advicegame");
    app.require_subcommand(1);

    CommonOpts common;

    auto* decide = app.add_subcommand("decide", "posterior decision for a given recommendation");
    double decide_sE = 0.0;
    bool with_ai = false;
    decide->add_option("--sE", decide_sE, "advisor recommendation")->required();
    decide->add_flag("--with-ai", with_ai, "consult the personal AI as well");
    add_common(decide, common);

    auto* optimal = app.add_subcommand("optimal", "optimal recommendation, counteraction, and loss");
    add_common(optimal, common);

    auto* naive = app.add_subcommand("naive", "benchmark recommendation that ignores the AI");
    add_common(naive, common);

    auto* sweep = app.add_subcommand("sweep", "grid sweep to CSV and optional SVG chart");
    std::string out_path;
    std::string svg_path;
    sweep->add_option("--out", out_path, "CSV output path")->required();
    sweep->add_option("--svg", svg_path, "SVG chart output path");
    add_common(sweep, common);

    auto* trust = app.add_subcommand("trust", "credibility investment decision");
    add_common(trust, common);

    auto* verify = app.add_subcommand("verify", "cross-check closed forms against the oracles");
    std::optional<std::int64_t> trials;
    std::optional<std::uint64_t> verify_seed;
    verify->add_option("--trials", trials, "randomized scenarios (default 1000)");
    verify->add_option("--seed", verify_seed, "seed (default: mc.seed from the config)");
    add_common(verify, common);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo loss at a fixed recommendation");
    double sim_sE = 0.0;
    std::optional<std::int64_t> sim_n;
    std::optional<std::uint64_t> sim_seed;
    simulate->add_option("--sE", sim_sE, "recommendation to simulate")->required();
    simulate->add_option("--n", sim_n, "draws (default: mc.n from the config)");
    simulate->add_option("--seed", sim_seed, "seed (default: mc.seed from the config)");
    add_common(simulate, common);

    // CLI11's vector interface consumes tokens back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        nlohmann::json j;
        if (decide->parsed()) {
            const ScenarioConfig cfg = load_and_override(common, err);
            const char* label = with_ai ? "D1" : "D0";
            const double d = with_ai ? decision_with_ai(cfg.beliefs, decide_sE, cfg.sP)
                                     : decision_without_ai(cfg.beliefs, decide_sE);
            if (common.json) {
                j[label] = d;
                out << j.dump(2) << "\n";
            } else {
                print_kv(out, label, d);
            }
        } else if (optimal->parsed()) {
            const ScenarioConfig cfg = load_and_override(common, err);
            const EquilibriumOutcome eq = optimal_recommendation(cfg.scenario());
            if (common.json) {
                j["sE_star"] = eq.sE_star;
                j["delta"] = eq.delta;
                j["loss"] = eq.loss;
                j["d0"] = eq.d0;
                j["d1"] = eq.d1;
                out << j.dump(2) << "\n";
            } else {
                print_kv(out, "sE_star", eq.sE_star);
                print_kv(out, "delta", eq.delta);
                print_kv(out, "loss", eq.loss);
                print_kv(out, "d0", eq.d0);
                print_kv(out, "d1", eq.d1);
            }
        } else if (naive->parsed()) {
            const ScenarioConfig cfg = load_and_override(common, err);
            const double v = naive_recommendation(cfg.r);
            if (common.json) {
                j["sE_star"] = v;
                out << j.dump(2) << "\n";
            } else {
                print_kv(out, "sE_star", v);
            }
        } else if (sweep->parsed()) {
            const ScenarioConfig cfg = load_and_override(common, err);
            const SweepResult res = run_sweep(sweep_spec(cfg));
            write_file(out_path, res, false);
            if (!svg_path.empty()) write_file(svg_path, res, true);
            if (common.json) {
                j["rows"] = static_cast<std::int64_t>(res.rows.size());
                j["argmax_param"] = res.argmax->param_value;
                j["argmax_value"] = res.argmax->quantity_value;
                j["argmax_param_refined"] = res.argmax->refined_param;
                j["argmax_value_refined"] = res.argmax->refined_value;
                j["argmin_param"] = res.argmin->param_value;
                j["argmin_value"] = res.argmin->quantity_value;
                j["argmin_param_refined"] = res.argmin->refined_param;
                j["argmin_value_refined"] = res.argmin->refined_value;
                j["csv"] = out_path;
                if (!svg_path.empty()) j["svg"] = svg_path;
                out << j.dump(2) << "\n";
            } else {
                out << "rows = " << res.rows.size() << "\n";
                print_kv(out, "argmax_param", res.argmax->param_value);
                print_kv(out, "argmax_value", res.argmax->quantity_value);
                print_kv(out, "argmax_param_refined", res.argmax->refined_param);
                print_kv(out, "argmax_value_refined", res.argmax->refined_value);
                print_kv(out, "argmin_param", res.argmin->param_value);
                print_kv(out, "argmin_value", res.argmin->quantity_value);
                print_kv(out, "argmin_param_refined", res.argmin->refined_param);
                print_kv(out, "argmin_value_refined", res.argmin->refined_value);
                out << "csv = " << out_path << "\n";
                if (!svg_path.empty()) out << "svg = " << svg_path << "\n";
            }
        } else if (trust->parsed()) {
            const ScenarioConfig cfg = load_and_override(common, err);
            const TrustInvestmentProblem tp = trust_problem(cfg);
            const TrustDecision d = invest_decision(tp);
            const SlopeCondition slope = threshold_slope_condition(tp);
            const double alpha = alpha_ratio(tp.rE_base, tp.rE_high, cfg.beliefs.rP);
            if (common.json) {
                j["threshold"] = d.threshold;
                j["loss_base"] = d.loss_base;
                j["loss_high"] = d.loss_high;
                j["cost"] = tp.cost;
                j["invest"] = d.invest;
                j["alpha"] = alpha;
                j["slope_lhs"] = slope.lhs;
                j["slope_rhs"] = slope.rhs;
                j["threshold_decreasing_in_p"] = slope.decreasing;
                out << j.dump(2) << "\n";
            } else {
                print_kv(out, "threshold", d.threshold);
                print_kv(out, "loss_base", d.loss_base);
                print_kv(out, "loss_high", d.loss_high);
                print_kv(out, "cost", tp.cost);
                print_kv_bool(out, "invest", d.invest);
                print_kv(out, "alpha", alpha);
                print_kv(out, "slope_lhs", slope.lhs);
                print_kv(out, "slope_rhs", slope.rhs);
                print_kv_bool(out, "threshold_decreasing_in_p", slope.decreasing);
            }
        } else if (verify->parsed()) {
            const ScenarioConfig cfg = load_and_override(common, err);
            VerifyOptions vo;
            vo.trials = trials.value_or(vo.trials);
            vo.seed = verify_seed.value_or(cfg.mc.seed);
            vo.mc_n = cfg.mc.n;
            if (common.verbose)
                err << "verifying " << vo.trials << " randomized scenarios, seed " << vo.seed
                    << "\n";
            const VerifyReport rep = run_verification(cfg.scenario(), vo);
            for (const std::string& v : rep.violations) err << "violation: " << v << "\n";
            if (common.json) {
                j["trials"] = rep.trials;
                j["max_argmin_deviation"] = rep.max_argmin_deviation;
                j["max_loss_deviation"] = rep.max_loss_deviation;
                j["grid_argmin_deviation"] = rep.grid_argmin_deviation;
                j["grid_min_excess"] = rep.grid_min_excess;
                j["mc_max_z"] = rep.mc_max_z;
                j["ok"] = rep.ok;
                out << j.dump(2) << "\n";
            } else {
                out << "trials = " << rep.trials << "\n";
                print_kv(out, "max_argmin_deviation", rep.max_argmin_deviation);
                print_kv(out, "max_loss_deviation", rep.max_loss_deviation);
                print_kv(out, "grid_argmin_deviation", rep.grid_argmin_deviation);
                print_kv(out, "grid_min_excess", rep.grid_min_excess);
                print_kv(out, "mc_max_z", rep.mc_max_z);
                print_kv_bool(out, "ok", rep.ok);
            }
            if (!rep.ok) return 3;
        } else if (simulate->parsed()) {
            const ScenarioConfig cfg = load_and_override(common, err);
            const McEstimate est = mc_expected_loss(cfg.scenario(), sim_sE,
                                                    sim_n.value_or(cfg.mc.n),
                                                    sim_seed.value_or(cfg.mc.seed));
            if (common.json) {
                j["mean"] = est.mean;
                j["std_error"] = est.std_error;
                j["n"] = est.n;
                j["seed"] = est.seed;
                out << j.dump(2) << "\n";
            } else {
                print_kv(out, "mean", est.mean);
                print_kv(out, "std_error", est.std_error);
                out << "n = " << est.n << "\n";
                out << "seed = " << est.seed << "\n";
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace advicegame
