#include "advicegame/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace advicegame {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

double number_at(const json& obj, const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number()) bad("'" + key + "' must be a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) bad("'" + key + "' must be finite");
    return x;
}

std::int64_t integer_at(const json& obj, const std::string& key) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) bad("'" + key + "' must be an integer");
    return v.get<std::int64_t>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key()))
            bad("unknown key '" + item.key() + "'" + (where.empty() ? "" : " in " + where));
    }
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        // nlohmann reports line and column in the message; keep it intact.
        bad(e.what());
    }
    if (!doc.is_object()) bad("top-level document must be an object");

    reject_unknown_keys(doc,
                        {"mu0", "rE", "rP", "sigma0_sq", "sigmaE_sq", "sigmaP_sq",
                         "uninformative_prior", "p", "r", "sP", "trust", "sweep", "mc"},
                        "");

    const bool has_ratios = doc.contains("rE") || doc.contains("rP");
    const bool has_variances =
        doc.contains("sigma0_sq") || doc.contains("sigmaE_sq") || doc.contains("sigmaP_sq");
    if (has_ratios && has_variances)
        bad("belief weights are double-parameterized; give either rE/rP or the sigma*_sq "
            "triple, not both");
    if (!has_ratios && !has_variances)
        bad("belief weights are missing; give rE/rP or the sigma*_sq triple");

    ScenarioConfig cfg;
    if (has_ratios) {
        if (!doc.contains("rE")) bad("'rE' is required alongside 'rP'");
        if (!doc.contains("rP")) bad("'rP' is required alongside 'rE'");
        cfg.beliefs.rE = number_at(doc, "rE");
        cfg.beliefs.rP = number_at(doc, "rP");
    } else {
        for (const char* key : {"sigma0_sq", "sigmaE_sq", "sigmaP_sq"})
            if (!doc.contains(key)) bad(std::string("'") + key + "' is required for the "
                                        "variance parameterization");
        VariancePrior v;
        v.sigma0_sq = number_at(doc, "sigma0_sq");
        v.sigmaE_sq = number_at(doc, "sigmaE_sq");
        v.sigmaP_sq = number_at(doc, "sigmaP_sq");
        cfg.beliefs = from_variances(v);
    }
    if (doc.contains("mu0")) cfg.beliefs.mu0 = number_at(doc, "mu0");
    if (doc.contains("uninformative_prior")) {
        const json& v = doc.at("uninformative_prior");
        if (!v.is_boolean()) bad("'uninformative_prior' must be a boolean");
        cfg.beliefs.uninformative_prior = v.get<bool>();
    }
    validate(cfg.beliefs);

    if (doc.contains("p")) cfg.p = number_at(doc, "p");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) bad("'p' must lie in [0, 1]");
    if (doc.contains("r")) cfg.r = number_at(doc, "r");
    if (doc.contains("sP")) cfg.sP = number_at(doc, "sP");

    if (doc.contains("trust")) {
        const json& t = doc.at("trust");
        if (!t.is_object()) bad("'trust' must be an object");
        reject_unknown_keys(t, {"rE_high", "cost"}, "'trust'");
        for (const char* key : {"rE_high", "cost"})
            if (!t.contains(key)) bad(std::string("'trust' needs '") + key + "'");
        TrustConfig tc{number_at(t, "rE_high"), number_at(t, "cost")};
        if (!(tc.rE_high > cfg.beliefs.rE)) bad("'trust.rE_high' must exceed rE");
        if (!(tc.cost >= 0.0)) bad("'trust.cost' must be >= 0");
        cfg.trust = tc;
    }

    if (doc.contains("sweep")) {
        const json& s = doc.at("sweep");
        if (!s.is_object()) bad("'sweep' must be an object");
        reject_unknown_keys(s, {"param", "from", "to", "steps", "quantity"}, "'sweep'");
        for (const char* key : {"param", "from", "to", "steps", "quantity"})
            if (!s.contains(key)) bad(std::string("'sweep' needs '") + key + "'");
        SweepConfig sc{};
        const json& pv = s.at("param");
        if (!pv.is_string()) bad("'sweep.param' must be a string");
        if (auto p = sweep_param_from(pv.get<std::string>())) {
            sc.param = *p;
        } else {
            bad("'sweep.param' must be one of p, t, rE, rP");
        }
        const json& qv = s.at("quantity");
        if (!qv.is_string()) bad("'sweep.quantity' must be a string");
        if (auto q = sweep_quantity_from(qv.get<std::string>())) {
            sc.quantity = *q;
        } else {
            bad("'sweep.quantity' must be one of delta, loss, threshold");
        }
        sc.from = number_at(s, "from");
        sc.to = number_at(s, "to");
        sc.steps = integer_at(s, "steps");
        cfg.sweep = sc;
    }

    if (doc.contains("mc")) {
        const json& m = doc.at("mc");
        if (!m.is_object()) bad("'mc' must be an object");
        reject_unknown_keys(m, {"n", "seed"}, "'mc'");
        if (m.contains("n")) {
            cfg.mc.n = integer_at(m, "n");
            if (cfg.mc.n < 2) bad("'mc.n' must be >= 2");
        }
        if (m.contains("seed")) {
            const json& v = m.at("seed");
            if (!v.is_number_integer()) bad("'mc.seed' must be an integer");
            if (v.is_number_unsigned()) {
                cfg.mc.seed = v.get<std::uint64_t>();
            } else {
                const std::int64_t sv = v.get<std::int64_t>();
                if (sv < 0) bad("'mc.seed' must be >= 0");
                cfg.mc.seed = static_cast<std::uint64_t>(sv);
            }
        }
    }

    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_config(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + " [" + path + "]");
    }
}

}  // namespace advicegame
