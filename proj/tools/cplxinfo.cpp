// cplxinfo - phase-modulated information measures for 1-D distributions.
//
// Subcommands: ce, cd, cm, tv, asymptotic-ce, twosample, table2.
// Every run echoes its fully resolved configuration; numeric output is fixed
// at 9 significant digits so regression diffs stay stable. Output on stdout is
// byte-reproducible for a fixed seed (timing goes to stderr).

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cplxinfo/asymptotics.hpp"
#include "cplxinfo/comparison.hpp"
#include "cplxinfo/dist_spec.hpp"
#include "cplxinfo/distributions.hpp"
#include "cplxinfo/entropy.hpp"
#include "cplxinfo/sample_io.hpp"
#include "cplxinfo/twosample.hpp"

namespace {

using cplxinfo::Distribution;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitReject = 3;

std::string num9(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

double round_sig9(double v) {
    if (!std::isfinite(v)) return v;
    return std::strtod(num9(v).c_str(), nullptr);
}

// Key/value report rendered as aligned text or a single JSON object.
class Report {
public:
    void add(const std::string& key, const std::string& v) {
        rows_.emplace_back(key, v);
        obj_[key] = v;
    }
    void add(const std::string& key, double v) {
        rows_.emplace_back(key, num9(v));
        if (std::isfinite(v))
            obj_[key] = round_sig9(v);
        else
            obj_[key] = nullptr; // JSON has no inf/nan
    }
    void add(const std::string& key, bool v) {
        rows_.emplace_back(key, v ? "true" : "false");
        obj_[key] = v;
    }
    void add(const std::string& key, std::uint64_t v) {
        rows_.emplace_back(key, std::to_string(v));
        obj_[key] = v;
    }
    void add_json(const std::string& key, const nlohmann::json& v) {
        rows_.emplace_back(key, v.dump());
        obj_[key] = json(v);
    }

    void print(bool as_json) const {
        if (as_json) {
            std::cout << obj_.dump(2) << "\n";
            return;
        }
        std::size_t width = 0;
        for (const auto& [k, v] : rows_) width = std::max(width, k.size());
        for (const auto& [k, v] : rows_)
            std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    }

private:
    std::vector<std::pair<std::string, std::string>> rows_;
    json obj_;
};

std::optional<double> parse_auto_or_number(const std::string& text, const char* what) {
    if (text == "auto") return std::nullopt;
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos != text.size())
        throw cplxinfo::ValidationError(std::string(what) + " must be 'auto' or a number");
    return v;
}

std::string method_name(cplxinfo::CeMethod m) {
    switch (m) {
        case cplxinfo::CeMethod::ExactSum: return "exact-sum";
        case cplxinfo::CeMethod::Quadrature: return "quadrature";
        case cplxinfo::CeMethod::MonteCarlo: return "monte-carlo";
    }
    return "?";
}

// --- ce -------------------------------------------------------------------

struct CeArgs {
    std::string dist;
    double beta = 1.0;
    std::string method = "quad";
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
    std::string degenerate = "one";
    bool as_json = false;
};

int run_ce(const CeArgs& a) {
    const Distribution dist = cplxinfo::parse_distribution(a.dist);
    const auto degenerate = a.degenerate == "zero" ? cplxinfo::DegenerateCe::Zero
                                                   : cplxinfo::DegenerateCe::One;
    cplxinfo::CeEstimate est;
    if (a.method == "mc") {
        est = cplxinfo::ce_monte_carlo(dist, a.beta, a.samples, a.seed);
    } else if (std::holds_alternative<cplxinfo::DiscretePmf>(dist)) {
        est = cplxinfo::ce_discrete(std::get<cplxinfo::DiscretePmf>(dist), a.beta, degenerate);
    } else {
        est = cplxinfo::ce_quadrature(std::get<cplxinfo::Density>(dist), a.beta);
    }

    Report r;
    r.add("command", std::string("ce"));
    r.add_json("dist", cplxinfo::distribution_to_json(dist));
    r.add("beta", a.beta);
    r.add("method", method_name(est.method));
    if (est.method == cplxinfo::CeMethod::MonteCarlo) {
        r.add("samples", static_cast<std::uint64_t>(*est.n_samples));
        r.add("seed", *est.seed);
    }
    if (std::holds_alternative<cplxinfo::DiscretePmf>(dist))
        r.add("degenerate_ce", a.degenerate);
    r.add("value", est.value);
    if (est.est_stderr)
        r.add("stderr", *est.est_stderr);
    else
        r.add_json("stderr", nullptr);
    r.print(a.as_json);
    return kExitOk;
}

// --- cd / cm / tv -----------------------------------------------------------

struct PairArgs {
    std::string p, q;
    double beta = 1.0;
    bool as_json = false;
};

int run_cd(const PairArgs& a) {
    const Distribution p = cplxinfo::parse_distribution(a.p);
    const Distribution q = cplxinfo::parse_distribution(a.q);
    const auto res = cplxinfo::cd(p, q, a.beta);
    Report r;
    r.add("command", std::string("cd"));
    r.add_json("p", cplxinfo::distribution_to_json(p));
    r.add_json("q", cplxinfo::distribution_to_json(q));
    r.add("beta", res.beta);
    r.add("value", res.value);
    r.add("amplitude_modulus", res.amplitude_modulus);
    r.add("infinite", res.infinite);
    r.print(a.as_json);
    return kExitOk;
}

int run_cm(const PairArgs& a) {
    const Distribution p = cplxinfo::parse_distribution(a.p);
    const Distribution q = cplxinfo::parse_distribution(a.q);
    const auto res = cplxinfo::cm(p, q, a.beta);
    Report r;
    r.add("command", std::string("cm"));
    r.add_json("p", cplxinfo::distribution_to_json(p));
    r.add_json("q", cplxinfo::distribution_to_json(q));
    r.add("beta", res.beta);
    r.add("value", res.value);
    r.print(a.as_json);
    return kExitOk;
}

int run_tv(const PairArgs& a) {
    const Distribution p = cplxinfo::parse_distribution(a.p);
    const Distribution q = cplxinfo::parse_distribution(a.q);
    Report r;
    r.add("command", std::string("tv"));
    r.add_json("p", cplxinfo::distribution_to_json(p));
    r.add_json("q", cplxinfo::distribution_to_json(q));
    r.add("value", cplxinfo::tv(p, q));
    r.print(a.as_json);
    return kExitOk;
}

// --- asymptotic-ce ----------------------------------------------------------

struct AsymArgs {
    double sigma = 1.0;
    double beta = 1.0;
    bool as_json = false;
};

int run_asymptotic(const AsymArgs& a) {
    const auto res = cplxinfo::gaussian_ce_asymptotic(a.sigma, a.beta);
    Report r;
    r.add("command", std::string("asymptotic-ce"));
    r.add("sigma", a.sigma);
    r.add("beta", a.beta);
    r.add("value", res.value);
    r.add("lambda", res.lambda);
    r.add("regime_ok", res.regime_ok);
    r.print(a.as_json);
    return kExitOk;
}

// --- twosample ---------------------------------------------------------------

struct TwoSampleArgs {
    std::string x_path, y_path;
    std::string beta = "auto";
    int permutations = 1000;
    std::uint64_t seed = 42;
    double alpha = 0.05;
    bool discrete = false;
    std::string bandwidth = "auto";
    int grid = 512;
    std::string null_out;
    bool as_json = false;
};

int run_twosample(const TwoSampleArgs& a) {
    const cplxinfo::SampleSet x = cplxinfo::load_samples(a.x_path, a.x_path);
    const cplxinfo::SampleSet y = cplxinfo::load_samples(a.y_path, a.y_path);

    cplxinfo::PermTestConfig cfg;
    cfg.beta = parse_auto_or_number(a.beta, "--beta");
    cfg.permutations = a.permutations;
    cfg.seed = a.seed;
    cfg.alpha = a.alpha;
    cfg.discrete_mode = a.discrete;
    cfg.kde.bandwidth = parse_auto_or_number(a.bandwidth, "--bandwidth");
    cfg.kde.grid_points = a.grid;

    const auto res = cplxinfo::perm_test(x, y, cfg);

    if (!a.null_out.empty()) {
        std::ofstream out(a.null_out);
        if (!out) throw cplxinfo::ValidationError("cannot write '" + a.null_out + "'");
        out << "t_perm\n";
        for (double t : res.t_perm) out << num9(t) << "\n";
    }

    Report r;
    r.add("command", std::string("twosample"));
    r.add("x", a.x_path + " (n=" + std::to_string(res.m) + ")");
    r.add("y", a.y_path + " (n=" + std::to_string(res.n) + ")");
    r.add("mode", std::string(a.discrete ? "discrete" : "kde"));
    if (!a.discrete) {
        r.add("bandwidth", res.bandwidth_used);
        r.add("grid", static_cast<std::uint64_t>(a.grid));
    }
    r.add("beta", res.beta_used);
    r.add("permutations", static_cast<std::uint64_t>(a.permutations));
    r.add("seed", res.seed);
    r.add("alpha", a.alpha);
    r.add("t_obs", res.t_obs);
    r.add("p_value", res.p_value);
    r.add("p_value_adjusted", res.p_value_adjusted);
    r.add("reject", res.reject);
    if (!a.null_out.empty())
        r.add("null_out", a.null_out);
    r.print(a.as_json);
    std::cerr << "elapsed " << res.elapsed_seconds << "s\n";
    return res.reject ? kExitReject : kExitOk;
}

// --- table2 -------------------------------------------------------------------

struct Table2Args {
    std::size_t samples = 1000;
    std::uint64_t seed = 5;
    bool as_json = false;
};

int run_table2(const Table2Args& a) {
    if (a.samples < 100)
        throw cplxinfo::ValidationError("table2 needs --samples >= 100");
    static const double kBetas[] = {0.01, 0.1, 0.5, 1, 2, 5, 10};
    static const double kSigmas[] = {0.01, 0.1, 1, 10, 50, 100};

    json rows = json::array();
    std::string csv = "# cplxinfo table2 samples=" + std::to_string(a.samples) +
                      " seed=" + std::to_string(a.seed) + "\n";
    csv += "beta,sigma,ce_mc,ce_mc_stderr,ce_quadrature\n";
    std::size_t cell = 0;
    for (double beta : kBetas)
        for (double sigma : kSigmas) {
            const cplxinfo::Density d(cplxinfo::Normal{0.0, sigma});
            const auto mc =
                cplxinfo::ce_monte_carlo(d, beta, a.samples, cplxinfo::derive_seed(a.seed, cell));
            const auto quad = cplxinfo::ce_quadrature(d, beta);
            csv += num9(beta) + "," + num9(sigma) + "," + num9(mc.value) + "," +
                   num9(*mc.est_stderr) + "," + num9(quad.value) + "\n";
            rows.push_back({{"beta", beta},
                            {"sigma", sigma},
                            {"ce_mc", round_sig9(mc.value)},
                            {"ce_mc_stderr", round_sig9(*mc.est_stderr)},
                            {"ce_quadrature", round_sig9(quad.value)}});
            ++cell;
        }

    if (a.as_json) {
        json out;
        out["command"] = "table2";
        out["samples"] = a.samples;
        out["seed"] = a.seed;
        out["rows"] = std::move(rows);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << csv;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase-modulated information measures for 1-D distributions"};
    app.require_subcommand(1);

    CeArgs ce_args;
    auto* ce = app.add_subcommand("ce", "entropy of one distribution");
    ce->add_option("--dist", ce_args.dist, "distribution: JSON spec, shorthand, or file")
        ->required();
    ce->add_option("--beta", ce_args.beta, "phase sensitivity (> 0)")->required();
    ce->add_option("--method", ce_args.method, "quad (exact-sum for PMFs) or mc")
        ->check(CLI::IsMember({"quad", "mc"}));
    ce->add_option("--samples", ce_args.samples, "Monte-Carlo sample count");
    ce->add_option("--seed", ce_args.seed, "Monte-Carlo seed");
    ce->add_option("--degenerate-ce", ce_args.degenerate,
                   "value for single-point PMFs: one (uniform reading) or zero")
        ->check(CLI::IsMember({"one", "zero"}));
    ce->add_flag("--json", ce_args.as_json, "emit one JSON object");

    PairArgs cd_args;
    auto* cdc = app.add_subcommand(
        "cd", "divergence of p from q (note: 0 whenever p - q is constant on supp p, "
              "e.g. uniform(0,1) against uniform(0,2))");
    cdc->add_option("--p", cd_args.p, "first distribution spec")->required();
    cdc->add_option("--q", cd_args.q, "second distribution spec")->required();
    cdc->add_option("--beta", cd_args.beta, "phase sensitivity (> 0)")->required();
    cdc->add_flag("--json", cd_args.as_json, "emit one JSON object");

    PairArgs cm_args;
    auto* cmc = app.add_subcommand("cm", "metric distance between p and q");
    cmc->add_option("--p", cm_args.p, "first distribution spec")->required();
    cmc->add_option("--q", cm_args.q, "second distribution spec")->required();
    cmc->add_option("--beta", cm_args.beta, "phase sensitivity (>= 0; 0 gives TV)")->required();
    cmc->add_flag("--json", cm_args.as_json, "emit one JSON object");

    PairArgs tv_args;
    auto* tvc = app.add_subcommand("tv", "total variation distance between p and q");
    tvc->add_option("--p", tv_args.p, "first distribution spec")->required();
    tvc->add_option("--q", tv_args.q, "second distribution spec")->required();
    tvc->add_flag("--json", tv_args.as_json, "emit one JSON object");

    AsymArgs asym_args;
    auto* asym = app.add_subcommand("asymptotic-ce",
                                    "stationary-phase entropy reference for Normal(0, sigma)");
    asym->add_option("--sigma", asym_args.sigma, "standard deviation (> 0)")->required();
    asym->add_option("--beta", asym_args.beta, "phase sensitivity (> 0)")->required();
    asym->add_flag("--json", asym_args.as_json, "emit one JSON object");

    TwoSampleArgs ts_args;
    auto* ts = app.add_subcommand("twosample",
                                  "permutation two-sample test (exit 3 when H0 is rejected)");
    ts->add_option("--x", ts_args.x_path, "first sample file (values or CSV)")->required();
    ts->add_option("--y", ts_args.y_path, "second sample file")->required();
    ts->add_option("--beta", ts_args.beta, "phase sensitivity: auto (1/median) or a number");
    ts->add_option("--permutations", ts_args.permutations, "permutation count (>= 100)");
    ts->add_option("--seed", ts_args.seed, "permutation seed");
    ts->add_option("--alpha", ts_args.alpha, "significance level");
    ts->add_flag("--discrete", ts_args.discrete, "empirical PMFs instead of KDE");
    ts->add_option("--bandwidth", ts_args.bandwidth, "KDE bandwidth: auto (Silverman) or a number");
    ts->add_option("--grid", ts_args.grid, "KDE grid points (>= 64)");
    ts->add_option("--null-out", ts_args.null_out, "write permuted statistics to this CSV");
    ts->add_flag("--json", ts_args.as_json, "emit one JSON object");

    Table2Args t2_args;
    auto* t2 = app.add_subcommand("table2",
                                  "entropy of Normal(0, sigma) over a beta x sigma grid (CSV)");
    t2->add_option("--samples", t2_args.samples, "Monte-Carlo sample count (>= 100)");
    t2->add_option("--seed", t2_args.seed, "base seed; cell k uses derive_seed(seed, k)");
    t2->add_flag("--json", t2_args.as_json, "emit one JSON object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (ce->parsed()) return run_ce(ce_args);
        if (cdc->parsed()) return run_cd(cd_args);
        if (cmc->parsed()) return run_cm(cm_args);
        if (tvc->parsed()) return run_tv(tv_args);
        if (asym->parsed()) return run_asymptotic(asym_args);
        if (ts->parsed()) return run_twosample(ts_args);
        if (t2->parsed()) return run_table2(t2_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
