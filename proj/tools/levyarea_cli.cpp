#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "levyarea/area.hpp"
#include "levyarea/errors.hpp"
#include "levyarea/exponent.hpp"
#include "levyarea/inventory.hpp"
#include "levyarea/json_io.hpp"
#include "levyarea/series.hpp"
#include "levyarea/sim.hpp"
#include "levyarea/verify.hpp"

using namespace levyarea;
using nlohmann::json;

namespace {

struct Flags {
    std::string config;
    std::optional<double> x;
    std::optional<std::string> alpha_grid;
    std::optional<int> n;
    std::optional<std::uint64_t> reps;
    std::optional<std::uint64_t> seed;
    std::optional<double> scale;
    std::optional<double> horizon;
    std::string raw_csv;
    bool with_sim = false;
};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <class T>
T pick(const std::optional<T>& flag, const std::optional<T>& config, T fallback) {
    if (flag) return *flag;
    if (config) return *config;
    return fallback;
}

template <class T>
T require(const std::optional<T>& flag, const std::optional<T>& config, const char* name) {
    if (flag) return *flag;
    if (config) return *config;
    throw ConfigError(std::string("missing required parameter '") + name + "'");
}

json estimate_json(const SimEstimate& e) { return {{"value", e.value}, {"std_error", e.std_error}}; }

int cmd_exponent(const Flags& f, const RunConfig& cfg) {
    const int n = pick<int>(f.n, cfg.n, LaplaceExponent::kDefaultOrders);
    const LaplaceExponent exponent(cfg.process, n);
    const std::vector<double> grid = parse_grid(require(f.alpha_grid, cfg.alpha_grid, "alpha_grid"));
    std::cout << "alpha,phi,dphi\n";
    for (double a : grid) std::cout << num(a) << ',' << num(exponent(a)) << ',' << num(exponent.derivative(a)) << '\n';
    std::cout << "\nn,deriv0\n";
    for (int k = 1; k <= exponent.n_max(); ++k) std::cout << k << ',' << num(exponent.deriv0(k)) << '\n';
    return 0;
}

int cmd_lst(const Flags& f, const RunConfig& cfg) {
    const LaplaceExponent exponent(cfg.process);
    const double x = require(f.x, cfg.x, "x");
    const std::vector<double> grid = parse_grid(require(f.alpha_grid, cfg.alpha_grid, "alpha_grid"));
    if (!f.with_sim) {
        std::cout << "alpha,lst\n";
        for (double a : grid) std::cout << num(a) << ',' << num(lst_area(exponent, cfg.holding, x, a)) << '\n';
        return 0;
    }
    EstimateRequest request;
    request.n_reps = pick<std::uint64_t>(f.reps, cfg.reps, 10000);
    request.seed = pick<std::uint64_t>(f.seed, cfg.seed, 1);
    request.lst_alphas = grid;
    const EstimateResult r = estimate(cfg.process, cfg.holding, x, request);
    std::cout << "alpha,lst,mc_lst,se\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::cout << num(grid[i]) << ',' << num(lst_area(exponent, cfg.holding, x, grid[i])) << ','
                  << num(r.lst[i].second.value) << ',' << num(r.lst[i].second.std_error) << '\n';
    }
    return 0;
}

int cmd_moments(const Flags& f, const RunConfig& cfg) {
    const int n = require(f.n, cfg.n, "n");
    const LaplaceExponent exponent(cfg.process, std::clamp(n, 2, LaplaceExponent::kMaxOrders));
    const MomentTable m = moments_area(exponent, cfg.holding, require(f.x, cfg.x, "x"), n);
    std::cout << "k,c_k,mu_k\n";
    for (int k = 0; k <= n; ++k) std::cout << k << ',' << num(m.c[k]) << ',' << num(m.mu[k]) << '\n';
    return 0;
}

int cmd_simulate(const Flags& f, const RunConfig& cfg) {
    const double x = require(f.x, cfg.x, "x");
    EstimateRequest request;
    request.n_reps = pick<std::uint64_t>(f.reps, cfg.reps, 10000);
    request.seed = pick<std::uint64_t>(f.seed, cfg.seed, 1);
    const auto samples = sample_replications(cfg.process, cfg.holding, x, request.n_reps, request.seed);
    const EstimateResult r = summarize(samples, request);
    if (!f.raw_csv.empty()) {
        std::ofstream out(f.raw_csv, std::ios::binary);
        if (!out) throw ConfigError("cannot write " + f.raw_csv);
        write_samples_csv(out, samples);
    }
    json out = {{"x", x},
                {"reps", request.n_reps},
                {"seed", request.seed},
                {"mean_area", estimate_json(r.mean_area)},
                {"var_area", estimate_json(r.var_area)},
                {"mean_T", estimate_json(r.mean_T)},
                {"var_T", estimate_json(r.var_T)},
                {"corr_area_T", estimate_json(r.corr_area_T)}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_longrun(const Flags& f, const RunConfig& cfg) {
    const double x = require(f.x, cfg.x, "x");
    const double horizon = require(f.horizon, cfg.horizon, "horizon");
    const std::uint64_t seed = pick<std::uint64_t>(f.seed, cfg.seed, 1);
    const LongRunResult r = longrun_experiment(cfg.process, cfg.holding, x, horizon, seed);
    json out = {{"average", r.average.value},
                {"std_error", r.average.std_error},
                {"expected", longrun_average(cfg.holding, x)},
                {"cycles", r.cycles},
                {"elapsed", r.elapsed}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_clt(const Flags& f, const RunConfig& cfg) {
    const CltResult r = clt_experiment(cfg.process, cfg.holding, require(f.x, cfg.x, "x"),
                                       require(f.scale, cfg.scale, "scale"), pick<std::uint64_t>(f.reps, cfg.reps, 10000),
                                       pick<std::uint64_t>(f.seed, cfg.seed, 1));
    json out = {{"sample_mean", r.sample_mean.value},
                {"sample_var", r.sample_var.value},
                {"sample_var_se", r.sample_var.std_error},
                {"limit_var", r.limit_var},
                {"ks_distance", r.ks_distance},
                {"index", r.index}};
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_inventory(const RunConfig& cfg) {
    if (!cfg.inventory) throw ConfigError("config has no 'inventory' section");
    const InventoryConfig& inv = *cfg.inventory;
    const LaplaceExponent exponent(cfg.process, 2);
    const CostModel model(inv.setup_cost, cfg.holding, exponent, inv.reward);
    const OptimalOrder order = optimal_order(model);
    json out;
    out["bounded"] = order.bounded;
    if (order.bounded) {
        out["x_star"] = order.x_star;
        out["cost"] = order.cost;
        out["p_star"] = break_even_penalty(model);
        out["unimodal"] = order.unimodal;
    } else {
        out["x_star"] = nullptr;
        out["cost"] = nullptr;
        out["p_star"] = nullptr;
        out["cap"] = order.cap;
    }
    if (!inv.class_costs.empty()) {
        const MulticlassSolution m = multiclass_linear(inv.class_costs, inv.setup_cost, exponent.slope_at_zero());
        out["multiclass"] = {{"x", m.x}, {"proportions", m.proportions}, {"objective", m.objective},
                             {"unique", m.unique}};
    }
    std::cout << out.dump(2) << '\n';
    return 0;
}

int cmd_verify(const Flags& f, const RunConfig& cfg) {
    VerifyOptions options;
    options.x = pick<double>(f.x, cfg.x, 1.0);
    options.reps = pick<std::uint64_t>(f.reps, cfg.reps, options.reps);
    options.seed = pick<std::uint64_t>(f.seed, cfg.seed, options.seed);
    const auto results = run_verification(cfg.process, cfg.holding, options);
    int failed = 0;
    for (const auto& r : results) {
        if (r.status == CheckResult::Status::Fail) ++failed;
        std::cout << to_string(r.status) << ' ' << r.name << ": " << r.detail << '\n';
    }
    std::cout << (failed ? "verification failed: " : "verification passed: ") << failed << " of " << results.size()
              << " checks failed\n";
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Area law of reflected spectrally-positive Levy processes"};
    app.require_subcommand(1);
    Flags f;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", f.config, "JSON run configuration")->required();
        sub->add_option("--seed", f.seed, "Base seed of the random streams");
    };
    auto* exponent = app.add_subcommand("exponent", "phi and phi' on an alpha grid, derivatives at 0");
    add_common(exponent);
    exponent->add_option("--alpha-grid", f.alpha_grid, "start:stop:count");
    exponent->add_option("--n", f.n, "Number of derivatives at 0");

    auto* lst = app.add_subcommand("lst", "Laplace-Stieltjes transform of the area");
    add_common(lst);
    lst->add_option("--x", f.x, "Order level");
    lst->add_option("--alpha-grid", f.alpha_grid, "start:stop:count");
    lst->add_flag("--with-sim", f.with_sim, "Add Monte Carlo estimates");
    lst->add_option("--reps", f.reps, "Replications for --with-sim");

    auto* moments = app.add_subcommand("moments", "Moment coefficients and raw moments");
    add_common(moments);
    moments->add_option("--x", f.x, "Order level");
    moments->add_option("--n", f.n, "Highest moment");

    auto* simulate = app.add_subcommand("simulate", "Exact excursion sampling");
    add_common(simulate);
    simulate->add_option("--x", f.x, "Order level");
    simulate->add_option("--reps", f.reps, "Replications");
    simulate->add_option("--raw-csv", f.raw_csv, "Write per-replication samples here");

    auto* longrun = app.add_subcommand("longrun", "Regenerative time average");
    add_common(longrun);
    longrun->add_option("--x", f.x, "Order level");
    longrun->add_option("--horizon", f.horizon, "Simulated time");

    auto* clt = app.add_subcommand("clt", "Gaussian limit check at a finite scale");
    add_common(clt);
    clt->add_option("--x", f.x, "Level of the limit process");
    clt->add_option("--scale", f.scale, "Scale n");
    clt->add_option("--reps", f.reps, "Replications");

    auto* inventory = app.add_subcommand("inventory", "Optimal order size");
    add_common(inventory);

    auto* verify = app.add_subcommand("verify", "Cross-check analytic results against each other and simulation");
    add_common(verify);
    verify->add_option("--x", f.x, "Order level");
    verify->add_option("--reps", f.reps, "Replications");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const RunConfig cfg = load_run_config(f.config);
        if (*exponent) return cmd_exponent(f, cfg);
        if (*lst) return cmd_lst(f, cfg);
        if (*moments) return cmd_moments(f, cfg);
        if (*simulate) return cmd_simulate(f, cfg);
        if (*longrun) return cmd_longrun(f, cfg);
        if (*clt) return cmd_clt(f, cfg);
        if (*inventory) return cmd_inventory(cfg);
        if (*verify) return cmd_verify(f, cfg);
    } catch (const ConfigError& e) {
        std::cerr << "levyarea: " << e.what() << '\n';
        return 2;
    } catch (const InvalidParameter& e) {
        std::cerr << "levyarea: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "levyarea: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
