#include "levyarea/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "levyarea/area.hpp"
#include "levyarea/errors.hpp"
#include "levyarea/exponent.hpp"
#include "levyarea/inventory.hpp"
#include "levyarea/numdiff.hpp"
#include "levyarea/series.hpp"
#include "levyarea/sim.hpp"

namespace levyarea {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// Degenerate samples have zero standard error and must then hit the value.
double z_score(const SimEstimate& e, double exact) {
    const double diff = e.value - exact;
    if (std::abs(diff) <= 1e-12 * std::max(1.0, std::abs(exact))) return 0.0;
    return diff / e.std_error;
}

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Characteristic step for differentiating phi near 0: a fraction of the
// inverse jump scale.
double phi_step(const ProcessSpec& spec) {
    double scale = 1.0;
    if (spec.jump_rate > 0.0) scale = std::max(scale, spec.jumps->moment(2) / spec.jumps->moment(1));
    return 0.02 / scale;
}

class Checks {
public:
    void add(std::string name, bool ok, std::string detail) {
        results_.push_back({std::move(name), ok ? CheckResult::Status::Pass : CheckResult::Status::Fail,
                            std::move(detail)});
    }
    void skip(std::string name, std::string detail) {
        results_.push_back({std::move(name), CheckResult::Status::Skip, std::move(detail)});
    }
    // Runs `body`, converting library errors into a failed check.
    void guard(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            add(name, false, std::string("error: ") + e.what());
        }
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

void exponent_checks(Checks& checks, const LaplaceExponent& exponent) {
    const ProcessSpec& spec = exponent.spec();
    checks.guard("exponent.phi_zero", [&] {
        checks.add("exponent.phi_zero", exponent(0.0) == 0.0, fmt("phi(0) = %.17g", exponent(0.0)));
    });

    checks.guard("exponent.inverse_roundtrip", [&] {
        double worst = 0.0;
        bool monotone = true;
        double prev = -1.0;
        for (int i = 0; i <= 48; ++i) {
            const double theta = exponent.slope_at_zero() * std::pow(10.0, -6.0 + 12.0 * i / 48.0);
            const double alpha = exponent.inverse(theta);
            worst = std::max(worst, std::abs(exponent(alpha) - theta) / std::max(1.0, theta));
            if (!(alpha > prev)) monotone = false;
            prev = alpha;
        }
        checks.add("exponent.inverse_roundtrip", worst <= 1e-10, fmt("max scaled residual %.3e", worst));
        checks.add("exponent.inverse_monotone", monotone, "49-point log grid");
    });

    checks.guard("exponent.deriv0_fd", [&] {
        const double h = phi_step(spec);
        double worst = 0.0;
        for (int n = 1; n <= std::min(3, exponent.n_max()); ++n) {
            const double fd = forward_derivative([&](double a) { return exponent(a); }, n, 0.0, h / n, 5);
            const double exact = exponent.deriv0(n);
            const double gap = std::abs(fd - exact) / std::max(std::abs(exact), exponent.slope_at_zero());
            worst = std::max(worst, gap);
        }
        checks.add("exponent.deriv0_fd", worst <= 1e-5, fmt("max relative gap %.3e (orders 1..3)", worst));
    });

    checks.guard("exponent.convexity", [&] {
        bool ok = true;
        std::vector<double> grid;
        for (int i = 0; i <= 60; ++i) grid.push_back(i == 0 ? 0.0 : std::pow(10.0, -4.0 + 7.0 * i / 60.0));
        for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
            const double a = grid[i - 1], b = grid[i], c = grid[i + 1];
            const double chord = exponent(a) + (exponent(c) - exponent(a)) * (b - a) / (c - a);
            if (exponent(b) > chord + 1e-9 * std::max(1.0, std::abs(chord))) ok = false;
        }
        checks.add("exponent.convexity", ok, "chord test on [0, 1e3]");
    });
}

void inversion_checks(Checks& checks, const LaplaceExponent& exponent) {
    checks.guard("inversion.composition", [&] {
        const int n = exponent.n_max();
        const SeriesCoeffs a = exponent_taylor(exponent, n);
        const SeriesCoeffs b = revert_series(a, n);
        const SeriesCoeffs id = compose_series(a, b, n);
        double worst = std::abs(id[0] - 1.0);
        for (int k = 1; k < n; ++k) {
            // scale-free: compare against the size of the contributing terms
            double scale = 0.0;
            for (int j = 0; j <= k; ++j) scale = std::max(scale, std::abs(a[j]) * std::pow(std::abs(b[0]), j + 1));
            worst = std::max(worst, std::abs(id[k]) / std::max(scale, 1.0));
        }
        checks.add("inversion.composition", worst <= 1e-9, fmt("order %g, max defect %.3e", n, worst));
    });

    checks.guard("inversion.sign_pattern", [&] {
        const std::vector<double> d = inverse_derivs_at_zero(exponent, exponent.n_max());
        bool ok = true;
        for (std::size_t k = 0; k < d.size(); ++k) {
            const double signed_value = (k % 2 == 0 ? 1.0 : -1.0) * d[k];
            if (signed_value < -1e-9 * std::abs(d[k])) ok = false;
        }
        checks.add("inversion.sign_pattern", ok, "(-1)^(k-1) (phi^-1)^(k)(0) >= 0");
    });

    checks.guard("inversion.numdiff", [&] {
        const std::vector<double> d = inverse_derivs_at_zero(exponent, 2);
        const double h = phi_step(exponent.spec()) * exponent.slope_at_zero();
        double worst = 0.0;
        for (int k = 1; k <= 2; ++k) {
            const double fd = forward_derivative([&](double t) { return exponent.inverse(t); }, k, 0.0, h / k, 4);
            worst = std::max(worst, relative_gap(fd, d[k - 1]));
        }
        checks.add("inversion.numdiff", worst <= 1e-4, fmt("max relative gap %.3e (orders 1..2)", worst));
    });
}

void area_checks(Checks& checks, const LaplaceExponent& exponent, const HoldingFunction& h, double x) {
    const HoldingFunction one = HoldingFunction::constant(1.0);

    checks.guard("area.lst_validity", [&] {
        bool ok = lst_area(exponent, h, x, 0.0) == 1.0;
        double prev = 1.0;
        for (double alpha : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
            const double v = lst_area(exponent, h, x, alpha);
            if (!(v > 0.0 && v <= 1.0 && v <= prev)) ok = false;
            prev = v;
        }
        checks.add("area.lst_validity", ok, "values in (0,1], nonincreasing, 1 at alpha = 0");
    });

    checks.guard("area.lst_derivative", [&] {
        const double mean = mean_area(exponent, h, x);
        const MomentTable m = moments_area(exponent, h, x, 2);
        if (mean == 0.0) {
            checks.skip("area.lst_derivative", "h vanishes on [0, x]");
            return;
        }
        const double step = 0.05 / mean;
        auto lst = [&](double a) { return lst_area(exponent, h, x, a); };
        const double d1 = -forward_derivative(lst, 1, 0.0, step, 4);
        const double d2 = forward_derivative(lst, 2, 0.0, step / 2, 4);
        const double g1 = relative_gap(d1, mean);
        const double g2 = relative_gap(d2, m.mu[2]);
        checks.add("area.lst_derivative", g1 <= 1e-4 && g2 <= 1e-3,
                   fmt("mean gap %.3e, second moment gap %.3e", g1, g2));
    });

    checks.guard("area.moments_consistency", [&] {
        const MomentTable m = moments_area(exponent, h, x, std::min(exponent.n_max(), 6));
        const double mean = mean_area(exponent, h, x);
        const double var = var_area(exponent, h, x);
        const double g1 = mean == 0.0 ? std::abs(m.mu[1]) : relative_gap(m.mu[1], mean);
        const double g2 = relative_gap(m.mu[2], var + mean * mean);
        bool jensen = m.mu[2] >= m.mu[1] * m.mu[1] * (1.0 - 1e-12);
        bool positive = std::all_of(m.c.begin(), m.c.end(), [](double c) { return c >= 0.0; });
        checks.add("area.moments_consistency", g1 <= 1e-10 && (mean == 0.0 || g2 <= 1e-10) && jensen && positive,
                   fmt("mu1 gap %.3e, mu2 gap %.3e", g1, g2));
    });

    checks.guard("area.corr_process_independence", [&] {
        if (h.zero_on(x)) {
            checks.skip("area.corr_process_independence", "h vanishes on [0, x]");
            return;
        }
        if (exponent.hitting_time_variance_rate() == 0.0) {
            checks.skip("area.corr_process_independence", "hitting times are deterministic");
            return;
        }
        ProcessSpec reference;
        reference.drift = -1.0;
        reference.sigma2 = 1.0;
        const LaplaceExponent other(reference, 2);
        auto corr = [&](const LaplaceExponent& e) {
            return cov_area_T(e, h, x) / std::sqrt(var_area(e, h, x) * e.hitting_time_variance_rate() * x);
        };
        const double here = corr(exponent);
        const double there = corr(other);
        const double structural = corr_area(h, one, x);
        const bool ok = std::abs(here - there) <= 1e-9 && std::abs(here - structural) <= 1e-9;
        checks.add("area.corr_process_independence", ok, fmt("corr %.12f vs %.12f vs %.12f", here, there, structural));
    });

    checks.guard("area.two_level_additivity", [&] {
        const double y = 2.0 * x;
        const double mean = mean_two_level(exponent, h, x, y);
        const double expect = h(y - x) * x / exponent.slope_at_zero() + mean_area(exponent, h, y - x);
        const double var = var_two_level(exponent, h, x, y);
        const double hv = h(y - x);
        const double var_expect = hv * hv * exponent.hitting_time_variance_rate() * x + var_area(exponent, h, y - x);
        const double lst = lst_two_level(exponent, h, x, y, 0.5);
        const double lst_expect =
            std::exp(-exponent.inverse(0.5 * hv) * x) * lst_area(exponent, h, y - x, 0.5);
        const bool ok = relative_gap(mean, expect) <= 1e-12 && relative_gap(var, var_expect) <= 1e-12 &&
                        relative_gap(lst, lst_expect) <= 1e-9;
        checks.add("area.two_level_additivity", ok, fmt("mean %.10g, var %.10g, lst %.10g", mean, var, lst));
    });
}

void simulation_checks(Checks& checks, const ProcessSpec& spec, const LaplaceExponent& exponent,
                       const HoldingFunction& h, const VerifyOptions& options) {
    const double x = options.x;
    if (spec.sigma2 != 0.0) {
        for (const char* name : {"sim.moments", "sim.lst", "sim.corr", "sim.pathwise", "sim.longrun"}) {
            checks.skip(name, "exact path simulation needs sigma2 == 0");
        }
        return;
    }
    const double band = options.se_band;

    checks.guard("sim.moments", [&] {
        EstimateRequest request;
        request.n_reps = options.reps;
        request.seed = options.seed;
        request.workers = options.workers;
        request.lst_alphas = {0.25, 1.0};
        const EstimateResult r = estimate(spec, h, x, request);

        const double mean = mean_area(exponent, h, x);
        const double var = var_area(exponent, h, x);
        const double zm = z_score(r.mean_area, mean);
        const double zv = z_score(r.var_area, var);
        checks.add("sim.moments", std::abs(zm) <= band && std::abs(zv) <= band,
                   fmt("mean z = %.3f, variance z = %.3f", zm, zv));

        double worst = 0.0;
        for (const auto& [alpha, est] : r.lst) {
            const double exact = lst_area(exponent, h, x, alpha);
            worst = std::max(worst, std::abs(z_score(est, exact)));
        }
        checks.add("sim.lst", worst <= band, fmt("max |z| = %.3f over alpha in {0.25, 1}", worst));

        if (std::isnan(r.corr_area_T.value)) {
            checks.skip("sim.corr", "degenerate sample");
        } else {
            const double exact = corr_area(h, HoldingFunction::constant(1.0), x);
            const double gap = std::abs(r.corr_area_T.value - exact);
            checks.add("sim.corr", gap <= std::max(0.02, band * r.corr_area_T.std_error),
                       fmt("corr %.5f vs %.5f", r.corr_area_T.value, exact));
        }
    });

    checks.guard("sim.pathwise", [&] {
        double worst_area = 0.0;
        bool indicator = true;
        bool endpoint = true;
        for (std::size_t i = 0; i < 1000; ++i) {
            Philox4x32 rng(options.seed ^ 0x5bd1e995u, i);
            const PathRecord path = sample_excursion(spec, h, x, rng);
            const double scale = std::max(1.0, std::abs(path.area));
            worst_area = std::max(worst_area, std::abs(path.area - stieltjes_area(path, h)) / scale);
            if (std::abs(path.local_time(path.hitting_time) - x) > 1e-9 * std::max(1.0, x)) endpoint = false;
            const double end = std::isfinite(path.horizon) ? path.horizon : 2.0 * path.hitting_time;
            for (int k = 1; k <= 100; ++k) {
                const double t = end * k / 100.0;
                if (std::abs(t - path.hitting_time) < 1e-12 * end) continue;
                if ((path.hitting_time >= t) != (path.local_time(t) <= x)) indicator = false;
            }
        }
        checks.add("sim.pathwise", worst_area <= 1e-9 && indicator && endpoint,
                   fmt("max area gap %.3e; T_x >= t iff L(t) <= x: %d; L(T_x) = x: %d", worst_area, int(indicator), int(endpoint)));
    });

    checks.guard("sim.longrun", [&] {
        const double horizon = 3000.0 * exponent.hitting_time_mean(x);
        const LongRunResult r = longrun_experiment(spec, h, x, horizon, options.seed);
        const double expect = longrun_average(h, x);
        const double se = r.average.std_error;
        const bool ok = se > 0.0 ? std::abs(r.average.value - expect) <= band * se
                                 : std::abs(r.average.value - expect) <= 1e-12 * std::max(1.0, expect);
        checks.add("sim.longrun", ok, fmt("%.6f vs %.6f over %g cycles", r.average.value, expect,
                                          static_cast<double>(r.cycles)));
    });
}

void inventory_checks(Checks& checks, const LaplaceExponent& exponent, const HoldingFunction& h) {
    if (!h.nondecreasing()) {
        checks.skip("inventory.optimal_order", "holding function is not nondecreasing");
        return;
    }
    checks.guard("inventory.optimal_order", [&] {
        const CostModel model(1.0, h, exponent);
        const OptimalOrder order = optimal_order(model);
        if (!order.bounded) {
            // g must stay below K' up to the cap.
            checks.add("inventory.optimal_order", g_function(model, order.cap) < model.scaled_setup(),
                       fmt("unbounded, cap %.3g", order.cap));
            return;
        }
        bool inverse = true;
        for (int i = 0; i <= 100; ++i) {
            const double t = order.x_star * std::pow(10.0, -2.0 + 4.0 * i / 100.0);
            if ((g_function(model, t) >= model.scaled_setup()) != (t >= order.x_star)) inverse = false;
        }
        checks.add("inventory.optimal_order", order.unimodal && inverse,
                   fmt("x* = %.10g, cost = %.10g", order.x_star, order.cost));
    });
}

} // namespace

std::string to_string(CheckResult::Status status) {
    switch (status) {
    case CheckResult::Status::Pass:
        return "PASS";
    case CheckResult::Status::Fail:
        return "FAIL";
    case CheckResult::Status::Skip:
        return "SKIP";
    }
    return "?";
}

std::vector<CheckResult> run_verification(const ProcessSpec& spec, const HoldingFunction& h,
                                          const VerifyOptions& options) {
    Checks checks;
    const LaplaceExponent exponent(spec);
    exponent_checks(checks, exponent);
    inversion_checks(checks, exponent);
    area_checks(checks, exponent, h, options.x);
    simulation_checks(checks, spec, exponent, h, options);
    inventory_checks(checks, exponent, h);
    return checks.take();
}

} // namespace levyarea
