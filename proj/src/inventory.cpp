#include "levyarea/inventory.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "levyarea/errors.hpp"

namespace levyarea {

namespace {

void check_proportions(std::span<const double> p) {
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0)) throw BadProportions("proportions must be non-negative");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12) throw BadProportions("proportions sum to " + std::to_string(sum));
}

// Generalised inverse inf{x : g(x) >= target} of a nondecreasing g with g(0) < target.
OptimalOrder search(const std::function<double(double)>& g, const std::function<double(double)>& cost,
                    double target, const OrderSearchOptions& options) {
    OptimalOrder result;
    double lo = 0.0;
    double hi = 1.0;
    while (g(hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > options.x_cap) {
            result.bounded = false;
            result.cap = options.x_cap;
            return result;
        }
    }
    while (true) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        if (g(mid) >= target) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    result.bounded = true;
    result.x_star = hi;
    result.cost = cost(hi);

    // Log grid over [x*/1e3, 1e3 x*], split at x*.
    const int n = options.grid_points;
    const double tol = options.grid_tolerance;
    bool ok = true;
    double prev_left = INFINITY;
    double prev_right = -INFINITY;
    for (int i = 0; i < n; ++i) {
        const double u = static_cast<double>(i) / (n - 1);
        const double left = hi * std::pow(10.0, -3.0 + 3.0 * u);
        const double right = hi * std::pow(10.0, 3.0 * u);
        const double cl = cost(left);
        const double cr = cost(right);
        if (cl > prev_left + tol * std::max(1.0, std::abs(prev_left))) ok = false;
        if (cr < prev_right - tol * std::max(1.0, std::abs(prev_right))) ok = false;
        prev_left = cl;
        prev_right = cr;
    }
    result.unimodal = ok;
    return result;
}

} // namespace

CostModel::CostModel(double setup_cost, HoldingFunction h, double slope_at_zero, double reward)
    : setup_cost_(setup_cost), h_(std::move(h)), slope_(slope_at_zero), reward_(reward) {
    if (!(setup_cost_ > 0.0)) throw InvalidParameter("setup cost K must be > 0");
    if (!(slope_ > 0.0)) throw InvalidParameter("phi'(0) must be > 0");
    if (!h_.nondecreasing()) throw InvalidParameter("holding cost must be nondecreasing");
}

CostModel::CostModel(double setup_cost, HoldingFunction h, const LaplaceExponent& exponent, double reward)
    : CostModel(setup_cost, std::move(h), exponent.slope_at_zero(), reward) {}

double average_cost(const CostModel& model, double x) {
    if (!(x > 0.0)) throw DomainError("order size must be > 0");
    return (model.scaled_setup() + model.holding().integral(x)) / x;
}

double g_function(const CostModel& model, double x) {
    if (!(x >= 0.0)) throw DomainError("order size must be >= 0");
    const HoldingFunction& h = model.holding();
    return x * h(x) - h.integral(x);
}

OptimalOrder optimal_order(const CostModel& model, const OrderSearchOptions& options) {
    return search([&](double x) { return g_function(model, x); }, [&](double x) { return average_cost(model, x); },
                  model.scaled_setup(), options);
}

double break_even_penalty(const CostModel& model, const OrderSearchOptions& options) {
    const OptimalOrder order = optimal_order(model, options);
    if (!order.bounded) throw UnboundedUpstream("no finite optimal order size");
    const double x = order.x_star;
    return (model.setup_cost() + model.holding().integral(x) / model.slope_at_zero()) / x - model.reward();
}

MulticlassSolution multiclass_linear(std::span<const double> costs, double setup_cost, double slope_at_zero) {
    if (costs.empty()) throw DomainError("need at least one class");
    for (double c : costs) {
        if (!(c > 0.0)) throw InvalidParameter("class costs must be > 0");
    }
    if (!(setup_cost > 0.0) || !(slope_at_zero > 0.0)) throw InvalidParameter("need K > 0 and phi'(0) > 0");
    const double c = *std::min_element(costs.begin(), costs.end());
    const auto ties = std::count(costs.begin(), costs.end(), c);

    MulticlassSolution s;
    s.x = std::sqrt(2.0 * slope_at_zero * setup_cost / c);
    s.unique = ties == 1;
    s.proportions.resize(costs.size(), 0.0);
    for (std::size_t i = 0; i < costs.size(); ++i) {
        if (costs[i] == c) s.proportions[i] = 1.0 / static_cast<double>(ties);
    }
    s.objective = multiclass_linear_cost(costs, s.proportions, s.x, setup_cost, slope_at_zero);
    return s;
}

double multiclass_cost(std::span<const HoldingFunction> holdings, std::span<const double> proportions, double x,
                       double setup_cost, double slope_at_zero) {
    if (holdings.size() != proportions.size()) throw DomainError("one proportion per class");
    if (!(x > 0.0)) throw DomainError("order size must be > 0");
    check_proportions(proportions);
    double total = slope_at_zero * setup_cost / x;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < holdings.size(); ++i) {
        const double p = proportions[i];
        // int_0^p h(x s) ds = (1/x) int_0^{p x} h
        total += holdings[i].integral(p * x) / x + cumulative * holdings[i](p * x);
        cumulative += p;
    }
    return total;
}

double multiclass_linear_cost(std::span<const double> costs, std::span<const double> proportions, double x,
                              double setup_cost, double slope_at_zero) {
    if (costs.size() != proportions.size()) throw DomainError("one proportion per class");
    if (!(x > 0.0)) throw DomainError("order size must be > 0");
    check_proportions(proportions);
    double sum = 0.0;
    double prev = 0.0;
    for (std::size_t i = 0; i < costs.size(); ++i) {
        const double next = prev + proportions[i];
        sum += (next * next - prev * prev) * costs[i];
        prev = next;
    }
    return slope_at_zero * setup_cost / x + 0.5 * x * sum;
}

FixedProportionOrder optimal_order_fixed_proportions(std::span<const HoldingFunction> holdings,
                                                     std::span<const double> proportions, double setup_cost,
                                                     double slope_at_zero, const OrderSearchOptions& options) {
    if (holdings.size() != proportions.size()) throw DomainError("one proportion per class");
    check_proportions(proportions);
    if (!(setup_cost > 0.0) || !(slope_at_zero > 0.0)) throw InvalidParameter("need K > 0 and phi'(0) > 0");
    for (const auto& h : holdings) {
        if (!h.nondecreasing()) throw InvalidParameter("holding costs must be nondecreasing");
    }

    auto content = [&](double x) {
        double total = 0.0;
        double cumulative = 0.0;
        for (std::size_t i = 0; i < holdings.size(); ++i) {
            const double p = proportions[i];
            total += holdings[i].integral(p * x) + cumulative * x * holdings[i](p * x);
            cumulative += p;
        }
        return total;
    };
    // Right derivative of H.
    auto density = [&](double x) {
        double total = 0.0;
        double cumulative = 0.0;
        for (std::size_t i = 0; i < holdings.size(); ++i) {
            const double p = proportions[i];
            const double hv = holdings[i](p * x);
            total += p * hv + cumulative * (hv + x * p * holdings[i].right_derivative(p * x));
            cumulative += p;
        }
        return total;
    };

    FixedProportionOrder out;
    // Convexity: nondecreasing slopes of H on a log grid over [1e-6, 1e6].
    out.convex = true;
    double prev_slope = -INFINITY;
    const int n = options.grid_points;
    double prev_x = 1e-6;
    double prev_h = content(prev_x);
    for (int i = 1; i < n; ++i) {
        const double x = std::pow(10.0, -6.0 + 12.0 * i / (n - 1.0));
        const double hx = content(x);
        const double slope = (hx - prev_h) / (x - prev_x);
        if (slope < prev_slope - 1e-9 * std::max(1.0, std::abs(prev_slope))) out.convex = false;
        prev_slope = slope;
        prev_x = x;
        prev_h = hx;
    }
    if (!out.convex) return out;

    const double target = slope_at_zero * setup_cost;
    out.order = search([&](double x) { return x * density(x) - content(x); },
                       [&](double x) { return (target + content(x)) / x; }, target, options);
    return out;
}

} // namespace levyarea
