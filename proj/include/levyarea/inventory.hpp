#pragma once

#include <span>
#include <vector>

#include "levyarea/exponent.hpp"
#include "levyarea/holding.hpp"

namespace levyarea {

/// Ordering x units of secondary work at every idle epoch, with setup cost
/// K per order and holding cost h(content) per unit time.
class CostModel {
public:
    /// `slope_at_zero` is phi'(0) > 0. Throws InvalidParameter if K <= 0 or
    /// h is not nondecreasing.
    CostModel(double setup_cost, HoldingFunction h, double slope_at_zero, double reward = 0.0);
    CostModel(double setup_cost, HoldingFunction h, const LaplaceExponent& exponent, double reward = 0.0);

    double setup_cost() const noexcept { return setup_cost_; }
    const HoldingFunction& holding() const noexcept { return h_; }
    double slope_at_zero() const noexcept { return slope_; }
    double reward() const noexcept { return reward_; }

    /// K' = phi'(0) K.
    double scaled_setup() const noexcept { return slope_ * setup_cost_; }

private:
    double setup_cost_;
    HoldingFunction h_;
    double slope_;
    double reward_;
};

/// Long-run average cost (phi'(0) K + int_0^x h) / x.
double average_cost(const CostModel& model, double x);

/// g(x) = x h(x) - int_0^x h; nondecreasing with g(0) = 0.
double g_function(const CostModel& model, double x);

struct OrderSearchOptions {
    /// g(x) < K' at this level means no finite minimiser.
    double x_cap = 1e12;
    int grid_points = 1000;
    double grid_tolerance = 1e-9;
};

struct OptimalOrder {
    bool bounded = false;
    double x_star = 0.0;
    double cost = 0.0;
    /// Largest level searched when unbounded.
    double cap = 0.0;
    /// Cost nonincreasing left of x* and nondecreasing right of it on a log grid.
    bool unimodal = false;
};

/// x* = inf{x : g(x) >= K'} by bracket doubling and bisection to adjacent doubles.
OptimalOrder optimal_order(const CostModel& model, const OrderSearchOptions& options = {});

/// p* = (K + int_0^{x*} h / phi'(0)) / x* - r. Throws UnboundedUpstream.
double break_even_penalty(const CostModel& model, const OrderSearchOptions& options = {});

struct MulticlassSolution {
    double x = 0.0;
    std::vector<double> proportions;
    double objective = 0.0;
    /// More than one class attains the minimal cost.
    bool unique = true;
};

/// Linear holding costs c_i t per class. Mass goes to the cheapest class;
/// ties share it uniformly.
MulticlassSolution multiclass_linear(std::span<const double> costs, double setup_cost, double slope_at_zero);

/// phi'(0) K / x + sum_i (int_0^{p_i} h_i(x s) ds + F_{i-1} h_i(p_i x)), F_j = p_1 + ... + p_j.
/// Throws BadProportions unless p >= 0 and |sum p - 1| <= 1e-12.
double multiclass_cost(std::span<const HoldingFunction> holdings, std::span<const double> proportions, double x,
                       double setup_cost, double slope_at_zero);

/// Closed form of multiclass_cost for h_i(t) = c_i t.
double multiclass_linear_cost(std::span<const double> costs, std::span<const double> proportions, double x,
                              double setup_cost, double slope_at_zero);

struct FixedProportionOrder {
    bool convex = false;
    OptimalOrder order;
};

/// Optimal total order for fixed class proportions. The content cost
/// H(x) = sum_i (int_0^{p_i x} h_i + F_{i-1} x h_i(p_i x)) is checked for
/// convexity on a log grid first; when the check fails `convex` is false
/// and no order is computed.
FixedProportionOrder optimal_order_fixed_proportions(std::span<const HoldingFunction> holdings,
                                                     std::span<const double> proportions, double setup_cost,
                                                     double slope_at_zero, const OrderSearchOptions& options = {});

} // namespace levyarea
