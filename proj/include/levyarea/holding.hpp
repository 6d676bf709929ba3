#pragma once

#include <utility>
#include <variant>
#include <vector>

namespace levyarea {

/// Non-negative holding-cost function h on [0, inf).
///
/// Catalog: constant c, linear c t, power c t^gamma, and piecewise linear
/// through knots (t_0 = 0, v_0), ..., (t_n, v_n), continued flat at v_n.
class HoldingFunction {
public:
    struct Constant {
        double c;
    };
    struct Linear {
        double c;
    };
    struct Power {
        double c;
        double gamma;
    };
    struct PiecewiseLinear {
        std::vector<std::pair<double, double>> knots;
    };
    using Kind = std::variant<Constant, Linear, Power, PiecewiseLinear>;

    explicit HoldingFunction(Kind kind);

    static HoldingFunction constant(double c) { return HoldingFunction(Constant{c}); }
    static HoldingFunction linear(double c) { return HoldingFunction(Linear{c}); }
    static HoldingFunction power(double c, double gamma) { return HoldingFunction(Power{c, gamma}); }
    static HoldingFunction piecewise_linear(std::vector<std::pair<double, double>> knots) {
        return HoldingFunction(PiecewiseLinear{std::move(knots)});
    }

    const Kind& kind() const noexcept { return kind_; }

    double operator()(double t) const;

    /// Right derivative h'(t+).
    double right_derivative(double t) const;

    /// Exact value of the integral of h^k over [a, b], 0 <= a <= b.
    double integral_pow(int k, double a, double b) const;

    /// Integral of h over [0, x].
    double integral(double x) const { return integral_pow(1, 0.0, x); }

    /// Kinks of h strictly inside (a, b).
    std::vector<double> breakpoints(double a, double b) const;

    bool nondecreasing() const;

    /// True when h has an unbounded derivative at 0 (power with gamma < 1).
    bool steep_at_zero() const;

    /// Returns true if h vanishes identically on [0, x].
    bool zero_on(double x) const;

private:
    Kind kind_;
};

} // namespace levyarea
