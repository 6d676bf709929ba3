#pragma once

#include <cmath>
#include <vector>

namespace levyarea {

/// n-th derivative of f at a from one-sided forward differences
/// Delta_h^n f(a) / h^n, Richardson-extrapolated over h, h/2, ..., h/2^(levels-1).
/// Only evaluates f on [a, a + n h].
template <class F>
double forward_derivative(F&& f, int n, double a, double h, int levels = 4) {
    auto quotient = [&](double step) {
        double sum = 0.0;
        double binom = 1.0;
        for (int k = 0; k <= n; ++k) {
            const double sign = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            sum += sign * binom * f(a + k * step);
            binom = binom * (n - k) / (k + 1);
        }
        return sum / std::pow(step, n);
    };
    std::vector<double> table(static_cast<std::size_t>(levels));
    for (int i = 0; i < levels; ++i) table[i] = quotient(h / std::ldexp(1.0, i));
    // The forward quotient has an error expansion in powers of h.
    for (int order = 1; order < levels; ++order) {
        const double factor = std::ldexp(1.0, order);
        for (int i = levels - 1; i >= order; --i) {
            table[i] = (factor * table[i] - table[i - 1]) / (factor - 1.0);
        }
    }
    return table[levels - 1];
}

} // namespace levyarea
