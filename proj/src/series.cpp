#include "levyarea/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levyarea/errors.hpp"

namespace levyarea {

namespace {

// Dense polynomials p[0..n] including the constant term, truncated at degree n.
using Poly = std::vector<double>;

Poly multiply(const Poly& p, const Poly& q, int n) {
    Poly r(static_cast<std::size_t>(n + 1), 0.0);
    for (int i = 0; i <= n; ++i) {
        if (p[i] == 0.0) continue;
        for (int j = 0; i + j <= n; ++j) r[i + j] += p[i] * q[j];
    }
    return r;
}

// 1/q with q[0] != 0.
Poly reciprocal(const Poly& q, int n) {
    Poly r(static_cast<std::size_t>(n + 1), 0.0);
    r[0] = 1.0 / q[0];
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int j = 1; j <= k; ++j) s += q[j] * r[k - j];
        r[k] = -s / q[0];
    }
    return r;
}

Poly lift(std::span<const double> coeffs, int n) {
    Poly p(static_cast<std::size_t>(n + 1), 0.0);
    for (int k = 1; k <= n && k <= static_cast<int>(coeffs.size()); ++k) p[k] = coeffs[k - 1];
    return p;
}

// Horner evaluation of sum_k outer[k] inner^k with outer including a constant term.
Poly compose(const Poly& outer, const Poly& inner, int n) {
    Poly r(static_cast<std::size_t>(n + 1), 0.0);
    for (int k = static_cast<int>(outer.size()) - 1; k >= 0; --k) {
        r = multiply(r, inner, n);
        r[0] += outer[k];
    }
    return r;
}

Poly differentiate(const Poly& p) {
    Poly d(p.size(), 0.0);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
    return d;
}

} // namespace

SeriesCoeffs compose_series(std::span<const double> outer, std::span<const double> inner, int n) {
    if (n < 1) return {};
    const Poly r = compose(lift(outer, n), lift(inner, n), n);
    return SeriesCoeffs(r.begin() + 1, r.end());
}

SeriesCoeffs revert_series(std::span<const double> a, int n) {
    if (a.empty() || !(a[0] > 0.0)) {
        throw NonInvertible("leading coefficient must be positive");
    }
    if (n < 1) throw DomainError("reversion order must be >= 1");

    const Poly outer = lift(a, n);
    const Poly outer_prime = differentiate(outer);

    // Newton iteration b <- b - (a o b - t) / (a' o b); the number of correct
    // coefficients doubles per step. Two extra sweeps refine rounding.
    Poly b(static_cast<std::size_t>(n + 1), 0.0);
    b[1] = 1.0 / a[0];
    int iterations = 2;
    for (int correct = 1; correct < n; correct *= 2) ++iterations;
    for (int it = 0; it < iterations; ++it) {
        Poly residual = compose(outer, b, n);
        residual[1] -= 1.0;
        const Poly slope = compose(outer_prime, b, n);
        const Poly step = multiply(residual, reciprocal(slope, n), n);
        for (int k = 1; k <= n; ++k) b[k] -= step[k];
    }
    return SeriesCoeffs(b.begin() + 1, b.end());
}

SeriesCoeffs exponent_taylor(const LaplaceExponent& exponent, int n) {
    if (n > exponent.n_max()) {
        throw DomainError("requested " + std::to_string(n) + " orders, exponent holds " +
                          std::to_string(exponent.n_max()));
    }
    SeriesCoeffs a(static_cast<std::size_t>(n));
    double factorial = 1.0;
    for (int k = 1; k <= n; ++k) {
        factorial *= k;
        a[k - 1] = exponent.deriv0(k) / factorial;
    }
    return a;
}

std::vector<double> inverse_derivs_at_zero(const LaplaceExponent& exponent, int n) {
    const SeriesCoeffs b = revert_series(exponent_taylor(exponent, n), n);
    std::vector<double> derivs(b.size());
    double factorial = 1.0;
    for (int k = 1; k <= n; ++k) {
        factorial *= k;
        derivs[k - 1] = factorial * b[k - 1];
    }
    return derivs;
}

} // namespace levyarea
