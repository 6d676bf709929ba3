#include "levyarea/area.hpp"

#include <cmath>
#include <string>

#include "levyarea/errors.hpp"
#include "levyarea/quadrature.hpp"
#include "levyarea/series.hpp"

namespace levyarea {

namespace {

constexpr int kGradedPanels = 30;

void require_level(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("level must be finite and >= 0");
}

void require_weight(double w, const char* name) {
    if (!(w >= 0.0)) throw DomainError(std::string(name) + " must be >= 0");
}

QuadratureOptions options_for(bool steep) {
    QuadratureOptions options;
    if (steep) options.graded_panels = kGradedPanels;
    return options;
}

// int_0^x phi^{-1}(integrand(y)) dy
template <class F>
double integrate_inverse(const LaplaceExponent& exponent, F&& integrand, double x, std::span<const double> breaks,
                         bool steep) {
    if (x == 0.0) return 0.0;
    return integrate([&](double y) { return exponent.inverse(integrand(y)); }, 0.0, x, breaks, options_for(steep));
}

std::vector<double> merged_breaks(const HoldingFunction& h, const HoldingFunction& g, double x) {
    std::vector<double> out = h.breakpoints(0.0, x);
    const std::vector<double> more = g.breakpoints(0.0, x);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

double lst_area(const LaplaceExponent& exponent, const HoldingFunction& h, double x, double alpha) {
    require_level(x);
    require_weight(alpha, "alpha");
    if (alpha == 0.0 || x == 0.0) return 1.0;
    const std::vector<double> breaks = h.breakpoints(0.0, x);
    const double exponent_integral =
        integrate_inverse(exponent, [&](double y) { return alpha * h(y); }, x, breaks, h.steep_at_zero());
    return std::exp(-exponent_integral);
}

double joint_lst(const LaplaceExponent& exponent, const HoldingFunction& h, const HoldingFunction& g, double x,
                 double alpha, double beta) {
    require_level(x);
    require_weight(alpha, "alpha");
    require_weight(beta, "beta");
    if ((alpha == 0.0 && beta == 0.0) || x == 0.0) return 1.0;
    const std::vector<double> breaks = merged_breaks(h, g, x);
    const bool steep = (alpha > 0.0 && h.steep_at_zero()) || (beta > 0.0 && g.steep_at_zero());
    const double exponent_integral =
        integrate_inverse(exponent, [&](double y) { return alpha * h(y) + beta * g(y); }, x, breaks, steep);
    return std::exp(-exponent_integral);
}

double mean_area(const LaplaceExponent& exponent, const HoldingFunction& h, double x) {
    require_level(x);
    return h.integral(x) / exponent.slope_at_zero();
}

double inner_product(const HoldingFunction& h, const HoldingFunction& g, double x) {
    require_level(x);
    if (&h == &g) return h.integral_pow(2, 0.0, x);
    if (x == 0.0) return 0.0;
    const std::vector<double> breaks = merged_breaks(h, g, x);
    return integrate([&](double y) { return h(y) * g(y); }, 0.0, x, breaks,
                     options_for(h.steep_at_zero() || g.steep_at_zero()));
}

double cov_area(const LaplaceExponent& exponent, const HoldingFunction& h, const HoldingFunction& g, double x) {
    return exponent.hitting_time_variance_rate() * inner_product(h, g, x);
}

double var_area(const LaplaceExponent& exponent, const HoldingFunction& h, double x) {
    require_level(x);
    return exponent.hitting_time_variance_rate() * h.integral_pow(2, 0.0, x);
}

double cov_area_T(const LaplaceExponent& exponent, const HoldingFunction& h, double x) {
    require_level(x);
    return exponent.hitting_time_variance_rate() * h.integral(x);
}

double corr_area(const HoldingFunction& h, const HoldingFunction& g, double x) {
    require_level(x);
    const double hh = h.integral_pow(2, 0.0, x);
    const double gg = g.integral_pow(2, 0.0, x);
    if (!(hh > 0.0) || !(gg > 0.0)) throw DegenerateFunction("holding function vanishes on [0, x]");
    return inner_product(h, g, x) / std::sqrt(hh * gg);
}

std::vector<double> moment_recursion(std::span<const double> c) {
    const int n = static_cast<int>(c.size()) - 1;
    std::vector<double> mu(c.size(), 0.0);
    mu[0] = 1.0;
    for (int m = 0; m < n; ++m) {
        double s = 0.0;
        for (int k = 0; k <= m; ++k) s += binomial(m, k) * c[k + 1] * mu[m - k];
        mu[m + 1] = s;
    }
    return mu;
}

MomentTable moments_area(const LaplaceExponent& exponent, const HoldingFunction& h, double x, int n) {
    require_level(x);
    if (n < 0) throw DomainError("moment order must be >= 0");
    MomentTable table;
    table.x = x;
    table.c.assign(static_cast<std::size_t>(n + 1), 0.0);
    if (n > 0) {
        const std::vector<double> inv = inverse_derivs_at_zero(exponent, n);
        for (int k = 1; k <= n; ++k) {
            const double sign = (k % 2 == 1) ? 1.0 : -1.0;
            table.c[k] = sign * inv[k - 1] * h.integral_pow(k, 0.0, x);
        }
    }
    table.mu = moment_recursion(table.c);
    return table;
}

std::vector<double> moments_random_order(const LaplaceExponent& exponent, double rate, int n) {
    if (!(rate > 0.0)) throw DomainError("order-size rate must be > 0");
    if (n <= 0) return {};
    const std::vector<double> inv = inverse_derivs_at_zero(exponent, n);
    std::vector<double> ct(static_cast<std::size_t>(n + 1), 0.0);
    for (int k = 1; k <= n; ++k) ct[k] = ((k % 2 == 1) ? 1.0 : -1.0) * inv[k - 1];

    std::vector<double> mu(static_cast<std::size_t>(n + 1), 0.0);
    mu[0] = 1.0;
    std::vector<double> factorial(static_cast<std::size_t>(n + 1), 1.0);
    for (int k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;
    for (int m = 0; m < n; ++m) {
        double s = 0.0;
        for (int k = 0; k <= m; ++k) {
            s += (k + 1) * ct[k + 1] / std::pow(rate, k + 2) * mu[m - k] / factorial[m - k];
        }
        mu[m + 1] = factorial[m] * s;
    }
    return {mu.begin() + 1, mu.end()};
}

std::vector<double> moments_random_order_mixture(const LaplaceExponent& exponent, double rate, int n) {
    if (!(rate > 0.0)) throw DomainError("order-size rate must be > 0");
    if (n <= 0) return {};
    const std::vector<double> inv = inverse_derivs_at_zero(exponent, n);

    // Moments at a fixed level x are polynomials in x: poly[d] multiplies x^d.
    using Poly = std::vector<double>;
    const std::size_t degree = static_cast<std::size_t>(2 * n + 1);
    std::vector<Poly> c(static_cast<std::size_t>(n + 1), Poly(degree, 0.0));
    for (int k = 1; k <= n; ++k) c[k][k + 1] = ((k % 2 == 1) ? 1.0 : -1.0) * inv[k - 1] / (k + 1.0);

    std::vector<Poly> mu(static_cast<std::size_t>(n + 1), Poly(degree, 0.0));
    mu[0][0] = 1.0;
    for (int m = 0; m < n; ++m) {
        for (int k = 0; k <= m; ++k) {
            const double w = binomial(m, k);
            for (std::size_t i = 0; i < degree; ++i) {
                if (c[k + 1][i] == 0.0) continue;
                for (std::size_t j = 0; i + j < degree; ++j) mu[m + 1][i + j] += w * c[k + 1][i] * mu[m - k][j];
            }
        }
    }

    // E xi^d = d! / rate^d
    std::vector<double> out;
    for (int m = 1; m <= n; ++m) {
        double s = 0.0;
        double xi_moment = 1.0;
        for (std::size_t d = 0; d < degree; ++d) {
            if (d > 0) xi_moment *= static_cast<double>(d) / rate;
            s += mu[m][d] * xi_moment;
        }
        out.push_back(s);
    }
    return out;
}

double lst_two_level(const LaplaceExponent& exponent, const HoldingFunction& h, double x, double y, double alpha) {
    require_level(x);
    require_level(y);
    require_weight(alpha, "alpha");
    if (x > y) throw OrderViolation("need x <= y");
    const double gap = y - x;
    const double first = exponent.inverse(alpha * h(gap)) * x;
    if (alpha == 0.0) return 1.0;
    const double second = integrate_inverse(exponent, [&](double z) { return alpha * h(z); }, gap,
                                            h.breakpoints(0.0, gap), h.steep_at_zero());
    return std::exp(-first - second);
}

double mean_two_level(const LaplaceExponent& exponent, const HoldingFunction& h, double x, double y) {
    require_level(x);
    if (x > y) throw OrderViolation("need x <= y");
    const double gap = y - x;
    return (h(gap) * x + h.integral(gap)) / exponent.slope_at_zero();
}

double var_two_level(const LaplaceExponent& exponent, const HoldingFunction& h, double x, double y) {
    require_level(x);
    if (x > y) throw OrderViolation("need x <= y");
    const double gap = y - x;
    const double hg = h(gap);
    return exponent.hitting_time_variance_rate() * (hg * hg * x + h.integral_pow(2, 0.0, gap));
}

double joint_lst_fidi(const LaplaceExponent& exponent, const HoldingFunction& h, std::span<const double> levels,
                      std::span<const double> alphas, std::span<const double> betas) {
    const std::size_t n = levels.size();
    if (alphas.size() != n || (!betas.empty() && betas.size() != n)) {
        throw DomainError("levels, alphas and betas must have equal length");
    }
    double prev = 0.0;
    for (double s : levels) {
        if (!(s > prev)) throw LevelsNotIncreasing("levels must satisfy 0 < s_1 < ... < s_n");
        prev = s;
    }
    for (std::size_t i = 0; i < n; ++i) {
        require_weight(alphas[i], "alpha");
        if (!betas.empty()) require_weight(betas[i], "beta");
    }

    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double start = (j == 0) ? 0.0 : levels[j - 1];
        const double width = levels[j] - start;
        double beta_sum = 0.0;
        std::vector<double> breaks;
        for (std::size_t i = j; i < n; ++i) {
            if (!betas.empty()) beta_sum += betas[i];
            const double shift = levels[i] - levels[j];
            for (double k : h.breakpoints(shift, shift + width)) breaks.push_back(k - shift);
        }
        auto integrand = [&](double t) {
            double s = beta_sum;
            for (std::size_t i = j; i < n; ++i) s += alphas[i] * h(levels[i] - levels[j] + t);
            return s;
        };
        const bool steep = alphas[j] > 0.0 && h.steep_at_zero();
        total += integrate_inverse(exponent, integrand, width, breaks, steep);
    }
    return std::exp(-total);
}

double longrun_average(const HoldingFunction& h, double x) {
    if (!(x > 0.0)) throw DomainError("level must be > 0");
    return h.integral(x) / x;
}

GaussianLimit gaussian_limit(const LaplaceExponent& exponent, double alpha) {
    if (!(alpha >= 0.0)) throw DomainError("regular-variation index must be >= 0");
    return GaussianLimit{alpha, exponent.hitting_time_variance_rate()};
}

double gaussian_limit_var(const GaussianLimit& limit, double x) {
    require_level(x);
    const double e = 2.0 * limit.alpha + 1.0;
    return limit.var_T1 * std::pow(x, e) / e;
}

double gaussian_limit_cov(const GaussianLimit& limit, double x, double y) {
    require_level(x);
    require_level(y);
    const double a = limit.alpha;
    if (a == std::floor(a) && a <= 30.0) {
        // [s (y + s)]^m = sum_j binom(m, j) y^{m-j} s^{m+j}
        const int m = static_cast<int>(a);
        double s = 0.0;
        for (int j = 0; j <= m; ++j) {
            s += binomial(m, j) * std::pow(y, m - j) * std::pow(x, m + j + 1) / (m + j + 1.0);
        }
        return limit.var_T1 * s;
    }
    QuadratureOptions options;
    options.graded_panels = kGradedPanels;
    return limit.var_T1 * integrate([&](double s) { return std::pow(s * (y + s), a); }, 0.0, x, {}, options);
}

} // namespace levyarea
