#pragma once

#include <span>
#include <vector>

#include "levyarea/process.hpp"

namespace levyarea {

struct InverseOptions {
    double rtol = 1e-10;
    int max_iter = 200;
};

/// Laplace exponent phi of a spectrally-positive Levy process,
/// E exp(-alpha X_t) = exp(phi(alpha) t), with
///
///   phi(alpha) = -drift alpha + sigma2 alpha^2 / 2 + rate (E exp(-alpha J) - 1).
///
/// Construction enforces phi'(0) > 0, so phi is strictly increasing on
/// [0, inf) and its inverse maps [0, inf) onto [0, inf).
/// Immutable after construction.
class LaplaceExponent {
public:
    static constexpr int kDefaultOrders = 12;
    static constexpr int kMaxOrders = 20;

    explicit LaplaceExponent(ProcessSpec spec, int n_max = kDefaultOrders,
                             InverseOptions inverse_options = {});

    const ProcessSpec& spec() const noexcept { return spec_; }
    int n_max() const noexcept { return static_cast<int>(deriv0_.size()); }

    /// phi(alpha); throws DomainError for alpha < 0.
    double operator()(double alpha) const;
    double phi(double alpha) const { return (*this)(alpha); }

    /// phi'(alpha) in closed form.
    double derivative(double alpha) const;

    /// phi^{(n)}(0) for 1 <= n <= n_max.
    double deriv0(int n) const;
    std::span<const double> derivs_at_zero() const noexcept { return deriv0_; }

    /// The alpha >= 0 with phi(alpha) = theta.
    double inverse(double theta) const;

    /// E T_x = x / phi'(0).
    double hitting_time_mean(double x) const;

    /// Var T_1 = phi''(0) / phi'(0)^3.
    double hitting_time_variance_rate() const;

    double slope_at_zero() const noexcept { return deriv0_[0]; }

private:
    ProcessSpec spec_;
    std::vector<double> deriv0_;
    InverseOptions inverse_options_;
};

inline LaplaceExponent build_exponent(const ProcessSpec& spec, int n_max = LaplaceExponent::kDefaultOrders) {
    return LaplaceExponent(spec, n_max);
}

inline double phi_inverse(const LaplaceExponent& exponent, double theta) { return exponent.inverse(theta); }

inline double hitting_time_mean(const LaplaceExponent& exponent, double x) { return exponent.hitting_time_mean(x); }

} // namespace levyarea
