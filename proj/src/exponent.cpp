#include "levyarea/exponent.hpp"

#include <cmath>
#include <string>

#include "levyarea/errors.hpp"

namespace levyarea {

LaplaceExponent::LaplaceExponent(ProcessSpec spec, int n_max, InverseOptions inverse_options)
    : spec_(std::move(spec)), inverse_options_(inverse_options) {
    spec_.validate();
    if (n_max < 2 || n_max > kMaxOrders) {
        throw InvalidParameter("n_max must lie in [2, " + std::to_string(kMaxOrders) + "]");
    }
    const bool has_jumps = spec_.jump_rate > 0.0;
    deriv0_.resize(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const double jump_moment = has_jumps ? spec_.jump_rate * spec_.jumps->moment(n) : 0.0;
        double value = 0.0;
        if (n == 1) {
            value = -(spec_.drift + jump_moment);
        } else if (n == 2) {
            value = spec_.sigma2 + jump_moment;
        } else {
            value = (n % 2 == 0 ? 1.0 : -1.0) * jump_moment;
        }
        deriv0_[static_cast<std::size_t>(n - 1)] = value;
    }
}

double LaplaceExponent::operator()(double alpha) const {
    if (!(alpha >= 0.0)) throw DomainError("phi is defined for alpha >= 0");
    double value = -spec_.drift * alpha + 0.5 * spec_.sigma2 * alpha * alpha;
    if (spec_.jump_rate > 0.0) value += spec_.jump_rate * spec_.jumps->laplace_minus_one(alpha);
    return value;
}

double LaplaceExponent::derivative(double alpha) const {
    if (!(alpha >= 0.0)) throw DomainError("phi' is defined for alpha >= 0");
    double value = -spec_.drift + spec_.sigma2 * alpha;
    if (spec_.jump_rate > 0.0) value -= spec_.jump_rate * spec_.jumps->tilted_mean(alpha);
    return value;
}

double LaplaceExponent::deriv0(int n) const {
    if (n < 1 || n > n_max()) throw DomainError("derivative order out of range: " + std::to_string(n));
    return deriv0_[static_cast<std::size_t>(n - 1)];
}

double LaplaceExponent::inverse(double theta) const {
    if (!(theta >= 0.0)) throw DomainError("phi^{-1} is defined for theta >= 0");
    if (theta == 0.0) return 0.0;
    if (std::isinf(theta)) return theta;

    const double rtol = inverse_options_.rtol;
    const int cap = inverse_options_.max_iter;

    double lo = 0.0;
    double hi = 1.0;
    int iter = 0;
    while ((*this)(hi) < theta) {
        lo = hi;
        hi *= 2.0;
        if (++iter > cap) throw ConvergenceFailure("could not bracket phi^{-1}(" + std::to_string(theta) + ")");
    }

    while (hi - lo > rtol * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if ((*this)(mid) < theta) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (++iter > cap) throw ConvergenceFailure("bisection cap reached for phi^{-1}");
    }

    // Newton polish, kept inside the bracket.
    double alpha = 0.5 * (lo + hi);
    for (int step = 0; step < 5; ++step) {
        const double residual = (*this)(alpha) - theta;
        const double slope = derivative(alpha);
        if (residual == 0.0 || !(slope > 0.0)) break;
        const double next = alpha - residual / slope;
        if (!(next >= lo && next <= hi)) break;
        if (next == alpha) break;
        alpha = next;
    }
    return alpha;
}

double LaplaceExponent::hitting_time_mean(double x) const {
    if (!(x >= 0.0)) throw DomainError("level must be non-negative");
    return x / slope_at_zero();
}

double LaplaceExponent::hitting_time_variance_rate() const {
    const double d1 = deriv0_[0];
    return deriv0_[1] / (d1 * d1 * d1);
}

} // namespace levyarea
