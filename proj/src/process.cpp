#include "levyarea/process.hpp"

#include <cmath>
#include <string>

#include "levyarea/errors.hpp"

namespace levyarea {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidParameter(std::string(name) + " must be finite and > 0, got " + std::to_string(value));
    }
}

// (1 - e^{-u}) / u - 1 for u >= 0.
double uniform_laplace_minus_one(double u) {
    if (u < 1e-2) {
        // -u/2 + u^2/6 - u^3/24 + ...
        double term = 1.0;
        double sum = 0.0;
        for (int n = 1; n < 12; ++n) {
            term *= -u / static_cast<double>(n + 1);
            sum += term;
        }
        return sum;
    }
    return -std::expm1(-u) / u - 1.0;
}

} // namespace

JumpDistribution::JumpDistribution(Kind kind) : kind_(kind) {
    std::visit(
        [](const auto& law) {
            using T = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<T, ExponentialJumps>) {
                require_positive(law.rate, "exponential rate");
            } else if constexpr (std::is_same_v<T, DeterministicJumps>) {
                require_positive(law.size, "deterministic size");
            } else if constexpr (std::is_same_v<T, GammaJumps>) {
                require_positive(law.shape, "gamma shape");
                require_positive(law.scale, "gamma scale");
            } else {
                require_positive(law.upper, "uniform upper bound");
            }
        },
        kind_);
}

double JumpDistribution::laplace_minus_one(double alpha) const {
    return std::visit(
        [alpha](const auto& law) -> double {
            using T = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<T, ExponentialJumps>) {
                return -alpha / (law.rate + alpha);
            } else if constexpr (std::is_same_v<T, DeterministicJumps>) {
                return std::expm1(-alpha * law.size);
            } else if constexpr (std::is_same_v<T, GammaJumps>) {
                return std::expm1(-law.shape * std::log1p(law.scale * alpha));
            } else {
                return uniform_laplace_minus_one(alpha * law.upper);
            }
        },
        kind_);
}

double JumpDistribution::tilted_mean(double alpha) const {
    return std::visit(
        [alpha](const auto& law) -> double {
            using T = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<T, ExponentialJumps>) {
                const double s = law.rate + alpha;
                return law.rate / (s * s);
            } else if constexpr (std::is_same_v<T, DeterministicJumps>) {
                return law.size * std::exp(-alpha * law.size);
            } else if constexpr (std::is_same_v<T, GammaJumps>) {
                return law.shape * law.scale * std::pow(1.0 + law.scale * alpha, -law.shape - 1.0);
            } else {
                // b * (1 - e^{-u} - u e^{-u}) / u^2 with u = alpha b
                const double u = alpha * law.upper;
                if (u < 1e-3) {
                    return law.upper * (0.5 - u / 3.0 + u * u / 8.0 - u * u * u / 30.0);
                }
                const double e = std::exp(-u);
                return law.upper * (-std::expm1(-u) - u * e) / (u * u);
            }
        },
        kind_);
}

double JumpDistribution::moment(int n) const {
    if (n < 0) {
        throw DomainError("moment order must be non-negative");
    }
    return std::visit(
        [n](const auto& law) -> double {
            using T = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<T, ExponentialJumps>) {
                double m = 1.0;
                for (int i = 1; i <= n; ++i) m *= static_cast<double>(i) / law.rate;
                return m;
            } else if constexpr (std::is_same_v<T, DeterministicJumps>) {
                return std::pow(law.size, n);
            } else if constexpr (std::is_same_v<T, GammaJumps>) {
                double m = 1.0;
                for (int i = 0; i < n; ++i) m *= (law.shape + i) * law.scale;
                return m;
            } else {
                return std::pow(law.upper, n) / (n + 1.0);
            }
        },
        kind_);
}

void ProcessSpec::validate() const {
    if (!std::isfinite(drift)) throw InvalidParameter("drift must be finite");
    if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) throw InvalidParameter("sigma2 must be finite and >= 0");
    if (!(jump_rate >= 0.0) || !std::isfinite(jump_rate)) throw InvalidParameter("jump_rate must be finite and >= 0");
    if (jump_rate > 0.0 && !jumps) throw MissingJumpDist("jump_rate > 0 requires a jump distribution");
    const double mean = mean_increment();
    if (!(mean < 0.0)) {
        throw MeanDriftViolation("need drift + jump_rate * E J < 0, got " + std::to_string(mean));
    }
}

double ProcessSpec::mean_increment() const {
    const double jump_mean = (jump_rate > 0.0 && jumps) ? jump_rate * jumps->moment(1) : 0.0;
    return drift + jump_mean;
}

} // namespace levyarea
