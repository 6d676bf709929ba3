#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <type_traits>
#include <variant>

namespace levyarea {

struct ExponentialJumps {
    double rate;
};

struct DeterministicJumps {
    double size;
};

struct GammaJumps {
    double shape;
    double scale;
};

/// Uniform on (0, upper).
struct UniformJumps {
    double upper;
};

/// Law of a single upward jump of a compound Poisson input.
///
/// Every supported law has finite moments of all orders, and its Laplace
/// transform and tilted mean are available in closed form.
class JumpDistribution {
public:
    using Kind = std::variant<ExponentialJumps, DeterministicJumps, GammaJumps, UniformJumps>;

    explicit JumpDistribution(Kind kind);

    static JumpDistribution exponential(double rate) { return JumpDistribution(ExponentialJumps{rate}); }
    static JumpDistribution deterministic(double size) { return JumpDistribution(DeterministicJumps{size}); }
    static JumpDistribution gamma(double shape, double scale) { return JumpDistribution(GammaJumps{shape, scale}); }
    static JumpDistribution uniform(double upper) { return JumpDistribution(UniformJumps{upper}); }

    const Kind& kind() const noexcept { return kind_; }

    /// E exp(-alpha J) - 1, evaluated without cancellation near alpha = 0.
    double laplace_minus_one(double alpha) const;

    /// E J exp(-alpha J), i.e. minus the derivative of the Laplace transform.
    double tilted_mean(double alpha) const;

    /// Raw moment E J^n.
    double moment(int n) const;

    template <class URBG>
    double sample(URBG& rng) const;

private:
    Kind kind_;
};

/// Spectrally-positive Levy process X_t = drift t + sqrt(sigma2) B_t + compound Poisson.
///
/// The parametrization is untruncated: `drift` is the total deterministic
/// slope, so E X_1 = drift + jump_rate * E J.
struct ProcessSpec {
    double drift = 0.0;
    double sigma2 = 0.0;
    double jump_rate = 0.0;
    std::optional<JumpDistribution> jumps;

    /// Throws MissingJumpDist, InvalidParameter or MeanDriftViolation.
    void validate() const;

    double mean_increment() const;

    bool finite_activity_exact() const noexcept { return sigma2 == 0.0; }
};

template <class URBG>
double JumpDistribution::sample(URBG& rng) const {
    return std::visit(
        [&](const auto& law) -> double {
            using T = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<T, ExponentialJumps>) {
                return std::exponential_distribution<double>(law.rate)(rng);
            } else if constexpr (std::is_same_v<T, DeterministicJumps>) {
                return law.size;
            } else if constexpr (std::is_same_v<T, GammaJumps>) {
                return std::gamma_distribution<double>(law.shape, law.scale)(rng);
            } else {
                return std::uniform_real_distribution<double>(0.0, law.upper)(rng);
            }
        },
        kind_);
}

} // namespace levyarea
