#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace levyarea {

/// Point estimate with its standard error.
struct SimEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
    std::uint64_t seed = 0;
};

double sample_mean(std::span<const double> xs);
/// Unbiased sample variance.
double sample_variance(std::span<const double> xs);

/// Mean with standard error sd / sqrt(n).
SimEstimate mean_estimate(std::span<const double> xs);

/// Unbiased variance with the standard error sqrt((m4 - s^4 (n-3)/(n-1)) / n).
SimEstimate variance_estimate(std::span<const double> xs);

/// Pearson correlation with the delta-method standard error.
SimEstimate correlation_estimate(std::span<const double> xs, std::span<const double> ys);

/// Ratio sum(num) / sum(den) for i.i.d. pairs, with delta-method standard error.
SimEstimate ratio_estimate(std::span<const double> num, std::span<const double> den);

/// sup_z |F_n(z) - Phi(z / sigma)|; with sigma == 0 the reference is a point mass at 0.
double ks_distance_normal(std::span<const double> xs, double sigma);

struct TwoSampleKs {
    double statistic = 0.0;
    double p_value = 1.0;
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
TwoSampleKs ks_two_sample(std::span<const double> a, std::span<const double> b);

} // namespace levyarea
