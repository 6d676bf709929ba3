#include "levyarea/stats.hpp"

#include <algorithm>
#include <cmath>

#include "levyarea/errors.hpp"

namespace levyarea {

double sample_mean(std::span<const double> xs) {
    if (xs.empty()) throw DomainError("empty sample");
    double s = 0.0;
    for (double v : xs) s += v;
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw DomainError("need at least two samples");
    const double m = sample_mean(xs);
    double s = 0.0;
    for (double v : xs) s += (v - m) * (v - m);
    return s / static_cast<double>(xs.size() - 1);
}

SimEstimate mean_estimate(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    return SimEstimate{sample_mean(xs), std::sqrt(sample_variance(xs) / n), xs.size(), 0};
}

SimEstimate variance_estimate(std::span<const double> xs) {
    const double n = static_cast<double>(xs.size());
    const double m = sample_mean(xs);
    double m2 = 0.0;
    double m4 = 0.0;
    for (double v : xs) {
        const double d2 = (v - m) * (v - m);
        m2 += d2;
        m4 += d2 * d2;
    }
    m2 /= n;
    m4 /= n;
    const double var = m2 * n / (n - 1.0);
    const double se2 = (m4 - var * var * (n - 3.0) / (n - 1.0)) / n;
    return SimEstimate{var, std::sqrt(std::max(se2, 0.0)), xs.size(), 0};
}

SimEstimate correlation_estimate(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw DomainError("samples must have equal length");
    const double mx = sample_mean(xs);
    const double my = sample_mean(ys);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (!(sxx > 0.0) || !(syy > 0.0)) throw DegenerateFunction("constant sample has no correlation");
    const double r = sxy / std::sqrt(sxx * syy);
    const double n = static_cast<double>(xs.size());
    return SimEstimate{r, (1.0 - r * r) / std::sqrt(n - 3.0), xs.size(), 0};
}

SimEstimate ratio_estimate(std::span<const double> num, std::span<const double> den) {
    if (num.size() != den.size() || num.size() < 2) throw DomainError("ratio needs paired samples");
    const double mn = sample_mean(num);
    const double md = sample_mean(den);
    const double r = mn / md;
    double s = 0.0;
    for (std::size_t i = 0; i < num.size(); ++i) {
        const double z = num[i] - r * den[i];
        s += z * z;
    }
    const double n = static_cast<double>(num.size());
    const double se = std::sqrt(s / (n - 1.0) / n) / md;
    return SimEstimate{r, se, num.size(), 0};
}

double ks_distance_normal(std::span<const double> xs, double sigma) {
    if (xs.empty()) throw DomainError("empty sample");
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    // Reference cdf at z and its left limit.
    auto cdf = [sigma](double z) {
        if (sigma == 0.0) return z >= 0.0 ? 1.0 : 0.0;
        return 0.5 * std::erfc(-z / (sigma * std::sqrt(2.0)));
    };
    auto cdf_left = [&](double z) { return sigma == 0.0 ? (z > 0.0 ? 1.0 : 0.0) : cdf(z); };
    double d = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        const double v = sorted[i];
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == v) ++j;
        d = std::max({d, j / n - cdf(v), cdf_left(v) - i / n});
        i = j;
    }
    return d;
}

TwoSampleKs ks_two_sample(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) throw DomainError("empty sample");
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    const double nx = static_cast<double>(x.size());
    const double ny = static_cast<double>(y.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < x.size() && j < y.size()) {
        const double v = std::min(x[i], y[j]);
        while (i < x.size() && x[i] == v) ++i;
        while (j < y.size() && y[j] == v) ++j;
        d = std::max(d, std::abs(i / nx - j / ny));
    }
    const double ne = nx * ny / (nx + ny);
    const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
    // Q_KS(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2)
    double q = 0.0;
    if (lambda < 0.2) {
        q = 1.0;
    } else {
        for (int k = 1; k <= 100; ++k) {
            const double term = std::exp(-2.0 * k * k * lambda * lambda);
            q += (k % 2 == 1 ? 2.0 : -2.0) * term;
            if (term < 1e-16) break;
        }
    }
    return TwoSampleKs{d, std::clamp(q, 0.0, 1.0)};
}

} // namespace levyarea
