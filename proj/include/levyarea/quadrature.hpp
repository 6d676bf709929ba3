#pragma once

#include <functional>
#include <span>

namespace levyarea {

struct QuadratureOptions {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    unsigned max_depth = 18;
    /// Number of geometrically graded panels towards the left endpoint.
    int graded_panels = 0;
};

/// Adaptive Gauss-Kronrod (7/15) integral of f over [a, b].
///
/// The domain is split at every point of `breaks` inside (a, b); each smooth
/// piece is integrated separately. With graded_panels = m > 0 the first
/// piece is further split at a + w 2^{-j}, j = 1..m. Throws QuadratureFailure
/// when the error estimate exceeds max(abs_tol, rel_tol |I|).
double integrate(const std::function<double(double)>& f, double a, double b, std::span<const double> breaks = {},
                 const QuadratureOptions& options = {});

} // namespace levyarea
