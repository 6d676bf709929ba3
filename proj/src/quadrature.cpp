#include "levyarea/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "levyarea/errors.hpp"

namespace levyarea {

double integrate(const std::function<double(double)>& f, double a, double b, std::span<const double> breaks,
                 const QuadratureOptions& options) {
    if (!(b >= a)) throw DomainError("integration bounds must satisfy a <= b");
    if (a == b) return 0.0;

    std::vector<double> nodes{a};
    for (double t : breaks) {
        if (t > a && t < b) nodes.push_back(t);
    }
    nodes.push_back(b);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    if (options.graded_panels > 0) {
        const double first = nodes[1];
        const double width = first - a;
        std::vector<double> graded;
        for (int j = options.graded_panels; j >= 1; --j) graded.push_back(a + std::ldexp(width, -j));
        nodes.insert(nodes.begin() + 1, graded.begin(), graded.end());
    }

    using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    double total = 0.0;
    double total_error = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
        double error = 0.0;
        double l1 = 0.0;
        // Boost's recursion leaves the local error estimate unscaled, so each
        // panel is mapped to [0, 1] to keep its tolerance relative.
        const double lo = nodes[i];
        const double width = nodes[i + 1] - lo;
        auto mapped = [&](double u) { return width * f(lo + width * u); };
        total += Rule::integrate(mapped, 0.0, 1.0, options.max_depth, options.rel_tol * 1e-2, &error, &l1);
        total_error += error;
    }
    if (!std::isfinite(total) || total_error > std::max(options.abs_tol, options.rel_tol * std::abs(total))) {
        throw QuadratureFailure("error estimate " + std::to_string(total_error) + " on integral " +
                                std::to_string(total));
    }
    return total;
}

} // namespace levyarea
