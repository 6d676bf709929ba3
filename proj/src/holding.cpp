#include "levyarea/holding.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levyarea/errors.hpp"

namespace levyarea {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Integral of (linear interpolant from va to vb)^k over an interval of length w.
double segment_pow_integral(int k, double va, double vb, double w) {
    // w/(k+1) * sum_{j=0}^{k} va^j vb^{k-j}
    double sum = 0.0;
    double pa = 1.0;
    for (int j = 0; j <= k; ++j) {
        sum += pa * std::pow(vb, k - j);
        pa *= va;
    }
    return w * sum / (k + 1);
}

} // namespace

HoldingFunction::HoldingFunction(Kind kind) : kind_(std::move(kind)) {
    std::visit(overloaded{
                   [](const Constant& h) {
                       if (!(h.c >= 0.0) || !std::isfinite(h.c)) throw InvalidParameter("constant holding cost must be >= 0");
                   },
                   [](const Linear& h) {
                       if (!(h.c > 0.0) || !std::isfinite(h.c)) throw InvalidParameter("linear holding slope must be > 0");
                   },
                   [](const Power& h) {
                       if (!(h.c > 0.0) || !std::isfinite(h.c)) throw InvalidParameter("power holding scale must be > 0");
                       if (!(h.gamma > 0.0) || !std::isfinite(h.gamma)) throw InvalidParameter("power exponent must be > 0");
                   },
                   [](const PiecewiseLinear& h) {
                       if (h.knots.empty()) throw InvalidParameter("piecewise_linear needs at least one knot");
                       if (h.knots.front().first != 0.0) throw InvalidParameter("first knot must be at t = 0");
                       for (std::size_t i = 0; i < h.knots.size(); ++i) {
                           const auto [t, v] = h.knots[i];
                           if (!std::isfinite(t) || !std::isfinite(v)) throw InvalidParameter("knots must be finite");
                           if (v < 0.0) throw InvalidParameter("knot values must be >= 0");
                           if (i > 0 && !(t > h.knots[i - 1].first)) throw InvalidParameter("knot abscissae must increase");
                       }
                   },
               },
               kind_);
}

double HoldingFunction::operator()(double t) const {
    return std::visit(overloaded{
                          [](const Constant& h) { return h.c; },
                          [t](const Linear& h) { return h.c * t; },
                          [t](const Power& h) { return t <= 0.0 ? 0.0 : h.c * std::pow(t, h.gamma); },
                          [t](const PiecewiseLinear& h) {
                              const auto& k = h.knots;
                              if (t >= k.back().first) return k.back().second;
                              auto it = std::upper_bound(k.begin(), k.end(), t,
                                                         [](double v, const auto& knot) { return v < knot.first; });
                              const auto& [t1, v1] = *it;
                              const auto& [t0, v0] = *(it - 1);
                              return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
                          },
                      },
                      kind_);
}

double HoldingFunction::right_derivative(double t) const {
    return std::visit(overloaded{
                          [](const Constant&) { return 0.0; },
                          [](const Linear& h) { return h.c; },
                          [t](const Power& h) {
                              if (t <= 0.0) return h.gamma < 1.0 ? INFINITY : (h.gamma == 1.0 ? h.c : 0.0);
                              return h.c * h.gamma * std::pow(t, h.gamma - 1.0);
                          },
                          [t](const PiecewiseLinear& h) {
                              const auto& k = h.knots;
                              if (t >= k.back().first) return 0.0;
                              auto it = std::upper_bound(k.begin(), k.end(), t,
                                                         [](double v, const auto& knot) { return v < knot.first; });
                              return (it->second - (it - 1)->second) / (it->first - (it - 1)->first);
                          },
                      },
                      kind_);
}

double HoldingFunction::integral_pow(int k, double a, double b) const {
    if (k < 0) throw DomainError("power of h must be non-negative");
    if (!(a >= 0.0) || !(b >= a)) throw DomainError("need 0 <= a <= b");
    if (k == 0 || a == b) return b - a;
    return std::visit(overloaded{
                          [&](const Constant& h) { return std::pow(h.c, k) * (b - a); },
                          [&](const Linear& h) {
                              const double e = k + 1.0;
                              return std::pow(h.c, k) * (std::pow(b, e) - std::pow(a, e)) / e;
                          },
                          [&](const Power& h) {
                              const double e = k * h.gamma + 1.0;
                              return std::pow(h.c, k) * (std::pow(b, e) - std::pow(a, e)) / e;
                          },
                          [&](const PiecewiseLinear& h) {
                              const auto& knots = h.knots;
                              double sum = 0.0;
                              for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
                                  const double lo = std::max(a, knots[i].first);
                                  const double hi = std::min(b, knots[i + 1].first);
                                  if (hi <= lo) continue;
                                  sum += segment_pow_integral(k, (*this)(lo), (*this)(hi), hi - lo);
                              }
                              const double tail_start = std::max(a, knots.back().first);
                              if (b > tail_start) sum += std::pow(knots.back().second, k) * (b - tail_start);
                              return sum;
                          },
                      },
                      kind_);
}

std::vector<double> HoldingFunction::breakpoints(double a, double b) const {
    std::vector<double> out;
    if (const auto* p = std::get_if<PiecewiseLinear>(&kind_)) {
        for (const auto& [t, v] : p->knots) {
            if (t > a && t < b) out.push_back(t);
        }
    }
    return out;
}

bool HoldingFunction::nondecreasing() const {
    if (const auto* p = std::get_if<PiecewiseLinear>(&kind_)) {
        for (std::size_t i = 1; i < p->knots.size(); ++i) {
            if (p->knots[i].second < p->knots[i - 1].second) return false;
        }
    }
    return true;
}

bool HoldingFunction::steep_at_zero() const {
    const auto* p = std::get_if<Power>(&kind_);
    return p != nullptr && p->gamma < 1.0;
}

bool HoldingFunction::zero_on(double x) const {
    return integral_pow(1, 0.0, x) == 0.0;
}

} // namespace levyarea
