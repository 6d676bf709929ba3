#pragma once

#include <span>
#include <vector>

#include "levyarea/exponent.hpp"
#include "levyarea/holding.hpp"

namespace levyarea {

// Distributional law of the area
//
//   A_x = int_0^{T_x} h(W^x_t - W_t) dt = int_{(0,x]} h(x - y) T(dy)
//
// between the process with secondary jump inputs W^x and the reflected
// process W, up to the first-passage time T_x. Everything follows from the
// hitting-time subordinator T having Laplace exponent phi^{-1}.

/// E exp(-alpha A_x) = exp(-int_0^x phi^{-1}(alpha h(y)) dy).
double lst_area(const LaplaceExponent& exponent, const HoldingFunction& h, double x, double alpha);

/// E exp(-alpha A_x - beta B_x) where B_x is the area under g.
double joint_lst(const LaplaceExponent& exponent, const HoldingFunction& h, const HoldingFunction& g, double x,
                 double alpha, double beta);

double mean_area(const LaplaceExponent& exponent, const HoldingFunction& h, double x);

/// int_0^x h(y) g(y) dy.
double inner_product(const HoldingFunction& h, const HoldingFunction& g, double x);

/// Cov(A_x, B_x) = Var T_1 * int_0^x h g.
double cov_area(const LaplaceExponent& exponent, const HoldingFunction& h, const HoldingFunction& g, double x);
double var_area(const LaplaceExponent& exponent, const HoldingFunction& h, double x);
/// Cov(A_x, T_x).
double cov_area_T(const LaplaceExponent& exponent, const HoldingFunction& h, double x);

/// Corr(A_x, B_x). Takes no process: the correlation does not depend on it.
/// Throws DegenerateFunction if h or g vanishes on [0, x].
double corr_area(const HoldingFunction& h, const HoldingFunction& g, double x);

/// Coefficients and raw moments of A_x, both indexed 0..N:
/// c[0] = 0, c[k] = (-1)^{k-1} (phi^{-1})^{(k)}(0) int_0^x h^k; mu[0] = 1.
struct MomentTable {
    double x = 0.0;
    std::vector<double> c;
    std::vector<double> mu;
};

/// mu_{n+1} = sum_{k=0}^{n} binom(n, k) c_{k+1} mu_{n-k}; c indexed as in MomentTable.
std::vector<double> moment_recursion(std::span<const double> c);

MomentTable moments_area(const LaplaceExponent& exponent, const HoldingFunction& h, double x, int n);

/// Moment sequence mu~_1..mu~_N from the closed-form recursion for h(t) = t
/// and an exponential(rate) order size xi:
///
///   mu~_{n+1} = n! sum_k (k+1) c~_{k+1} / rate^{k+2} * mu~_{n-k} / (n-k)!.
///
/// It plugs the xi-averaged coefficients E c_k(xi) into the fixed-level
/// recursion. mu~_1 equals E A_xi; higher entries are not the moments of the
/// mixture A_xi (see moments_random_order_mixture).
std::vector<double> moments_random_order(const LaplaceExponent& exponent, double rate, int n);

/// E A_xi^n, n = 1..N, for h(t) = t and xi ~ exponential(rate) independent of X,
/// obtained by averaging the fixed-level moments (polynomials in x) over xi.
std::vector<double> moments_random_order_mixture(const LaplaceExponent& exponent, double rate, int n);

/// LST of A_{x,y} =d h(y - x) T_x + A_{y - x} (independent summands), 0 <= x <= y.
double lst_two_level(const LaplaceExponent& exponent, const HoldingFunction& h, double x, double y, double alpha);
double mean_two_level(const LaplaceExponent& exponent, const HoldingFunction& h, double x, double y);
double var_two_level(const LaplaceExponent& exponent, const HoldingFunction& h, double x, double y);

/// E exp(-sum_i alpha_i A_{s_i} - sum_i beta_i T_{s_i}) for levels
/// 0 < s_1 < ... < s_n. `betas` may be empty (all zero).
double joint_lst_fidi(const LaplaceExponent& exponent, const HoldingFunction& h, std::span<const double> levels,
                      std::span<const double> alphas, std::span<const double> betas = {});

/// Long-run time average of h(W^x - W): (1/x) int_0^x h.
double longrun_average(const HoldingFunction& h, double x);

/// Limit of (A_{nx} - E A_{nx}) / (h(n) sqrt(n)) for h regularly varying with index `alpha`.
struct GaussianLimit {
    double alpha = 0.0;
    double var_T1 = 0.0;
};

GaussianLimit gaussian_limit(const LaplaceExponent& exponent, double alpha);

/// Var A*_x = Var T_1 x^{2 alpha + 1} / (2 alpha + 1).
double gaussian_limit_var(const GaussianLimit& limit, double x);

/// Cov(A*_x, A*_{x+y}) = Var T_1 int_0^x [s (y + s)]^alpha ds.
double gaussian_limit_cov(const GaussianLimit& limit, double x, double y);

} // namespace levyarea
