#pragma once

#include <span>
#include <vector>

#include "levyarea/exponent.hpp"

namespace levyarea {

/// Truncated power series without constant term: coeffs[0] is the
/// coefficient of t, coeffs[k-1] the coefficient of t^k.
using SeriesCoeffs = std::vector<double>;

/// Coefficients 1..n of outer(inner(t)), both series having zero constant term.
SeriesCoeffs compose_series(std::span<const double> outer, std::span<const double> inner, int n);

/// Compositional inverse of the series `a` up to order n.
///
/// Missing coefficients of `a` beyond its length are zero, so a polynomial
/// may be reverted to any order. Throws NonInvertible if a[0] <= 0.
SeriesCoeffs revert_series(std::span<const double> a, int n);

/// Taylor coefficients a_k = phi^{(k)}(0) / k!, k = 1..n.
SeriesCoeffs exponent_taylor(const LaplaceExponent& exponent, int n);

/// (phi^{-1})^{(k)}(0) for k = 1..n, via series reversion.
std::vector<double> inverse_derivs_at_zero(const LaplaceExponent& exponent, int n);

} // namespace levyarea
