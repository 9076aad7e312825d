#pragma once

/// @file analytic_fn.hpp
/// @brief Scalar functions evaluable at complex arguments, with derivative
///        and analyticity-radius information.

#include <complex>
#include <functional>
#include <limits>
#include <string>

namespace conflux {

using cplx = std::complex<double>;

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

/// A real-analytic scalar function extended to complex arguments.
///
/// `eval` and `deriv` must be holomorphic on the strip of half-width
/// `rho(x)` around each real point x of the domain of interest; `rho` is a
/// (positive) lower bound on the distance from x to the nearest singularity,
/// infinite for entire functions. Real inputs to real-analytic entries
/// produce exactly real outputs.
///
/// Instances are immutable after construction and safe to evaluate
/// concurrently.
struct AnalyticFn {
    std::function<cplx(cplx)> eval;
    std::function<cplx(cplx)> deriv;
    std::function<double(double)> rho;
    std::string name;
};

}  // namespace conflux
