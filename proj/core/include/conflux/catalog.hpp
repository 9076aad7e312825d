#pragma once

/// @file catalog.hpp
/// @brief Flux and initial-condition catalogue with closed-form derivatives.
///
/// Catalogue names and parameter keys are the stable vocabulary used by the
/// CLI configuration file. All entries carry closed-form first derivatives
/// and an analyticity-radius bound, so no automatic differentiation is
/// involved anywhere.

#include <map>
#include <string>

#include "conflux/analytic_fn.hpp"

namespace conflux {

using Params = std::map<std::string, double>;

/// A flux f together with its celerity c = df/du and c' = dc/du.
struct FluxSpec {
    AnalyticFn f;
    AnalyticFn c;
    AnalyticFn c_prime;
    std::string name;
    Params params;
};

/// One initial value problem: flux, initial data, and the real interval of
/// interest.
struct Problem {
    FluxSpec flux;
    AnalyticFn u0;
    double x_min = -1.0;
    double x_max = 1.0;
};

/// Build a flux from the catalogue.
///
/// Families and parameters:
///   transport(a=1)            f = a u
///   burgers                   f = u^2 / 2
///   cubic                     f = u^3 / 3
///   buckley_leverett(M=1)     f = u^2 / (u^2 + M (1-u)^2), M > 0
///   lwr_traffic(v=1, K=1)     f = v u (1 - u/K), K > 0
///
/// Throws UnknownFluxError / InvalidParamError. Unknown parameter keys are
/// rejected.
FluxSpec make_flux(const std::string& name, const Params& params = {});

/// Build an initial condition from the catalogue.
///
/// Families and parameters:
///   sine(a=1, k=1, phi=0, b=0)   a sin(k x + phi) + b
///   gaussian(a=1, s=1)           a exp(-x^2 / s^2), s > 0
///   lorentzian(a=1)              a / (1 + x^2)
///   polynomial(c0, c1, ...)      sum ck x^k
///   constant(b=0)                b
///
/// Throws UnknownInitialError / InvalidParamError.
AnalyticFn make_initial(const std::string& name, const Params& params = {});

/// Probe that c(u0(z)) is evaluable on a complex neighbourhood of the real
/// domain (a sample of points within the u0 analyticity bound). Failures
/// propagate as EvaluationError rather than surfacing later as silent
/// non-finite quadrature values.
void validate_problem(const Problem& problem);

}  // namespace conflux
