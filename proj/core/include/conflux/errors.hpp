#pragma once

/// @file errors.hpp
/// @brief Exception taxonomy for the library.

#include <stdexcept>
#include <string>

namespace conflux {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Unknown flux family name passed to the catalogue.
class UnknownFluxError : public Error {
  public:
    using Error::Error;
};

/// Unknown initial-condition family name passed to the catalogue.
class UnknownInitialError : public Error {
  public:
    using Error::Error;
};

/// Invalid or unknown parameter for a catalogue family.
class InvalidParamError : public Error {
  public:
    using Error::Error;
};

/// An integrand threw or produced a non-finite value at a quadrature node.
class EvaluationError : public Error {
  public:
    using Error::Error;
};

/// No circle around (x, t) admits the contour representation. Carries the
/// best margin found so callers can distinguish "near breaking" from
/// "far past breaking".
class NoAdmissibleContourError : public Error {
  public:
    NoAdmissibleContourError(const std::string& msg, double best_margin, double x, double t)
        : Error(msg), best_margin(best_margin), x(x), t(t) {}
    double best_margin;
    double x;
    double t;
};

/// Node doubling hit the configured ceiling before self-agreement.
class QuadratureNotConvergedError : public Error {
  public:
    using Error::Error;
};

/// The celerity formula carries a 1/t prefactor; at t = 0 callers must use
/// c(u0(x)) directly.
class TZeroError : public Error {
  public:
    using Error::Error;
};

/// A user-supplied contour violates |z - x| > |F(z)| at some node.
class InadmissibleContourError : public Error {
  public:
    using Error::Error;
};

/// Reversion series terms stopped decaying before the term budget ran out.
class SeriesDivergingError : public Error {
  public:
    using Error::Error;
};

/// Root iteration exceeded its iteration cap.
class NotConvergedError : public Error {
  public:
    using Error::Error;
};

/// The implicit relation has more than one root in the search bracket
/// (at or past the breaking time).
class MultipleRootsError : public Error {
  public:
    using Error::Error;
};

}  // namespace conflux
