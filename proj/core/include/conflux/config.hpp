#pragma once

/// @file config.hpp
/// @brief Solver tolerances and radius-search policy.

#include <optional>

namespace conflux {

struct SolverConfig {
    /// Node doubling stops when two successive quadrature results agree to
    /// this tolerance (absolute, with a relative floor for large values).
    double quad_tol = 1e-10;

    /// Accepted samples must have |Im| of every integral below this.
    double imag_tol = 1e-8;

    /// Accepted samples must satisfy |u_t + c u_x| below this.
    double pde_tol = 1e-7;

    /// Node count the doubling ladder starts from. Even, >= 8.
    int initial_nodes = 128;

    /// Doubling ceiling; exceeding it raises QuadratureNotConvergedError.
    int max_nodes = 4096;

    /// Required admissibility margin as a fraction of the radius.
    double min_margin = 0.05;

    /// Number of candidate radii in the geometric radius scan.
    int radius_scan_points = 32;

    /// The contour disk is kept within this fraction of the analyticity
    /// radius bound.
    double rho_safety = 0.9;

    /// Radius ceiling used when the data are entire (rho = inf).
    double max_radius = 10.0;

    /// The radius ceiling is shrunk until |u0| and |c(u0)| stay below this
    /// on the probe ring, keeping quadrature round-off in check.
    double growth_cap = 1e3;

    /// When the margin inequality is unsatisfiable, fall back to a circle
    /// verified to enclose exactly one root of z - x + t c(u0(z)) via the
    /// pole-count integral (requires a unique real characteristic foot).
    bool pole_fallback = true;

    /// Bypass the radius search entirely and use this radius. The caller
    /// takes responsibility for admissibility.
    std::optional<double> radius_override;

    /// Worker threads for field evaluation; 0 = hardware concurrency.
    int threads = 1;
};

}  // namespace conflux
