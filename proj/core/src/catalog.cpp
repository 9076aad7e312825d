#include "conflux/catalog.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "conflux/errors.hpp"

namespace conflux {

namespace {

/// Pulls parameters out of a key/value map and rejects leftovers, so typos
/// in config files fail loudly.
class ParamReader {
  public:
    ParamReader(std::string family, const Params& params) : family_(std::move(family)), params_(params) {}

    double take(const std::string& key, double fallback) {
        auto it = params_.find(key);
        if (it == params_.end()) return fallback;
        const double v = it->second;
        params_.erase(it);
        return v;
    }

    void finish() const {
        if (params_.empty()) return;
        throw InvalidParamError("unknown parameter '" + params_.begin()->first + "' for " + family_);
    }

  private:
    std::string family_;
    Params params_;
};

AnalyticFn constant_fn(double value, std::string name) {
    return AnalyticFn{
        [value](cplx) { return cplx(value, 0.0); },
        [](cplx) { return cplx(0.0, 0.0); },
        [](double) { return kInfiniteRadius; },
        std::move(name),
    };
}

cplx pow_int(cplx z, int n) {
    cplx r(1.0, 0.0);
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

}  // namespace

FluxSpec make_flux(const std::string& name, const Params& params) {
    ParamReader reader(name, params);
    FluxSpec spec;
    spec.name = name;
    spec.params = params;

    if (name == "transport") {
        const double a = reader.take("a", 1.0);
        reader.finish();
        spec.f = AnalyticFn{[a](cplx u) { return a * u; },
                            [a](cplx) { return cplx(a, 0.0); },
                            [](double) { return kInfiniteRadius; },
                            "transport.f"};
        spec.c = constant_fn(a, "transport.c");
        spec.c_prime = constant_fn(0.0, "transport.c'");
        return spec;
    }

    if (name == "burgers") {
        reader.finish();
        spec.f = AnalyticFn{[](cplx u) { return 0.5 * u * u; },
                            [](cplx u) { return u; },
                            [](double) { return kInfiniteRadius; },
                            "burgers.f"};
        spec.c = AnalyticFn{[](cplx u) { return u; },
                            [](cplx) { return cplx(1.0, 0.0); },
                            [](double) { return kInfiniteRadius; },
                            "burgers.c"};
        spec.c_prime = constant_fn(1.0, "burgers.c'");
        return spec;
    }

    if (name == "cubic") {
        reader.finish();
        spec.f = AnalyticFn{[](cplx u) { return u * u * u / 3.0; },
                            [](cplx u) { return u * u; },
                            [](double) { return kInfiniteRadius; },
                            "cubic.f"};
        spec.c = AnalyticFn{[](cplx u) { return u * u; },
                            [](cplx u) { return 2.0 * u; },
                            [](double) { return kInfiniteRadius; },
                            "cubic.c"};
        spec.c_prime = AnalyticFn{[](cplx u) { return 2.0 * u; },
                                  [](cplx) { return cplx(2.0, 0.0); },
                                  [](double) { return kInfiniteRadius; },
                                  "cubic.c'"};
        return spec;
    }

    if (name == "buckley_leverett") {
        const double M = reader.take("M", 1.0);
        reader.finish();
        if (!(M > 0.0)) throw InvalidParamError("buckley_leverett requires M > 0");

        // Denominator D(u) = u^2 + M (1-u)^2 vanishes at u = (M +- i sqrt(M)) / (1+M).
        const double pole_re = M / (1.0 + M);
        const double pole_im = std::sqrt(M) / (1.0 + M);
        auto rho = [pole_re, pole_im](double u) {
            return std::hypot(u - pole_re, pole_im);
        };
        auto denom = [M](cplx u) {
            const cplx one(1.0, 0.0);
            const cplx d = u * u + M * (one - u) * (one - u);
            if (std::abs(d) == 0.0)
                throw EvaluationError("buckley_leverett flux evaluated at a pole of the mobility ratio");
            return d;
        };
        auto denom_deriv = [M](cplx u) { return 2.0 * ((1.0 + M) * u - M); };

        spec.f = AnalyticFn{[denom](cplx u) { return u * u / denom(u); },
                            [M, denom](cplx u) {
                                const cplx d = denom(u);
                                return 2.0 * M * u * (cplx(1.0, 0.0) - u) / (d * d);
                            },
                            rho, "buckley_leverett.f"};
        spec.c = AnalyticFn{[M, denom](cplx u) {
                                const cplx d = denom(u);
                                return 2.0 * M * u * (cplx(1.0, 0.0) - u) / (d * d);
                            },
                            [M, denom, denom_deriv](cplx u) {
                                const cplx d = denom(u);
                                const cplx num = (1.0 - 2.0 * u) * d - 4.0 * (u - u * u) * ((1.0 + M) * u - M);
                                return 2.0 * M * num / (d * d * d);
                            },
                            rho, "buckley_leverett.c"};
        spec.c_prime = AnalyticFn{[M, denom, denom_deriv](cplx u) {
                                      const cplx d = denom(u);
                                      const cplx num =
                                          (1.0 - 2.0 * u) * d - 4.0 * (u - u * u) * ((1.0 + M) * u - M);
                                      return 2.0 * M * num / (d * d * d);
                                  },
                                  [M, denom, denom_deriv](cplx u) {
                                      // d/du of c'(u) = 2M [ (1-2u) D - 2 (u-u^2) D' ] / D^3.
                                      const cplx d = denom(u);
                                      const cplx dp = denom_deriv(u);
                                      const cplx g = (1.0 - 2.0 * u) * d - 2.0 * (u - u * u) * dp;
                                      const cplx gp = -2.0 * d + (1.0 - 2.0 * u) * dp -
                                                      2.0 * (1.0 - 2.0 * u) * dp -
                                                      2.0 * (u - u * u) * cplx(2.0 * (1.0 + M), 0.0);
                                      return 2.0 * M * (gp * d - 3.0 * g * dp) / (d * d * d * d);
                                  },
                                  rho, "buckley_leverett.c'"};
        return spec;
    }

    if (name == "lwr_traffic") {
        const double v = reader.take("v", 1.0);
        const double K = reader.take("K", 1.0);
        reader.finish();
        if (!(K > 0.0)) throw InvalidParamError("lwr_traffic requires K > 0");
        spec.f = AnalyticFn{[v, K](cplx u) { return v * u * (cplx(1.0, 0.0) - u / K); },
                            [v, K](cplx u) { return v * (cplx(1.0, 0.0) - 2.0 * u / K); },
                            [](double) { return kInfiniteRadius; },
                            "lwr_traffic.f"};
        spec.c = AnalyticFn{[v, K](cplx u) { return v * (cplx(1.0, 0.0) - 2.0 * u / K); },
                            [v, K](cplx) { return cplx(-2.0 * v / K, 0.0); },
                            [](double) { return kInfiniteRadius; },
                            "lwr_traffic.c"};
        spec.c_prime = constant_fn(-2.0 * v / K, "lwr_traffic.c'");
        return spec;
    }

    throw UnknownFluxError("unknown flux family '" + name + "'");
}

AnalyticFn make_initial(const std::string& name, const Params& params) {
    ParamReader reader(name, params);

    if (name == "sine") {
        const double a = reader.take("a", 1.0);
        const double k = reader.take("k", 1.0);
        const double phi = reader.take("phi", 0.0);
        const double b = reader.take("b", 0.0);
        reader.finish();
        return AnalyticFn{[a, k, phi, b](cplx z) { return a * std::sin(k * z + phi) + b; },
                          [a, k, phi](cplx z) { return a * k * std::cos(k * z + phi); },
                          [](double) { return kInfiniteRadius; },
                          "sine"};
    }

    if (name == "gaussian") {
        const double a = reader.take("a", 1.0);
        const double s = reader.take("s", 1.0);
        reader.finish();
        if (!(s > 0.0)) throw InvalidParamError("gaussian requires s > 0");
        const double inv_s2 = 1.0 / (s * s);
        return AnalyticFn{[a, inv_s2](cplx z) { return a * std::exp(-z * z * inv_s2); },
                          [a, inv_s2](cplx z) { return -2.0 * z * inv_s2 * a * std::exp(-z * z * inv_s2); },
                          [](double) { return kInfiniteRadius; },
                          "gaussian"};
    }

    if (name == "lorentzian") {
        const double a = reader.take("a", 1.0);
        reader.finish();
        auto denom = [](cplx z) {
            const cplx d = cplx(1.0, 0.0) + z * z;
            if (std::abs(d) == 0.0)
                throw EvaluationError("lorentzian evaluated at a pole (z = +-i)");
            return d;
        };
        return AnalyticFn{[a, denom](cplx z) { return a / denom(z); },
                          [a, denom](cplx z) {
                              const cplx d = denom(z);
                              return -2.0 * a * z / (d * d);
                          },
                          [](double x) { return std::hypot(x, 1.0); },  // poles at +-i
                          "lorentzian"};
    }

    if (name == "polynomial") {
        // Coefficient keys c0, c1, ...; absent orders are zero.
        std::vector<double> coeffs;
        for (const auto& [key, value] : params) {
            if (key.size() < 2 || key[0] != 'c')
                throw InvalidParamError("polynomial parameters must be c0, c1, ...; got '" + key + "'");
            char* end = nullptr;
            const long idx = std::strtol(key.c_str() + 1, &end, 10);
            if (*end != '\0' || idx < 0 || idx > 64)
                throw InvalidParamError("polynomial parameters must be c0..c64; got '" + key + "'");
            if (static_cast<size_t>(idx) >= coeffs.size()) coeffs.resize(idx + 1, 0.0);
            coeffs[idx] = value;
        }
        if (coeffs.empty()) coeffs.push_back(0.0);
        std::vector<double> dcoeffs;
        for (size_t k = 1; k < coeffs.size(); ++k) dcoeffs.push_back(coeffs[k] * static_cast<double>(k));
        if (dcoeffs.empty()) dcoeffs.push_back(0.0);
        auto horner = [](const std::vector<double>& cs, cplx z) {
            cplx r(0.0, 0.0);
            for (auto it = cs.rbegin(); it != cs.rend(); ++it) r = r * z + *it;
            return r;
        };
        return AnalyticFn{[coeffs, horner](cplx z) { return horner(coeffs, z); },
                          [dcoeffs, horner](cplx z) { return horner(dcoeffs, z); },
                          [](double) { return kInfiniteRadius; },
                          "polynomial"};
    }

    if (name == "constant") {
        const double b = reader.take("b", 0.0);
        reader.finish();
        return constant_fn(b, "constant");
    }

    throw UnknownInitialError("unknown initial-condition family '" + name + "'");
}

void validate_problem(const Problem& problem) {
    // Strip half-width: half the smallest analyticity bound over the domain,
    // capped so entire data get a finite probe strip.
    double rho_min = kInfiniteRadius;
    const int nx = 33;
    for (int i = 0; i < nx; ++i) {
        const double x = problem.x_min + (problem.x_max - problem.x_min) * i / (nx - 1);
        rho_min = std::min(rho_min, problem.u0.rho(x));
    }
    if (!(rho_min > 0.0)) throw EvaluationError("initial data has non-positive analyticity radius");
    const double h = 0.5 * std::min(rho_min, 1.0);

    for (int i = 0; i < nx; ++i) {
        const double x = problem.x_min + (problem.x_max - problem.x_min) * i / (nx - 1);
        for (double y : {-h, -0.5 * h, 0.5 * h, h}) {
            const cplx z(x, y);
            const cplx u = problem.u0.eval(z);
            const cplx c = problem.flux.c.eval(u);
            if (!std::isfinite(u.real()) || !std::isfinite(u.imag()) || !std::isfinite(c.real()) ||
                !std::isfinite(c.imag()))
                throw EvaluationError("c(u0(z)) is not finite near the real domain");
        }
    }
}

}  // namespace conflux
