#include "curvosc/ktrig.hpp"

#include <cmath>
#include <string>

namespace curvosc {

CurvatureSign curvature_sign(double kappa) {
    if (!std::isfinite(kappa))
        throw DomainError("curvature must be finite");
    if (kappa > 0) return CurvatureSign::Sphere;
    if (kappa < 0) return CurvatureSign::Hyperboloid;
    return CurvatureSign::Flat;
}

namespace {

// Taylor expansions in z = kappa u^2, valid (and used) for |z| < 1e-8;
// the truncation error is O(z^4) ~ 1e-32, below double rounding.
double c_series(double z) {
    return 1.0 + z * (-0.5 + z * (1.0 / 24.0 - z / 720.0));
}

double s_series(double u, double z) {
    return u * (1.0 + z * (-1.0 / 6.0 + z * (1.0 / 120.0 - z / 5040.0)));
}

} // namespace

double c_k(double kappa, double u) {
    const double z = kappa * u * u;
    if (std::abs(z) < SERIES_THRESHOLD) return c_series(z);
    if (kappa > 0) return std::cos(std::sqrt(kappa) * u);
    return std::cosh(std::sqrt(-kappa) * u);
}

double s_k(double kappa, double u) {
    const double z = kappa * u * u;
    if (std::abs(z) < SERIES_THRESHOLD) return s_series(u, z);
    if (kappa > 0) {
        const double rk = std::sqrt(kappa);
        return std::sin(rk * u) / rk;
    }
    const double rk = std::sqrt(-kappa);
    return std::sinh(rk * u) / rk;
}

double t_k(double kappa, double u) {
    const double c = c_k(kappa, u);
    if (std::abs(c) < POLE_FLOOR)
        throw PoleError("T_kappa evaluated within the pole guard band (|C| < 1e-12) at u=" +
                        std::to_string(u));
    return s_k(kappa, u) / c;
}

KTrigValues ktrig_eval(double kappa, double u) {
    const double c = c_k(kappa, u);
    if (std::abs(c) < POLE_FLOOR)
        throw PoleError("T_kappa evaluated within the pole guard band (|C| < 1e-12) at u=" +
                        std::to_string(u));
    const double s = s_k(kappa, u);
    return {c, s, s / c};
}

KTrigDerivatives ktrig_derivatives(double kappa, double u) {
    const KTrigValues v = ktrig_eval(kappa, u);
    // C' = -kappa S, S' = C, T' = 1/C^2.
    return {-kappa * v.s, v.c, 1.0 / (v.c * v.c)};
}

double arc_s_k(double kappa, double v) {
    if (!std::isfinite(v)) throw DomainError("arc_s_k: argument must be finite");
    const double z = kappa * v * v;
    if (std::abs(z) < SERIES_THRESHOLD)
        return v * (1.0 + z * (1.0 / 6.0 + z * (3.0 / 40.0)));
    if (kappa > 0) {
        const double rk = std::sqrt(kappa);
        const double w = rk * v;
        if (std::abs(w) > 1.0)
            throw DomainError("arc_s_k: |sqrt(kappa) v| > 1 has no preimage");
        return std::asin(w) / rk;
    }
    const double rk = std::sqrt(-kappa);
    return std::asinh(rk * v) / rk;
}

} // namespace curvosc
