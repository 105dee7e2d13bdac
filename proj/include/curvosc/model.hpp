#pragma once

#include <optional>

#include "curvosc/errors.hpp"
#include "curvosc/ktrig.hpp"

namespace curvosc {

// Commensurate anisotropy ratio gamma = m/n in lowest terms.
struct Ratio {
    int m = 1;
    int n = 1;
};

// Parameters of the anisotropic oscillator on the constant-curvature
// surface of curvature kappa:
//
//   H = (1/2)(px^2/C^2(y) + py^2)
//     + (omega^2/2)(T^2(gamma x)/C^2(y) + T^2(y))
//
// Invariants enforced at construction:
//   omega > 0, gamma > 0, hbar > 0, all finite;
//   kappa > 0 requires gamma >= 1/2 (the gamma*x wall must not cut the
//   chart in half more than the y wall does);
//   if a ratio is given: m,n >= 1, gcd(m,n) = 1, |gamma - m/n| < 1e-12.
struct ModelParams {
    double kappa;
    double omega;
    double gamma;
    double hbar;
    std::optional<Ratio> ratio;

    ModelParams(double kappa_, double omega_, double gamma_,
                double hbar_ = 1.0, std::optional<Ratio> ratio_ = std::nullopt);

    CurvatureSign sign() const { return curvature_sign(kappa); }
    bool has_ratio() const { return ratio.has_value(); }
};

// Convenience: gamma taken from the ratio itself.
ModelParams params_from_ratio(double kappa, double omega, Ratio ratio,
                              double hbar = 1.0);

// A phase-space point in geodesic parallel coordinates.
struct PhasePoint {
    double x = 0, y = 0, px = 0, py = 0;
};

} // namespace curvosc
