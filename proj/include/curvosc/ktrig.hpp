#pragma once

#include "curvosc/errors.hpp"

namespace curvosc {

// Curvature-labeled trigonometry.  For curvature kappa:
//
//   C_kappa(u) = cos(sqrt(kappa) u)            kappa > 0
//              = 1                             kappa = 0
//              = cosh(sqrt(-kappa) u)          kappa < 0
//
//   S_kappa(u) = sin(sqrt(kappa) u)/sqrt(kappa),  u,  sinh(sqrt(-kappa) u)/sqrt(-kappa)
//   T_kappa(u) = S_kappa(u) / C_kappa(u)
//
// Identities (enforced by the verification suite):
//   C^2 + kappa S^2 = 1,   1 + kappa T^2 = 1/C^2,
//   C(2u) = C(u)^2 - kappa S(u)^2,   S(2u) = 2 S(u) C(u),
//   C' = -kappa S,  S' = C,  T' = 1/C^2.
//
// For |kappa| u^2 below SERIES_THRESHOLD the functions are evaluated by a
// truncated Taylor series in kappa*u^2 so that the flat limit is smooth to
// machine precision.  T_kappa throws PoleError within POLE_FLOOR of a zero
// of C_kappa.

inline constexpr double SERIES_THRESHOLD = 1e-8;  // on |kappa|*u^2
inline constexpr double POLE_FLOOR       = 1e-12; // on |C_kappa(u)|

enum class CurvatureSign { Sphere, Flat, Hyperboloid };

// Classification is by the exact floating-point sign of kappa.
CurvatureSign curvature_sign(double kappa);

struct KTrigValues {
    double c, s, t;
};

struct KTrigDerivatives {
    double dc, ds, dt; // d/du of C, S, T at the same point
};

double c_k(double kappa, double u);
double s_k(double kappa, double u);
double t_k(double kappa, double u);                 // PoleError near C==0
KTrigValues ktrig_eval(double kappa, double u);     // PoleError near C==0
KTrigDerivatives ktrig_derivatives(double kappa, double u);

// Inverse of S_kappa on its principal branch.  For kappa>0 requires
// |sqrt(kappa) v| <= 1 (DomainError otherwise).
double arc_s_k(double kappa, double v);

} // namespace curvosc
