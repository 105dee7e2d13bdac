#pragma once

#include "curvosc/model.hpp"

namespace curvosc {

// Coordinate charts on the surface of curvature kappa.
//
// Geodesic parallel coordinates (x, y): distances along/from a base
// geodesic.  Domain for kappa > 0:
//   -pi/sqrt(kappa) < x <= pi/sqrt(kappa),  |y| < pi/(2 sqrt(kappa)).
// Geodesic polar coordinates (r, phi): r > 0 (and r < pi/sqrt(kappa)
// on the sphere), phi in [0, 2 pi).
//
// Ambient model: point (x0, x1, x2) with x0^2 + kappa (x1^2 + x2^2) = 1
// (kappa != 0; x0 >= 1 on the hyperboloid sheet).  The flat plane embeds
// as x0 = 1 with (x1, x2) Cartesian.

struct ParallelPoint {
    double x = 0, y = 0;
};

struct PolarPoint {
    double r = 0, phi = 0;
};

struct AmbientPoint {
    double x0 = 0, x1 = 0, x2 = 0;
};

// +inf when kappa <= 0.
double x_half_range(double kappa); // pi/sqrt(kappa)
double y_wall(double kappa);       // pi/(2 sqrt(kappa))

// Strict domain checks; DomainError on violation, never clamping.
void validate_parallel(double kappa, const ParallelPoint& q);
void validate_polar(double kappa, const PolarPoint& q);

AmbientPoint parallel_to_ambient(double kappa, const ParallelPoint& q);
AmbientPoint polar_to_ambient(double kappa, const PolarPoint& q);

ParallelPoint polar_to_parallel(double kappa, const PolarPoint& q);
PolarPoint parallel_to_polar(double kappa, const ParallelPoint& q);

// x0^2 + kappa (x1^2 + x2^2) - 1 for kappa != 0; |x0 - 1| when flat.
double ambient_constraint_residual(double kappa, const AmbientPoint& a);

// Kinetic energy in each chart:
//   parallel: (1/2)(px^2 / C^2(y) + py^2)
//   polar:    (1/2)(pr^2 + pphi^2 / S^2(r))
double kinetic_energy(double kappa, const PhasePoint& s);
double kinetic_energy_polar(double kappa, double r, double pr, double pphi);

} // namespace curvosc
