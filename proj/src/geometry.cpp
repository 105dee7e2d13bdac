#include "curvosc/geometry.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace curvosc {

namespace {
constexpr double INF = std::numeric_limits<double>::infinity();
constexpr double TWO_PI = 6.283185307179586476925286766559;
} // namespace

double x_half_range(double kappa) {
    if (kappa > 0) return M_PI / std::sqrt(kappa);
    return INF;
}

double y_wall(double kappa) {
    if (kappa > 0) return M_PI / (2.0 * std::sqrt(kappa));
    return INF;
}

void validate_parallel(double kappa, const ParallelPoint& q) {
    if (!std::isfinite(q.x) || !std::isfinite(q.y))
        throw DomainError("parallel coordinates must be finite");
    if (kappa > 0) {
        const double xr = x_half_range(kappa);
        if (q.x <= -xr || q.x > xr)
            throw DomainError("x outside (-pi/sqrt(kappa), pi/sqrt(kappa)]");
        if (std::abs(q.y) >= y_wall(kappa))
            throw DomainError("|y| must stay below the wall pi/(2 sqrt(kappa))");
    }
}

void validate_polar(double kappa, const PolarPoint& q) {
    if (!std::isfinite(q.r) || !std::isfinite(q.phi))
        throw DomainError("polar coordinates must be finite");
    if (q.r <= 0) throw DomainError("polar radius must be positive");
    if (kappa > 0 && q.r >= x_half_range(kappa))
        throw DomainError("polar radius must stay below pi/sqrt(kappa)");
    if (q.phi < 0 || q.phi >= TWO_PI)
        throw DomainError("polar angle must lie in [0, 2 pi)");
}

AmbientPoint parallel_to_ambient(double kappa, const ParallelPoint& q) {
    validate_parallel(kappa, q);
    const double cx = c_k(kappa, q.x), sx = s_k(kappa, q.x);
    const double cy = c_k(kappa, q.y), sy = s_k(kappa, q.y);
    return {cx * cy, sx * cy, sy};
}

AmbientPoint polar_to_ambient(double kappa, const PolarPoint& q) {
    validate_polar(kappa, q);
    const double cr = c_k(kappa, q.r), sr = s_k(kappa, q.r);
    return {cr, sr * std::cos(q.phi), sr * std::sin(q.phi)};
}

ParallelPoint polar_to_parallel(double kappa, const PolarPoint& q) {
    const AmbientPoint a = polar_to_ambient(kappa, q);
    // y from x2 = S(y); x from the remaining geodesic rotation.
    const double y = arc_s_k(kappa, a.x2);
    double x;
    if (kappa > 0) {
        const double rk = std::sqrt(kappa);
        double x1 = a.x1;
        if (x1 == 0.0) x1 = 0.0; // normalize -0 so atan2 picks +pi at the seam
        x = std::atan2(rk * x1, a.x0) / rk;
    } else {
        // x1 = S(x) C(y); C(y) >= 1 here, never zero.
        x = arc_s_k(kappa, a.x1 / c_k(kappa, y));
    }
    const ParallelPoint out{x, y};
    validate_parallel(kappa, out); // the y-wall preimage is not representable
    return out;
}

PolarPoint parallel_to_polar(double kappa, const ParallelPoint& q) {
    const AmbientPoint a = parallel_to_ambient(kappa, q);
    const double rho = std::hypot(a.x1, a.x2);
    double r;
    if (kappa > 0) {
        const double rk = std::sqrt(kappa);
        r = std::atan2(rk * rho, a.x0) / rk;
    } else {
        r = arc_s_k(kappa, rho);
    }
    double phi = std::atan2(a.x2, a.x1);
    if (phi < 0) phi += TWO_PI;
    if (phi >= TWO_PI) phi = 0.0; // a denormal negative angle rounds up to 2 pi
    const PolarPoint out{r, phi};
    validate_polar(kappa, out);
    return out;
}

double ambient_constraint_residual(double kappa, const AmbientPoint& a) {
    if (kappa == 0.0) return std::abs(a.x0 - 1.0);
    return a.x0 * a.x0 + kappa * (a.x1 * a.x1 + a.x2 * a.x2) - 1.0;
}

double kinetic_energy(double kappa, const PhasePoint& s) {
    const double cy = c_k(kappa, s.y);
    if (std::abs(cy) < POLE_FLOOR)
        throw PoleError("kinetic energy evaluated at the y wall");
    return 0.5 * (s.px * s.px / (cy * cy) + s.py * s.py);
}

double kinetic_energy_polar(double kappa, double r, double pr, double pphi) {
    validate_polar(kappa, PolarPoint{r, 0.0});
    const double sr = s_k(kappa, r);
    return 0.5 * (pr * pr + pphi * pphi / (sr * sr));
}

} // namespace curvosc
