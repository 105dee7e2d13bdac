#pragma once

#include <array>
#include <complex>
#include <functional>
#include <random>

#include "curvosc/model.hpp"

namespace curvosc {

// Classical mechanics of the curved anisotropic oscillator.
//
// All functions accept a phase point in geodesic parallel coordinates.
// The one-dimensional sub-Hamiltonian uses xi = gamma x, p_xi = px/gamma:
//
//   H_xi = p_xi^2/2 + omega^2 / (2 kappa gamma^2 C^2(xi))   (kappa != 0)
//        = p_xi^2/2 + omega^2 xi^2 / (2 gamma^2)            (kappa == 0)
//
// and the ladder energy scale is calE = sqrt(2 kappa H_xi), which tends
// to omega/gamma in the flat limit.  For kappa < 0 the square root only
// exists in the bound regime; outside it cal_e throws
// ScatteringRegimeError.

double hamiltonian(const ModelParams& p, const PhasePoint& s);

// Algebraic rearrangement of the same Hamiltonian through H_xi
// (kappa != 0; FlatCurvatureError otherwise).  Used as a cross-check:
//   H = py^2/2 + (1/C^2(y)) (px^2/2 + omega^2/(2 kappa C^2(gamma x)))
//     - omega^2/(2 kappa)
double hamiltonian_alt(const ModelParams& p, const PhasePoint& s);

double h_xi(const ModelParams& p, const PhasePoint& s);
double cal_e(const ModelParams& p, const PhasePoint& s);

// Ladder and shift functions; sign is +1 or -1.
//   B(+/-) = -/+ (i/sqrt2) C(xi) p_xi + (calE/sqrt2) S(xi)
//   A(+/-) = -/+ (i/sqrt2) p_y - (gamma calE/sqrt2) T(y)
// Flat forms replace calE S(xi) -> (omega/gamma) xi and
// gamma calE T(y) -> omega y.
std::complex<double> ladder_b(const ModelParams& p, const PhasePoint& s, int sign);
std::complex<double> shift_a(const ModelParams& p, const PhasePoint& s, int sign);

// Power product X(+/-) = B^n A^m for gamma = m/n (ratio required).
std::complex<double> symmetry_x(const ModelParams& p, const PhasePoint& s, int sign);

// Real constants of motion extracted from X+.  Writing X+ = U + iV:
//   m+n even:          X = U,        Y = V / calE
//   m+n odd (curved):  X = U / calE, Y = V
//   flat:              X = U,        Y = V
struct SymmetryPair {
    double x_sym = 0, y_sym = 0;
};
SymmetryPair real_symmetries(const ModelParams& p, const PhasePoint& s);

// Curved angular momentum J = S(x) py - C(x) T(y) px (a constant when
// gamma = 1).
double angular_momentum(double kappa, const PhasePoint& s);

// Analytic gradient of H, ordered (dH/dx, dH/dy, dH/dpx, dH/dpy).
std::array<double, 4> grad_h(const ModelParams& p, const PhasePoint& s);

// Poisson bracket of two scalar observables by Richardson-extrapolated
// central differences; step 1e-5 (1 + |coordinate|) halved once.
using Observable = std::function<double(const PhasePoint&)>;
double poisson_bracket(const Observable& f, const Observable& g,
                       const PhasePoint& s);

// Draw a phase point in the bound regime (rejection sampling for
// kappa < 0: requires 2 kappa H_xi > 0 and H below the escape energy).
PhasePoint sample_bound_state(const ModelParams& p, std::mt19937_64& rng);

// Hand-expanded closed forms of (X, Y) for the three worked anisotropy
// ratios, used as independent cross-checks of the power product.
namespace worked {
SymmetryPair xy_ratio_1_1(const ModelParams& p, const PhasePoint& s);
SymmetryPair xy_ratio_2_1(const ModelParams& p, const PhasePoint& s);
SymmetryPair xy_ratio_1_2(const ModelParams& p, const PhasePoint& s);
SymmetryPair xy_flat_2_1(const ModelParams& p, const PhasePoint& s);
} // namespace worked

} // namespace curvosc
