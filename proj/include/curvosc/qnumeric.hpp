#pragma once

#include <vector>

#include "curvosc/model.hpp"

namespace curvosc {

// Finite-difference eigensolver for the two separated one-dimensional
// problems, plus grid realizations of the ladder/shift operators.
//
// xi-problem:  -(hbar^2/2) Xi'' + [omega^2/(2 kappa gamma^2 C^2(xi))] Xi = E Xi
// y-problem:   -(hbar^2/2) Y'' + (hbar^2 kappa/2) T(y) Y'
//              + [g^2/(2 kappa C^2(y)) - omega^2/(2 kappa)] Y = E Y,  g = gamma*eps
//
// Sphere discretization: the wall behavior C^p is gauged out and the
// remaining constant-potential operator -(hbar^2/2)(1/W)(W u')' + q0 is
// discretized in conservative (exact-flux) form,
//   flux coefficient   wt_{j+1/2} = h / Int_{x_j}^{x_{j+1}} dx/W,
//   cell mass          m_j = (1/h) Int_{cell j} W dx,
// with natural boundary conditions at the walls (the flux integral
// diverges there) and a final M^{-1/2} similarity to symmetric
// tridiagonal form.  This keeps the error O(h^2) for every wall
// exponent; a plain 3-point Dirichlet scheme is used off the sphere and
// for strongly localized states (gauge exponent above FLUX_EXPONENT_CAP,
// where the wall is dynamically irrelevant).

inline constexpr double FLUX_EXPONENT_CAP = 250.0;

struct Grid1D {
    double a = 0, b = 0;
    int n = 0;
    double h() const { return (b - a) / (n + 1); }
    double node(int j) const { return a + h() * (j + 1); } // j = 0..n-1
};

// Interior grids chosen from the model scales: the full wall-to-wall
// interval on the sphere (when the localization length allows the flux
// scheme), a truncated interval of half-length
// (20/sqrt|kappa|) * max(1, hbar|kappa|/chi) on the hyperboloid, and a
// multiple of the oscillator length when flat or strongly localized.
Grid1D default_xi_grid(const ModelParams& p, int n);
Grid1D default_y_grid(const ModelParams& p, int n);

struct EigenResult {
    Grid1D grid;
    std::vector<double> value;
    // Eigenvectors of the symmetric tridiagonal operator, orthonormal
    // under the plain h-weighted dot product.
    std::vector<std::vector<double>> vec_sym;
    // Physical wavefunctions on the nodes, normalized in the natural
    // measure (dx for xi; C(y) dy for y), sign fixed so the component
    // of largest magnitude is positive.
    std::vector<std::vector<double>> wave;
    // Cell masses of the flux scheme in log scale (empty when the plain
    // scheme was used); gives direct access to the gauged representation
    // u_j = vec_sym_j * sqrt(h) * exp(-log_mass_j / 2).
    std::vector<double> log_mass;
};

EigenResult solve_xi(const ModelParams& p, const Grid1D& g, int k_levels);
EigenResult solve_y(const ModelParams& p, double gamma_eps, const Grid1D& g,
                    int k_levels);

// Independent cross-check: the y-operator discretized directly in its
// raw (non-self-adjoint) form and balanced to symmetric tridiagonal by
// an exact diagonal similarity.  Eigenvalues only.
std::vector<double> solve_y_nonsym(const ModelParams& p, double gamma_eps,
                                   const Grid1D& g, int k_levels);

// Continuum thresholds on the hyperboloid (NotHyperbolicError otherwise).
double xi_continuum_threshold(const ModelParams& p); // 0
double y_continuum_threshold(const ModelParams& p);  // omega^2/(2|k|) + hbar^2|k|/8

// Number of levels strictly below threshold - guard.
int count_bound(const std::vector<double>& levels, double threshold,
                double guard = 1e-6);

// Grid ladder residuals on eigenstates of solve_xi (needs k_levels >= mu+2):
// relative misalignment of B+(eps_mu) wave_mu with wave_{mu+1}, and the
// relative deviation of B-(eps_mu + hbar kappa) B+(eps_mu) wave_mu from its
// scalar value eps(eps+hk)/(2k) - omega^2/(2 k gamma^2).
double ladder_action_residual(const ModelParams& p, const EigenResult& xi_sol,
                              int mu);
double ladder_factorization_residual(const ModelParams& p,
                                     const EigenResult& xi_sol, int mu);

// Relative defect of the intertwining identity
//   A-(g) H(g) = H(g - hbar kappa) A-(g)
// applied to the k_basis lowest y-eigenstates at coupling g, measured in
// the h-weighted norm over the interior window (5% of cells dropped at
// each end, where one-sided stencils pollute the raw-operator residual).
double intertwine_residual(const ModelParams& p, double g, const Grid1D& grid,
                           int k_basis);

// Rayleigh quotient of (A+)^m (B+)^n applied to the product eigenstate
// (mu, nu) on the sphere with gamma = m/n; equals level(mu+n, nu-m) =
// level(mu, nu) up to O(h^2).  Uses matched xi/y grids with n interior
// nodes each.
double composite_rayleigh(const ModelParams& p, int mu, int nu, int n);

} // namespace curvosc
