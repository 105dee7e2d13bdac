#pragma once

#include <cstdint>
#include <vector>

#include "curvosc/model.hpp"

namespace curvosc {

// Closed-form spectra.
//
// Spectral parameter (kappa != 0):
//   chi solves chi (chi + hbar kappa) = omega^2/gamma^2 on the sphere
//   and chi (chi - hbar |kappa|) = omega^2/gamma^2 on the hyperboloid;
//   both are evaluated in the subtraction-free form
//     sphere:      chi = 2 (omega/gamma)^2 / (hypot(hbar kappa, 2 omega/gamma) + hbar kappa)
//     hyperboloid: chi = (hypot(hbar kappa, 2 omega/gamma) + hbar |kappa|)/2.
//
// One-dimensional xi-levels:
//   eps_mu = chi + (mu+1) hbar kappa            (sphere)
//          = chi - (mu+1) hbar |kappa|          (hyperboloid, mu <= mu_max)
//   E_xi(mu) = eps_mu^2 / (2 kappa); flat: hbar (omega/gamma)(mu + 1/2).
//
// Full two-dimensional levels (gamma enters as the anisotropy):
//   sphere:      E = [g chi + (g(mu+1)+nu) hk][g chi + (g(mu+1)+nu+1) hk]/(2k) - omega^2/(2k)
//   hyperboloid: E = -[g chi - (...) h|k|][g chi - (...+1) h|k|]/(2|k|) + omega^2/(2|k|)
//   flat:        E = hbar omega ((gamma+1)/2 + gamma mu + nu).
//
// On the hyperboloid the discrete spectrum is finite; mu_max and
// nu_max(mu) are the largest integers strictly below chi/(hbar|kappa|)-1
// and gamma eps_mu/(hbar|kappa|)-1 (values within 1e-12 of the boundary
// are excluded).

double chi_of(const ModelParams& p);                 // FlatCurvatureError at kappa==0
double epsilon_mu(const ModelParams& p, int mu);     // MuOutOfRangeError beyond mu_max
double xi_level(const ModelParams& p, int mu);
double xi_level_alt(const ModelParams& p, int mu);   // expanded algebraic form, kappa != 0
double level(const ModelParams& p, int mu, int nu);
double level_alt(const ModelParams& p, int mu, int nu);

// y-levels at a fixed coupling g = gamma*eps (kappa != 0):
//   sphere:      E_nu = (g + nu hk)(g + (nu+1) hk)/(2k) - omega^2/(2k)
//   hyperboloid: E_nu = -(g - nu h|k|)(g - (nu+1) h|k|)/(2|k|) + omega^2/(2|k|)
//   flat:        E_nu = hbar omega (nu + 1/2)
double y_level(const ModelParams& p, double gamma_eps, int nu);

int mu_max(const ModelParams& p);          // NotHyperbolicError unless kappa<0
int nu_max(const ModelParams& p, int mu);  // -1 when no bound nu exists for this mu

struct SpectrumEntry {
    int mu = 0, nu = 0;
    double energy = 0;
    long long key = -1;    // m*mu + n*nu when a ratio is present
};

struct DegeneracyClass {
    long long key = 0;
    std::vector<std::size_t> members; // indices into Spectrum::entries
    double energy = 0;                // mean over members
    double spread = 0;                // max - min over members
};

struct Spectrum {
    std::vector<SpectrumEntry> entries;   // sorted by (energy, mu)
    std::vector<DegeneracyClass> classes; // sorted by energy; empty without ratio
    std::vector<int> exhausted_mu;        // hyperboloid mu <= mu_max with no bound nu
};

struct EnumerationCutoff {
    enum class Kind { Energy, Key };
    Kind kind = Kind::Energy;
    double max_energy = 0;
    long long max_key = 0;  // Kind::Key requires a ratio

    static EnumerationCutoff by_energy(double e);
    static EnumerationCutoff by_key(long long k);
};

Spectrum enumerate_levels(const ModelParams& p, const EnumerationCutoff& cut);

} // namespace curvosc
