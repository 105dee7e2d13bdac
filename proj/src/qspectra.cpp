#include "curvosc/qspectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <string>

namespace curvosc {

namespace {

// Largest integer strictly below t, excluding values within 1e-12 of the
// boundary itself.
int strict_int_below(double t) {
    return static_cast<int>(std::floor(t - 1e-12));
}

} // namespace

double chi_of(const ModelParams& p) {
    if (p.kappa == 0.0)
        throw FlatCurvatureError("chi is undefined at kappa == 0 (its flat limit "
                                 "is omega/gamma)");
    const double hk = p.hbar * p.kappa;
    const double wg = p.omega / p.gamma;
    const double disc = std::hypot(hk, 2.0 * wg);
    if (p.kappa > 0) return 2.0 * wg * wg / (disc + hk); // == (disc - hk)/2, stably
    return 0.5 * (disc + std::abs(hk));
}

int mu_max(const ModelParams& p) {
    if (p.kappa >= 0)
        throw NotHyperbolicError("mu_max is finite only for kappa < 0");
    const double t = chi_of(p) / (p.hbar * std::abs(p.kappa)) - 1.0;
    return strict_int_below(t);
}

double epsilon_mu(const ModelParams& p, int mu) {
    if (mu < 0) throw MuOutOfRangeError("mu must be >= 0");
    const double chi = chi_of(p); // throws when flat
    if (p.kappa > 0) return chi + (mu + 1) * p.hbar * p.kappa;
    if (mu > mu_max(p))
        throw MuOutOfRangeError("mu = " + std::to_string(mu) +
                                " beyond the last bound level mu_max = " +
                                std::to_string(mu_max(p)));
    return chi - (mu + 1) * p.hbar * std::abs(p.kappa);
}

int nu_max(const ModelParams& p, int mu) {
    if (p.kappa >= 0)
        throw NotHyperbolicError("nu_max is finite only for kappa < 0");
    const double ge = p.gamma * epsilon_mu(p, mu);
    const double t = ge / (p.hbar * std::abs(p.kappa)) - 1.0;
    return std::max(strict_int_below(t), -1);
}

double xi_level(const ModelParams& p, int mu) {
    if (mu < 0) throw MuOutOfRangeError("mu must be >= 0");
    if (p.kappa == 0.0) return p.hbar * (p.omega / p.gamma) * (mu + 0.5);
    const double eps = epsilon_mu(p, mu);
    return eps * eps / (2.0 * p.kappa);
}

double xi_level_alt(const ModelParams& p, int mu) {
    if (mu < 0) throw MuOutOfRangeError("mu must be >= 0");
    if (p.kappa == 0.0)
        throw FlatCurvatureError("alternative form needs kappa != 0");
    if (p.kappa < 0 && mu > mu_max(p))
        throw MuOutOfRangeError("mu beyond mu_max");
    const double h = p.hbar, k = p.kappa, g = p.gamma, w = p.omega;
    const double ak = std::abs(k);
    const double disc = std::hypot(h * k, 2.0 * w / g);
    const double sgn = k > 0 ? 1.0 : -1.0;
    return 0.25 * h * (1 + 2 * mu) * disc +
           sgn * (0.25 * h * h * ak * (1 + 2 * mu + 2 * mu * mu) +
                  w * w / (2.0 * ak * g * g));
}

double level(const ModelParams& p, int mu, int nu) {
    if (mu < 0 || nu < 0) throw MuOutOfRangeError("quantum numbers must be >= 0");
    const double h = p.hbar, g = p.gamma, w = p.omega;
    if (p.kappa == 0.0) return h * w * (0.5 * (g + 1.0) + g * mu + nu);
    const double k = p.kappa, ak = std::abs(k);
    const double chi = chi_of(p);
    if (k > 0) {
        const double a = g * chi + (g * (mu + 1) + nu) * h * k;
        const double b = g * chi + (g * (mu + 1) + nu + 1) * h * k;
        return a * b / (2.0 * k) - w * w / (2.0 * k);
    }
    if (mu > mu_max(p)) throw MuOutOfRangeError("mu beyond mu_max");
    if (nu > nu_max(p, mu))
        throw MuOutOfRangeError("nu = " + std::to_string(nu) +
                                " beyond nu_max for mu = " + std::to_string(mu));
    const double a = g * chi - (g * (mu + 1) + nu) * h * ak;
    const double b = g * chi - (g * (mu + 1) + nu + 1) * h * ak;
    return -a * b / (2.0 * ak) + w * w / (2.0 * ak);
}

double level_alt(const ModelParams& p, int mu, int nu) {
    if (mu < 0 || nu < 0) throw MuOutOfRangeError("quantum numbers must be >= 0");
    if (p.kappa == 0.0)
        throw FlatCurvatureError("alternative form needs kappa != 0");
    const double h = p.hbar, g = p.gamma, k = p.kappa, ak = std::abs(k);
    const double chi = chi_of(p);
    if (k > 0) {
        const double exi = xi_level(p, mu);
        const double eps = chi + (mu + 1) * h * k;
        return g * g * (exi - p.omega * p.omega / (2.0 * k * g * g)) +
               0.5 * h * g * eps * (2 * nu + 1) + 0.5 * h * h * k * nu * (nu + 1);
    }
    const double exi = xi_level(p, mu); // range checks happen here
    if (nu > nu_max(p, mu)) throw MuOutOfRangeError("nu beyond nu_max");
    const double eps = chi - (mu + 1) * h * ak;
    return g * g * (exi + p.omega * p.omega / (2.0 * ak * g * g)) +
           0.5 * h * g * eps * (2 * nu + 1) - 0.5 * h * h * ak * nu * (nu + 1);
}

double y_level(const ModelParams& p, double gamma_eps, int nu) {
    if (nu < 0) throw MuOutOfRangeError("nu must be >= 0");
    const double h = p.hbar, w = p.omega, k = p.kappa;
    if (k == 0.0) return h * w * (nu + 0.5);
    if (k > 0) {
        const double a = gamma_eps + nu * h * k;
        const double b = gamma_eps + (nu + 1) * h * k;
        return a * b / (2.0 * k) - w * w / (2.0 * k);
    }
    const double ak = std::abs(k);
    const double a = gamma_eps - nu * h * ak;
    const double b = gamma_eps - (nu + 1) * h * ak;
    return -a * b / (2.0 * ak) + w * w / (2.0 * ak);
}

EnumerationCutoff EnumerationCutoff::by_energy(double e) {
    EnumerationCutoff c;
    c.kind = Kind::Energy;
    c.max_energy = e;
    return c;
}

EnumerationCutoff EnumerationCutoff::by_key(long long k) {
    EnumerationCutoff c;
    c.kind = Kind::Key;
    c.max_key = k;
    return c;
}

Spectrum enumerate_levels(const ModelParams& p, const EnumerationCutoff& cut) {
    if (cut.kind == EnumerationCutoff::Kind::Key) {
        if (!p.ratio) throw DomainError("key cutoff needs a commensurate ratio");
        if (cut.max_key < 0) throw DomainError("key cutoff must be >= 0");
    }

    Spectrum sp;
    const bool hyperbolic = p.kappa < 0;
    const int mu_hi = hyperbolic ? mu_max(p) : std::numeric_limits<int>::max();

    auto key_of = [&](int mu, int nu) -> long long {
        if (!p.ratio) return -1;
        return static_cast<long long>(p.ratio->m) * mu +
               static_cast<long long>(p.ratio->n) * nu;
    };
    auto admitted = [&](int mu, int nu, double e) {
        if (cut.kind == EnumerationCutoff::Kind::Energy)
            return e <= cut.max_energy;
        return key_of(mu, nu) <= cut.max_key;
    };

    for (int mu = 0; mu <= mu_hi; ++mu) {
        const int nu_hi = hyperbolic ? nu_max(p, mu) : std::numeric_limits<int>::max();
        if (hyperbolic && nu_hi < 0) {
            sp.exhausted_mu.push_back(mu);
            continue;
        }
        bool any = false;
        for (int nu = 0; nu <= nu_hi; ++nu) {
            const double e = level(p, mu, nu);
            if (!admitted(mu, nu, e)) break; // monotone increasing in nu
            sp.entries.push_back({mu, nu, e, key_of(mu, nu)});
            any = true;
        }
        if (!hyperbolic && !any) break; // monotone increasing in mu as well
        if (mu == std::numeric_limits<int>::max()) break;
    }

    std::sort(sp.entries.begin(), sp.entries.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) {
                  if (a.energy != b.energy) return a.energy < b.energy;
                  if (a.mu != b.mu) return a.mu < b.mu;
                  return a.nu < b.nu;
              });

    if (p.ratio) {
        std::map<long long, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < sp.entries.size(); ++i)
            groups[sp.entries[i].key].push_back(i);
        for (auto& [key, members] : groups) {
            DegeneracyClass cls;
            cls.key = key;
            cls.members = members;
            double lo = sp.entries[members.front()].energy, hi = lo, sum = 0;
            for (std::size_t i : members) {
                const double e = sp.entries[i].energy;
                lo = std::min(lo, e);
                hi = std::max(hi, e);
                sum += e;
            }
            cls.energy = sum / static_cast<double>(members.size());
            cls.spread = hi - lo;
            sp.classes.push_back(std::move(cls));
        }
        std::sort(sp.classes.begin(), sp.classes.end(),
                  [](const DegeneracyClass& a, const DegeneracyClass& b) {
                      if (a.energy != b.energy) return a.energy < b.energy;
                      return a.key < b.key;
                  });
    }
    return sp;
}

} // namespace curvosc
