#include "curvosc/model.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace curvosc {

ModelParams::ModelParams(double kappa_, double omega_, double gamma_,
                         double hbar_, std::optional<Ratio> ratio_)
    : kappa(kappa_), omega(omega_), gamma(gamma_), hbar(hbar_), ratio(ratio_) {
    if (!std::isfinite(kappa) || !std::isfinite(omega) || !std::isfinite(gamma) ||
        !std::isfinite(hbar))
        throw DomainError("model parameters must be finite");
    if (omega <= 0) throw DomainError("omega must be positive");
    if (gamma <= 0) throw DomainError("gamma must be positive");
    if (hbar <= 0) throw DomainError("hbar must be positive");
    if (kappa > 0 && gamma < 0.5)
        throw DomainError("kappa > 0 requires gamma >= 1/2 (the gamma*x wall would "
                          "cut inside the chart)");
    if (ratio) {
        if (ratio->m < 1 || ratio->n < 1)
            throw DomainError("ratio components must be positive integers");
        if (std::gcd(ratio->m, ratio->n) != 1)
            throw DomainError("ratio must be in lowest terms");
        const double r = static_cast<double>(ratio->m) / ratio->n;
        if (std::abs(gamma - r) >= 1e-12)
            throw DomainError("gamma does not match the declared ratio " +
                              std::to_string(ratio->m) + "/" + std::to_string(ratio->n));
    }
}

ModelParams params_from_ratio(double kappa, double omega, Ratio ratio, double hbar) {
    if (ratio.m < 1 || ratio.n < 1)
        throw DomainError("ratio components must be positive integers");
    const double gamma = static_cast<double>(ratio.m) / ratio.n;
    return ModelParams(kappa, omega, gamma, hbar, ratio);
}

} // namespace curvosc
