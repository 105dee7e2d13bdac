#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvosc/classical.hpp"

namespace curvosc {

// Trajectory integration.  The default method is the implicit midpoint
// rule (symplectic for this non-separable Hamiltonian); RK4 is provided
// as a non-symplectic cross-check.

enum class Method { ImplicitMidpoint, RK4 };

struct IntegratorConfig {
    double dt = 0.0;      // <= 0 selects the default 1e-3 * (2 pi / omega)
    double t_end = 0.0;
    Method method = Method::ImplicitMidpoint;
    double newton_tol = 1e-13;
    int newton_max_iter = 50;
};

// Distance floor to a coordinate wall: a step that lands with
// |C(y)| or |C(gamma x)| below this throws WallProximityError.
inline constexpr double WALL_FLOOR = 1e-8;

struct Trajectory {
    std::vector<double> t;
    std::vector<PhasePoint> state;
    // Conserved-quantity logs sampled at every stored step, in fixed
    // order: "H", "Hxi", then "X", "Y" when a ratio is present and the
    // state is in the bound regime, then "J" when gamma == 1.
    std::vector<std::pair<std::string, std::vector<double>>> logs;

    bool has_log(std::string_view name) const;
    const std::vector<double>& log(std::string_view name) const; // DomainError if absent
};

Trajectory integrate(const ModelParams& p, const PhasePoint& s0,
                     const IntegratorConfig& cfg);

// Single steps (exposed for tests).
PhasePoint midpoint_step(const ModelParams& p, const PhasePoint& s,
                         double dt, double tol, int max_iter);
PhasePoint rk4_step(const ModelParams& p, const PhasePoint& s, double dt);

// max_k |q_k - q_0| / max(|q_0|, 1e-12) over a named log.
double conservation_drift(const Trajectory& traj, std::string_view name);

// First return of the trajectory to its initial point.  The discrete
// distance history (RMS over components scaled by their trajectory
// maxima) is scanned for local minima; each candidate is refined by
// quadratic interpolation of the stored states.  Returns the first
// refined time whose distance falls below tol, or nullopt.
struct ClosureResult {
    double t_star = 0;
    double distance = 0;
};
std::optional<ClosureResult> closure_detect(const Trajectory& traj, double tol);

} // namespace curvosc
