#include "curvosc/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace curvosc {

namespace {

constexpr double TWO_PI = 6.283185307179586476925286766559;

struct Vec4 {
    double v[4];
    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }
};

Vec4 to_vec(const PhasePoint& s) { return {{s.x, s.y, s.px, s.py}}; }
PhasePoint to_state(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }

double max_abs(const Vec4& v) {
    return std::max(std::max(std::abs(v[0]), std::abs(v[1])),
                    std::max(std::abs(v[2]), std::abs(v[3])));
}

// Hamiltonian vector field (dx, dy, dpx, dpy) from the analytic gradient.
Vec4 field(const ModelParams& p, const Vec4& z) {
    const auto g = grad_h(p, to_state(z));
    return {{g[2], g[3], -g[0], -g[1]}};
}

void check_walls(const ModelParams& p, const PhasePoint& s) {
    if (p.kappa <= 0) return;
    if (std::abs(c_k(p.kappa, s.y)) < WALL_FLOOR ||
        std::abs(c_k(p.kappa, p.gamma * s.x)) < WALL_FLOOR)
        throw WallProximityError("trajectory within the wall safety floor "
                                 "(|C_kappa| < 1e-8)");
}

// Newton fallback for the midpoint equation G(mid) = mid - s - (dt/2) f(mid) = 0,
// with a finite-difference Jacobian of f.
bool newton_solve(const ModelParams& p, const Vec4& s, double dt, Vec4& mid,
                  double tol, int max_iter) {
    for (int it = 0; it < max_iter; ++it) {
        const Vec4 f0 = field(p, mid);
        Vec4 g;
        for (int i = 0; i < 4; ++i) g[i] = mid[i] - s[i] - 0.5 * dt * f0[i];
        const double gn = max_abs(g);
        if (gn < tol * (1.0 + max_abs(mid))) return true;
        // J = I - (dt/2) df/dz by central differences.
        double J[4][4];
        for (int j = 0; j < 4; ++j) {
            const double h = 1e-7 * (1.0 + std::abs(mid[j]));
            Vec4 zp = mid, zm = mid;
            zp[j] += h;
            zm[j] -= h;
            const Vec4 fp = field(p, zp), fm = field(p, zm);
            for (int i = 0; i < 4; ++i)
                J[i][j] = (i == j ? 1.0 : 0.0) - 0.5 * dt * (fp[i] - fm[i]) / (2.0 * h);
        }
        // Solve J dz = -g by Gaussian elimination with partial pivoting.
        double rhs[4] = {-g[0], -g[1], -g[2], -g[3]};
        for (int c = 0; c < 4; ++c) {
            int piv = c;
            for (int r = c + 1; r < 4; ++r)
                if (std::abs(J[r][c]) > std::abs(J[piv][c])) piv = r;
            if (std::abs(J[piv][c]) < 1e-300) return false;
            if (piv != c) {
                for (int cc = 0; cc < 4; ++cc) std::swap(J[c][cc], J[piv][cc]);
                std::swap(rhs[c], rhs[piv]);
            }
            for (int r = c + 1; r < 4; ++r) {
                const double fac = J[r][c] / J[c][c];
                for (int cc = c; cc < 4; ++cc) J[r][cc] -= fac * J[c][cc];
                rhs[r] -= fac * rhs[c];
            }
        }
        Vec4 dz;
        for (int r = 3; r >= 0; --r) {
            double acc = rhs[r];
            for (int cc = r + 1; cc < 4; ++cc) acc -= J[r][cc] * dz[cc];
            dz[r] = acc / J[r][r];
        }
        for (int i = 0; i < 4; ++i) mid[i] += dz[i];
    }
    return false;
}

} // namespace

PhasePoint midpoint_step(const ModelParams& p, const PhasePoint& s0, double dt,
                         double tol, int max_iter) {
    const Vec4 s = to_vec(s0);
    Vec4 mid = s;
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        const Vec4 f = field(p, mid);
        Vec4 next;
        double delta = 0.0;
        for (int i = 0; i < 4; ++i) {
            next[i] = s[i] + 0.5 * dt * f[i];
            delta = std::max(delta, std::abs(next[i] - mid[i]));
        }
        const bool done = delta < tol * (1.0 + max_abs(mid));
        mid = next;
        if (done) {
            converged = true;
            break;
        }
    }
    if (!converged && !newton_solve(p, s, dt, mid, tol, max_iter))
        throw NewtonDivergenceError("implicit midpoint equation did not converge "
                                    "(dt may be too large for this orbit)");
    Vec4 out;
    for (int i = 0; i < 4; ++i) out[i] = 2.0 * mid[i] - s[i];
    return to_state(out);
}

PhasePoint rk4_step(const ModelParams& p, const PhasePoint& s0, double dt) {
    const Vec4 s = to_vec(s0);
    const Vec4 k1 = field(p, s);
    Vec4 z;
    for (int i = 0; i < 4; ++i) z[i] = s[i] + 0.5 * dt * k1[i];
    const Vec4 k2 = field(p, z);
    for (int i = 0; i < 4; ++i) z[i] = s[i] + 0.5 * dt * k2[i];
    const Vec4 k3 = field(p, z);
    for (int i = 0; i < 4; ++i) z[i] = s[i] + dt * k3[i];
    const Vec4 k4 = field(p, z);
    Vec4 out;
    for (int i = 0; i < 4; ++i)
        out[i] = s[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return to_state(out);
}

bool Trajectory::has_log(std::string_view name) const {
    for (const auto& [n, _] : logs)
        if (n == name) return true;
    return false;
}

const std::vector<double>& Trajectory::log(std::string_view name) const {
    for (const auto& [n, v] : logs)
        if (n == name) return v;
    throw DomainError("no such log: " + std::string(name));
}

Trajectory integrate(const ModelParams& p, const PhasePoint& s0,
                     const IntegratorConfig& cfg) {
    if (!(cfg.t_end > 0)) throw DomainError("t_end must be positive");
    if (cfg.newton_max_iter < 1) throw DomainError("newton_max_iter must be >= 1");
    const double dt = cfg.dt > 0 ? cfg.dt : 1e-3 * (TWO_PI / p.omega);
    const long long nsteps = static_cast<long long>(std::llround(cfg.t_end / dt));
    if (nsteps < 1) throw DomainError("t_end shorter than one step");

    check_walls(p, s0);

    // Symmetry logging only makes sense with a ratio and in the bound
    // regime; probing cal_e on the initial state settles both at once.
    bool log_xy = false;
    if (p.ratio) {
        try {
            (void)cal_e(p, s0);
            log_xy = true;
        } catch (const ScatteringRegimeError&) {
            log_xy = false;
        }
    }
    const bool log_j = p.gamma == 1.0;

    Trajectory traj;
    traj.t.reserve(nsteps + 1);
    traj.state.reserve(nsteps + 1);
    traj.logs.emplace_back("H", std::vector<double>{});
    traj.logs.emplace_back("Hxi", std::vector<double>{});
    if (log_xy) {
        traj.logs.emplace_back("X", std::vector<double>{});
        traj.logs.emplace_back("Y", std::vector<double>{});
    }
    if (log_j) traj.logs.emplace_back("J", std::vector<double>{});
    for (auto& [_, v] : traj.logs) v.reserve(nsteps + 1);

    auto record = [&](double t, const PhasePoint& s) {
        traj.t.push_back(t);
        traj.state.push_back(s);
        std::size_t li = 0;
        traj.logs[li++].second.push_back(hamiltonian(p, s));
        traj.logs[li++].second.push_back(h_xi(p, s));
        if (log_xy) {
            const SymmetryPair xy = real_symmetries(p, s);
            traj.logs[li++].second.push_back(xy.x_sym);
            traj.logs[li++].second.push_back(xy.y_sym);
        }
        if (log_j) traj.logs[li++].second.push_back(angular_momentum(p.kappa, s));
    };

    record(0.0, s0);
    PhasePoint s = s0;
    for (long long k = 1; k <= nsteps; ++k) {
        s = cfg.method == Method::ImplicitMidpoint
                ? midpoint_step(p, s, dt, cfg.newton_tol, cfg.newton_max_iter)
                : rk4_step(p, s, dt);
        check_walls(p, s);
        record(dt * static_cast<double>(k), s);
    }
    return traj;
}

double conservation_drift(const Trajectory& traj, std::string_view name) {
    const auto& q = traj.log(name);
    if (q.empty()) throw DomainError("empty log");
    const double q0 = q.front();
    double m = 0.0;
    for (const double v : q) m = std::max(m, std::abs(v - q0));
    return m / std::max(std::abs(q0), 1e-12);
}

std::optional<ClosureResult> closure_detect(const Trajectory& traj, double tol) {
    const std::size_t n = traj.state.size();
    if (n < 5) throw DomainError("trajectory too short for closure detection");
    if (!(tol > 0)) throw DomainError("closure tolerance must be positive");

    // Per-component scales: trajectory maxima (floored).
    double sc[4] = {0, 0, 0, 0};
    for (const PhasePoint& s : traj.state) {
        sc[0] = std::max(sc[0], std::abs(s.x));
        sc[1] = std::max(sc[1], std::abs(s.y));
        sc[2] = std::max(sc[2], std::abs(s.px));
        sc[3] = std::max(sc[3], std::abs(s.py));
    }
    for (double& v : sc) v = std::max(v, 1e-12);

    const PhasePoint& s0 = traj.state.front();
    auto dist = [&](const PhasePoint& s) {
        const double d0 = (s.x - s0.x) / sc[0];
        const double d1 = (s.y - s0.y) / sc[1];
        const double d2 = (s.px - s0.px) / sc[2];
        const double d3 = (s.py - s0.py) / sc[3];
        return std::sqrt(0.25 * (d0 * d0 + d1 * d1 + d2 * d2 + d3 * d3));
    };

    std::vector<double> d(n);
    for (std::size_t k = 0; k < n; ++k) d[k] = dist(traj.state[k]);

    // Quadratic (3-point Lagrange) interpolation of the state at time t
    // inside [t_{k-1}, t_{k+1}].
    auto interp_state = [&](std::size_t k, double t) {
        const double t0 = traj.t[k - 1], t1 = traj.t[k], t2 = traj.t[k + 1];
        const double l0 = (t - t1) * (t - t2) / ((t0 - t1) * (t0 - t2));
        const double l1 = (t - t0) * (t - t2) / ((t1 - t0) * (t1 - t2));
        const double l2 = (t - t0) * (t - t1) / ((t2 - t0) * (t2 - t1));
        const PhasePoint &a = traj.state[k - 1], &b = traj.state[k],
                         &c = traj.state[k + 1];
        return PhasePoint{l0 * a.x + l1 * b.x + l2 * c.x,
                          l0 * a.y + l1 * b.y + l2 * c.y,
                          l0 * a.px + l1 * b.px + l2 * c.px,
                          l0 * a.py + l1 * b.py + l2 * c.py};
    };

    // Candidate minima are scanned only after the trajectory has clearly
    // left the initial point (escape level keeps the k=0 neighborhood out).
    const double escape = 10.0 * tol;
    bool escaped = false;
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (!escaped) {
            escaped = d[k] > escape;
            continue;
        }
        if (!(d[k] <= d[k - 1] && d[k] <= d[k + 1])) continue;
        // Refine by the vertex of the parabola through (t, d^2).
        const double t0 = traj.t[k - 1], t1 = traj.t[k], t2 = traj.t[k + 1];
        const double f0 = d[k - 1] * d[k - 1], f1 = d[k] * d[k],
                     f2 = d[k + 1] * d[k + 1];
        const double denom = (f0 - 2.0 * f1 + f2);
        double ts = t1;
        if (denom > 0) {
            ts = t1 + 0.5 * (t1 - t0) * (f0 - f2) / denom;
            ts = std::min(std::max(ts, t0), t2);
        }
        const double dref = dist(interp_state(k, ts));
        if (dref < tol) return ClosureResult{ts, dref};
    }
    return std::nullopt;
}

} // namespace curvosc
