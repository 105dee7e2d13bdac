#include "curvosc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "curvosc/classical.hpp"
#include "curvosc/dynamics.hpp"
#include "curvosc/errors.hpp"
#include "curvosc/geometry.hpp"
#include "curvosc/ktrig.hpp"
#include "curvosc/model.hpp"
#include "curvosc/qnumeric.hpp"
#include "curvosc/qspectra.hpp"

namespace curvosc {

namespace {

void push(std::vector<CheckResult>& out, const std::string& suite,
          const std::string& name, double residual, double tolerance,
          const std::string& note = "") {
    out.push_back({suite, name, residual, tolerance,
                   residual <= tolerance && std::isfinite(residual), note});
}

// ---------------------------------------------------------------- ktrig

void suite_ktrig(std::vector<CheckResult>& out, std::uint64_t) {
    const std::string S = "ktrig";

    {
        const double kappas[] = {2.3, 1.0, 0.4, 0.0, -0.6, -1.0, -3.2};
        double worst = 0;
        for (double k : kappas) {
            const double lim = k > 0 ? 1.45 / std::sqrt(k) : 2.5;
            for (int i = 0; i <= 40; ++i) {
                const double u = -lim + 2.0 * lim * i / 40.0;
                const auto v = ktrig_eval(k, u);
                worst = std::max(worst, std::abs(v.c * v.c + k * v.s * v.s - 1.0));
            }
        }
        push(out, S, "pythagorean-identity", worst, 5e-13);
    }

    {
        // just below the switch point the Taylor branch is active; it must
        // reproduce the closed form it replaces at the same argument
        double worst = 0;
        for (double k : {1.0, 10.0, -1.0, -10.0}) {
            const double ak = std::abs(k);
            const double rk = std::sqrt(ak);
            const double u = std::sqrt(0.99 * SERIES_THRESHOLD / ak);
            const double cd = k > 0 ? std::cos(rk * u) : std::cosh(rk * u);
            const double sd = (k > 0 ? std::sin(rk * u) : std::sinh(rk * u)) / rk;
            const double ad = (k > 0 ? std::asin(rk * u) : std::asinh(rk * u)) / rk;
            worst = std::max({worst, std::abs(c_k(k, u) - cd),
                              std::abs(s_k(k, u) - sd) / u,
                              std::abs(arc_s_k(k, u) - ad) / u});
        }
        push(out, S, "series-branch-continuity", worst, 1e-12,
             "Taylor branch vs closed form at the same point");
    }

    {
        double worst = 0;
        for (double k : {1.0, -1.0, 0.3}) {
            for (double u : {0.3, 0.7, -1.1}) {
                const double h = 1e-6 * (1.0 + std::abs(u));
                const auto d = ktrig_derivatives(k, u);
                const double fdc = (c_k(k, u + h) - c_k(k, u - h)) / (2 * h);
                const double fds = (s_k(k, u + h) - s_k(k, u - h)) / (2 * h);
                const double fdt = (t_k(k, u + h) - t_k(k, u - h)) / (2 * h);
                worst = std::max({worst, std::abs(d.dc - fdc), std::abs(d.ds - fds),
                                  std::abs(d.dt - fdt)});
            }
        }
        push(out, S, "derivative-consistency", worst, 5e-9);
    }

    {
        double worst = 0;
        for (double k : {1.0, 2.0, -1.0, -0.5, 0.0}) {
            const double lim = k > 0 ? 1.2 / std::sqrt(k) : 1.2;
            for (int i = 0; i <= 24; ++i) {
                const double u = -lim + 2.0 * lim * i / 24.0;
                const double rt = arc_s_k(k, s_k(k, u));
                worst = std::max(worst, std::abs(rt - u) / std::max(1.0, std::abs(u)));
            }
        }
        push(out, S, "arc-inverse-roundtrip", worst, 1e-12);
    }

    {
        double bad = 1;
        try {
            (void)t_k(1.0, std::acos(-1.0) / 2.0);
        } catch (const PoleError&) {
            bad = 0;
        }
        push(out, S, "pole-guard", bad, 0.5, "t at the metric pole must throw");
    }
}

// ------------------------------------------------------------- geometry

void suite_geometry(std::vector<CheckResult>& out, std::uint64_t seed) {
    const std::string S = "geometry";
    std::mt19937_64 rng(seed ^ 0x67656f6dULL);
    std::uniform_real_distribution<double> un(-1.0, 1.0);

    double rt = 0, amb = 0;
    for (double k : {1.0, 0.0, -1.0}) {
        const double xr = k > 0 ? 0.95 * x_half_range(k) : 3.0;
        const double yr = k > 0 ? 0.95 * y_wall(k) : 2.0;
        for (int i = 0; i < 40; ++i) {
            ParallelPoint q{un(rng) * xr, un(rng) * yr};
            const AmbientPoint a = parallel_to_ambient(k, q);
            // hyperboloid coordinates grow like cosh; scale by the form size
            const double mag = std::max(
                1.0, a.x0 * a.x0 + std::abs(k) * (a.x1 * a.x1 + a.x2 * a.x2));
            amb = std::max(amb, std::abs(ambient_constraint_residual(k, a)) / mag);
            const PolarPoint pol = parallel_to_polar(k, q);
            const ParallelPoint back = polar_to_parallel(k, pol);
            rt = std::max({rt, std::abs(back.x - q.x), std::abs(back.y - q.y)});
        }
    }
    push(out, S, "roundtrip-parallel-polar", rt, 1e-12);
    push(out, S, "ambient-constraint", amb, 5e-15,
         "relative to the quadratic-form magnitude");

    {
        // antipodal seam: x = +pi/sqrt(k) must survive the round trip
        const double k = 1.0;
        const ParallelPoint q{x_half_range(k), 0.3};
        const ParallelPoint b2 = polar_to_parallel(k, parallel_to_polar(k, q));
        push(out, S, "seam-roundtrip", std::abs(b2.x - q.x) + std::abs(b2.y - q.y),
             1e-12);
    }

    {
        // kinetic energy is chart-independent: map momenta through the
        // transpose Jacobian (finite differences) and compare forms
        double worst = 0;
        for (double k : {1.0, -1.0}) {
            for (int i = 0; i < 8; ++i) {
                PolarPoint pol{0.3 + 0.1 * i, 0.4 + 0.5 * i};
                if (pol.phi >= 2 * std::acos(-1.0)) pol.phi -= 2 * std::acos(-1.0);
                const double pr = 0.7, pphi = -0.4;
                const double h = 1e-6;
                auto fx = [&](double r, double f) {
                    return polar_to_parallel(k, {r, f});
                };
                const ParallelPoint qr1 = fx(pol.r + h, pol.phi),
                                    qr0 = fx(pol.r - h, pol.phi);
                const ParallelPoint qf1 = fx(pol.r, pol.phi + h),
                                    qf0 = fx(pol.r, pol.phi - h);
                const double dxdr = (qr1.x - qr0.x) / (2 * h),
                             dydr = (qr1.y - qr0.y) / (2 * h);
                const double dxdf = (qf1.x - qf0.x) / (2 * h),
                             dydf = (qf1.y - qf0.y) / (2 * h);
                // solve J^T (px, py) = (pr, pphi)
                const double det = dxdr * dydf - dxdf * dydr;
                const double px = (pr * dydf - pphi * dydr) / det;
                const double py = (-pr * dxdf + pphi * dxdr) / det;
                const ParallelPoint q = polar_to_parallel(k, pol);
                const double kin_par =
                    kinetic_energy(k, {q.x, q.y, px, py});
                const double kin_pol = kinetic_energy_polar(k, pol.r, pr, pphi);
                worst = std::max(worst, std::abs(kin_par - kin_pol) /
                                            std::max(1.0, std::abs(kin_pol)));
            }
        }
        push(out, S, "kinetic-chart-invariance", worst, 1e-7,
             "momenta mapped by finite-difference Jacobian");
    }
}

// ------------------------------------------------------------ classical

std::vector<std::pair<ModelParams, const char*>> classical_models() {
    std::vector<std::pair<ModelParams, const char*>> ms;
    ms.emplace_back(params_from_ratio(1.0, 0.9, {1, 1}), "sphere 1:1");
    ms.emplace_back(params_from_ratio(1.0, 0.9, {2, 1}), "sphere 2:1");
    ms.emplace_back(params_from_ratio(1.0, 0.9, {3, 2}), "sphere 3:2");
    ms.emplace_back(params_from_ratio(-1.0, 0.9, {1, 1}), "hyperboloid 1:1");
    ms.emplace_back(params_from_ratio(-1.0, 0.9, {2, 1}), "hyperboloid 2:1");
    ms.emplace_back(params_from_ratio(0.0, 0.9, {2, 1}), "flat 2:1");
    return ms;
}

void suite_classical(std::vector<CheckResult>& out, std::uint64_t seed) {
    const std::string S = "classical";
    std::mt19937_64 rng(seed ^ 0x636c6173ULL);
    const auto models = classical_models();

    {
        double worst = 0;
        for (const auto& [p, tag] : models) {
            if (p.kappa == 0) continue;
            for (int i = 0; i < 12; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const double a = hamiltonian(p, s), b = hamiltonian_alt(p, s);
                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
            }
        }
        push(out, S, "alt-form-agreement", worst, 1e-12);
    }

    {
        double worst = 0;
        for (const auto& [p, tag] : models) {
            if (p.kappa == 0) continue;
            for (int i = 0; i < 12; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const double c = c_k(p.kappa, s.y);
                const double split = s.py * s.py / 2 +
                                     p.gamma * p.gamma * h_xi(p, s) / (c * c) -
                                     p.omega * p.omega / (2 * p.kappa);
                const double a = hamiltonian(p, s);
                worst = std::max(worst, std::abs(a - split) / std::max(1.0, std::abs(a)));
            }
        }
        push(out, S, "xi-splitting-identity", worst, 1e-12);
    }

    {
        double wx = 0, wy = 0, wj = 0;
        for (const auto& [p, tag] : models) {
            const Observable hob = [&p](const PhasePoint& s) {
                return hamiltonian(p, s);
            };
            for (int i = 0; i < 6; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const SymmetryPair xy = real_symmetries(p, s);
                const Observable xob = [&p](const PhasePoint& q) {
                    return real_symmetries(p, q).x_sym;
                };
                const Observable yob = [&p](const PhasePoint& q) {
                    return real_symmetries(p, q).y_sym;
                };
                wx = std::max(wx, std::abs(poisson_bracket(xob, hob, s)) /
                                      std::max(1.0, std::abs(xy.x_sym)));
                wy = std::max(wy, std::abs(poisson_bracket(yob, hob, s)) /
                                      std::max(1.0, std::abs(xy.y_sym)));
                if (p.gamma == 1.0) {
                    const Observable job = [&p](const PhasePoint& q) {
                        return angular_momentum(p.kappa, q);
                    };
                    wj = std::max(wj, std::abs(poisson_bracket(job, hob, s)));
                }
            }
        }
        push(out, S, "bracket-x-conserved", wx, 1e-6);
        push(out, S, "bracket-y-conserved", wy, 1e-6);
        push(out, S, "bracket-j-conserved", wj, 1e-6);
    }

    {
        double worst = 0;
        for (const auto& [p, tag] : models) {
            SymmetryPair (*hand)(const ModelParams&, const PhasePoint&) = nullptr;
            if (p.kappa != 0 && p.ratio->m == 1 && p.ratio->n == 1)
                hand = worked::xy_ratio_1_1;
            else if (p.kappa != 0 && p.ratio->m == 2 && p.ratio->n == 1)
                hand = worked::xy_ratio_2_1;
            else if (p.kappa == 0 && p.ratio->m == 2 && p.ratio->n == 1)
                hand = worked::xy_flat_2_1;
            if (!hand) continue;
            for (int i = 0; i < 10; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const SymmetryPair a = real_symmetries(p, s);
                const SymmetryPair b = hand(p, s);
                const double sc = std::max({1.0, std::abs(a.x_sym), std::abs(a.y_sym)});
                worst = std::max(worst, std::max(std::abs(a.x_sym - b.x_sym),
                                                 std::abs(a.y_sym - b.y_sym)) / sc);
            }
        }
        // 1:2 closed form needs gamma = 1/2 parameters
        {
            const ModelParams p = params_from_ratio(1.0, 0.9, {1, 2});
            for (int i = 0; i < 10; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const SymmetryPair a = real_symmetries(p, s);
                const SymmetryPair b = worked::xy_ratio_1_2(p, s);
                const double sc = std::max({1.0, std::abs(a.x_sym), std::abs(a.y_sym)});
                worst = std::max(worst, std::max(std::abs(a.x_sym - b.x_sym),
                                                 std::abs(a.y_sym - b.y_sym)) / sc);
            }
        }
        push(out, S, "worked-forms-match", worst, 1e-10);
    }

    {
        // hyperbolic sampler must stay inside the bound regime
        const ModelParams p = params_from_ratio(-1.0, 0.9, {2, 1});
        double bad = 0;
        for (int i = 0; i < 50; ++i) {
            const PhasePoint s = sample_bound_state(p, rng);
            const double e2 = 2 * p.kappa * h_xi(p, s);
            const double esc = p.omega * p.omega / (2 * std::abs(p.kappa));
            if (!(e2 > 0) || !(hamiltonian(p, s) < esc)) bad += 1;
        }
        push(out, S, "sampler-bound-regime", bad, 0.5);
    }
}

// ------------------------------------------------------------- dynamics

void suite_dynamics(std::vector<CheckResult>& out, std::uint64_t) {
    const std::string S = "dynamics";
    const PhasePoint s0{0.09, 0.22, 0.012, -0.014};

    {
        const ModelParams p = params_from_ratio(1.0, 0.3, {2, 1});
        IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.t_end = 20.0;
        const Trajectory tr = integrate(p, s0, cfg);
        push(out, S, "midpoint-drift-sphere", conservation_drift(tr, "H"), 1e-8,
             "relative H drift, 20k steps at fixed-point tolerance 1e-13");
        push(out, S, "midpoint-drift-sphere-hxi", conservation_drift(tr, "Hxi"),
             1e-8);
    }

    {
        const ModelParams p = params_from_ratio(-1.0, 0.3, {1, 1});
        IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.t_end = 20.0;
        const Trajectory tr = integrate(p, {0.1, 0.1, 0.01, -0.01}, cfg);
        push(out, S, "midpoint-drift-hyperboloid", conservation_drift(tr, "H"),
             1e-8);
        push(out, S, "midpoint-drift-j", conservation_drift(tr, "J"), 1e-8);
    }

    {
        // global error of the midpoint rule halves twice per dt halving
        const ModelParams p = params_from_ratio(1.0, 0.2, {2, 1});
        auto err_at = [&](double dt) {
            IntegratorConfig c1;
            c1.dt = dt;
            c1.t_end = 20.0;
            const Trajectory a = integrate(p, s0, c1);
            c1.dt = dt / 4;
            const Trajectory b = integrate(p, s0, c1);
            const PhasePoint fa = a.state.back(), fb = b.state.back();
            return std::max({std::abs(fa.x - fb.x), std::abs(fa.y - fb.y),
                             std::abs(fa.px - fb.px), std::abs(fa.py - fb.py)});
        };
        const double e1 = err_at(4e-3), e2 = err_at(2e-3);
        const double ratio = e1 / e2;
        push(out, S, "dt-quadratic-convergence", std::abs(ratio - 4.0), 1.2,
             "error ratio between dt and dt/2");
    }

    {
        const ModelParams p = params_from_ratio(1.0, 0.3, {2, 1});
        IntegratorConfig c1;
        c1.dt = 1e-3;
        c1.t_end = 5.0;
        const Trajectory a = integrate(p, s0, c1);
        c1.method = Method::RK4;
        const Trajectory b = integrate(p, s0, c1);
        const PhasePoint fa = a.state.back(), fb = b.state.back();
        const double diff = std::max({std::abs(fa.x - fb.x), std::abs(fa.y - fb.y),
                                      std::abs(fa.px - fb.px),
                                      std::abs(fa.py - fb.py)});
        push(out, S, "rk4-midpoint-agreement", diff, 1e-6);
    }

    {
        double bad = 1;
        try {
            const ModelParams p = params_from_ratio(1.0, 0.3, {1, 1});
            IntegratorConfig cfg;
            cfg.dt = 1e-3;
            cfg.t_end = 1.0;
            const double wall = y_wall(1.0);
            (void)integrate(p, {0.1, wall - 1e-9, 0.1, 0.1}, cfg);
        } catch (const WallProximityError&) {
            bad = 0;
        }
        push(out, S, "wall-guard", bad, 0.5);
    }

    {
        const ModelParams p = params_from_ratio(0.0, 1.0, {1, 1});
        IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.t_end = 10.0;
        const Trajectory tr = integrate(p, {1.0, 0.0, 0.0, 1.0}, cfg);
        const auto cl = closure_detect(tr, 1e-4);
        const double pi = std::acos(-1.0);
        push(out, S, "closure-flat-circle",
             cl ? std::abs(cl->t_star - 2 * pi) : 1.0, 1e-5,
             "unit circle closes after one period");
    }
}

// ------------------------------------------------------------- qspectra

void suite_qspectra(std::vector<CheckResult>& out, std::uint64_t) {
    const std::string S = "qspectra";

    {
        const ModelParams p = params_from_ratio(1.0, 1.0, {2, 1});
        const double d = std::abs(level(p, 0, 2) - level(p, 1, 0));
        push(out, S, "sphere-degeneracy-2-1", d, 1e-12,
             "E(0,2) == E(1,0) at gamma = 2");
    }

    {
        double worst = 0;
        for (double k : {1.0, -1.0}) {
            const ModelParams p = params_from_ratio(k, 1.3, {3, 2}, 0.9);
            const int mmax = k < 0 ? std::min(4, mu_max(p)) : 4;
            for (int mu = 0; mu <= mmax; ++mu) {
                const double a = xi_level(p, mu), b = xi_level_alt(p, mu);
                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
                const int nmax = k < 0 ? std::min(3, nu_max(p, mu)) : 3;
                for (int nu = 0; nu <= nmax; ++nu) {
                    const double u = level(p, mu, nu), v = level_alt(p, mu, nu);
                    worst = std::max(worst,
                                     std::abs(u - v) / std::max(1.0, std::abs(u)));
                }
            }
        }
        push(out, S, "alt-form-agreement", worst, 1e-11);
    }

    {
        double worst = 0;
        for (double k : {1e-9, -1e-9}) {
            const ModelParams pc = params_from_ratio(k, 1.0, {2, 1});
            const ModelParams pf = params_from_ratio(0.0, 1.0, {2, 1});
            for (int mu = 0; mu <= 2; ++mu)
                for (int nu = 0; nu <= 2; ++nu)
                    worst = std::max(worst, std::abs(level(pc, mu, nu) -
                                                     level(pf, mu, nu)));
        }
        push(out, S, "flat-limit-continuity", worst, 1e-6);
    }

    {
        const ModelParams p = params_from_ratio(-1.0, 5.0, {1, 1});
        const double bad = std::abs(mu_max(p) - 4) +
                           std::abs(nu_max(p, 0) - 3) + std::abs(nu_max(p, 4) - (-1));
        push(out, S, "hyperbolic-bound-counts", bad, 0.5,
             "omega=5: mu_max=4, nu_max(0)=3, nu_max(4)<0");
    }

    {
        const ModelParams p = params_from_ratio(1.0, 1.0, {2, 1});
        const Spectrum sp = enumerate_levels(p, EnumerationCutoff::by_key(12));
        double worst = 0;
        for (const auto& c : sp.classes) worst = std::max(worst, c.spread);
        push(out, S, "class-spread", worst, 1e-12,
             "degenerate classes collapse at gamma = 2");
    }
}

// ------------------------------------------------------------- qnumeric

void suite_qnumeric(std::vector<CheckResult>& out, std::uint64_t) {
    const std::string S = "qnumeric";

    {
        const ModelParams p = params_from_ratio(1.0, 1.0, {1, 1});
        const EigenResult xs = solve_xi(p, default_xi_grid(p, 800), 2);
        double worst = 0;
        for (int mu = 0; mu < 2; ++mu)
            worst = std::max(worst, std::abs(xs.value[mu] - xi_level(p, mu)) /
                                        std::abs(xi_level(p, mu)));
        push(out, S, "xi-levels-sphere", worst, 1e-3, "n=800 vs closed form");

        const double g0 = p.gamma * epsilon_mu(p, 0);
        const EigenResult ys = solve_y(p, g0, default_y_grid(p, 800), 2);
        double wy = 0;
        for (int nu = 0; nu < 2; ++nu)
            wy = std::max(wy, std::abs(ys.value[nu] - y_level(p, g0, nu)) /
                                  std::max(1.0, std::abs(y_level(p, g0, nu))));
        push(out, S, "y-levels-sphere", wy, 1e-3);
    }

    {
        const ModelParams p = params_from_ratio(-1.0, 5.0, {1, 1});
        const Grid1D g = default_xi_grid(p, 1200);
        const EigenResult xs = solve_xi(p, g, 6);
        const int nb = count_bound(xs.value, xi_continuum_threshold(p));
        push(out, S, "hyperbolic-xi-bound-count", std::abs(nb - 5), 0.5,
             "exactly mu_max+1 = 5 bound levels");
        double scale = 0;
        for (int mu = 0; mu < 5; ++mu)
            scale = std::max(scale, std::abs(xi_level(p, mu)));
        double worst = 0;
        for (int mu = 0; mu < 5; ++mu)
            worst = std::max(worst, std::abs(xs.value[mu] - xi_level(p, mu)) /
                                        scale);
        push(out, S, "hyperbolic-xi-levels", worst, 1e-3,
             "error scaled by the deepest level");
    }

    {
        const ModelParams p = params_from_ratio(1.0, 1.0, {1, 1});
        auto lar = [&](int n) {
            const EigenResult xs = solve_xi(p, default_xi_grid(p, n), 2);
            return ladder_action_residual(p, xs, 0);
        };
        const double r = lar(600) / lar(1200);
        push(out, S, "ladder-residual-decay", std::abs(r - 4.0), 1.0,
             "O(h^2) decay of the misalignment");

        auto lfr = [&](int n) {
            const EigenResult xs = solve_xi(p, default_xi_grid(p, n), 1);
            return ladder_factorization_residual(p, xs, 0);
        };
        const double f12 = lfr(1200);
        push(out, S, "factorization-residual-size", f12, 1e-3, "n=1200");
        push(out, S, "factorization-residual-decay",
             std::abs(lfr(600) / f12 - 4.0), 1.0);
    }

    {
        const ModelParams p = params_from_ratio(1.0, 1.0, {1, 1});
        const double g0 = p.gamma * epsilon_mu(p, 0) + p.hbar * p.kappa;
        auto itw = [&](int n) {
            return intertwine_residual(p, g0, default_y_grid(p, n), 2);
        };
        const double r = itw(600) / itw(1200);
        push(out, S, "intertwine-residual-decay", std::abs(r - 4.0), 1.0);
    }

    {
        const ModelParams p = params_from_ratio(1.0, 1.0, {1, 1});
        const double rq = composite_rayleigh(p, 0, 1, 1000);
        const double ex = level(p, 0, 1);
        push(out, S, "composite-rayleigh-1-1", std::abs(rq - ex) / std::abs(ex),
             1e-3, "product state (mu=0, nu=1), n=1000");
    }

    {
        const ModelParams p = params_from_ratio(-1.0, 5.0, {1, 1});
        const double g0 = p.gamma * chi_of(p);
        const Grid1D g = default_y_grid(p, 800);
        const EigenResult sym = solve_y(p, g0, g, 2);
        const auto raw = solve_y_nonsym(p, g0, g, 2);
        double worst = 0;
        for (int i = 0; i < 2; ++i)
            worst = std::max(worst, std::abs(sym.value[i] - raw[i]) /
                                        std::max(1.0, std::abs(sym.value[i])));
        push(out, S, "nonsym-crosscheck", worst, 1e-2,
             "independent raw-form discretization");
    }
}

} // namespace

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
    std::vector<CheckResult> out;
    bool known = false;
    const bool all = suite == "all";
    if (all || suite == "ktrig") (suite_ktrig(out, seed), known = true);
    if (all || suite == "geometry") (suite_geometry(out, seed), known = true);
    if (all || suite == "classical") (suite_classical(out, seed), known = true);
    if (all || suite == "dynamics") (suite_dynamics(out, seed), known = true);
    if (all || suite == "qspectra") (suite_qspectra(out, seed), known = true);
    if (all || suite == "qnumeric") (suite_qnumeric(out, seed), known = true);
    if (!known) throw DomainError("unknown verify suite: " + suite);
    return out;
}

} // namespace curvosc
