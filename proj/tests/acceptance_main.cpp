// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// Tolerances are pinned here, next to the checks they gate.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "curvosc/classical.hpp"
#include "curvosc/dynamics.hpp"
#include "curvosc/errors.hpp"
#include "curvosc/ktrig.hpp"
#include "curvosc/model.hpp"
#include "curvosc/qnumeric.hpp"
#include "curvosc/qspectra.hpp"

namespace fs = std::filesystem;
using namespace curvosc;

namespace {

const double PI = std::acos(-1.0);

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double rel(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// --- 1: curvature-trig identities ----------------------------------------

Outcome criterion_ktrig() {
    std::mt19937_64 rng(0xA11CE5);
    std::uniform_real_distribution<double> main_exp(-12.0, std::log10(2.0));
    std::uniform_real_distribution<double> tiny_exp(-12.0, -9.0);
    std::uniform_real_distribution<double> frac(-1.0, 1.0);
    std::uniform_int_distribution<int> coin(0, 1);

    auto residual = [](double lhs, double rhs) {
        return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    };
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
        const bool tiny = (i % 10 == 0); // forced series-branch sub-batch
        const double expo = tiny ? tiny_exp(rng) : main_exp(rng);
        const double kappa = (coin(rng) ? 1.0 : -1.0) * std::pow(10.0, expo);
        const double rk = std::sqrt(std::abs(kappa));
        double u;
        if (tiny)
            u = frac(rng); // |kappa| u^2 <= 1e-9: series evaluation
        else if (kappa > 0)
            u = 1.5 * frac(rng) / rk; // inside the C pole
        else
            u = 3.0 * frac(rng) / rk;

        const KTrigValues v = ktrig_eval(kappa, u);
        worst = std::max(worst, residual(v.c * v.c + kappa * v.s * v.s, 1.0));
        worst = std::max(worst,
                         residual(1.0 + kappa * v.t * v.t, 1.0 / (v.c * v.c)));
        const double c2 = c_k(kappa, 2.0 * u);
        const double s2 = s_k(kappa, 2.0 * u);
        worst = std::max(worst, residual(c2, v.c * v.c - kappa * v.s * v.s));
        worst = std::max(worst, residual(s2, 2.0 * v.s * v.c));
    }
    return {worst < 1e-13,
            "max identity residual " + sci(worst) + " over 10000 samples (tol 1e-13)"};
}

// --- 2: Poisson commutation of H and H_xi ---------------------------------

Outcome criterion_bracket() {
    double worst = 0;
    int combo = 0;
    for (double kappa : {-1.0, -0.5, 0.5, 1.0}) {
        for (double gamma : {0.5, 1.0, 1.7, 2.0}) {
            const ModelParams p(kappa, 1.0, gamma);
            std::mt19937_64 rng(0xB4ACE7ull + 977ull * static_cast<unsigned>(combo++));
            const Observable fh = [&p](const PhasePoint& s) { return hamiltonian(p, s); };
            const Observable fxi = [&p](const PhasePoint& s) { return h_xi(p, s); };
            for (int i = 0; i < 100; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                worst = std::max(worst, std::abs(poisson_bracket(fh, fxi, s)));
            }
        }
    }
    return {worst < 1e-6,
            "max |{H, Hxi}| " + sci(worst) + " over 16x100 bound states (tol 1e-06)"};
}

// --- 3: midpoint conservation drift and dt^2 law ---------------------------

double max_conserved_drift(const ModelParams& p, const PhasePoint& s0,
                           double dt, double t_end) {
    IntegratorConfig cfg;
    cfg.dt = dt;
    cfg.t_end = t_end;
    const Trajectory traj = integrate(p, s0, cfg);
    double d = 0;
    for (const char* name : {"H", "Hxi", "X", "Y"})
        d = std::max(d, conservation_drift(traj, name));
    return d;
}

Outcome criterion_drift() {
    const double omega = 0.06, dt = 1e-3, t_end = 100.0;
    const struct {
        Ratio r;
        double x0;
    } cases[] = {{{1, 1}, 0.15}, {{2, 1}, 0.09}, {{1, 2}, 0.30}, {{3, 2}, 0.135}};
    double worst = 0;
    for (double kappa : {1.0, -1.0})
        for (const auto& c : cases) {
            const ModelParams p = params_from_ratio(kappa, omega, c.r);
            worst = std::max(
                worst, max_conserved_drift(p, {c.x0, 0.22, 0.012, -0.014}, dt, t_end));
        }

    // energy drift scales quadratically with the step
    const ModelParams ps = params_from_ratio(1.0, 0.2, {2, 1});
    const PhasePoint s0{0.09, 0.22, 0.012, -0.014};
    double d[3];
    int i = 0;
    for (double step : {1e-3, 2e-3, 4e-3}) {
        IntegratorConfig cfg;
        cfg.dt = step;
        cfg.t_end = 100.0;
        d[i++] = conservation_drift(integrate(ps, s0, cfg), "H");
    }
    const double r1 = d[1] / d[0], r2 = d[2] / d[1];
    const bool scale_ok = r1 > 3.2 && r1 < 4.8 && r2 > 3.2 && r2 < 4.8;
    return {worst < 1e-7 && scale_ok,
            "max drift " + sci(worst) + " (tol 1e-07); dt ratios " + sci(r1) + ", " +
                sci(r2) + " (band [3.2, 4.8])"};
}

// --- 4: orbit closure detection --------------------------------------------

Outcome criterion_closure() {
    const double tol = 1e-6;
    bool ok = true;
    std::ostringstream note;

    for (double kappa : {1.0, -1.0}) {
        const ModelParams p = params_from_ratio(kappa, 0.3, {2, 1});
        IntegratorConfig cfg;
        cfg.dt = 5e-4;
        cfg.t_end = 30.0;
        const Trajectory traj = integrate(p, {0.09, 0.22, 0.012, -0.014}, cfg);
        const auto cl = closure_detect(traj, tol);
        ok = ok && cl.has_value() && cl->distance < tol;
        note << (kappa > 0 ? "sphere t*=" : "; hyperboloid t*=")
             << (cl ? sci(cl->t_star) : std::string("none"));
    }

    { // flat circular orbit closes at t = 2 pi
        const ModelParams p(0.0, 1.0, 1.0);
        IntegratorConfig cfg;
        cfg.dt = 1e-3;
        cfg.t_end = 10.0;
        const auto cl = closure_detect(integrate(p, {1.0, 0.0, 0.0, 1.0}, cfg), tol);
        const double err = cl ? std::abs(cl->t_star - 2.0 * PI) : 1e9;
        ok = ok && err < 1e-5;
        note << "; flat |t*-2pi|=" << sci(err);
    }

    { // incommensurate gamma at the matched energy must not close
        const ModelParams p2 = params_from_ratio(1.0, 0.3, {2, 1});
        const double href = hamiltonian(p2, {0.09, 0.22, 0.012, -0.014});
        const ModelParams pq(1.0, 0.3, std::sqrt(2.0));
        PhasePoint s{0.09, 0.22, 0.012, 0.0};
        const double py2 = 2.0 * (href - hamiltonian(pq, s));
        if (py2 <= 0) {
            ok = false;
            note << "; sqrt2: no matched-energy state";
        } else {
            s.py = -std::sqrt(py2);
            IntegratorConfig cfg;
            cfg.dt = 1e-3;
            cfg.t_end = 500.0;
            const auto cl = closure_detect(integrate(pq, s, cfg), tol);
            ok = ok && !cl.has_value();
            note << "; sqrt(2): " << (cl ? "closed (unexpected)" : "no closure to t=500");
        }
    }
    return {ok, note.str()};
}

// --- 5: worked closed forms of the symmetries -------------------------------

Outcome criterion_worked() {
    std::mt19937_64 rng(0x5EED50);
    double worst = 0;
    const struct {
        Ratio r;
        SymmetryPair (*fn)(const ModelParams&, const PhasePoint&);
    } curved[] = {{{1, 1}, worked::xy_ratio_1_1},
                  {{2, 1}, worked::xy_ratio_2_1},
                  {{1, 2}, worked::xy_ratio_1_2}};
    for (double kappa : {1.0, -1.0})
        for (const auto& c : curved) {
            const ModelParams p = params_from_ratio(kappa, 1.1, c.r);
            for (int i = 0; i < 1000; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const SymmetryPair a = real_symmetries(p, s);
                const SymmetryPair b = c.fn(p, s);
                worst = std::max({worst, rel(a.x_sym, b.x_sym), rel(a.y_sym, b.y_sym)});
            }
        }
    { // flat 2:1 form
        const ModelParams p = params_from_ratio(0.0, 1.1, {2, 1});
        std::uniform_real_distribution<double> uu(-1.0, 1.0);
        for (int i = 0; i < 1000; ++i) {
            const PhasePoint s{uu(rng), uu(rng), uu(rng), uu(rng)};
            const SymmetryPair a = real_symmetries(p, s);
            const SymmetryPair b = worked::xy_flat_2_1(p, s);
            worst = std::max({worst, rel(a.x_sym, b.x_sym), rel(a.y_sym, b.y_sym)});
        }
    }
    double worst_j = 0; // gamma = 1: Y must equal -J/2
    for (double kappa : {1.0, -1.0}) {
        const ModelParams p = params_from_ratio(kappa, 1.1, {1, 1});
        for (int i = 0; i < 1000; ++i) {
            const PhasePoint s = sample_bound_state(p, rng);
            worst_j = std::max(worst_j, rel(real_symmetries(p, s).y_sym,
                                            -0.5 * angular_momentum(kappa, s)));
        }
    }
    return {worst < 1e-12 && worst_j < 1e-12,
            "max worked-form deviation " + sci(worst) + ", max |Y + J/2| deviation " +
                sci(worst_j) + " (tol 1e-12)"};
}

// --- 6: sphere levels against the two-stage eigensolver ---------------------

struct StageTable {
    std::array<std::array<double, 4>, 4> e{}; // [mu][nu]
};

StageTable two_stage_levels(const ModelParams& p, int n) {
    StageTable st;
    const EigenResult xs = solve_xi(p, default_xi_grid(p, n), 4);
    for (int mu = 0; mu < 4; ++mu) {
        const double eps = std::sqrt(2.0 * p.kappa * xs.value[mu]);
        const EigenResult ys = solve_y(p, p.gamma * eps, default_y_grid(p, n), 4);
        for (int nu = 0; nu < 4; ++nu) st.e[mu][nu] = ys.value[nu];
    }
    return st;
}

Outcome criterion_levels() {
    double worst_fd = 0, worst_rich = 0;
    for (double gamma : {1.0, 2.0, 1.5}) {
        const ModelParams p(1.0, 1.0, gamma);
        const StageTable c = two_stage_levels(p, 2000);
        const StageTable f = two_stage_levels(p, 4000);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const double exact = level(p, mu, nu);
                worst_fd = std::max(worst_fd,
                                    std::abs(c.e[mu][nu] - exact) / std::abs(exact));
                const double rich = (4.0 * f.e[mu][nu] - c.e[mu][nu]) / 3.0;
                worst_rich = std::max(worst_rich, std::abs(rich - exact) / std::abs(exact));
            }
    }
    return {worst_fd < 1e-4 && worst_rich < 1e-6,
            "max rel err " + sci(worst_fd) + " at n=2000 (tol 1e-04); Richardson " +
                sci(worst_rich) + " (tol 1e-06)"};
}

// --- 7: commensurate degeneracy --------------------------------------------

Outcome criterion_degeneracy() {
    const ModelParams p = params_from_ratio(1.0, 1.0, {2, 1});
    const double e02 = level(p, 0, 2), e10 = level(p, 1, 0);
    const double closed_gap = std::abs(e02 - e10) / std::abs(e02);

    const int n = 2000;
    const EigenResult xs = solve_xi(p, default_xi_grid(p, n), 2);
    const double eps0 = std::sqrt(2.0 * xs.value[0]);
    const double eps1 = std::sqrt(2.0 * xs.value[1]);
    const double f02 = solve_y(p, p.gamma * eps0, default_y_grid(p, n), 3).value[2];
    const double f10 = solve_y(p, p.gamma * eps1, default_y_grid(p, n), 1).value[0];
    const double fd_gap = std::abs(f02 - f10) / std::abs(e02);

    const ModelParams q(1.0, 1.0, std::sqrt(2.0));
    std::vector<double> ev;
    for (int mu = 0; mu <= 5; ++mu)
        for (int nu = 0; nu <= 5; ++nu) ev.push_back(level(q, mu, nu));
    std::sort(ev.begin(), ev.end());
    double min_gap = 1e300;
    for (std::size_t i = 1; i < ev.size(); ++i)
        min_gap = std::min(min_gap, (ev[i] - ev[i - 1]) / std::max(1.0, ev[i]));

    return {closed_gap < 1e-12 && fd_gap < 5e-4 && min_gap > 1e-8,
            "closed gap " + sci(closed_gap) + " (tol 1e-12); eigensolver gap " +
                sci(fd_gap) + " (tol 5e-04); sqrt(2) min level gap " + sci(min_gap)};
}

// --- 8: hyperbolic bound-state counts ---------------------------------------

Outcome criterion_hyperbolic_counts() {
    const ModelParams p(-1.0, 5.0, 1.0);
    const int want_nu[5] = {3, 2, 1, 0, -1};
    bool ok = (mu_max(p) == 4);
    for (int mu = 0; mu <= 4; ++mu) ok = ok && (nu_max(p, mu) == want_nu[mu]);

    const Grid1D grid{-20.0, 20.0, 4000};
    const EigenResult xs = solve_xi(p, grid, 8);
    const int nxi = count_bound(xs.value, xi_continuum_threshold(p));
    ok = ok && nxi == 5;

    std::string counts;
    for (int mu = 0; mu <= 4; ++mu) {
        const double g = p.gamma * epsilon_mu(p, mu);
        const int c = count_bound(solve_y(p, g, grid, 8).value, y_continuum_threshold(p));
        ok = ok && c == want_nu[mu] + 1;
        counts += (mu ? "," : "") + std::to_string(c);
    }
    return {ok, "mu_max " + std::to_string(mu_max(p)) + "/4; xi bound " +
                    std::to_string(nxi) + "/5; y bound [" + counts + "] want [4,3,2,1,0]"};
}

// --- 9: flat-limit continuity ------------------------------------------------

bool linear_decay(const double* e) {
    for (int i = 0; i < 3; ++i) {
        const double r = e[i] / e[i + 1];
        if (!(r > 7.0 && r < 13.0)) return false;
    }
    const double tail = e[3] / e[4]; // widest band: last step nears rounding
    return tail > 5.0 && tail < 20.0;
}

Outcome criterion_flat_limit() {
    const double omega = 1.3;
    const ModelParams pf = params_from_ratio(0.0, omega, {2, 1});
    const double lev_flat = level(pf, 1, 1);
    const double chi_flat = omega / pf.gamma;
    const PhasePoint s{0.2, 0.1, 0.03, -0.02};
    const double cale_flat = cal_e(pf, s);

    bool ok = std::abs(cale_flat - chi_flat) < 1e-12;
    double e8max = 0;
    std::ostringstream note;
    for (double sign : {1.0, -1.0}) {
        double elev[5], echi[5], ecal[5];
        for (int k = 4; k <= 8; ++k) {
            const ModelParams p = params_from_ratio(sign * std::pow(10.0, -k), omega, {2, 1});
            elev[k - 4] = std::abs(level(p, 1, 1) - lev_flat);
            echi[k - 4] = std::abs(chi_of(p) - chi_flat);
            ecal[k - 4] = std::abs(cal_e(p, s) - cale_flat);
        }
        for (const double* e : {elev, echi, ecal}) {
            ok = ok && linear_decay(e);
            e8max = std::max(e8max, e[4]);
        }
        note << (sign > 0 ? "sphere" : "; hyperboloid") << " errs at 1e-8: lev "
             << sci(elev[4]) << ", chi " << sci(echi[4]) << ", calE " << sci(ecal[4]);
    }
    ok = ok && e8max < 1e-5;
    return {ok, note.str()};
}

// --- 10: ladder/intertwine grid order and composite Rayleigh -----------------

Outcome criterion_operators() {
    bool ok = true;
    std::ostringstream note;
    const ModelParams ps(1.0, 1.0, 1.0);
    const ModelParams ph(-1.0, 5.0, 1.0);
    const struct {
        const ModelParams* p;
        double g0;
        int k_basis;
        const char* tag;
    } geo[] = {{&ps, ps.gamma * epsilon_mu(ps, 0) + ps.hbar * ps.kappa, 3, "sphere"},
               {&ph, ph.gamma * epsilon_mu(ph, 0), 2, "hyperboloid"}};

    for (const auto& g : geo) {
        double lad[2], fac[2], itw[2];
        int i = 0;
        for (int n : {2000, 4000}) {
            const EigenResult xs = solve_xi(*g.p, default_xi_grid(*g.p, n), 3);
            lad[i] = ladder_action_residual(*g.p, xs, 0);
            fac[i] = ladder_factorization_residual(*g.p, xs, 0);
            itw[i] = intertwine_residual(*g.p, g.g0, default_y_grid(*g.p, n), g.k_basis);
            ++i;
        }
        const double rl = lad[0] / lad[1], rf = fac[0] / fac[1], ri = itw[0] / itw[1];
        for (double r : {rl, rf, ri}) ok = ok && r > 3.7 && r < 4.3;
        note << g.tag << " h^2 ratios " << sci(rl) << "/" << sci(rf) << "/" << sci(ri)
             << "; ";
    }

    const int cases[4][4] = {{1, 1, 0, 1}, {2, 1, 0, 2}, {1, 2, 1, 1}, {3, 2, 0, 3}};
    double worst = 0;
    for (const auto& c : cases) {
        const ModelParams p = params_from_ratio(1.0, 1.0, {c[0], c[1]});
        const double exact = level(p, c[2], c[3]);
        const double rq = composite_rayleigh(p, c[2], c[3], 4000);
        worst = std::max(worst, std::abs(rq - exact) / std::abs(exact));
    }
    ok = ok && worst < 1e-4;
    note << "composite Rayleigh max rel err " << sci(worst) << " (tol 1e-04)";
    return {ok, note.str()};
}

// --- 11: bitwise-reproducible verification runs ------------------------------

Outcome criterion_reproducible() {
    const fs::path base = fs::temp_directory_path() / "curvosc_acceptance";
    fs::remove_all(base);
    const fs::path a = base / "a", b = base / "b";
    fs::create_directories(a);
    fs::create_directories(b);

    auto run = [](const fs::path& out) {
        const std::string cmd = std::string("\"") + CURVOSC_CLI_PATH +
                                "\" verify --suite all --seed 7 --out " + out.string() +
                                " > /dev/null 2>&1";
        const int st = std::system(cmd.c_str());
        return st < 0 ? -1 : WEXITSTATUS(st);
    };
    const int ra = run(a), rb = run(b);

    auto slurp = [](const fs::path& f) {
        std::ifstream in(f, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string ja = slurp(a / "verify.json"), jb = slurp(b / "verify.json");
    const bool same = !ja.empty() && ja == jb;
    return {ra == 0 && rb == 0 && same,
            "exit codes " + std::to_string(ra) + "/" + std::to_string(rb) + "; " +
                std::to_string(ja.size()) + " bytes " + (same ? "identical" : "DIFFER")};
}

} // namespace

int main() {
    const struct {
        const char* name;
        Outcome (*fn)();
    } gate[] = {
        {"curvature-trig identities", criterion_ktrig},
        {"poisson commutation H,Hxi", criterion_bracket},
        {"midpoint conservation drift", criterion_drift},
        {"orbit closure detection", criterion_closure},
        {"worked symmetry closed forms", criterion_worked},
        {"sphere levels vs eigensolver", criterion_levels},
        {"commensurate degeneracy", criterion_degeneracy},
        {"hyperbolic bound-state counts", criterion_hyperbolic_counts},
        {"flat-limit continuity", criterion_flat_limit},
        {"ladder/intertwine convergence", criterion_operators},
        {"verify reproducibility", criterion_reproducible},
    };

    std::printf("acceptance gate: curved anisotropic oscillator library\n");
    int failed = 0, idx = 0;
    for (const auto& g : gate) {
        ++idx;
        Outcome o;
        try {
            o = g.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %02d %-30s %s\n", o.pass ? "PASS" : "FAIL", idx, g.name,
                    o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%d/11 criteria passed\n", 11 - failed);
    return failed == 0 ? 0 : 1;
}
