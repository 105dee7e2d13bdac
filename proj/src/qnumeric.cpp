#include "curvosc/qnumeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "curvosc/geometry.hpp"
#include "curvosc/qspectra.hpp"
#include "curvosc/tridiag.hpp"

namespace curvosc {

namespace {

const double SQRT2 = std::sqrt(2.0);

// 16-point Gauss-Legendre rule on [-1, 1].
constexpr int GL_N = 16;
constexpr double GL_X[GL_N] = {
    -0.9894009349916499, -0.9445750230732326, -0.8656312023878318,
    -0.7554044083550030, -0.6178762444026438, -0.4580167776572274,
    -0.2816035507792589, -0.0950125098376374, 0.0950125098376374,
    0.2816035507792589,  0.4580167776572274,  0.6178762444026438,
    0.7554044083550030,  0.8656312023878318,  0.9445750230732326,
    0.9894009349916499};
constexpr double GL_W[GL_N] = {
    0.0271524594117541, 0.0622535239386479, 0.0951585116824928,
    0.1246289712555339, 0.1495959888165767, 0.1691565193950025,
    0.1826034150449236, 0.1894506104550685, 0.1894506104550685,
    0.1826034150449236, 0.1691565193950025, 0.1495959888165767,
    0.1246289712555339, 0.0951585116824928, 0.0622535239386479,
    0.0271524594117541};

// log of Int_lo^hi exp(phi(x)) dx by scaled Gauss-Legendre: the largest
// node value is factored out so the summation never overflows.
template <class Phi>
double log_integral(Phi&& phi, double lo, double hi) {
    const double c = 0.5 * (lo + hi), r = 0.5 * (hi - lo);
    double ph[GL_N], m = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < GL_N; ++i) {
        ph[i] = phi(c + r * GL_X[i]);
        m = std::max(m, ph[i]);
    }
    double acc = 0;
    for (int i = 0; i < GL_N; ++i) acc += GL_W[i] * std::exp(ph[i] - m);
    return m + std::log(acc * r);
}

double log_c(double kappa, double x) { return std::log(std::abs(c_k(kappa, x))); }

// log of Int_0^T sin(sqrt(kappa) t)^rho dt for a sphere wall cell.
// Series in theta = sqrt(kappa) T, valid for rho*theta^2 <= 0.05
// (truncation ~1e-13 relative); larger values fall back to scaled
// quadrature, which is only reached when the wall cell is dynamically
// irrelevant (the eigenfunctions carry no weight there).
double log_wall_cell(double kappa, double rho, double T) {
    const double rk = std::sqrt(kappa);
    const double th = rk * T;
    if (rho * th * th <= 0.05) {
        const double th2 = th * th;
        const double c1 = -rho / 6.0;
        const double c2 = -rho / 180.0 + rho * rho / 72.0;
        const double c3 = -rho / 2835.0 + rho * rho / 1080.0 -
                          rho * rho * rho / 1296.0;
        const double bracket = 1.0 / (rho + 1.0) + c1 * th2 / (rho + 3.0) +
                               c2 * th2 * th2 / (rho + 5.0) +
                               c3 * th2 * th2 * th2 / (rho + 7.0);
        return (rho + 1.0) * std::log(th) + std::log(bracket) - std::log(rk);
    }
    return log_integral(
        [&](double t) { return rho * std::log(std::abs(std::sin(rk * t))); }, 0.0,
        T);
}

struct FluxBuild {
    std::vector<double> d, e;   // symmetric tridiagonal operator
    std::vector<double> log_m;  // cell masses (log scale)
};

// Conservative discretization of -(hbar^2/2)(1/W)(W u')' + q0 on the
// full sphere interval, W = C^rho, natural walls, M^{-1/2}-symmetrized.
FluxBuild build_flux(double kappa, double hbar, double rho, double q0,
                     const Grid1D& g) {
    const int n = g.n;
    const double h = g.h();
    FluxBuild fb;
    fb.d.assign(n, q0);
    fb.e.assign(n - 1, 0.0);
    fb.log_m.assign(n, 0.0);

    std::vector<double> log_wt(n - 1);
    for (int j = 0; j + 1 < n; ++j)
        log_wt[j] = std::log(h) -
                    log_integral([&](double x) { return -rho * log_c(kappa, x); },
                                 g.node(j), g.node(j + 1));
    for (int j = 0; j < n; ++j) {
        double li;
        if (j == 0)
            li = log_wall_cell(kappa, rho, g.node(0) + 0.5 * h - g.a);
        else if (j == n - 1)
            li = log_wall_cell(kappa, rho, g.b - (g.node(n - 1) - 0.5 * h));
        else
            li = log_integral([&](double x) { return rho * log_c(kappa, x); },
                              g.node(j) - 0.5 * h, g.node(j) + 0.5 * h);
        fb.log_m[j] = li - std::log(h);
    }

    const double lpref = std::log(hbar * hbar / (2.0 * h * h));
    for (int j = 0; j < n; ++j) {
        double acc = 0;
        if (j > 0) acc += std::exp(lpref + log_wt[j - 1] - fb.log_m[j]);
        if (j + 1 < n) acc += std::exp(lpref + log_wt[j] - fb.log_m[j]);
        fb.d[j] += acc;
    }
    for (int j = 0; j + 1 < n; ++j)
        fb.e[j] = -std::exp(lpref + log_wt[j] -
                            0.5 * (fb.log_m[j] + fb.log_m[j + 1]));
    return fb;
}

void check_grid(const Grid1D& g, int k) {
    if (g.n < 3) throw DomainError("grid needs at least 3 interior nodes");
    if (!(g.b > g.a)) throw DomainError("grid interval is empty");
    if (k < 1) throw DomainError("need at least one eigenpair");
    if (k > g.n) throw DomainError("more eigenpairs than grid nodes");
}

bool is_full_wall(const Grid1D& g, double kappa) {
    if (kappa <= 0) return false;
    const double wall = y_wall(kappa);
    return std::abs(g.a + wall) <= 1e-9 * wall && std::abs(g.b - wall) <= 1e-9 * wall;
}

// Shared assembly: plain 3-point Dirichlet scheme for -(hbar^2/2) f'' + V f.
EigenResult solve_plain(double hbar, const Grid1D& g, int k,
                        const std::vector<double>& V) {
    const double h = g.h();
    const int n = g.n;
    std::vector<double> d(n), e(n - 1, -hbar * hbar / (2.0 * h * h));
    for (int j = 0; j < n; ++j) d[j] = hbar * hbar / (h * h) + V[j];
    EigenResult res;
    res.grid = g;
    res.value = tridiag::lowest_eigenvalues(d, e, k);
    const double rs = 1.0 / std::sqrt(h);
    std::vector<std::vector<double>> raws; // unit l2, for orthogonalization
    for (int j = 0; j < k; ++j) {
        raws.push_back(tridiag::eigenvector(d, e, res.value[j], raws));
        res.vec_sym.push_back(raws.back());
        for (double& x : res.vec_sym.back()) x *= rs; // h-orthonormal
    }
    return res;
}

double wave_sign_fix(std::vector<double>& wave, std::vector<double>& vec) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < wave.size(); ++i)
        if (std::abs(wave[i]) > std::abs(wave[arg])) arg = i;
    if (wave[arg] < 0) {
        for (double& x : wave) x = -x;
        for (double& x : vec) x = -x;
        return -1.0;
    }
    return 1.0;
}

// Derivatives with Dirichlet ghosts (functions vanishing at the ends).
std::vector<double> ddx_ghost(const std::vector<double>& v, double h) {
    const std::size_t n = v.size();
    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2 * h);
    d[0] = v[1] / (2 * h);
    d[n - 1] = -v[n - 2] / (2 * h);
    return d;
}

std::vector<double> d2dx_ghost(const std::vector<double>& v, double h) {
    const std::size_t n = v.size();
    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = (v[i + 1] - 2 * v[i] + v[i - 1]) / (h * h);
    d[0] = (v[1] - 2 * v[0]) / (h * h);
    d[n - 1] = (-2 * v[n - 1] + v[n - 2]) / (h * h);
    return d;
}

// One-sided 3-point edges, for fields that do not vanish at the walls
// (the gauged G representation).
std::vector<double> ddx_onesided(const std::vector<double>& v, double h) {
    const std::size_t n = v.size();
    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2 * h);
    d[0] = (-3 * v[0] + 4 * v[1] - v[2]) / (2 * h);
    d[n - 1] = (3 * v[n - 1] - 4 * v[n - 2] + v[n - 3]) / (2 * h);
    return d;
}

std::vector<double> nodes_of(const Grid1D& g) {
    std::vector<double> x(g.n);
    for (int j = 0; j < g.n; ++j) x[j] = g.node(j);
    return x;
}

std::vector<double> apply_b(const ModelParams& p, double eps, int sign,
                            const std::vector<double>& x, double h,
                            const std::vector<double>& v) {
    // B(+/-)(eps) = -/+ (hbar/sqrt2) C d/dxi + (eps/sqrt2) S
    std::vector<double> dv = ddx_ghost(v, h), out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = -sign * (p.hbar / SQRT2) * c_k(p.kappa, x[i]) * dv[i] +
                 (eps / SQRT2) * s_k(p.kappa, x[i]) * v[i];
    return out;
}

std::vector<double> apply_a_minus(const ModelParams& p, double g,
                                  const std::vector<double>& y, double h,
                                  const std::vector<double>& v) {
    // A-(g) = +(hbar/sqrt2) d/dy - (g/sqrt2) T
    std::vector<double> dv = ddx_ghost(v, h), out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = (p.hbar / SQRT2) * dv[i] - (g / SQRT2) * t_k(p.kappa, y[i]) * v[i];
    return out;
}

// Raw y-operator at coupling g (split potential form, stable as kappa->0):
//   -(hbar^2/2) d2 + (hbar^2 kappa / 2) T d1
//   + [(g^2 - omega^2)/(2 kappa) + g^2 T^2 / 2] v
double v_raw_split(const ModelParams& p, double g, double t2) {
    return (g * g - p.omega * p.omega) / (2.0 * p.kappa) + 0.5 * g * g * t2;
}

std::vector<double> apply_hy_raw(const ModelParams& p, double g,
                                 const std::vector<double>& y, double h,
                                 const std::vector<double>& v) {
    std::vector<double> d1 = ddx_ghost(v, h), d2 = d2dx_ghost(v, h), out(v.size());
    const double hb2 = p.hbar * p.hbar;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double t = t_k(p.kappa, y[i]);
        out[i] = -0.5 * hb2 * d2[i] + 0.5 * hb2 * p.kappa * t * d1[i] +
                 v_raw_split(p, g, t * t) * v[i];
    }
    return out;
}

double dot_h(const std::vector<double>& a, const std::vector<double>& b, double h) {
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s * h;
}

} // namespace

Grid1D default_xi_grid(const ModelParams& p, int n) {
    if (n < 3) throw DomainError("grid needs at least 3 interior nodes");
    const double l_loc = 12.0 * std::sqrt(p.hbar * p.gamma / p.omega);
    if (p.kappa > 0) {
        const double wall = y_wall(p.kappa);
        const double lam =
            0.5 * (1.0 + std::sqrt(1.0 + 4.0 * p.omega * p.omega /
                                             (p.hbar * p.hbar * p.kappa * p.kappa *
                                              p.gamma * p.gamma)));
        if (lam <= FLUX_EXPONENT_CAP) return {-wall, wall, n};
        const double L = std::min(l_loc, 0.98 * wall);
        return {-L, L, n};
    }
    if (p.kappa < 0) {
        const double L = 20.0 / std::sqrt(-p.kappa) *
                         std::max(1.0, p.hbar * std::abs(p.kappa) / chi_of(p));
        return {-L, L, n};
    }
    return {-l_loc, l_loc, n};
}

Grid1D default_y_grid(const ModelParams& p, int n) {
    if (n < 3) throw DomainError("grid needs at least 3 interior nodes");
    if (p.kappa > 0) {
        const double wall = y_wall(p.kappa);
        return {-wall, wall, n};
    }
    if (p.kappa < 0) {
        const double L = 20.0 / std::sqrt(-p.kappa) *
                         std::max(1.0, p.hbar * std::abs(p.kappa) / chi_of(p));
        return {-L, L, n};
    }
    const double L = 12.0 * std::sqrt(p.hbar / p.omega);
    return {-L, L, n};
}

EigenResult solve_xi(const ModelParams& p, const Grid1D& g, int k_levels) {
    check_grid(g, k_levels);
    const double w2 = p.omega * p.omega;
    const double g2 = p.gamma * p.gamma;

    if (p.kappa > 0) {
        const double lam =
            0.5 * (1.0 + std::sqrt(1.0 + 4.0 * w2 / (p.hbar * p.hbar * p.kappa *
                                                     p.kappa * g2)));
        if (is_full_wall(g, p.kappa) && lam <= FLUX_EXPONENT_CAP) {
            const double q0 =
                w2 / (2.0 * p.kappa * g2) + 0.5 * p.hbar * p.hbar * lam * p.kappa;
            const FluxBuild fb = build_flux(p.kappa, p.hbar, 2.0 * lam, q0, g);
            EigenResult res;
            res.grid = g;
            res.value = tridiag::lowest_eigenvalues(fb.d, fb.e, k_levels);
            const double h = g.h();
            for (int j = 0; j < k_levels; ++j) {
                std::vector<double> raw;
                {
                    // raw eigenvectors are kept l2-normalized for reuse
                    std::vector<std::vector<double>> prev;
                    for (int q = 0; q < j; ++q) {
                        prev.push_back(res.vec_sym[q]);
                        for (double& x : prev.back()) x *= std::sqrt(h);
                    }
                    raw = tridiag::eigenvector(fb.d, fb.e, res.value[j], prev);
                }
                std::vector<double> wave(g.n);
                for (int i = 0; i < g.n; ++i)
                    wave[i] = raw[i] * std::exp(lam * log_c(p.kappa, g.node(i)) -
                                                0.5 * fb.log_m[i]);
                const double nrm = std::sqrt(dot_h(wave, wave, h));
                for (double& x : wave) x /= nrm;
                std::vector<double> vs(g.n);
                for (int i = 0; i < g.n; ++i) vs[i] = raw[i] / std::sqrt(h);
                wave_sign_fix(wave, vs);
                res.vec_sym.push_back(std::move(vs));
                res.wave.push_back(std::move(wave));
            }
            res.log_mass = fb.log_m;
            return res;
        }
    }

    // Plain 3-point Dirichlet scheme (hyperboloid, flat, or strongly
    // localized sphere states).
    std::vector<double> V(g.n);
    for (int j = 0; j < g.n; ++j) {
        const double xi = g.node(j);
        if (p.kappa == 0.0) {
            V[j] = w2 * xi * xi / (2.0 * g2);
        } else {
            const double c = c_k(p.kappa, xi);
            V[j] = w2 / (2.0 * p.kappa * g2 * c * c);
        }
    }
    EigenResult res = solve_plain(p.hbar, g, k_levels, V);
    for (auto& vs : res.vec_sym) {
        std::vector<double> wave = vs; // Dirichlet scheme: Xi lives on the nodes
        wave_sign_fix(wave, vs);
        res.wave.push_back(std::move(wave));
    }
    return res;
}

EigenResult solve_y(const ModelParams& p, double gamma_eps, const Grid1D& g,
                    int k_levels) {
    check_grid(g, k_levels);
    const double w2 = p.omega * p.omega;

    if (p.kappa > 0 && gamma_eps > 0) {
        const double sig = gamma_eps / (p.hbar * p.kappa);
        if (is_full_wall(g, p.kappa) && sig + 0.5 <= FLUX_EXPONENT_CAP) {
            const double q0 = gamma_eps * (gamma_eps + p.hbar * p.kappa) /
                                  (2.0 * p.kappa) -
                              w2 / (2.0 * p.kappa);
            const FluxBuild fb =
                build_flux(p.kappa, p.hbar, 2.0 * sig + 1.0, q0, g);
            EigenResult res;
            res.grid = g;
            res.value = tridiag::lowest_eigenvalues(fb.d, fb.e, k_levels);
            const double h = g.h();
            for (int j = 0; j < k_levels; ++j) {
                std::vector<double> raw;
                {
                    std::vector<std::vector<double>> prev;
                    for (int q = 0; q < j; ++q) {
                        prev.push_back(res.vec_sym[q]);
                        for (double& x : prev.back()) x *= std::sqrt(h);
                    }
                    raw = tridiag::eigenvector(fb.d, fb.e, res.value[j], prev);
                }
                // Y = C^sigma G, G = raw/sqrt(m); normalized in C(y) dy.
                std::vector<double> wave(g.n);
                double nrm2 = 0;
                for (int i = 0; i < g.n; ++i) {
                    const double lc = log_c(p.kappa, g.node(i));
                    wave[i] = raw[i] * std::exp(sig * lc - 0.5 * fb.log_m[i]);
                    nrm2 += wave[i] * wave[i] * c_k(p.kappa, g.node(i));
                }
                const double nrm = std::sqrt(nrm2 * h);
                for (double& x : wave) x /= nrm;
                std::vector<double> vs(g.n);
                for (int i = 0; i < g.n; ++i) vs[i] = raw[i] / std::sqrt(h);
                wave_sign_fix(wave, vs);
                res.vec_sym.push_back(std::move(vs));
                res.wave.push_back(std::move(wave));
            }
            res.log_mass = fb.log_m;
            return res;
        }
    }

    // Plain scheme on Phi = C^{1/2} Y (self-adjoint gauge), stable split
    // potential; flat reduces to the harmonic problem with Phi == Y.
    std::vector<double> V(g.n);
    for (int j = 0; j < g.n; ++j) {
        const double y = g.node(j);
        if (p.kappa == 0.0) {
            V[j] = 0.5 * w2 * y * y;
        } else {
            const double t = t_k(p.kappa, y);
            const double t2 = t * t;
            V[j] = v_raw_split(p, gamma_eps, t2) -
                   0.25 * p.hbar * p.hbar * p.kappa -
                   0.125 * p.hbar * p.hbar * p.kappa * p.kappa * t2;
        }
    }
    EigenResult res = solve_plain(p.hbar, g, k_levels, V);
    const double h = g.h();
    for (auto& vs : res.vec_sym) {
        std::vector<double> wave(g.n);
        double nrm2 = 0;
        for (int i = 0; i < g.n; ++i) {
            const double c = c_k(p.kappa, g.node(i));
            wave[i] = vs[i] / std::sqrt(c);
            nrm2 += wave[i] * wave[i] * c;
        }
        const double nrm = std::sqrt(nrm2 * h);
        for (double& x : wave) x /= nrm;
        wave_sign_fix(wave, vs);
        res.wave.push_back(std::move(wave));
    }
    return res;
}

std::vector<double> solve_y_nonsym(const ModelParams& p, double gamma_eps,
                                   const Grid1D& g, int k_levels) {
    check_grid(g, k_levels);
    if (p.kappa == 0.0)
        throw FlatCurvatureError("raw-form cross-check needs kappa != 0");
    const double h = g.h();
    const double hb2 = p.hbar * p.hbar;
    const int n = g.n;
    std::vector<double> d(n), sup(n - 1), sub(n - 1), e(n - 1);
    for (int j = 0; j < n; ++j) {
        const double t = t_k(p.kappa, g.node(j));
        d[j] = hb2 / (h * h) + v_raw_split(p, gamma_eps, t * t);
    }
    // First-derivative term splits across the two off-diagonals; the
    // diagonal similarity that symmetrizes it is exact when all products
    // of paired off-diagonal entries stay positive.
    for (int j = 0; j + 1 < n; ++j) {
        const double tj = t_k(p.kappa, g.node(j));
        const double tj1 = t_k(p.kappa, g.node(j + 1));
        sup[j] = -hb2 / (2 * h * h) + (hb2 * p.kappa / (4 * h)) * tj;
        sub[j] = -hb2 / (2 * h * h) - (hb2 * p.kappa / (4 * h)) * tj1;
        const double prod = sup[j] * sub[j];
        if (prod <= 0)
            throw NumericalError("raw y-operator cannot be balanced on this grid "
                                 "(first-derivative term dominates; refine h)");
        e[j] = -std::sqrt(prod);
    }
    return tridiag::lowest_eigenvalues(d, e, k_levels);
}

double xi_continuum_threshold(const ModelParams& p) {
    if (p.kappa >= 0)
        throw NotHyperbolicError("continuum threshold exists only for kappa < 0");
    return 0.0;
}

double y_continuum_threshold(const ModelParams& p) {
    if (p.kappa >= 0)
        throw NotHyperbolicError("continuum threshold exists only for kappa < 0");
    const double ak = std::abs(p.kappa);
    return p.omega * p.omega / (2.0 * ak) + p.hbar * p.hbar * ak / 8.0;
}

int count_bound(const std::vector<double>& levels, double threshold,
                double guard) {
    int c = 0;
    for (const double v : levels)
        if (v < threshold - guard) ++c;
    return c;
}

double ladder_action_residual(const ModelParams& p, const EigenResult& xi_sol,
                              int mu) {
    if (mu < 0 || static_cast<std::size_t>(mu) + 1 >= xi_sol.wave.size())
        throw DomainError("ladder residual needs eigenpairs mu and mu+1");
    const double eps = epsilon_mu(p, mu);
    const auto x = nodes_of(xi_sol.grid);
    const double h = xi_sol.grid.h();
    const auto& whi = xi_sol.wave[mu + 1];
    const auto bv = apply_b(p, eps, +1, x, h, xi_sol.wave[mu]);
    // Measure alignment over the numerical support of the broader state;
    // outside it the discrete eigenvector tail is rounding noise, which B
    // amplifies by C/h (exponentially large for kappa < 0).
    double peak = 0;
    for (const double v : whi) peak = std::max(peak, std::abs(v));
    std::size_t lo = 0, hi = whi.size();
    while (lo < whi.size() && std::abs(whi[lo]) < 1e-8 * peak) ++lo;
    while (hi > lo && std::abs(whi[hi - 1]) < 1e-8 * peak) --hi;
    double c = 0, n2 = 0, m2 = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        c += whi[i] * bv[i];
        n2 += bv[i] * bv[i];
        m2 += whi[i] * whi[i];
    }
    // sin of the angle via the explicit projection residual: the closed
    // form 1 - c^2/(n2 m2) cancels catastrophically once the angle nears
    // the rounding floor, while the pointwise difference stays exact
    const double coef = c / m2;
    double r2 = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double r = bv[i] - coef * whi[i];
        r2 += r * r;
    }
    return std::sqrt(r2 / n2);
}

double ladder_factorization_residual(const ModelParams& p,
                                     const EigenResult& xi_sol, int mu) {
    if (mu < 0 || static_cast<std::size_t>(mu) >= xi_sol.wave.size())
        throw DomainError("factorization residual needs eigenpair mu");
    const double eps = epsilon_mu(p, mu);
    const double hk = p.hbar * p.kappa;
    const auto x = nodes_of(xi_sol.grid);
    const double h = xi_sol.grid.h();
    const auto& w = xi_sol.wave[mu];
    const auto bv = apply_b(p, eps, +1, x, h, w);
    const auto bbv = apply_b(p, eps + hk, -1, x, h, bv);
    const double c = -p.omega * p.omega / (2.0 * p.kappa * p.gamma * p.gamma) +
                     eps * (eps + hk) / (2.0 * p.kappa);
    // Restrict to the numerical support of the state: on unbounded domains
    // the far tail of a discrete eigenvector is rounding noise, and the
    // double application of B amplifies it by C^2/h^2, which grows like
    // e^(2|x|) for kappa < 0 and would swamp the truncation error.
    double peak = 0;
    for (const double v : w) peak = std::max(peak, std::abs(v));
    std::size_t lo = 0, hi = w.size();
    while (lo < w.size() && std::abs(w[lo]) < 1e-8 * peak) ++lo;
    while (hi > lo && std::abs(w[hi - 1]) < 1e-8 * peak) --hi;
    double acc = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        const double r = bbv[i] - c * w[i];
        acc += r * r;
    }
    return std::sqrt(acc * h) / std::abs(c);
}

double intertwine_residual(const ModelParams& p, double g, const Grid1D& grid,
                           int k_basis) {
    if (p.kappa == 0.0)
        throw FlatCurvatureError("intertwining shift needs kappa != 0");
    const EigenResult sol = solve_y(p, g, grid, k_basis);
    const auto y = nodes_of(grid);
    const double h = grid.h();
    const int n = grid.n;
    const int w0 = static_cast<int>(0.05 * n), w1 = n - w0;
    double worst = 0;
    for (int j = 0; j < k_basis; ++j) {
        const auto& v = sol.wave[j];
        const auto lhs = apply_a_minus(p, g, y, h, apply_hy_raw(p, g, y, h, v));
        const auto rhs = apply_hy_raw(p, g - p.hbar * p.kappa, y, h,
                                      apply_a_minus(p, g, y, h, v));
        double num = 0, den = 0;
        for (int i = w0; i < w1; ++i) {
            const double r = lhs[i] - rhs[i];
            num += r * r;
            den += lhs[i] * lhs[i];
        }
        worst = std::max(worst, std::sqrt(num * h) /
                                    std::max(std::sqrt(den * h), 1.0));
    }
    return worst;
}

double composite_rayleigh(const ModelParams& p, int mu, int nu, int n) {
    if (p.kappa <= 0)
        throw DomainError("composite map is exercised on the sphere");
    if (!p.ratio) throw DomainError("composite map needs a commensurate ratio");
    if (mu < 0 || nu < 0) throw DomainError("quantum numbers must be >= 0");
    const int rm = p.ratio->m, rn = p.ratio->n;
    if (nu - rm < 0)
        throw DomainError("composite lowers nu by m; need nu >= m");

    const double hk = p.hbar * p.kappa;
    const double eps_mu = epsilon_mu(p, mu);

    // xi chain: wave_mu, then n_ratio ladder steps.
    const Grid1D gx = default_xi_grid(p, n);
    const EigenResult xs = solve_xi(p, gx, mu + 1);
    const auto x = nodes_of(gx);
    const double hx = gx.h();
    std::vector<double> fxi = xs.wave[mu];
    double eps = eps_mu;
    for (int i = 0; i < rn; ++i) {
        fxi = apply_b(p, eps, +1, x, hx, fxi);
        eps += hk;
    }

    // y chain in the gauged G representation: sigma advances by one per
    // shift, landing exactly on gamma*eps_{mu+n} because gamma = m/n.
    const Grid1D gy = default_y_grid(p, n);
    const EigenResult ys = solve_y(p, p.gamma * eps_mu, gy, nu + 1);
    const auto y = nodes_of(gy);
    const double hy = gy.h();
    double sig = p.gamma * eps_mu / hk;
    std::vector<double> G(gy.n);
    if (!ys.log_mass.empty()) {
        const double sh = std::sqrt(hy);
        for (int i = 0; i < gy.n; ++i)
            G[i] = ys.vec_sym[nu][i] * sh * std::exp(-0.5 * ys.log_mass[i]);
        // vec_sym carries unit h-norm; rescale to match the wave column,
        // whose normalization includes the C(y) measure.
        double n2 = 0;
        for (int i = 0; i < gy.n; ++i) {
            const double w = G[i] * std::exp(sig * log_c(p.kappa, y[i]));
            n2 += w * w * c_k(p.kappa, y[i]);
        }
        const double scl = 1.0 / std::sqrt(n2 * hy);
        for (double& v : G) v *= scl;
    } else {
        for (int i = 0; i < gy.n; ++i)
            G[i] = ys.wave[nu][i] * std::exp(-sig * log_c(p.kappa, y[i]));
    }
    for (int step = 0; step < rm; ++step) {
        const auto dG = ddx_onesided(G, hy);
        for (int i = 0; i < gy.n; ++i)
            G[i] = -(p.hbar / SQRT2) * dG[i] / c_k(p.kappa, y[i]);
        sig += 1.0;
    }
    std::vector<double> fy(gy.n);
    for (int i = 0; i < gy.n; ++i)
        fy[i] = G[i] * std::exp(sig * log_c(p.kappa, y[i]));

    // Rayleigh quotient of the product state in the measure C(y) dxi dy:
    // the 2D operator splits as gamma^2 H_xi / C^2(y) + (y part).
    const double w2 = p.omega * p.omega;
    std::vector<double> hxf = d2dx_ghost(fxi, hx);
    for (int i = 0; i < gx.n; ++i) {
        const double c = c_k(p.kappa, x[i]);
        hxf[i] = -0.5 * p.hbar * p.hbar * hxf[i] +
                 w2 / (2.0 * p.kappa * p.gamma * p.gamma * c * c) * fxi[i];
    }
    const double ip_x = dot_h(fxi, fxi, hx);
    const double ip_xh = dot_h(fxi, hxf, hx);

    std::vector<double> d1 = ddx_ghost(fy, hy), d2 = d2dx_ghost(fy, hy);
    double ip_y = 0, ip_yh = 0, ip_yc2 = 0;
    for (int i = 0; i < gy.n; ++i) {
        const double c = c_k(p.kappa, y[i]);
        const double t = t_k(p.kappa, y[i]);
        const double hy0 = -0.5 * p.hbar * p.hbar * d2[i] +
                           0.5 * p.hbar * p.hbar * p.kappa * t * d1[i] -
                           w2 / (2.0 * p.kappa) * fy[i];
        ip_y += c * fy[i] * fy[i];
        ip_yh += c * fy[i] * hy0;
        ip_yc2 += fy[i] * fy[i] / c;
    }
    ip_y *= hy;
    ip_yh *= hy;
    ip_yc2 *= hy;

    return (p.gamma * p.gamma * ip_yc2 * ip_xh + ip_x * ip_yh) / (ip_x * ip_y);
}

} // namespace curvosc
