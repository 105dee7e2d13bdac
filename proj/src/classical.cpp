#include "curvosc/classical.hpp"

#include <cmath>

#include "curvosc/geometry.hpp"

namespace curvosc {

namespace {

const double SQRT2 = std::sqrt(2.0);

// calE^2 = 2 kappa H_xi; well-defined for every sign of kappa and equal
// to omega^2 at kappa == 0.  Used by the worked closed forms, which stay
// polynomial in calE^2.
double cal_e2(const ModelParams& p, const PhasePoint& s) {
    if (p.kappa == 0.0) return p.omega * p.omega;
    return 2.0 * p.kappa * h_xi(p, s);
}

} // namespace

double hamiltonian(const ModelParams& p, const PhasePoint& s) {
    const double cy = c_k(p.kappa, s.y);
    if (std::abs(cy) < POLE_FLOOR) throw PoleError("state at the y wall");
    const double ty = t_k(p.kappa, s.y);
    const double tgx = t_k(p.kappa, p.gamma * s.x);
    const double c2 = cy * cy;
    return 0.5 * (s.px * s.px / c2 + s.py * s.py) +
           0.5 * p.omega * p.omega * (tgx * tgx / c2 + ty * ty);
}

double hamiltonian_alt(const ModelParams& p, const PhasePoint& s) {
    if (p.kappa == 0.0)
        throw FlatCurvatureError("alternative Hamiltonian form needs kappa != 0");
    const double cy = c_k(p.kappa, s.y);
    if (std::abs(cy) < POLE_FLOOR) throw PoleError("state at the y wall");
    const double cgx = c_k(p.kappa, p.gamma * s.x);
    if (std::abs(cgx) < POLE_FLOOR) throw PoleError("state at the gamma*x wall");
    const double w2k = p.omega * p.omega / (2.0 * p.kappa);
    return 0.5 * s.py * s.py +
           (0.5 * s.px * s.px + w2k / (cgx * cgx)) / (cy * cy) - w2k;
}

double h_xi(const ModelParams& p, const PhasePoint& s) {
    const double xi = p.gamma * s.x;
    const double pxi = s.px / p.gamma;
    if (p.kappa == 0.0)
        return 0.5 * pxi * pxi +
               p.omega * p.omega * xi * xi / (2.0 * p.gamma * p.gamma);
    const double cxi = c_k(p.kappa, xi);
    if (std::abs(cxi) < POLE_FLOOR) throw PoleError("state at the gamma*x wall");
    return 0.5 * pxi * pxi +
           p.omega * p.omega / (2.0 * p.kappa * p.gamma * p.gamma * cxi * cxi);
}

double cal_e(const ModelParams& p, const PhasePoint& s) {
    if (p.kappa == 0.0) return p.omega / p.gamma;
    const double v = 2.0 * p.kappa * h_xi(p, s);
    if (v <= 0.0)
        throw ScatteringRegimeError("2 kappa H_xi <= 0: no bound ladder energy scale "
                                    "(hyperbolic scattering regime)");
    return std::sqrt(v);
}

std::complex<double> ladder_b(const ModelParams& p, const PhasePoint& s, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    const double xi = p.gamma * s.x;
    const double pxi = s.px / p.gamma;
    if (p.kappa == 0.0)
        return {p.omega / (SQRT2 * p.gamma) * xi, -sign * pxi / SQRT2};
    const double e = cal_e(p, s);
    const double cxi = c_k(p.kappa, xi), sxi = s_k(p.kappa, xi);
    return {e / SQRT2 * sxi, -sign * cxi * pxi / SQRT2};
}

std::complex<double> shift_a(const ModelParams& p, const PhasePoint& s, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
    if (p.kappa == 0.0)
        return {-p.omega / SQRT2 * s.y, -sign * s.py / SQRT2};
    const double e = cal_e(p, s);
    const double ty = t_k(p.kappa, s.y);
    return {-p.gamma * e / SQRT2 * ty, -sign * s.py / SQRT2};
}

std::complex<double> symmetry_x(const ModelParams& p, const PhasePoint& s, int sign) {
    if (!p.ratio)
        throw DomainError("power-product symmetry needs a commensurate ratio");
    const std::complex<double> b = ladder_b(p, s, sign);
    const std::complex<double> a = shift_a(p, s, sign);
    std::complex<double> out{1.0, 0.0};
    for (int i = 0; i < p.ratio->n; ++i) out *= b;
    for (int i = 0; i < p.ratio->m; ++i) out *= a;
    return out;
}

SymmetryPair real_symmetries(const ModelParams& p, const PhasePoint& s) {
    if (!p.ratio)
        throw DomainError("real symmetries need a commensurate ratio");
    const std::complex<double> xp = symmetry_x(p, s, +1);
    if (p.kappa == 0.0) return {xp.real(), xp.imag()};
    const double e = cal_e(p, s);
    if ((p.ratio->m + p.ratio->n) % 2 == 0) return {xp.real(), xp.imag() / e};
    return {xp.real() / e, xp.imag()};
}

double angular_momentum(double kappa, const PhasePoint& s) {
    return s_k(kappa, s.x) * s.py - c_k(kappa, s.x) * t_k(kappa, s.y) * s.px;
}

std::array<double, 4> grad_h(const ModelParams& p, const PhasePoint& s) {
    const double w2 = p.omega * p.omega;
    if (p.kappa == 0.0)
        return {w2 * p.gamma * p.gamma * s.x, w2 * s.y, s.px, s.py};
    const double cy = c_k(p.kappa, s.y);
    if (std::abs(cy) < POLE_FLOOR) throw PoleError("state at the y wall");
    const double c2y = cy * cy;
    const double ty = t_k(p.kappa, s.y);
    const double gx = p.gamma * s.x;
    const double cgx = c_k(p.kappa, gx);
    if (std::abs(cgx) < POLE_FLOOR) throw PoleError("state at the gamma*x wall");
    const double tgx = t_k(p.kappa, gx);
    const double dx = w2 * p.gamma * tgx / (cgx * cgx * c2y);
    const double dy = p.kappa * ty / c2y * (s.px * s.px + w2 * tgx * tgx) +
                      w2 * ty / c2y;
    return {dx, dy, s.px / c2y, s.py};
}

double poisson_bracket(const Observable& f, const Observable& g,
                       const PhasePoint& s) {
    // Per-partial central differences with one Richardson halving.
    auto partial = [&](const Observable& fn, int i, double h) {
        PhasePoint sp = s, sm = s;
        double* cp[4] = {&sp.x, &sp.y, &sp.px, &sp.py};
        double* cm[4] = {&sm.x, &sm.y, &sm.px, &sm.py};
        *cp[i] += h;
        *cm[i] -= h;
        return (fn(sp) - fn(sm)) / (2.0 * h);
    };
    auto rich = [&](const Observable& fn, int i, double h) {
        return (4.0 * partial(fn, i, h / 2) - partial(fn, i, h)) / 3.0;
    };
    const double coord[4] = {s.x, s.y, s.px, s.py};
    double total = 0.0;
    for (int qi = 0; qi < 2; ++qi) {
        const int pi = qi + 2;
        const double hq = 1e-5 * (1.0 + std::abs(coord[qi]));
        const double hp = 1e-5 * (1.0 + std::abs(coord[pi]));
        total += rich(f, qi, hq) * rich(g, pi, hp) -
                 rich(f, pi, hp) * rich(g, qi, hq);
    }
    return total;
}

PhasePoint sample_bound_state(const ModelParams& p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    std::normal_distribution<double> nrm(0.0, 1.0);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        PhasePoint s;
        if (p.kappa > 0) {
            const double wall = y_wall(p.kappa);
            s.x = u(rng) * wall / std::max(p.gamma, 1.0);
            s.y = u(rng) * wall;
            s.px = nrm(rng) * 0.5 * p.omega;
            s.py = nrm(rng) * 0.5 * p.omega;
            return s; // every sphere state below the walls is bound
        }
        s.x = u(rng);
        s.y = u(rng);
        s.px = nrm(rng) * 0.3 * p.omega;
        s.py = nrm(rng) * 0.3 * p.omega;
        if (p.kappa < 0) {
            if (2.0 * p.kappa * h_xi(p, s) <= 1e-6) continue;
            if (hamiltonian(p, s) >=
                p.omega * p.omega / (2.0 * std::abs(p.kappa)) - 1e-6)
                continue;
        }
        return s;
    }
    throw NumericalError("sample_bound_state: rejection sampling failed");
}

namespace worked {

SymmetryPair xy_ratio_1_1(const ModelParams& p, const PhasePoint& s) {
    const double e2 = cal_e2(p, s);
    const double cx = c_k(p.kappa, s.x), sx = s_k(p.kappa, s.x);
    const double ty = t_k(p.kappa, s.y);
    const double x = -0.5 * (cx * s.px * s.py + e2 * sx * ty);
    const double y = -0.5 * (sx * s.py - cx * ty * s.px);
    return {x, y};
}

SymmetryPair xy_ratio_2_1(const ModelParams& p, const PhasePoint& s) {
    const double e2 = cal_e2(p, s);
    const double c2x = c_k(p.kappa, 2.0 * s.x), s2x = s_k(p.kappa, 2.0 * s.x);
    const double ty = t_k(p.kappa, s.y);
    const double x = -(1.0 / (2.0 * SQRT2)) *
                     ((s2x * s.py - 2.0 * c2x * ty * s.px) * s.py -
                      4.0 * e2 * s2x * ty * ty);
    const double y = (1.0 / (4.0 * SQRT2)) *
                     (c2x * s.px * s.py * s.py +
                      4.0 * e2 * ty * (2.0 * s2x * s.py - c2x * ty * s.px));
    return {x, y};
}

SymmetryPair xy_ratio_1_2(const ModelParams& p, const PhasePoint& s) {
    const double e2 = cal_e2(p, s);
    const double sx = s_k(p.kappa, s.x);
    const double ch = c_k(p.kappa, 0.5 * s.x), sh = s_k(p.kappa, 0.5 * s.x);
    const double ty = t_k(p.kappa, s.y);
    const double x = -(1.0 / (4.0 * SQRT2)) *
                     (4.0 * (sx * s.py - ch * ch * ty * s.px) * s.px +
                      e2 * sh * sh * ty);
    const double y = (1.0 / (2.0 * SQRT2)) *
                     (4.0 * ch * ch * s.px * s.px * s.py -
                      e2 * (sh * sh * s.py - sx * ty * s.px));
    return {x, y};
}

SymmetryPair xy_flat_2_1(const ModelParams& p, const PhasePoint& s) {
    if (p.kappa != 0.0)
        throw DomainError("flat worked form evaluated at kappa != 0");
    const double w = p.omega;
    const double xi = 2.0 * s.x, pxi = s.px / 2.0;
    const double x = -(w / (4.0 * SQRT2)) *
                     (s.py * (xi * s.py - 4.0 * s.y * pxi) - w * w * xi * s.y * s.y);
    const double y = (1.0 / (2.0 * SQRT2)) *
                     (pxi * s.py * s.py +
                      w * w * s.y * (xi * s.py - s.y * pxi));
    return {x, y};
}

} // namespace worked

} // namespace curvosc
