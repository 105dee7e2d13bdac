#include "curvosc/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "curvosc/errors.hpp"

namespace curvosc::tridiag {

namespace {

void check_shape(const std::vector<double>& d, const std::vector<double>& e) {
    if (d.empty()) throw DomainError("tridiag: empty matrix");
    if (e.size() + 1 != d.size())
        throw DomainError("tridiag: subdiagonal must have n-1 entries");
}

// Gershgorin interval containing the whole spectrum.
std::pair<double, double> gershgorin(const std::vector<double>& d,
                                     const std::vector<double>& e) {
    const std::size_t n = d.size();
    double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0;
        if (i > 0) r += std::abs(e[i - 1]);
        if (i + 1 < n) r += std::abs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    return {lo, hi};
}

// Find the (k+1)-smallest eigenvalue (0-based k) by bisection on the
// Sturm count.
double kth_eigenvalue(const std::vector<double>& d, const std::vector<double>& e,
                      int k, double lo, double hi) {
    const double scale = std::max(std::abs(lo), std::abs(hi));
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * scale +
                       std::numeric_limits<double>::min();
    // count_below is monotone; invariant: count(lo) <= k < count(hi).
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (count_below(d, e, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

int count_below(const std::vector<double>& d, const std::vector<double>& e,
                double x) {
    check_shape(d, e);
    // LDL^T recurrence: the number of negative pivots of T - xI equals
    // the number of eigenvalues below x.
    const double tiny = std::numeric_limits<double>::min() /
                        std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = d[0] - x;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        double denom = q;
        if (std::abs(denom) < tiny) denom = denom < 0 ? -tiny : tiny;
        q = d[i] - x - e[i - 1] * e[i - 1] / denom;
        if (q < 0) ++count;
    }
    return count;
}

std::vector<double> lowest_eigenvalues(const std::vector<double>& d,
                                       const std::vector<double>& e, int k) {
    check_shape(d, e);
    if (k < 1) throw DomainError("tridiag: need k >= 1");
    if (static_cast<std::size_t>(k) > d.size())
        throw DomainError("tridiag: k exceeds matrix order");
    auto [lo, hi] = gershgorin(d, e);
    std::vector<double> vals(k);
    double left = lo;
    for (int j = 0; j < k; ++j) {
        // Eigenvalues come out ascending, so each search can start at
        // the previous result.
        vals[j] = kth_eigenvalue(d, e, j, left, hi);
        left = vals[j] - (hi - lo) * 1e-14 - 1e-300; // cushion for clusters
    }
    return vals;
}

std::vector<double> eigenvalues_below(const std::vector<double>& d,
                                      const std::vector<double>& e,
                                      double bound) {
    check_shape(d, e);
    const int k = count_below(d, e, bound);
    if (k == 0) return {};
    return lowest_eigenvalues(d, e, k);
}

std::vector<double> eigenvector(const std::vector<double>& d,
                                const std::vector<double>& e, double lambda,
                                const std::vector<std::vector<double>>& previous) {
    check_shape(d, e);
    const std::size_t n = d.size();
    auto [glo, ghi] = gershgorin(d, e);
    const double scale = std::max(std::abs(glo), std::abs(ghi));

    // LU factorization of T - lambda I with partial pivoting.  Bands:
    // l (multipliers), u0 (diag), u1/u2 (two superdiagonals), pivoted rows
    // flagged so back-substitution knows the bandwidth.
    std::vector<double> u0(n), u1(n > 1 ? n - 1 : 0), u2(n > 2 ? n - 2 : 0, 0.0);
    std::vector<double> l(n > 1 ? n - 1 : 0);
    std::vector<char> swapped(n > 1 ? n - 1 : 0, 0);

    auto factor = [&]() {
        std::vector<double> a(n), b(n > 1 ? n - 1 : 0), c(n > 1 ? n - 1 : 0);
        for (std::size_t i = 0; i < n; ++i) a[i] = d[i] - lambda;
        for (std::size_t i = 0; i + 1 < n; ++i) b[i] = c[i] = e[i];
        std::fill(u2.begin(), u2.end(), 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(a[i]) >= std::abs(c[i])) {
                swapped[i] = 0;
                double piv = a[i];
                if (piv == 0.0) piv = 1e-300;
                const double m = c[i] / piv;
                l[i] = m;
                u0[i] = piv;
                u1[i] = b[i];
                a[i + 1] -= m * b[i];
                // u2 stays 0 on unswapped rows
            } else {
                swapped[i] = 1;
                const double piv = c[i]; // |c| > |a| >= 0 so piv != 0
                const double m = a[i] / piv;
                l[i] = m;
                u0[i] = piv;
                u1[i] = a[i + 1];
                if (i + 2 < n) {
                    u2[i] = b[i + 1];
                    a[i + 1] = b[i] - m * a[i + 1];
                    b[i + 1] = -m * u2[i];
                } else {
                    a[i + 1] = b[i] - m * a[i + 1];
                }
            }
        }
        u0[n - 1] = a[n - 1] == 0.0 ? 1e-300 : a[n - 1];
    };
    factor();

    auto solve = [&](std::vector<double>& rhs) {
        // Forward substitution with the recorded row exchanges.
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= l[i] * rhs[i];
        }
        // Back substitution over the (at most) two superdiagonals.
        for (std::size_t ii = n; ii-- > 0;) {
            double acc = rhs[ii];
            if (ii + 1 < n) acc -= u1[ii] * rhs[ii + 1];
            if (ii + 2 < n) acc -= u2[ii] * rhs[ii + 2];
            rhs[ii] = acc / u0[ii];
        }
    };

    auto orthogonalize = [&](std::vector<double>& v) {
        for (const auto& q : previous) {
            double dot = 0;
            for (std::size_t i = 0; i < n; ++i) dot += q[i] * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= dot * q[i];
        }
    };
    auto normalize = [&](std::vector<double>& v) {
        double nrm = 0;
        for (const double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw NumericalError("inverse iteration: zero vector");
        for (double& x : v) x /= nrm;
        return nrm;
    };

    // Deterministic start: unit-norm slowly varying pattern.
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = 1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i + 1));
    orthogonalize(v);
    normalize(v);

    // Iterate until the eigen-residual ||T v - (v^T T v) v|| reaches
    // rounding level.  The growth of the solve step is not a reliable
    // stop signal here: rows near a wall can exceed the eigenvalue scale
    // by many orders, which makes one amplification step look converged
    // while the vector still carries non-eigen components.
    const double eps = std::numeric_limits<double>::epsilon();
    std::vector<double> tv(n), best;
    double best_resid = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 12; ++it) {
        solve(v);
        orthogonalize(v);
        normalize(v);
        for (std::size_t i = 0; i < n; ++i) {
            double s = d[i] * v[i];
            if (i > 0) s += e[i - 1] * v[i - 1];
            if (i + 1 < n) s += e[i] * v[i + 1];
            tv[i] = s;
        }
        double rho = 0;
        for (std::size_t i = 0; i < n; ++i) rho += v[i] * tv[i];
        double r2 = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double r = tv[i] - rho * v[i];
            r2 += r * r;
        }
        const double resid = std::sqrt(r2);
        if (resid < best_resid) {
            best_resid = resid;
            best = v;
        }
        if (resid <= 1e3 * std::sqrt(static_cast<double>(n)) * eps *
                         std::max(1.0, std::abs(rho)))
            break;
    }
    if (best_resid > 1e-7 * std::max(scale, 1.0))
        throw NumericalError("inverse iteration failed to converge");
    return best;
}

} // namespace curvosc::tridiag
