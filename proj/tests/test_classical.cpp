#include <cmath>
#include <random>

#include <doctest.h>

#include "curvosc/classical.hpp"
#include "curvosc/model.hpp"

using namespace curvosc;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(ModelParams(1.0, -0.5, 1.0), DomainError);
    CHECK_THROWS_AS(ModelParams(1.0, 1.0, 0.3), DomainError); // sphere needs gamma >= 1/2
    CHECK_NOTHROW(ModelParams(-1.0, 1.0, 0.3));               // fine off the sphere
    CHECK_THROWS_AS(ModelParams(1.0, 1.0, 1.0, 1.0, Ratio{2, 4}), DomainError);
    CHECK_THROWS_AS(ModelParams(1.0, 1.0, 1.5, 1.0, Ratio{2, 1}), DomainError);
    const ModelParams p = params_from_ratio(1.0, 1.0, {3, 2});
    CHECK(p.gamma == doctest::Approx(1.5));
    CHECK(p.has_ratio());
}

TEST_CASE("energy at the origin vanishes") {
    const ModelParams p = params_from_ratio(1.0, 0.7, {2, 1});
    CHECK(hamiltonian(p, {0, 0, 0, 0}) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("flat Hamiltonian is the anisotropic oscillator") {
    const ModelParams p = params_from_ratio(0.0, 2.0, {2, 1});
    const PhasePoint s{0.3, -0.2, 0.5, 0.1};
    const double expect = 0.5 * (0.25 + 0.01) +
                          0.5 * 4.0 * (4 * 0.09 + 0.04); // omega^2 (gamma^2 x^2 + y^2)/2
    CHECK(hamiltonian(p, s) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("alternative form agrees with the direct form") {
    std::mt19937_64 rng(11);
    for (double k : {1.0, -1.0}) {
        const ModelParams p = params_from_ratio(k, 0.9, {3, 2});
        for (int i = 0; i < 20; ++i) {
            const PhasePoint s = sample_bound_state(p, rng);
            CHECK(hamiltonian_alt(p, s) ==
                  doctest::Approx(hamiltonian(p, s)).epsilon(1e-12));
        }
    }
    const ModelParams pf = params_from_ratio(0.0, 1.0, {1, 1});
    CHECK_THROWS_AS((void)hamiltonian_alt(pf, {0.1, 0.1, 0, 0}),
                    FlatCurvatureError);
}

TEST_CASE("scattering states are rejected by cal_e") {
    const ModelParams p = params_from_ratio(-1.0, 0.5, {1, 1});
    // large x-momentum pushes H_xi above zero: no ladder energy scale
    CHECK_THROWS_AS((void)cal_e(p, {0.1, 0.0, 5.0, 0.0}), ScatteringRegimeError);
    CHECK_NOTHROW((void)cal_e(p, {0.1, 0.0, 0.01, 0.0}));
    // flat: calE == omega/gamma identically
    const ModelParams pf = params_from_ratio(0.0, 1.2, {2, 1});
    CHECK(cal_e(pf, {0.3, 0.1, 0.2, 0.1}) == doctest::Approx(0.6).epsilon(1e-14));
}

TEST_CASE("analytic gradient matches finite differences") {
    std::mt19937_64 rng(7);
    for (double k : {1.0, 0.0, -1.0}) {
        const ModelParams p = params_from_ratio(k, 0.8, {2, 1});
        for (int i = 0; i < 10; ++i) {
            const PhasePoint s = sample_bound_state(p, rng);
            const auto g = grad_h(p, s);
            const double h = 1e-6;
            auto at = [&](double dx, double dy, double dpx, double dpy) {
                return hamiltonian(p, {s.x + dx, s.y + dy, s.px + dpx, s.py + dpy});
            };
            CHECK(g[0] == doctest::Approx((at(h, 0, 0, 0) - at(-h, 0, 0, 0)) / (2 * h))
                              .epsilon(5e-7));
            CHECK(g[1] == doctest::Approx((at(0, h, 0, 0) - at(0, -h, 0, 0)) / (2 * h))
                              .epsilon(5e-7));
            CHECK(g[2] == doctest::Approx((at(0, 0, h, 0) - at(0, 0, -h, 0)) / (2 * h))
                              .epsilon(5e-7));
            CHECK(g[3] == doctest::Approx((at(0, 0, 0, h) - at(0, 0, 0, -h)) / (2 * h))
                              .epsilon(5e-7));
        }
    }
}

TEST_CASE("power-product symmetries Poisson-commute with H") {
    std::mt19937_64 rng(23);
    for (double k : {1.0, -1.0, 0.0}) {
        const ModelParams p = params_from_ratio(k, 0.9, {2, 1});
        const Observable hob = [&](const PhasePoint& q) { return hamiltonian(p, q); };
        const Observable xob = [&](const PhasePoint& q) {
            return real_symmetries(p, q).x_sym;
        };
        const Observable yob = [&](const PhasePoint& q) {
            return real_symmetries(p, q).y_sym;
        };
        for (int i = 0; i < 5; ++i) {
            const PhasePoint s = sample_bound_state(p, rng);
            CHECK(std::abs(poisson_bracket(xob, hob, s)) < 1e-6);
            CHECK(std::abs(poisson_bracket(yob, hob, s)) < 1e-6);
        }
    }
}

TEST_CASE("angular momentum is the gamma=1 symmetry") {
    std::mt19937_64 rng(5);
    for (double k : {1.0, -1.0}) {
        const ModelParams p = params_from_ratio(k, 0.7, {1, 1});
        for (int i = 0; i < 10; ++i) {
            const PhasePoint s = sample_bound_state(p, rng);
            const SymmetryPair xy = real_symmetries(p, s);
            CHECK(xy.y_sym ==
                  doctest::Approx(-0.5 * angular_momentum(k, s)).epsilon(1e-12));
        }
    }
}

TEST_CASE("hand-expanded closed forms agree with the power product") {
    std::mt19937_64 rng(41);
    SUBCASE("curved 1:1") {
        for (double k : {1.0, -1.0}) {
            const ModelParams p = params_from_ratio(k, 0.9, {1, 1});
            for (int i = 0; i < 30; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const auto a = real_symmetries(p, s);
                const auto b = worked::xy_ratio_1_1(p, s);
                CHECK(a.x_sym == doctest::Approx(b.x_sym).epsilon(1e-11));
                CHECK(a.y_sym == doctest::Approx(b.y_sym).epsilon(1e-11));
            }
        }
    }
    SUBCASE("curved 2:1") {
        for (double k : {1.0, -1.0}) {
            const ModelParams p = params_from_ratio(k, 0.9, {2, 1});
            for (int i = 0; i < 30; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const auto a = real_symmetries(p, s);
                const auto b = worked::xy_ratio_2_1(p, s);
                CHECK(a.x_sym == doctest::Approx(b.x_sym).epsilon(1e-11));
                CHECK(a.y_sym == doctest::Approx(b.y_sym).epsilon(1e-11));
            }
        }
    }
    SUBCASE("curved 1:2") {
        for (double k : {1.0, -1.0}) {
            const ModelParams p = params_from_ratio(k, 0.9, {1, 2});
            for (int i = 0; i < 30; ++i) {
                const PhasePoint s = sample_bound_state(p, rng);
                const auto a = real_symmetries(p, s);
                const auto b = worked::xy_ratio_1_2(p, s);
                CHECK(a.x_sym == doctest::Approx(b.x_sym).epsilon(1e-11));
                CHECK(a.y_sym == doctest::Approx(b.y_sym).epsilon(1e-11));
            }
        }
    }
    SUBCASE("flat 2:1") {
        const ModelParams p = params_from_ratio(0.0, 0.9, {2, 1});
        for (int i = 0; i < 30; ++i) {
            const PhasePoint s = sample_bound_state(p, rng);
            const auto a = real_symmetries(p, s);
            const auto b = worked::xy_flat_2_1(p, s);
            CHECK(a.x_sym == doctest::Approx(b.x_sym).epsilon(1e-11));
            CHECK(a.y_sym == doctest::Approx(b.y_sym).epsilon(1e-11));
        }
    }
}

TEST_CASE("symmetry product needs a ratio") {
    const ModelParams p(1.0, 0.9, std::sqrt(2.0));
    CHECK_THROWS_AS((void)symmetry_x(p, {0.1, 0.1, 0.01, 0.01}, +1), DomainError);
}

TEST_CASE("sampler stays in the bound regime off the sphere") {
    const ModelParams p = params_from_ratio(-1.0, 0.9, {2, 1});
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const PhasePoint s = sample_bound_state(p, rng);
        CHECK(2 * p.kappa * h_xi(p, s) > 0);
        CHECK(hamiltonian(p, s) < p.omega * p.omega / (2 * std::abs(p.kappa)));
    }
}
