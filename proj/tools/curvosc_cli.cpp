#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "curvosc/io.hpp"
#include "curvosc/verify.hpp"

namespace {

using namespace curvosc;

std::ofstream open_out(const std::filesystem::path& dir, const std::string& name) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto path = dir / name;
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot write " + path.string());
    return os;
}

void write_text(const std::filesystem::path& dir, const std::string& name,
                const std::string& text) {
    auto os = open_out(dir, name);
    os << text;
    if (!os) throw ConfigError("write failed: " + (dir / name).string());
}

int run_simulate(const std::string& config, const std::string& out) {
    const io::SimulateConfig cfg = io::parse_simulate(io::load_json_file(config));
    const Trajectory traj = integrate(cfg.params, cfg.initial_state, cfg.integrator);

    {
        auto os = open_out(out, "trajectory.csv");
        io::write_trajectory_csv(os, traj, cfg.output_stride);
    }
    if (cfg.write_ambient) {
        auto os = open_out(out, "ambient.csv");
        io::write_ambient_csv(os, cfg.params.kappa, traj, cfg.output_stride);
    }
    const io::json summary = io::simulate_summary(cfg.params, traj, cfg.closure_tol);
    write_text(out, "summary.json", io::dump(summary));

    std::cout << "samples " << traj.t.size() << ", t_end "
              << io::g17(traj.t.back()) << "\n";
    for (const auto& [name, vals] : traj.logs)
        std::printf("drift(%s) = %.3e\n", name.c_str(),
                    conservation_drift(traj, name));
    if (summary.contains("closure")) {
        if (summary["closure"].is_null())
            std::cout << "closure: none within tolerance\n";
        else
            std::printf("closure: t* = %.12g (distance %.3e)\n",
                        summary["closure"]["t_star"].get<double>(),
                        summary["closure"]["distance"].get<double>());
    }
    return 0;
}

int run_spectrum(const std::string& config, const std::string& out,
                 bool degeneracies) {
    const io::SpectrumConfig cfg = io::parse_spectrum(io::load_json_file(config));
    if (degeneracies && !cfg.params.has_ratio())
        throw ConfigError("degeneracies need a commensurate \"ratio\"");
    const Spectrum sp = enumerate_levels(cfg.params, cfg.cutoff);
    const io::json j = io::spectrum_json(cfg.params, sp);
    write_text(out, degeneracies ? "degeneracies.json" : "spectrum.json",
               io::dump(j));

    if (degeneracies) {
        for (const auto& c : sp.classes) {
            std::printf("key %lld: energy %.12g, %zu member(s), spread %.3e\n",
                        c.key, c.energy, c.members.size(), c.spread);
        }
        std::cout << sp.classes.size() << " degeneracy class(es), "
                  << sp.entries.size() << " level(s)\n";
    } else {
        std::cout << sp.entries.size() << " level(s)";
        if (!sp.exhausted_mu.empty())
            std::cout << ", " << sp.exhausted_mu.size()
                      << " xi-branch(es) without bound y-levels";
        std::cout << "\n";
    }
    return 0;
}

int run_eigensolve(const std::string& config, const std::string& out) {
    io::EigensolveConfig cfg = io::parse_eigensolve(io::load_json_file(config));
    const ModelParams& p = cfg.params;
    const bool is_y = cfg.problem == io::EigensolveConfig::Problem::Y;
    const Grid1D grid = cfg.grid ? *cfg.grid
                                 : (is_y ? default_y_grid(p, cfg.n)
                                         : default_xi_grid(p, cfg.n));
    EigenResult res;
    if (is_y) {
        if (!cfg.gamma_eps)
            cfg.gamma_eps = p.gamma * epsilon_mu(p, *cfg.mu);
        res = solve_y(p, *cfg.gamma_eps, grid, cfg.levels);
    } else {
        res = solve_xi(p, grid, cfg.levels);
    }

    write_text(out, "eigen.json", io::dump(io::eigensolve_json(cfg, res)));
    {
        auto os = open_out(out, "wavefunctions.csv");
        io::write_wavefunctions_csv(os, res);
    }
    for (std::size_t i = 0; i < res.value.size(); ++i)
        std::printf("E[%zu] = %.12g\n", i, res.value[i]);
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& out) {
    const auto checks = run_suite(suite, seed);
    write_text(out, "verify.json", io::dump(io::verify_json(suite, seed, checks)));
    int failed = 0;
    for (const auto& c : checks) {
        std::printf("[%s] %s/%s residual=%.3e tol=%.3e%s%s\n",
                    c.pass ? "PASS" : "FAIL", c.suite.c_str(), c.name.c_str(),
                    c.residual, c.tolerance, c.note.empty() ? "" : " -- ",
                    c.note.c_str());
        if (!c.pass) ++failed;
    }
    std::printf("passed %zu/%zu\n", checks.size() - failed, checks.size());
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"anisotropic oscillator on constant-curvature surfaces"};
    app.require_subcommand(1);

    std::string config, out = ".", suite = "all";
    std::uint64_t seed = 0;

    auto* sim = app.add_subcommand(
        "simulate", "integrate a trajectory, write trajectory.csv + summary.json");
    sim->add_option("--config", config, "JSON run configuration")->required();
    sim->add_option("--out", out, "output directory (default .)");

    auto* spec = app.add_subcommand(
        "spectrum", "enumerate closed-form levels, write spectrum.json");
    spec->add_option("--config", config, "JSON run configuration")->required();
    spec->add_option("--out", out, "output directory (default .)");

    auto* deg = app.add_subcommand(
        "degeneracies", "group levels into degenerate classes (needs a ratio)");
    deg->add_option("--config", config, "JSON run configuration")->required();
    deg->add_option("--out", out, "output directory (default .)");

    auto* eig = app.add_subcommand(
        "eigensolve", "finite-difference levels, write eigen.json + wavefunctions.csv");
    eig->add_option("--config", config, "JSON run configuration")->required();
    eig->add_option("--out", out, "output directory (default .)");

    auto* ver = app.add_subcommand("verify", "run the deterministic self-checks");
    ver->add_option("--suite", suite, "ktrig|geometry|classical|dynamics|qspectra|qnumeric|all")
        ->check(CLI::IsMember({"ktrig", "geometry", "classical", "dynamics",
                               "qspectra", "qnumeric", "all"}));
    ver->add_option("--seed", seed, "rng seed for sampled checks (default 0)");
    ver->add_option("--out", out, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed()) return run_simulate(config, out);
        if (spec->parsed()) return run_spectrum(config, out, false);
        if (deg->parsed()) return run_spectrum(config, out, true);
        if (eig->parsed()) return run_eigensolve(config, out);
        if (ver->parsed()) return run_verify(suite, seed, out);
    } catch (const curvosc::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const curvosc::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const curvosc::Error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
