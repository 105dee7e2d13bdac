#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "curvosc/dynamics.hpp"
#include "curvosc/qnumeric.hpp"
#include "curvosc/qspectra.hpp"
#include "curvosc/verify.hpp"

namespace curvosc::io {

using json = nlohmann::ordered_json;

// Doubles are serialized so they round-trip exactly: CSV columns use
// "%.17g", JSON numbers use the shortest exact decimal.  JSON objects
// keep insertion order, so identical runs produce byte-identical files.
std::string g17(double v);
std::string dump(const json& j); // 2-space indent, trailing newline

json load_json_file(const std::string& path); // ConfigError on I/O or parse failure

// --- run configurations -------------------------------------------------

ModelParams parse_params(const json& j); // reads the "params" object

struct SimulateConfig {
    ModelParams params;
    PhasePoint initial_state;
    IntegratorConfig integrator;
    int output_stride = 1;
    bool write_ambient = false;
    std::optional<double> closure_tol;

    explicit SimulateConfig(ModelParams p) : params(p) {}
};

struct SpectrumConfig {
    ModelParams params;
    EnumerationCutoff cutoff;

    explicit SpectrumConfig(ModelParams p) : params(p) {}
};

struct EigensolveConfig {
    enum class Problem { Xi, Y };

    ModelParams params;
    Problem problem = Problem::Xi;
    std::optional<double> gamma_eps; // y-problem coupling, given directly...
    std::optional<int> mu;           // ...or derived as gamma * epsilon_mu
    int n = 2000;
    int levels = 4;
    std::optional<Grid1D> grid;      // overrides the default interval

    explicit EigensolveConfig(ModelParams p) : params(p) {}
};

SimulateConfig parse_simulate(const json& j);
SpectrumConfig parse_spectrum(const json& j);
EigensolveConfig parse_eigensolve(const json& j);

// --- result rendering ----------------------------------------------------

json params_json(const ModelParams& p);

// CSV columns: t,x,y,px,py then one column per logged quantity.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj, int stride);
// CSV columns: t,x0,x1,x2 (ambient embedding of the configuration path).
void write_ambient_csv(std::ostream& os, double kappa, const Trajectory& traj,
                       int stride);

json simulate_summary(const ModelParams& p, const Trajectory& traj,
                      const std::optional<double>& closure_tol);
json spectrum_json(const ModelParams& p, const Spectrum& sp);
json eigensolve_json(const EigensolveConfig& cfg, const EigenResult& res);
// CSV columns: node coordinate, then wave_0..wave_{k-1}.
void write_wavefunctions_csv(std::ostream& os, const EigenResult& res);
json verify_json(const std::string& suite, std::uint64_t seed,
                 const std::vector<CheckResult>& checks);

} // namespace curvosc::io
