#include "curvosc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

#include "curvosc/geometry.hpp"

namespace curvosc::io {

namespace {

void check_keys(const json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok)
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
    }
}

const json& need(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw ConfigError("missing \"" + std::string(key) + "\" in " + where);
    return *it;
}

double need_num(const json& j, const char* key, const std::string& where) {
    const json& v = need(j, key, where);
    if (!v.is_number())
        throw ConfigError("\"" + std::string(key) + "\" in " + where +
                          " must be a number");
    return v.get<double>();
}

double num_or(const json& j, const char* key, double dflt,
              const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) return dflt;
    if (!it->is_number())
        throw ConfigError("\"" + std::string(key) + "\" in " + where +
                          " must be a number");
    return it->get<double>();
}

int int_or(const json& j, const char* key, int dflt, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) return dflt;
    if (!it->is_number_integer())
        throw ConfigError("\"" + std::string(key) + "\" in " + where +
                          " must be an integer");
    return it->get<int>();
}

} // namespace

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("cannot parse " + path + ": " + e.what());
    }
}

ModelParams parse_params(const json& root) {
    const json& j = need(root, "params", "config");
    if (!j.is_object()) throw ConfigError("\"params\" must be an object");
    check_keys(j, {"kappa", "omega", "gamma", "hbar", "ratio"}, "\"params\"");
    const double kappa = need_num(j, "kappa", "\"params\"");
    const double omega = need_num(j, "omega", "\"params\"");
    const double hbar = num_or(j, "hbar", 1.0, "\"params\"");

    std::optional<Ratio> ratio;
    if (auto it = j.find("ratio"); it != j.end()) {
        if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
            !(*it)[1].is_number_integer())
            throw ConfigError("\"ratio\" must be an array [m, n] of integers");
        ratio = Ratio{(*it)[0].get<int>(), (*it)[1].get<int>()};
    }

    if (auto it = j.find("gamma"); it != j.end()) {
        if (!it->is_number()) throw ConfigError("\"gamma\" must be a number");
        return ModelParams(kappa, omega, it->get<double>(), hbar, ratio);
    }
    if (!ratio)
        throw ConfigError("\"params\" needs \"gamma\" or \"ratio\"");
    return params_from_ratio(kappa, omega, *ratio, hbar);
}

SimulateConfig parse_simulate(const json& j) {
    if (!j.is_object()) throw ConfigError("simulate config must be an object");
    check_keys(j, {"params", "initial_state", "integrator", "output",
                   "closure_tol"},
               "simulate config");
    SimulateConfig cfg(parse_params(j));

    const json& s = need(j, "initial_state", "simulate config");
    check_keys(s, {"x", "y", "px", "py"}, "\"initial_state\"");
    cfg.initial_state = {need_num(s, "x", "\"initial_state\""),
                         need_num(s, "y", "\"initial_state\""),
                         need_num(s, "px", "\"initial_state\""),
                         need_num(s, "py", "\"initial_state\"")};

    const json& it = need(j, "integrator", "simulate config");
    check_keys(it, {"dt", "t_end", "method", "newton_tol", "newton_max_iter"},
               "\"integrator\"");
    cfg.integrator.dt = num_or(it, "dt", 0.0, "\"integrator\"");
    cfg.integrator.t_end = need_num(it, "t_end", "\"integrator\"");
    if (!(cfg.integrator.t_end > 0))
        throw ConfigError("\"t_end\" must be positive");
    if (auto m = it.find("method"); m != it.end()) {
        if (*m == "midpoint")
            cfg.integrator.method = Method::ImplicitMidpoint;
        else if (*m == "rk4")
            cfg.integrator.method = Method::RK4;
        else
            throw ConfigError("\"method\" must be \"midpoint\" or \"rk4\"");
    }
    cfg.integrator.newton_tol = num_or(it, "newton_tol", 1e-13, "\"integrator\"");
    cfg.integrator.newton_max_iter =
        int_or(it, "newton_max_iter", 50, "\"integrator\"");

    if (auto o = j.find("output"); o != j.end()) {
        check_keys(*o, {"stride", "ambient"}, "\"output\"");
        cfg.output_stride = int_or(*o, "stride", 1, "\"output\"");
        if (cfg.output_stride < 1) throw ConfigError("\"stride\" must be >= 1");
        if (auto a = o->find("ambient"); a != o->end()) {
            if (!a->is_boolean()) throw ConfigError("\"ambient\" must be a bool");
            cfg.write_ambient = a->get<bool>();
        }
    }
    if (j.contains("closure_tol"))
        cfg.closure_tol = need_num(j, "closure_tol", "simulate config");
    return cfg;
}

SpectrumConfig parse_spectrum(const json& j) {
    if (!j.is_object()) throw ConfigError("spectrum config must be an object");
    check_keys(j, {"params", "cutoff"}, "spectrum config");
    SpectrumConfig cfg(parse_params(j));
    const json& c = need(j, "cutoff", "spectrum config");
    check_keys(c, {"kind", "value"}, "\"cutoff\"");
    const json& kind = need(c, "kind", "\"cutoff\"");
    const double value = need_num(c, "value", "\"cutoff\"");
    if (kind == "energy")
        cfg.cutoff = EnumerationCutoff::by_energy(value);
    else if (kind == "key")
        cfg.cutoff = EnumerationCutoff::by_key(std::llround(value));
    else
        throw ConfigError("\"cutoff.kind\" must be \"energy\" or \"key\"");
    return cfg;
}

EigensolveConfig parse_eigensolve(const json& j) {
    if (!j.is_object()) throw ConfigError("eigensolve config must be an object");
    check_keys(j, {"params", "problem", "gamma_eps", "mu", "n", "levels", "grid"},
               "eigensolve config");
    EigensolveConfig cfg(parse_params(j));
    const json& pr = need(j, "problem", "eigensolve config");
    if (pr == "xi")
        cfg.problem = EigensolveConfig::Problem::Xi;
    else if (pr == "y")
        cfg.problem = EigensolveConfig::Problem::Y;
    else
        throw ConfigError("\"problem\" must be \"xi\" or \"y\"");

    if (j.contains("gamma_eps"))
        cfg.gamma_eps = need_num(j, "gamma_eps", "eigensolve config");
    if (j.contains("mu")) cfg.mu = int_or(j, "mu", 0, "eigensolve config");
    if (cfg.problem == EigensolveConfig::Problem::Y) {
        if (cfg.gamma_eps && cfg.mu)
            throw ConfigError("give \"gamma_eps\" or \"mu\", not both");
        if (!cfg.gamma_eps && !cfg.mu)
            throw ConfigError("the y-problem needs \"gamma_eps\" or \"mu\"");
    } else if (cfg.gamma_eps || cfg.mu) {
        throw ConfigError("\"gamma_eps\"/\"mu\" apply to the y-problem only");
    }

    cfg.n = int_or(j, "n", 2000, "eigensolve config");
    if (cfg.n < 3) throw ConfigError("\"n\" must be >= 3");
    cfg.levels = int_or(j, "levels", 4, "eigensolve config");
    if (cfg.levels < 1) throw ConfigError("\"levels\" must be >= 1");
    if (cfg.levels > cfg.n) throw ConfigError("\"levels\" must be <= \"n\"");

    if (auto g = j.find("grid"); g != j.end()) {
        check_keys(*g, {"a", "b"}, "\"grid\"");
        Grid1D grid;
        grid.a = need_num(*g, "a", "\"grid\"");
        grid.b = need_num(*g, "b", "\"grid\"");
        grid.n = cfg.n;
        if (!(grid.b > grid.a)) throw ConfigError("\"grid\" needs b > a");
        cfg.grid = grid;
    }
    return cfg;
}

json params_json(const ModelParams& p) {
    json j;
    j["kappa"] = p.kappa;
    j["omega"] = p.omega;
    j["gamma"] = p.gamma;
    j["hbar"] = p.hbar;
    if (p.ratio) j["ratio"] = {p.ratio->m, p.ratio->n};
    return j;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj, int stride) {
    os << "t,x,y,px,py";
    for (const auto& [name, vals] : traj.logs) os << ',' << name;
    os << '\n';
    for (std::size_t i = 0; i < traj.t.size(); i += stride) {
        const PhasePoint& s = traj.state[i];
        os << g17(traj.t[i]) << ',' << g17(s.x) << ',' << g17(s.y) << ','
           << g17(s.px) << ',' << g17(s.py);
        for (const auto& [name, vals] : traj.logs) os << ',' << g17(vals[i]);
        os << '\n';
    }
}

void write_ambient_csv(std::ostream& os, double kappa, const Trajectory& traj,
                       int stride) {
    os << "t,x0,x1,x2\n";
    for (std::size_t i = 0; i < traj.t.size(); i += stride) {
        const PhasePoint& s = traj.state[i];
        const AmbientPoint a = parallel_to_ambient(kappa, {s.x, s.y});
        os << g17(traj.t[i]) << ',' << g17(a.x0) << ',' << g17(a.x1) << ','
           << g17(a.x2) << '\n';
    }
}

json simulate_summary(const ModelParams& p, const Trajectory& traj,
                      const std::optional<double>& closure_tol) {
    json j;
    j["params"] = params_json(p);
    j["samples"] = traj.t.size();
    j["t_end"] = traj.t.empty() ? 0.0 : traj.t.back();
    j["dt"] = traj.t.size() > 1 ? traj.t[1] - traj.t[0] : 0.0;
    json cons = json::object();
    for (const auto& [name, vals] : traj.logs) {
        json c;
        c["initial"] = vals.front();
        c["final"] = vals.back();
        c["drift"] = conservation_drift(traj, name);
        cons[name] = c;
    }
    j["conserved"] = cons;
    if (closure_tol) {
        j["closure_tol"] = *closure_tol;
        const auto cl = closure_detect(traj, *closure_tol);
        if (cl) {
            json c;
            c["t_star"] = cl->t_star;
            c["distance"] = cl->distance;
            j["closure"] = c;
        } else {
            j["closure"] = nullptr;
        }
    }
    return j;
}

json spectrum_json(const ModelParams& p, const Spectrum& sp) {
    json j;
    j["params"] = params_json(p);
    json levels = json::array();
    for (const auto& e : sp.entries) {
        json l;
        l["mu"] = e.mu;
        l["nu"] = e.nu;
        l["energy"] = e.energy;
        if (e.key >= 0) l["key"] = e.key;
        levels.push_back(l);
    }
    j["levels"] = levels;
    if (p.has_ratio()) {
        json classes = json::array();
        for (const auto& c : sp.classes) {
            json cj;
            cj["key"] = c.key;
            cj["energy"] = c.energy;
            cj["spread"] = c.spread;
            cj["members"] = c.members;
            classes.push_back(cj);
        }
        j["classes"] = classes;
    }
    if (!sp.exhausted_mu.empty()) j["exhausted_mu"] = sp.exhausted_mu;
    return j;
}

json eigensolve_json(const EigensolveConfig& cfg, const EigenResult& res) {
    json j;
    j["params"] = params_json(cfg.params);
    j["problem"] = cfg.problem == EigensolveConfig::Problem::Xi ? "xi" : "y";
    if (cfg.problem == EigensolveConfig::Problem::Y) {
        if (cfg.mu) j["mu"] = *cfg.mu;
        if (cfg.gamma_eps) j["gamma_eps"] = *cfg.gamma_eps;
    }
    json g;
    g["a"] = res.grid.a;
    g["b"] = res.grid.b;
    g["n"] = res.grid.n;
    g["h"] = res.grid.h();
    j["grid"] = g;
    j["scheme"] = res.log_mass.empty() ? "plain" : "flux";
    j["values"] = res.value;
    return j;
}

void write_wavefunctions_csv(std::ostream& os, const EigenResult& res) {
    os << "coord";
    for (std::size_t k = 0; k < res.wave.size(); ++k) os << ",wave_" << k;
    os << '\n';
    for (int i = 0; i < res.grid.n; ++i) {
        os << g17(res.grid.node(i));
        for (const auto& w : res.wave) os << ',' << g17(w[i]);
        os << '\n';
    }
}

json verify_json(const std::string& suite, std::uint64_t seed,
                 const std::vector<CheckResult>& checks) {
    json j;
    j["suite"] = suite;
    j["seed"] = seed;
    int npass = 0;
    json arr = json::array();
    for (const auto& c : checks) {
        json cj;
        cj["suite"] = c.suite;
        cj["name"] = c.name;
        cj["residual"] = c.residual;
        cj["tolerance"] = c.tolerance;
        cj["pass"] = c.pass;
        if (!c.note.empty()) cj["note"] = c.note;
        arr.push_back(cj);
        if (c.pass) ++npass;
    }
    j["checks"] = arr;
    j["passed"] = npass;
    j["failed"] = static_cast<int>(checks.size()) - npass;
    return j;
}

} // namespace curvosc::io
