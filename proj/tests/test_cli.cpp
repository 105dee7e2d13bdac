#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "curvosc/io.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd =
        std::string("\"") + CURVOSC_CLI_PATH + "\" " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return status < 0 ? status : WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path d = fs::temp_directory_path() / ("curvosc_test_" + tag);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void put(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

} // namespace

TEST_CASE("cli rejects bad invocations with exit code 2") {
    CHECK(run_cli("") == 2);                        // missing subcommand
    CHECK(run_cli("simulate") == 2);                // missing --config
    CHECK(run_cli("verify --suite bogus") == 2);    // not a suite
    CHECK(run_cli("simulate --config /definitely/missing.json") == 2);
}

TEST_CASE("cli simulate writes trajectory, summary, and ambient path") {
    const fs::path dir = fresh_dir("sim");
    put(dir / "run.json", R"({
      "params": {"kappa": 1.0, "omega": 0.3, "ratio": [2, 1]},
      "initial_state": {"x": 0.09, "y": 0.22, "px": 0.012, "py": -0.014},
      "integrator": {"dt": 1e-3, "t_end": 2.0},
      "output": {"stride": 10, "ambient": true}
    })");
    CHECK(run_cli("simulate --config " + (dir / "run.json").string() +
                  " --out " + dir.string()) == 0);
    CHECK(fs::exists(dir / "trajectory.csv"));
    CHECK(fs::exists(dir / "ambient.csv"));
    const auto summary = curvosc::io::load_json_file((dir / "summary.json").string());
    CHECK(summary["samples"] == 2001);
    CHECK(summary["conserved"]["H"]["drift"].get<double>() < 1e-8);
}

TEST_CASE("cli spectrum and degeneracies") {
    const fs::path dir = fresh_dir("spec");
    put(dir / "run.json", R"({
      "params": {"kappa": 1.0, "omega": 1.0, "ratio": [2, 1]},
      "cutoff": {"kind": "key", "value": 6}
    })");
    CHECK(run_cli("spectrum --config " + (dir / "run.json").string() + " --out " +
                  dir.string()) == 0);
    const auto sp = curvosc::io::load_json_file((dir / "spectrum.json").string());
    CHECK(!sp["levels"].empty());
    CHECK(run_cli("degeneracies --config " + (dir / "run.json").string() +
                  " --out " + dir.string()) == 0);
    const auto dg = curvosc::io::load_json_file((dir / "degeneracies.json").string());
    CHECK(!dg["classes"].empty());
}

TEST_CASE("cli eigensolve writes levels and wavefunctions") {
    const fs::path dir = fresh_dir("eig");
    put(dir / "run.json", R"({
      "params": {"kappa": 1.0, "omega": 1.0, "gamma": 1.0},
      "problem": "xi",
      "n": 400,
      "levels": 2
    })");
    CHECK(run_cli("eigensolve --config " + (dir / "run.json").string() +
                  " --out " + dir.string()) == 0);
    const auto ej = curvosc::io::load_json_file((dir / "eigen.json").string());
    CHECK(ej["scheme"] == "flux");
    CHECK(ej["values"].size() == 2);
    CHECK(fs::exists(dir / "wavefunctions.csv"));
}

TEST_CASE("cli maps domain errors to exit code 3") {
    const fs::path dir = fresh_dir("dom");
    put(dir / "run.json", R"({
      "params": {"kappa": -1.0, "omega": 5.0, "gamma": 1.0},
      "problem": "y",
      "mu": 7,
      "n": 400
    })");
    CHECK(run_cli("eigensolve --config " + (dir / "run.json").string() +
                  " --out " + dir.string()) == 3);
}

TEST_CASE("cli verify is byte-reproducible") {
    const fs::path a = fresh_dir("verA"), b = fresh_dir("verB");
    CHECK(run_cli("verify --suite geometry --seed 5 --out " + a.string()) == 0);
    CHECK(run_cli("verify --suite geometry --seed 5 --out " + b.string()) == 0);
    CHECK(slurp(a / "verify.json") == slurp(b / "verify.json"));
}
