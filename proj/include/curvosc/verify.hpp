#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace curvosc {

// Deterministic self-check suites, one per module.  Every check
// evaluates a residual against a fixed tolerance; given the same seed
// the sequence of checks and all residuals are bit-reproducible
// (single-threaded, fixed evaluation order, seeded mt19937_64).

struct CheckResult {
    std::string suite;
    std::string name;
    double residual = 0;
    double tolerance = 0;
    bool pass = false;
    std::string note; // optional detail (grid sizes, parameter set, ...)
};

// suite: one of "ktrig", "geometry", "classical", "dynamics",
// "qspectra", "qnumeric", or "all".  DomainError on anything else.
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed);

} // namespace curvosc
