#pragma once

#include <set>
#include <string>
#include <vector>

#include "racah/parameters.hpp"

namespace racah {

/// Run configuration shared by the CLI and the verification driver.
/// Accepted as flags and/or a JSON file; flags override file values.
struct RunConfig {
    int n = 3;
    int N = 5;
    std::vector<Rational> beta;
    std::string mode = "both";  // exact | float | both
    std::set<std::string> suites;
    std::string output;
    std::string format = "json";  // json | csv
    int threads = 0;              // 0: resolve from RACAH_THREADS / hardware
    bool rank_one_full = false;   // enumerate all disjoint triples
    bool spectrum_full = false;   // full char-poly spectra for n >= 5

    /// Known suite names in canonical order.
    static const std::vector<std::string>& known_suites();

    /// Suites applicable to this configuration ("all" semantics):
    /// classical and specialization only exist at n = 3, spectrum is
    /// restricted at n >= 5 unless spectrum_full.
    std::set<std::string> applicable_suites() const;

    /// Load values from a JSON config file.
    static RunConfig from_json_file(const std::string& path);

    /// Throws ConfigError on invalid values; returns the validated
    /// ParameterSet (genericity included).
    ParameterSet validate() const;

    std::string config_json() const;
};

} // namespace racah
