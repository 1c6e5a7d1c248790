#include "racah/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "racah/parallel.hpp"

namespace racah {

const std::vector<std::string>& RunConfig::known_suites() {
    static const std::vector<std::string> names = {
        "commutation", "rank-one", "classical",     "lind",          "bispectral",
        "sigma",       "spectrum", "orthogonality", "specialization"};
    return names;
}

std::set<std::string> RunConfig::applicable_suites() const {
    std::set<std::string> out(known_suites().begin(), known_suites().end());
    if (n != 3) {
        out.erase("classical");
        out.erase("specialization");
    }
    return out;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("cannot parse config file " + path + ": " + e.what());
    }
    RunConfig cfg;
    if (j.contains("n")) cfg.n = j.at("n").get<int>();
    if (j.contains("N")) cfg.N = j.at("N").get<int>();
    if (j.contains("beta"))
        for (const auto& b : j.at("beta")) cfg.beta.push_back(Rational::parse(b.get<std::string>()));
    if (j.contains("mode")) cfg.mode = j.at("mode").get<std::string>();
    if (j.contains("suites"))
        for (const auto& s : j.at("suites")) cfg.suites.insert(s.get<std::string>());
    if (j.contains("output")) cfg.output = j.at("output").get<std::string>();
    if (j.contains("format")) cfg.format = j.at("format").get<std::string>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("rank_one_full")) cfg.rank_one_full = j.at("rank_one_full").get<bool>();
    if (j.contains("spectrum_full")) cfg.spectrum_full = j.at("spectrum_full").get<bool>();
    return cfg;
}

ParameterSet RunConfig::validate() const {
    if (mode != "exact" && mode != "float" && mode != "both")
        throw ConfigError("mode must be exact, float or both");
    if (format != "json" && format != "csv") throw ConfigError("format must be json or csv");
    for (const auto& s : suites) {
        const auto& known = known_suites();
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw ConfigError("unknown suite '" + s + "'");
        if (n != 3 && (s == "classical" || s == "specialization"))
            throw ConfigError("suite '" + s + "' requires n = 3");
    }
    ParameterSet params(n, N, beta);
    params.require_generic();
    return params;
}

std::string RunConfig::config_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["N"] = N;
    nlohmann::json betas = nlohmann::json::array();
    for (const auto& b : beta) betas.push_back(b.str());
    j["beta"] = betas;
    j["mode"] = mode;
    nlohmann::json s = nlohmann::json::array();
    std::set<std::string> effective = suites.empty() ? applicable_suites() : suites;
    for (const auto& name : effective) s.push_back(name);
    j["suites"] = s;
    j["rank_one_full"] = rank_one_full;
    j["spectrum_full"] = spectrum_full;
    return j.dump();
}

} // namespace racah
