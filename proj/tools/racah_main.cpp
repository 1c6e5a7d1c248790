// Command-line front end: evaluate polynomials and operators, emit tables
// and operator matrices, run the verification suites.
//
// Exit codes: 0 success / all relations pass, 1 relation failure,
// 2 usage or configuration error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "racah/config.hpp"
#include "racah/matrix.hpp"
#include "racah/orthogonality.hpp"
#include "racah/parallel.hpp"
#include "racah/suites.hpp"

namespace {

using namespace racah;

std::vector<Rational> parse_rationals(const std::vector<std::string>& parts) {
    std::vector<Rational> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(Rational::parse(p));
    return out;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (const auto& part : split_csv(s)) out.push_back(std::stoi(part));
    return out;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file " + path);
    out << content;
}

struct CommonOpts {
    int n = 0;
    int N = -1;
    std::string beta;
    std::string config_file;
    std::string mode;
    std::string output;
    std::string format;
    int threads = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--config", config_file, "JSON config file (flags override)");
        cmd->add_option("-n", n, "number of tensor factors (n >= 3)");
        cmd->add_option("-N", N, "grid size (x_{n-1} = N)");
        cmd->add_option("--beta", beta, "comma-separated rationals beta_0..beta_{n-1}");
        cmd->add_option("--mode", mode, "exact | float | both");
        cmd->add_option("--output,-o", output, "output file (default stdout)");
        cmd->add_option("--format", format, "json | csv");
        cmd->add_option("--threads", threads, "worker cap (RACAH_THREADS also honored)");
    }

    RunConfig resolve() const {
        RunConfig cfg;
        if (!config_file.empty()) cfg = RunConfig::from_json_file(config_file);
        if (n > 0) cfg.n = n;
        if (N >= 0) cfg.N = N;
        if (!beta.empty()) cfg.beta = parse_rationals(split_csv(beta));
        if (!mode.empty()) cfg.mode = mode;
        if (!output.empty()) cfg.output = output;
        if (!format.empty()) cfg.format = format;
        if (threads > 0) cfg.threads = threads;
        return cfg;
    }
};

std::string polynomial_table(const RunConfig& cfg, const ParameterSet& params) {
    SimplexGrid grid(params);
    const int rank = params.rank();
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "k\\x";
        for (const auto& x : grid.points()) os << ',' << point_label(x);
        os << '\n';
        for (size_t r = 0; r < grid.size(); ++r) {
            MultiIndex k = grid.k_point(r);
            os << point_label(k.k);
            for (const auto& x : grid.points())
                os << ',' << racah_multivariate(rank, k, x, params).str();
            os << '\n';
        }
        return os.str();
    }
    nlohmann::json j;
    j["grid"] = nlohmann::json::parse(cfg.config_json());
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < grid.size(); ++r) {
        MultiIndex k = grid.k_point(r);
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : grid.points())
            row.push_back(racah_multivariate(rank, k, x, params).str());
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j.dump(2) + "\n";
}

int run_eval(const CommonOpts& opts, const std::string& kind,
             const std::vector<std::string>& args, int p, const std::string& kstr,
             const std::string& xstr) {
    if (kind == "kappa") {
        if (args.size() != 2) throw ConfigError("eval kappa needs <x> <beta>");
        std::cout << kappa(Rational::parse(args[0]), Rational::parse(args[1])).str() << "\n";
        return 0;
    }
    if (kind == "racah1") {
        if (args.size() != 6)
            throw ConfigError("eval racah1 needs <m> <alpha> <beta> <gamma> <delta> <x>");
        long m = std::stol(args[0]);
        std::cout << racah_univariate(m, Rational::parse(args[1]), Rational::parse(args[2]),
                                      Rational::parse(args[3]), Rational::parse(args[4]),
                                      Rational::parse(args[5]))
                         .str()
                  << "\n";
        return 0;
    }
    if (kind == "hyp4f3") {
        if (args.size() != 8)
            throw ConfigError("eval hyp4f3 needs <t1> <t2> <t3> <t4> <b1> <b2> <b3> <depth>");
        std::array<Rational, 4> top = {Rational::parse(args[0]), Rational::parse(args[1]),
                                       Rational::parse(args[2]), Rational::parse(args[3])};
        std::array<Rational, 3> bottom = {Rational::parse(args[4]), Rational::parse(args[5]),
                                          Rational::parse(args[6])};
        std::cout << hyp4f3_terminating(top, bottom, std::stol(args[7])).str() << "\n";
        return 0;
    }
    if (kind == "racahN") {
        RunConfig cfg = opts.resolve();
        ParameterSet params = cfg.validate();
        if (kstr.empty() || xstr.empty()) throw ConfigError("eval racahN needs --k and --x");
        MultiIndex k{parse_ints(kstr)};
        GridPoint x = parse_ints(xstr);
        int pp = p > 0 ? p : params.rank();
        std::cout << racah_multivariate(pp, k, x, params).str() << "\n";
        return 0;
    }
    throw ConfigError("eval kind must be kappa, racah1, racahN or hyp4f3");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluator and verifier for the discrete Racah algebra realization"};
    app.require_subcommand(1);

    CommonOpts eval_opts, table_opts, matrix_opts, verify_opts, report_opts;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate kappa / racah polynomials exactly");
    std::string eval_kind, eval_k, eval_x;
    int eval_p = 0;
    std::vector<std::string> eval_args;
    eval_cmd->add_option("kind", eval_kind, "kappa | racah1 | racahN | hyp4f3")->required();
    eval_cmd->add_option("args", eval_args, "positional arguments for the kind");
    eval_cmd->add_option("--p", eval_p, "number of factors (racahN; default n-2)");
    eval_cmd->add_option("--k", eval_k, "comma-separated k vector (racahN)");
    eval_cmd->add_option("--x", eval_x, "comma-separated x vector (racahN)");
    eval_opts.attach(eval_cmd);

    auto* table_cmd = app.add_subcommand("table", "emit polynomial/matrix/connection tables");
    std::string table_what, table_labels;
    table_cmd->add_option("what", table_what, "polynomials | matrix | connection")->required();
    table_cmd->add_option("--labels", table_labels, "generator label set for matrix, e.g. 2,3");
    table_opts.attach(table_cmd);

    auto* matrix_cmd = app.add_subcommand("matrix", "emit one generator matrix as JSON");
    std::string matrix_labels;
    matrix_cmd->add_option("--labels", matrix_labels, "label set, e.g. 2,3 or 2,3,4")->required();
    matrix_opts.attach(matrix_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    std::string verify_suites;
    bool rank_one_full = false, spectrum_full = false;
    verify_cmd->add_option("--suites", verify_suites,
                           "comma-separated suite subset (default: all applicable)");
    verify_cmd->add_flag("--rank-one-full", rank_one_full, "enumerate all disjoint triples");
    verify_cmd->add_flag("--spectrum-full", spectrum_full, "full spectra even for n >= 5");
    verify_opts.attach(verify_cmd);

    auto* report_cmd = app.add_subcommand("report", "summarize a verification report file");
    std::string report_file;
    report_cmd->add_option("file", report_file, "report JSON produced by verify")->required();
    report_opts.attach(report_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(eval_cmd))
            return run_eval(eval_opts, eval_kind, eval_args, eval_p, eval_k, eval_x);

        if (app.got_subcommand(table_cmd)) {
            RunConfig cfg = table_opts.resolve();
            ParameterSet params = cfg.validate();
            int threads = resolve_threads(cfg.threads);
            if (table_what == "polynomials") {
                write_output(cfg.output, polynomial_table(cfg, params));
            } else if (table_what == "matrix") {
                if (table_labels.empty()) throw ConfigError("table matrix needs --labels");
                GeneratorTable table(params, threads);
                LabelSet A(parse_ints(table_labels));
                write_output(cfg.output, table.get(A).to_json(2) + "\n");
            } else if (table_what == "connection") {
                ConnectionMatrix conn(params, threads);
                write_output(cfg.output, conn.to_csv());
            } else {
                throw ConfigError("table kind must be polynomials, matrix or connection");
            }
            return 0;
        }

        if (app.got_subcommand(matrix_cmd)) {
            RunConfig cfg = matrix_opts.resolve();
            ParameterSet params = cfg.validate();
            GeneratorTable table(params, resolve_threads(cfg.threads));
            LabelSet A(parse_ints(matrix_labels));
            write_output(cfg.output, table.get(A).to_json(2) + "\n");
            return 0;
        }

        if (app.got_subcommand(verify_cmd)) {
            RunConfig cfg = verify_opts.resolve();
            if (!verify_suites.empty())
                for (const auto& s : split_csv(verify_suites)) cfg.suites.insert(s);
            cfg.rank_one_full = cfg.rank_one_full || rank_one_full;
            cfg.spectrum_full = cfg.spectrum_full || spectrum_full;
            VerificationRun run(cfg);
            Report report = run.run();
            write_output(cfg.output, report_to_json(cfg, report));
            return report.all_pass() ? 0 : 1;
        }

        if (app.got_subcommand(report_cmd)) {
            std::ifstream in(report_file);
            if (!in) throw ConfigError("cannot open report file " + report_file);
            nlohmann::json j;
            in >> j;
            const auto& summary = j.at("summary");
            for (const auto& r : j.at("relations"))
                std::cout << (r.at("status") == "exact-pass" ? "PASS  " : "FAIL  ")
                          << r.at("name").get<std::string>() << "  "
                          << r.at("operands").get<std::string>() << "\n";
            std::cout << summary.at("passed").get<size_t>() << "/"
                      << summary.at("total").get<size_t>() << " relations pass\n";
            return summary.at("status") == "exact-pass" ? 0 : 1;
        }
    } catch (const PoleError& e) {
        std::cerr << "pole error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
