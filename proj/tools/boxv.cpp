// boxv: command-line surface for the box-variety toolkit.
//
//   verify      run a named verification suite and report pass/fail
//   nodes       enumerate the 48 nodes (algebraic construction or orbit)
//   search      pruned integer search for Euler bricks / perfect cuboids
//   bound       evaluate the degree-genus bound predicate
//   theta-eval  evaluate one theta constant with its truncation certificate
//
// JSON goes to stdout, human-readable notes to stderr. Exit codes: 0 pass,
// 1 suite failure, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "boxvariety/automorphisms.hpp"
#include "boxvariety/cuboid_search.hpp"
#include "boxvariety/curves.hpp"
#include "boxvariety/serialization.hpp"
#include "boxvariety/suites.hpp"
#include "boxvariety/surface.hpp"
#include "boxvariety/theta.hpp"

namespace {

using boxvariety::Json;

int run_verify(const std::string& suite, long samples, bool samples_set, std::uint64_t seed,
               double tol, bool tol_set, bool as_json, bool no_timing) {
    const auto defaults = boxvariety::suites::suite_defaults(suite);
    if (!defaults) {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
    }
    long n = samples_set ? samples : defaults->samples;
    double t = defaults->tolerance;
    if (const char* env = std::getenv("BOX_TOL"); env != nullptr && !tol_set) {
        try {
            t = std::stod(env);
        } catch (const std::exception&) {
            std::cerr << "BOX_TOL is not a number: " << env << "\n";
            return 2;
        }
    }
    if (tol_set) t = tol;

    const auto report = boxvariety::suites::run_suite(suite, n, seed, t);
    if (as_json)
        std::cout << boxvariety::suites::to_json(report, !no_timing).dump() << "\n";
    std::cerr << "suite " << report.suite << ": " << (report.pass ? "pass" : "FAIL");
    if (report.expected)
        std::cerr << " (expected " << *report.expected << ", actual " << report.actual.value_or(-1)
                  << ")";
    else
        std::cerr << " (max residual " << report.max_residual << ", tolerance "
                  << report.tolerance << ")";
    std::cerr << "\n";
    return report.pass ? 0 : 1;
}

int run_nodes(const std::string& method, std::uint64_t seed, bool as_json, bool no_timing) {
    namespace surf = boxvariety::surface;
    namespace autos = boxvariety::automorphisms;
    const auto start = std::chrono::steady_clock::now();

    std::vector<surf::BoxPoint> points;
    if (method == "algebraic") {
        points = surf::singular_points();
    } else if (method == "orbit") {
        std::vector<boxvariety::modular::CyclotomicMatrix> gens;
        for (const auto& aut : autos::standard_generators(true))
            gens.push_back(autos::fitted_exact_matrix(aut, seed));
        for (const auto& p : autos::node_orbit(gens, autos::seed_node()))
            points.push_back(surf::to_box_point(p));
    } else {
        std::cerr << "unknown method: " << method << " (expected algebraic or orbit)\n";
        return 2;
    }

    const long elapsed = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                               std::chrono::steady_clock::now() - start)
                                               .count());
    if (as_json) {
        Json out;
        out["method"] = method;
        out["count"] = points.size();
        Json arr = Json::array();
        for (const auto& p : points) arr.push_back(boxvariety::to_json(p));
        out["points"] = arr;
        if (!no_timing) out["elapsed_ms"] = elapsed;
        std::cout << out.dump() << "\n";
    }
    std::cerr << "nodes (" << method << "): " << points.size() << " points\n";
    return points.size() == 48 ? 0 : 1;
}

int run_search(std::uint64_t max_edge, const std::string& mode_name, unsigned workers,
               const std::string& csv_path) {
    namespace cub = boxvariety::cuboid;
    cub::SearchMode mode;
    if (mode_name == "euler")
        mode = cub::SearchMode::kEuler;
    else if (mode_name == "perfect")
        mode = cub::SearchMode::kPerfect;
    else {
        std::cerr << "unknown mode: " << mode_name << " (expected euler or perfect)\n";
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    std::vector<cub::CuboidCandidate> rows;
    try {
        rows = cub::search_to_csv({max_edge, mode, workers, csv_path});
    } catch (const std::runtime_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    const long elapsed = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                               std::chrono::steady_clock::now() - start)
                                               .count());

    Json summary;
    summary["max_edge"] = max_edge;
    summary["mode"] = mode_name;
    summary["primitive_count"] = rows.size();
    summary["elapsed_ms"] = elapsed;
    std::cout << summary.dump() << "\n";
    std::cerr << "search: " << rows.size() << " primitive " << mode_name << " solutions up to "
              << max_edge << "\n";
    return 0;
}

int run_bound(long degree, long genus) {
    const bool ok = boxvariety::curves::degree_genus_bound({degree, genus});
    std::cout << (ok ? "true" : "false") << "\n";
    return ok ? 0 : 1;
}

int run_theta_eval(const std::string& char_name, const std::string& z_text, bool double_arg) {
    namespace th = boxvariety::theta;
    th::ThetaChar ch;
    if (char_name == "00")
        ch = th::kChar00;
    else if (char_name == "10")
        ch = th::kChar10;
    else if (char_name == "01")
        ch = th::kChar01;
    else {
        std::cerr << "unknown characteristic: " << char_name << " (expected 00, 10 or 01)\n";
        return 2;
    }

    const auto comma = z_text.find(',');
    if (comma == std::string::npos) {
        std::cerr << "--z expects RE,IM\n";
        return 2;
    }
    double re = 0.0, im = 0.0;
    try {
        re = std::stod(z_text.substr(0, comma));
        im = std::stod(z_text.substr(comma + 1));
    } catch (const std::exception&) {
        std::cerr << "--z expects RE,IM\n";
        return 2;
    }
    if (!(im > 0.0)) {
        std::cerr << "--z must lie in the upper half-plane\n";
        return 2;
    }
    if (double_arg && ch.b != 0) {
        std::cerr << "--double-arg requires characteristic 00 or 10\n";
        return 2;
    }

    const boxvariety::UpperHalfPoint z(re, im);
    const th::ThetaEval eval =
        double_arg ? th::theta_second_kind(ch, z) : th::theta_series(ch, z);
    Json out;
    out["char"] = char_name;
    out["z"] = Json::array({re, im});
    out["double_arg"] = double_arg;
    out["value"] = Json::array({eval.value.real(), eval.value.imag()});
    out["tail_bound"] = eval.tail_bound;
    out["terms"] = eval.terms;
    std::cout << out.dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"box variety verification toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite;
    long samples = 0;
    std::uint64_t seed = 42;
    double tol = 0.0;
    bool as_json = false, no_timing = false;
    auto* suite_opt = verify->add_option("--suite", suite, "suite name")->required();
    suite_opt->check(CLI::IsMember({"relations", "inversion", "multiplier", "lemma22", "lemma23",
                                    "param", "nodes", "prop26", "prop27", "prop29", "kummer",
                                    "genus7", "gamma-prime"}));
    auto* samples_opt = verify->add_option("--samples", samples, "sample count");
    verify->add_option("--seed", seed, "random seed (default 42)");
    auto* tol_opt = verify->add_option("--tol", tol, "residual tolerance");
    verify->add_flag("--json", as_json, "emit the report as JSON on stdout");
    verify->add_flag("--no-timing", no_timing, "omit elapsed_ms from the JSON");

    // nodes
    auto* nodes = app.add_subcommand("nodes", "enumerate the 48 nodes");
    std::string method = "algebraic";
    std::uint64_t nodes_seed = 42;
    bool nodes_json = false, nodes_no_timing = false;
    nodes->add_option("--method", method, "algebraic or orbit")
        ->check(CLI::IsMember({"algebraic", "orbit"}));
    nodes->add_option("--seed", nodes_seed, "random seed for matrix fitting");
    nodes->add_flag("--json", nodes_json, "emit the points as JSON on stdout");
    nodes->add_flag("--no-timing", nodes_no_timing, "omit elapsed_ms from the JSON");

    // search
    auto* search = app.add_subcommand("search", "Euler brick / perfect cuboid search");
    std::uint64_t max_edge = 0;
    std::string mode_name = "euler";
    unsigned workers = 1;
    std::string csv_path;
    search->add_option("--max-edge", max_edge, "largest edge length")->required();
    search->add_option("--mode", mode_name, "euler or perfect")
        ->check(CLI::IsMember({"euler", "perfect"}));
    search->add_option("--workers", workers, "worker thread count (default 1)");
    search->add_option("--csv", csv_path, "write solutions as CSV to this path");

    // bound
    auto* bound = app.add_subcommand("bound", "degree-genus bound predicate");
    long degree = 0, genus = 0;
    bound->add_option("--degree", degree, "curve degree")->required();
    bound->add_option("--genus", genus, "curve genus")->required();

    // theta-eval
    auto* theta_eval = app.add_subcommand("theta-eval", "evaluate a theta constant");
    std::string char_name, z_text;
    bool double_arg = false;
    theta_eval->add_option("--char", char_name, "characteristic: 00, 10 or 01")->required();
    theta_eval->add_option("--z", z_text, "argument as RE,IM")->required();
    theta_eval->add_flag("--double-arg", double_arg, "evaluate at doubled argument");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (verify->parsed())
            return run_verify(suite, samples, samples_opt->count() > 0, seed, tol,
                              tol_opt->count() > 0, as_json, no_timing);
        if (nodes->parsed()) return run_nodes(method, nodes_seed, nodes_json, nodes_no_timing);
        if (search->parsed()) return run_search(max_edge, mode_name, workers, csv_path);
        if (bound->parsed()) return run_bound(degree, genus);
        if (theta_eval->parsed()) return run_theta_eval(char_name, z_text, double_arg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
