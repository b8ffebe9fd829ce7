#pragma once

#include "../experiments/exact_suite.hpp"
#include "../experiments/monte_carlo.hpp"
#include "../experiments/unit_interval.hpp"
#include "../graphs/io.hpp"
#include "../mmspace/mmspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace interlim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    std::optional<std::uint64_t> seed_flag;
    std::uint64_t seed = 0;
    std::string out_dir;
    std::string format;
    unsigned threads = 0;
};

// Bad user input detected after parsing (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t resolve_seed(const RunConfig& c) {
    if (c.seed_flag) return *c.seed_flag;
    if (const char* env = std::getenv("INTERLIM_SEED")) {
        char* end = nullptr;
        errno = 0;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (errno || end == env || *end != '\0') throw UsageError(std::string("INTERLIM_SEED is not an unsigned integer: ") + env);
        return v;
    }
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

inline std::string read_input(const std::string& inline_text, const std::string& path) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read input file " + path);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string s = ss.str();
        while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
        return s;
    }
    if (inline_text.empty()) throw UsageError("one of --input or --input-file is required");
    return inline_text;
}

// Writes body to out_dir/name if an output directory is set, else to out.
inline void emit(const RunConfig& c, const std::string& name, const std::string& body, std::ostream& out) {
    if (c.out_dir.empty()) {
        out << body;
        return;
    }
    std::filesystem::create_directories(c.out_dir);
    auto path = std::filesystem::path(c.out_dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << body;
}

inline void emit_file(const RunConfig& c, const std::string& name, const std::string& body) {
    std::string dir = c.out_dir.empty() ? "." : c.out_dir;
    std::filesystem::create_directories(dir);
    auto path = std::filesystem::path(dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << body;
}

inline std::string grid_csv(const std::vector<std::vector<double>>& rows) {
    std::string s;
    char buf[32];
    for (auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j) s += ',';
            std::snprintf(buf, sizeof buf, "%.10g", r[j]);
            s += buf;
        }
        s += '\n';
    }
    return s;
}

}  // namespace detail

// Full command-line front end; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Samplers, builders, verifiers and exporters for permutation, circle and unit interval graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--seed", cfg.seed_flag, "Master seed (default: INTERLIM_SEED or random; always echoed to stderr)");
    app.add_option("--out-dir", cfg.out_dir, "Directory for output files (created if absent)");
    app.add_option("--threads", cfg.threads, "Worker threads (default: INTERLIM_THREADS or hardware)");
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pgm", "text"}));

    // sample
    auto* sample = app.add_subcommand("sample", "Draw uniform combinatorial objects, one per line");
    std::string s_kind;
    int s_n = 0;
    std::size_t s_count = 1;
    sample->add_option("kind", s_kind, "Object kind")
        ->required()
        ->check(CLI::IsMember({"perm", "matching", "dyck", "irreducible-dyck", "connected-uig", "uig"}));
    sample->add_option("--n", s_n, "Size")->required()->check(CLI::PositiveNumber);
    sample->add_option("--count", s_count, "Number of objects")->check(CLI::PositiveNumber);

    // build
    auto* build = app.add_subcommand("build", "Build the graph of a seed object");
    std::string b_kind, b_input, b_file;
    build->add_option("kind", b_kind, "Graph kind")->required()->check(CLI::IsMember({"inversion", "circle", "unit-interval"}));
    build->add_option("--input", b_input, "Seed object text, e.g. \"2 4 1 3\", \"1-3 2-4\" or UUDD");
    build->add_option("--input-file", b_file, "File holding the seed object");

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
    std::string v_suite;
    verify->add_option("suite", v_suite, "Suite")
        ->required()
        ->check(CLI::IsMember({"exact", "poisson", "densities", "indecomposable", "distance-formula", "clique-formula",
                               "gp", "two-point", "clique-scaling", "components", "sample-law"}));
    int v_nmax = 5, v_n = 0, v_k = 0, v_kmax = 3, v_m = 0, v_max_moment = 3, v_cut = 10, v_refn = 10000;
    std::size_t v_reps = 0, v_seeds = 20;
    double v_delta = 0.0, v_tol = 0.0, v_level = 0.95;
    std::string v_family = "perm";
    std::vector<int> v_ns{1000, 4000, 16000};
    verify->add_option("--nmax", v_nmax, "Largest size for exhaustive checks")->check(CLI::Range(1, 6));
    verify->add_option("--n", v_n, "Size");
    verify->add_option("--k", v_k, "Clique or sample size");
    verify->add_option("--kmax", v_kmax, "Largest clique size for clique-scaling")->check(CLI::Range(2, 6));
    verify->add_option("--reps", v_reps, "Repetitions / draws / paths");
    verify->add_option("--m", v_m, "Excursion grid size");
    verify->add_option("--max-moment", v_max_moment, "Largest total order of factorial moments")->check(CLI::Range(1, 6));
    verify->add_option("--cut", v_cut, "Deficiency cut for components");
    verify->add_option("--level", v_level, "Probability level for components")->check(CLI::Range(0.0, 1.0));
    verify->add_option("--family", v_family, "perm or circle")->check(CLI::IsMember({"perm", "circle"}));
    verify->add_option("--delta", v_delta, "Truncation");
    verify->add_option("--tol", v_tol, "Tolerance (suite-specific default when omitted)");
    verify->add_option("--ns", v_ns, "Sizes for the gp trend check");
    verify->add_option("--seeds", v_seeds, "Seeds per size for gp");
    verify->add_option("--reference-n", v_refn, "Size of the gp median threshold check");

    // export
    auto* exp = app.add_subcommand("export", "Write plot-ready CSV / PGM files");
    std::string e_kind, e_family = "perm", e_input, e_file;
    int e_n = 200, e_m = 1024;
    std::size_t e_reps = 10;
    exp->add_option("kind", e_kind, "Export kind")->required()->check(CLI::IsMember({"heatmap", "excursion", "distance-matrix"}));
    exp->add_option("--family", e_family, "perm or circle (heatmap)")->check(CLI::IsMember({"perm", "circle"}));
    exp->add_option("--n", e_n, "Size")->check(CLI::PositiveNumber);
    exp->add_option("--reps", e_reps, "Averaged samples (heatmap)")->check(CLI::PositiveNumber);
    exp->add_option("--m", e_m, "Grid size (excursion)")->check(CLI::Range(2, 1 << 22));
    exp->add_option("--input", e_input, "Irreducible Dyck path (distance-matrix); sampled when omitted");
    exp->add_option("--input-file", e_file, "File holding the Dyck path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        cfg.seed = detail::resolve_seed(cfg);
        err << "seed=" << cfg.seed << "\n";
        const unsigned threads = resolve_threads(cfg.threads);

        if (*sample) {
            Rng rng(cfg.seed);
            std::string body;
            std::optional<UnitIntervalSampler> uis;
            if (s_kind == "uig") uis.emplace(s_n);
            for (std::size_t t = 0; t < s_count; ++t) {
                if (s_kind == "perm") body += sample_permutation(s_n, rng).to_string();
                else if (s_kind == "matching") body += sample_matching(s_n, rng).to_string();
                else if (s_kind == "dyck") body += sample_dyck(s_n, rng).to_string();
                else if (s_kind == "irreducible-dyck") body += sample_irreducible_dyck(s_n, rng).to_string();
                else if (s_kind == "connected-uig") body += sample_connected_unit_interval_graph(s_n, rng).to_string();
                else body += uis->sample(rng).word.to_string();
                body += '\n';
            }
            detail::emit(cfg, "sample_" + s_kind + ".txt", body, out);
            return kExitOk;
        }

        if (*build) {
            std::string text = detail::read_input(b_input, b_file);
            UGraph g;
            try {
                if (b_kind == "inversion") g = inversion_graph(parse_permutation(text));
                else if (b_kind == "circle") g = circle_graph(parse_matching(text));
                else g = unit_interval_graph(parse_dyck(text));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (cfg.format == "csv") detail::emit(cfg, "graph.csv", to_adjacency_csv(g), out);
            else detail::emit(cfg, "graph.txt", to_edge_list(g) + "\n", out);
            return kExitOk;
        }

        if (*verify) {
            auto need = [&](auto v, const char* what) {
                if (v <= 0) throw UsageError(std::string("verify ") + v_suite + ": " + what + " is required");
            };
            auto pick = [](auto v, auto dflt) { return v > 0 ? v : dflt; };
            Report rep;
            const std::uint64_t s = cfg.seed;
            if (v_suite == "exact") {
                rep = exact_enumeration_suite(v_nmax);
            } else if (v_suite == "poisson") {
                rep = mc_poisson_xyz(pick(v_n, 2000), pick(v_reps, std::size_t{100000}), v_max_moment, s, {}, threads);
            } else if (v_suite == "densities") {
                need(v_n, "--n");
                double dflt = (v_family == "circle" && v_k >= 3) ? 0.005 : 0.01;
                rep = mc_clique_density(parse_family(v_family), v_n, pick(v_k, 2), pick(v_reps, std::size_t{50}), s,
                                        pick(v_tol, dflt), threads);
            } else if (v_suite == "indecomposable") {
                rep = mc_indecomposable_rate(pick(v_n, 1000), pick(v_reps, std::size_t{2000}), s, pick(v_tol, 0.01),
                                             threads);
            } else if (v_suite == "distance-formula") {
                rep = verify_distance_formula(pick(v_n, 200), pick(v_reps, std::size_t{200}), s, threads);
            } else if (v_suite == "clique-formula") {
                rep = verify_clique_formula(pick(v_n, 20), pick(v_k, 5), pick(v_reps, std::size_t{100}), s, threads);
            } else if (v_suite == "gp") {
                rep = gp_box_sweep(v_ns, v_seeds, pick(v_delta, 0.05), pick(v_m, 500), s, v_refn, pick(v_tol, 0.1),
                                   threads);
            } else if (v_suite == "two-point") {
                rep = mc_two_point_law(pick(v_n, 10000), pick(v_m, 2048), pick(v_reps, std::size_t{10000}),
                                       pick(v_delta, 0.01), s, pick(v_tol, 0.05), threads);
            } else if (v_suite == "clique-scaling") {
                rep = mc_unit_clique_scaling(pick(v_n, 10000), v_kmax, pick(v_reps, std::size_t{2000}), pick(v_m, 2048),
                                             s, pick(v_tol, 0.05), threads);
            } else if (v_suite == "components") {
                rep = largest_component_stats(pick(v_n, 2000), pick(v_reps, std::size_t{2000}), s, v_cut, v_level,
                                              threads);
            } else {
                rep = sample_law_test(parse_family(v_family), pick(v_k, 3), pick(v_reps, std::size_t{100000}), s,
                                      pick(v_tol, 1e-3), threads);
            }
            rep.seed = s;
            std::string body = rep.to_json().dump(2) + "\n";
            out << body;
            if (!cfg.out_dir.empty()) detail::emit(cfg, v_suite + ".json", body, out);
            return rep.pass ? kExitOk : kExitFail;
        }

        if (*exp) {
            Rng rng(cfg.seed);
            if (e_kind == "heatmap") {
                auto avg = heatmap_experiment(parse_family(e_family), e_n, e_reps, cfg.seed);
                std::string stem = "heatmap_" + e_family + "_n" + std::to_string(e_n);
                if (cfg.format != "csv") detail::emit_file(cfg, stem + ".pgm", to_pgm(avg));
                if (cfg.format != "pgm") detail::emit_file(cfg, stem + ".csv", to_csv(avg));
            } else if (e_kind == "excursion") {
                auto e = sample_excursion(e_m, rng);
                std::vector<std::vector<double>> rows;
                for (int i = 0; i <= e.m(); ++i) rows.push_back({static_cast<double>(i) / e.m(), e.values[i]});
                detail::emit_file(cfg, "excursion_m" + std::to_string(e_m) + ".csv", "t,e\n" + detail::grid_csv(rows));
            } else {
                DyckPath w;
                if (!e_input.empty() || !e_file.empty()) {
                    try {
                        w = parse_dyck(detail::read_input(e_input, e_file));
                    } catch (const std::invalid_argument& ex) {
                        throw UsageError(ex.what());
                    }
                    if (!w.irreducible()) throw UsageError("distance-matrix: the Dyck path must be irreducible");
                } else {
                    w = sample_irreducible_dyck(e_n, rng);
                }
                auto space = from_graph(unit_interval_graph(w), 1.0 / std::sqrt(static_cast<double>(w.size())));
                std::vector<std::vector<double>> rows(space.size(), std::vector<double>(space.size()));
                for (int i = 0; i < space.size(); ++i)
                    for (int j = 0; j < space.size(); ++j) rows[i][j] = space.d(i, j);
                detail::emit_file(cfg, "distance_matrix_n" + std::to_string(w.size()) + ".csv", detail::grid_csv(rows));
            }
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace interlim::cli
