#pragma once

// Command-line front end.  Subcommands:
//
//   ncut        minimize crossing similarity over kept similarity
//   ncut-prime  minimize crossing similarity over incident similarity
//   rr          minimize crossing similarity over contained node weight
//   densest     optimize internal similarity over contained node weight
//   breakpoints print the whole nested solution table for one problem
//   oracle      exhaustive reference answer on small graphs
//
// Exit codes: 0 on success, 1 when the instance is infeasible or the
// objective undefined, 2 for unusable input (bad files, bad flags).

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "paracut/io.hpp"
#include "paracut/oracle.hpp"

namespace paracut::cli {

namespace detail {

inline EdgeSeed parse_seed(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("seed must be two node ids 'i,j', got '" + text + "'");
    try {
        size_t used = 0;
        int i = std::stoi(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument(text);
        std::string rest = text.substr(comma + 1);
        int j = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(text);
        return EdgeSeed{i, j};
    } catch (const std::exception&) {
        throw ParseError("seed must be two node ids 'i,j', got '" + text + "'");
    }
}

inline Method parse_method(const std::string& name) {
    if (name == "dinkelbach") return Method::dinkelbach;
    if (name == "breakpoints") return Method::breakpoints;
    if (name == "bisect") return Method::bisect;
    throw ParseError("unknown method '" + name + "'");
}

inline size_t parse_budget(const std::string& text) {
    if (text == "all") return static_cast<size_t>(-1);
    try {
        size_t used = 0;
        unsigned long long n = std::stoull(text, &used);
        if (used != text.size() || n == 0) throw std::invalid_argument(text);
        return static_cast<size_t>(n);
    } catch (const std::exception&) {
        throw ParseError("--auto-seeds takes a positive count or 'all', got '" + text + "'");
    }
}

struct LoadedInput {
    WeightedGraph graph;
    bool from_image = false;
    int width = 0, height = 0;
};

// Result lines always spell the denominator ("1/1", not "1") so they can be
// split on '/' without special cases.
inline std::string fraction(const Rational& r) {
    return r.numerator().str() + "/" + r.denominator().str();
}

inline void print_members(std::ostream& out, const NodeSet& set) {
    out << "S=";
    bool first = true;
    for (int v : set_members(set)) {
        if (!first) out << " ";
        out << v;
        first = false;
    }
    out << "\n";
}

inline void print_solution(std::ostream& out, const RatioSolution& sol, bool quiet) {
    out << "ratio=" << fraction(sol.ratio) << " lambda*=" << fraction(sol.lambda_star)
        << " |S|=" << sol.set.count() << "\n";
    if (!quiet) print_members(out, sol.set);
}

}  // namespace detail

// Parses and executes `args` (program name excluded).  All normal output
// goes to `out`, diagnostics to `err`; see the header comment for the exit
// codes.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact ratio-objective graph partitioning via parametric minimum cut",
                 "paracut"};
    app.require_subcommand(1);

    std::string graph_path, image_path, csv_path, mask_path;
    std::string sigma_text = "32", tolerance_text = "1/4096";
    std::string method_text = "dinkelbach";
    int neighborhood = 4;
    bool quiet = false;
    bool yes = false;
    int jobs = 1;
    std::string seed_in_text, seed_out_text, auto_seeds_text;
    int rr_source = 0, rr_sink = 0;
    std::string direction = "max";
    std::string problem;
    int oracle_limit = 20;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--graph", graph_path, "graph file to load");
        cmd->add_option("--image", image_path, "PGM image to load as a grid graph");
        cmd->add_option("--sigma", sigma_text, "similarity falloff for --image (rational, default 32)");
        cmd->add_option("--neighborhood", neighborhood, "grid connectivity for --image: 4 or 8")
            ->check(CLI::IsMember({4, 8}));
        cmd->add_flag("--quiet", quiet, "print only the result line");
    };
    auto add_solver = [&](CLI::App* cmd) {
        cmd->add_option("--method", method_text, "dinkelbach, breakpoints, or bisect")
            ->check(CLI::IsMember({"dinkelbach", "breakpoints", "bisect"}));
        cmd->add_option("--tolerance", tolerance_text,
                        "bracket width for --method bisect (rational)");
        cmd->add_option("--csv", csv_path, "also write the nested solution table to this file");
        cmd->add_option("--mask", mask_path, "write the solution as a PGM mask (needs --image)");
    };
    auto add_edge_seeds = [&](CLI::App* cmd, bool with_auto) {
        cmd->add_option("--seed-in", seed_in_text, "edge i,j whose endpoints must be kept");
        cmd->add_option("--seed-out", seed_out_text, "edge i,j whose endpoints must be excluded");
        if (with_auto) {
            cmd->add_option("--auto-seeds", auto_seeds_text,
                            "try the first N vertex-disjoint seed pairs, or 'all'");
            cmd->add_option("--jobs", jobs, "worker threads for --auto-seeds")
                ->check(CLI::PositiveNumber);
            cmd->add_flag("--yes", yes, "allow --auto-seeds runs over 10000 pairs");
        }
    };
    CLI::App* c_ncut = app.add_subcommand("ncut", "crossing similarity over kept similarity");
    add_input(c_ncut);
    add_solver(c_ncut);
    add_edge_seeds(c_ncut, true);

    CLI::App* c_prime =
        app.add_subcommand("ncut-prime", "crossing similarity over incident similarity");
    add_input(c_prime);
    add_solver(c_prime);
    add_edge_seeds(c_prime, true);

    CLI::App* c_rr = app.add_subcommand("rr", "crossing similarity over contained node weight");
    add_input(c_rr);
    add_solver(c_rr);
    c_rr->add_option("--source", rr_source, "node that must be inside")->required();
    c_rr->add_option("--sink", rr_sink, "node that must be outside (default: best over all)");

    CLI::App* c_dense =
        app.add_subcommand("densest", "internal similarity over contained node weight");
    add_input(c_dense);
    add_solver(c_dense);
    c_dense->add_option("--direction", direction, "max (default) or min")
        ->check(CLI::IsMember({"max", "min"}));

    CLI::App* c_bp =
        app.add_subcommand("breakpoints", "print the nested solution table for one problem");
    add_input(c_bp);
    c_bp->add_option("--problem", problem, "ncut, ncut-prime, rr, or densest")
        ->required()
        ->check(CLI::IsMember({"ncut", "ncut-prime", "rr", "densest"}));
    add_edge_seeds(c_bp, false);
    c_bp->add_option("--source", rr_source, "rr: node that must be inside");
    c_bp->add_option("--sink", rr_sink, "rr: node that must be outside");
    c_bp->add_option("--direction", direction, "densest: max or min")
        ->check(CLI::IsMember({"max", "min"}));
    c_bp->add_option("--csv", csv_path, "write the table here instead of stdout");

    CLI::App* c_oracle =
        app.add_subcommand("oracle", "exhaustive reference answer on a small graph");
    add_input(c_oracle);
    c_oracle->add_option("--problem", problem, "ncut, ncut-prime, rr, or densest")
        ->required()
        ->check(CLI::IsMember({"ncut", "ncut-prime", "rr", "densest"}));
    add_edge_seeds(c_oracle, false);
    c_oracle->add_option("--source", rr_source, "rr: node that must be inside");
    c_oracle->add_option("--sink", rr_sink, "rr: node that must be outside");
    c_oracle->add_option("--direction", direction, "densest: max or min")
        ->check(CLI::IsMember({"max", "min"}));
    c_oracle->add_option("--limit", oracle_limit, "refuse graphs with more nodes than this")
        ->check(CLI::PositiveNumber);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);

        auto load_input = [&]() {
            detail::LoadedInput in;
            if (graph_path.empty() == image_path.empty())
                throw ParseError("give exactly one of --graph or --image");
            if (!graph_path.empty()) {
                in.graph = load_graph(graph_path);
            } else {
                GrayImage img = load_pgm(image_path);
                in.graph = grid_graph(img, Rational::parse(sigma_text), neighborhood);
                in.from_image = true;
                in.width = img.width;
                in.height = img.height;
            }
            return in;
        };
        auto need_seed_pair = [&]() {
            if (seed_in_text.empty() || seed_out_text.empty())
                throw ParseError("this problem needs --seed-in and --seed-out");
            return std::pair<EdgeSeed, EdgeSeed>{detail::parse_seed(seed_in_text),
                                                 detail::parse_seed(seed_out_text)};
        };
        auto kind_from_problem = [&]() -> ProblemKind {
            if (problem == "ncut" || problem == "ncut-prime") {
                auto [in, outseed] = need_seed_pair();
                if (problem == "ncut") return NormalizedCut{in, outseed};
                return NormalizedCutPrime{in, outseed};
            }
            if (problem == "rr") {
                if (rr_source == 0 || rr_sink == 0)
                    throw ParseError("rr needs --source and --sink here");
                return RatioRegions{rr_source, rr_sink};
            }
            return DensestSubgraph{direction == "max" ? Direction::maximize
                                                      : Direction::minimize};
        };
        auto finish_solution = [&](const detail::LoadedInput& in, const ProblemKind& kind,
                                   const RatioSolution& sol) {
            if (!mask_path.empty()) {
                if (!in.from_image) throw ParseError("--mask needs --image");
                save_pgm(mask_image(sol.set, in.width, in.height), mask_path);
            }
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv) throw ParseError("cannot open CSV file '" + csv_path + "'");
                write_nested_csv(nested_solutions(in.graph, kind), csv);
            }
        };

        Method method = detail::parse_method(method_text);
        Rational tolerance = Rational::parse(tolerance_text);

        if (app.got_subcommand(c_ncut) || app.got_subcommand(c_prime)) {
            bool prime = app.got_subcommand(c_prime);
            detail::LoadedInput in = load_input();
            if (!auto_seeds_text.empty()) {
                if (!seed_in_text.empty() || !seed_out_text.empty())
                    throw ParseError("--auto-seeds replaces --seed-in/--seed-out");
                size_t budget = detail::parse_budget(auto_seeds_text);
                size_t pairs = vertex_disjoint_edge_pairs(in.graph).size();
                size_t planned = std::min(budget, pairs);
                if (auto_seeds_text == "all" && !quiet)
                    err << "note: --auto-seeds all solves " << planned
                        << " seed pairs (quadratic in the edge count)\n";
                if (planned > 10000 && !yes)
                    throw ParseError("--auto-seeds would try " + std::to_string(planned) +
                                     " pairs; pass --yes to confirm");
                AutoSeedResult best =
                    solve_auto_seeds(in.graph, prime, budget, method, jobs, tolerance);
                detail::print_solution(out, best.solution, quiet);
                if (!quiet)
                    out << "seed_in=" << best.seed_in.i << "," << best.seed_in.j
                        << " seed_out=" << best.seed_out.i << "," << best.seed_out.j << "\n";
                ProblemKind kind;
                if (prime)
                    kind = NormalizedCutPrime{best.seed_in, best.seed_out};
                else
                    kind = NormalizedCut{best.seed_in, best.seed_out};
                finish_solution(in, kind, best.solution);
                return 0;
            }
            auto [seed_in, seed_out] = need_seed_pair();
            ProblemKind kind;
            if (prime)
                kind = NormalizedCutPrime{seed_in, seed_out};
            else
                kind = NormalizedCut{seed_in, seed_out};
            RatioSolution sol = solve(in.graph, kind, method, tolerance);
            detail::print_solution(out, sol, quiet);
            finish_solution(in, kind, sol);
            return 0;
        }

        if (app.got_subcommand(c_rr)) {
            detail::LoadedInput in = load_input();
            if (rr_sink != 0) {
                ProblemKind kind = RatioRegions{rr_source, rr_sink};
                RatioSolution sol = solve(in.graph, kind, method, tolerance);
                detail::print_solution(out, sol, quiet);
                finish_solution(in, kind, sol);
                return 0;
            }
            // No sink given: best answer over every possible sink.
            bool found = false;
            RatioSolution best;
            int best_sink = 0;
            for (int snk = 1; snk <= in.graph.node_count; ++snk) {
                if (snk == rr_source) continue;
                try {
                    RatioSolution sol =
                        solve(in.graph, RatioRegions{rr_source, snk}, method, tolerance);
                    bool better = !found || sol.ratio < best.ratio ||
                                  (sol.ratio == best.ratio && sol.set < best.set);
                    if (better) {
                        found = true;
                        best = sol;
                        best_sink = snk;
                    }
                } catch (const InfeasibleError&) {
                }
            }
            if (!found) throw InfeasibleError("no sink admits a feasible set");
            detail::print_solution(out, best, quiet);
            if (!quiet) out << "sink=" << best_sink << "\n";
            finish_solution(in, RatioRegions{rr_source, best_sink}, best);
            return 0;
        }

        if (app.got_subcommand(c_dense)) {
            detail::LoadedInput in = load_input();
            ProblemKind kind = DensestSubgraph{direction == "max" ? Direction::maximize
                                                                  : Direction::minimize};
            RatioSolution sol = solve(in.graph, kind, method, tolerance);
            detail::print_solution(out, sol, quiet);
            finish_solution(in, kind, sol);
            return 0;
        }

        if (app.got_subcommand(c_bp)) {
            detail::LoadedInput in = load_input();
            ProblemKind kind = kind_from_problem();
            NestedSolutions nested = nested_solutions(in.graph, kind);
            if (csv_path.empty()) {
                write_nested_csv(nested, out);
            } else {
                std::ofstream csv(csv_path);
                if (!csv) throw ParseError("cannot open CSV file '" + csv_path + "'");
                write_nested_csv(nested, csv);
            }
            return 0;
        }

        if (app.got_subcommand(c_oracle)) {
            detail::LoadedInput in = load_input();
            ProblemKind kind = kind_from_problem();
            OracleSolution sol = brute_force_ratio(in.graph, kind, oracle_limit);
            out << "ratio=" << detail::fraction(sol.ratio) << " |S|=" << sol.set.count()
                << " evaluated=" << sol.evaluated << "\n";
            if (!quiet) detail::print_members(out, sol.set);
            return 0;
        }

        throw ParseError("no subcommand given");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const UndefinedRatioError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(std::move(args), std::cout, std::cerr);
}

}  // namespace paracut::cli
