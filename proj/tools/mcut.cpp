#include <algorithm>
#include <cctype>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcut/colouring.hpp"
#include "mcut/errors.hpp"
#include "mcut/generator.hpp"
#include "mcut/graph.hpp"
#include "mcut/json_io.hpp"
#include "mcut/oracle.hpp"
#include "mcut/reductions.hpp"
#include "mcut/solvers.hpp"

namespace {

using mcut::Graph;
using mcut::Problem;
using mcut::SolveResult;

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

Problem parse_problem(const std::string& s) {
    if (s == "mc") return Problem::MatchingCut;
    if (s == "pmc") return Problem::PerfectMatchingCut;
    if (s == "dpm") return Problem::DisconnectedPerfectMatching;
    if (s == "dcut") return Problem::DCut;
    if (s == "maxmc") return Problem::MaxMatchingCut;
    if (s == "maxdpm") return Problem::MaxDisconnectedPerfectMatching;
    throw std::invalid_argument("unknown problem: " + s);
}

SolveResult solve_diam3(const Graph& g, Problem p, int d, bool enforce) {
    switch (p) {
        case Problem::MatchingCut: return mcut::dcut_bipartite_diam3(g, 1, enforce);
        case Problem::PerfectMatchingCut: return mcut::pmc_bipartite_diam3(g, enforce);
        case Problem::DCut: return mcut::dcut_bipartite_diam3(g, d, enforce);
        case Problem::MaxMatchingCut: return mcut::maxmc_bipartite_diam3(g, enforce);
        case Problem::DisconnectedPerfectMatching:
        case Problem::MaxDisconnectedPerfectMatching:
            return mcut::maxdpm_bipartite_diam3(g, enforce);
    }
    throw std::invalid_argument("unhandled problem");
}

SolveResult solve_rad2(const Graph& g, Problem p, int d, bool enforce) {
    switch (p) {
        case Problem::MatchingCut: return mcut::dcut_bipartite_rad2(g, 1, enforce);
        case Problem::DCut: return mcut::dcut_bipartite_rad2(g, d, enforce);
        case Problem::MaxMatchingCut: return mcut::maxmc_bipartite_rad2(g, enforce);
        case Problem::DisconnectedPerfectMatching:
        case Problem::MaxDisconnectedPerfectMatching:
            return mcut::maxdpm_bipartite_rad2(g, enforce);
        case Problem::PerfectMatchingCut:
            throw std::invalid_argument(
                "no radius-2 algorithm covers pmc; use diam3 or oracle");
    }
    throw std::invalid_argument("unhandled problem");
}

// The decision variant of dpm is answered by the maximisation solver; strip
// the value so the decision output stays uniform.
SolveResult as_decision(SolveResult r, Problem p) {
    if (p == Problem::DisconnectedPerfectMatching) r.value.reset();
    return r;
}

int run(int argc, char** argv) {
    CLI::App app{"matching cut, perfect matching cut, disconnected perfect "
                 "matching and d-cut toolkit"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    auto* stats_cmd = app.add_subcommand("stats", "structural report for a graph");
    std::string stats_graph;
    stats_cmd->add_option("graph", stats_graph, "graph file")->required();

    auto* solve_cmd = app.add_subcommand("solve", "decide or maximise a problem");
    std::string solve_problem, solve_algorithm = "auto", solve_graph;
    int solve_d = 1;
    double solve_timeout = 60.0;
    bool solve_no_class_check = false;
    solve_cmd->add_option("--problem", solve_problem, "mc|pmc|dpm|dcut|maxmc|maxdpm")
        ->required()
        ->check(CLI::IsMember({"mc", "pmc", "dpm", "dcut", "maxmc", "maxdpm"}));
    solve_cmd->add_option("--d", solve_d, "opposite-neighbour bound for dcut (default 1)")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_option("--algorithm", solve_algorithm, "auto|diam3|rad2|oracle")
        ->check(CLI::IsMember({"auto", "diam3", "rad2", "oracle"}));
    solve_cmd->add_option("--timeout", solve_timeout,
                          "search-oracle time limit in seconds (default 60)");
    solve_cmd->add_flag("--no-class-check", solve_no_class_check,
                        "run the chosen algorithm outside its diameter/radius "
                        "class (answers lose their guarantee)");
    solve_cmd->add_option("graph", solve_graph, "graph file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "check a colouring against a problem");
    std::string verify_problem, verify_graph, verify_colouring;
    int verify_d = 1;
    verify_cmd->add_option("--problem", verify_problem, "mc|pmc|dpm|dcut|maxmc|maxdpm")
        ->required()
        ->check(CLI::IsMember({"mc", "pmc", "dpm", "dcut", "maxmc", "maxdpm"}));
    verify_cmd->add_option("--d", verify_d, "opposite-neighbour bound for dcut")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("graph", verify_graph, "graph file")->required();
    verify_cmd->add_option("colouring", verify_colouring, "file with an R/B line")
        ->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth");
    std::string oracle_ds = "1,2", oracle_graph, oracle_blocks;
    int oracle_budget = 22;
    double oracle_timeout = 0.0;
    bool oracle_no_blocks = false;
    oracle_cmd->add_option("--d", oracle_ds, "comma-separated d values (default 1,2)");
    oracle_cmd->add_option("--budget", oracle_budget,
                           "max enumerated vertices or blocks (default 22)");
    oracle_cmd->add_option("--timeout", oracle_timeout,
                           "time limit in seconds (default: none)");
    oracle_cmd->add_option("--blocks", oracle_blocks,
                           "labels sidecar defining monochromatic blocks");
    oracle_cmd->add_flag("--no-blocks", oracle_no_blocks,
                         "ignore an autodetected <graph>.labels.json");
    oracle_cmd->add_option("graph", oracle_graph, "graph file")->required();

    auto* reduce_cmd = app.add_subcommand("reduce", "generate a hardness construction");
    std::string reduce_from, reduce_instance, reduce_out;
    int reduce_d = 0;
    bool reduce_labels = false;
    reduce_cmd->add_option("--from", reduce_from, "nae-pmc|nae-dcut|x3c-maxmc")
        ->required()
        ->check(CLI::IsMember({"nae-pmc", "nae-dcut", "x3c-maxmc"}));
    reduce_cmd->add_option("--d", reduce_d, "d-cut parameter (nae-dcut only, >= 2)");
    reduce_cmd->add_flag("--labels", reduce_labels, "also write <out>.labels.json");
    reduce_cmd->add_option("instance", reduce_instance, "instance JSON file")->required();
    reduce_cmd->add_option("-o,--out", reduce_out, "output graph file")->required();

    auto* gen_cmd = app.add_subcommand("gen", "random graph by rejection sampling");
    bool gen_bipartite = false;
    int gen_n = 0, gen_attempts = 100000;
    std::uint64_t gen_seed = 0;
    std::string gen_target, gen_out;
    gen_cmd->add_flag("--bipartite", gen_bipartite, "sample bipartite graphs")
        ->required();
    gen_cmd->add_option("--n", gen_n, "vertex count")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--target", gen_target, "diam3|rad2")
        ->required()
        ->check(CLI::IsMember({"diam3", "rad2"}));
    gen_cmd->add_option("--seed", gen_seed, "random seed (default 0)");
    gen_cmd->add_option("--attempts", gen_attempts, "rejection cap (default 100000)");
    gen_cmd->add_option("-o,--out", gen_out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*stats_cmd) {
        emit(mcut::structural_report_json(mcut::read_graph_file(stats_graph)));
        return 0;
    }

    if (*solve_cmd) {
        Graph g = mcut::read_graph_file(solve_graph);
        Problem p = parse_problem(solve_problem);
        std::string algorithm = solve_algorithm;
        if (algorithm == "auto") {
            mcut::StructuralReport rep = mcut::structural_report(g);
            bool in_class = rep.connected && rep.bipartition.has_value();
            if (in_class && rep.diameter <= 3 && rep.diameter != mcut::kInfinite)
                algorithm = "diam3";
            else if (in_class && rep.radius <= 2 && rep.radius != mcut::kInfinite &&
                     p != Problem::PerfectMatchingCut)
                algorithm = "rad2";
            else
                algorithm = "oracle";
        }
        SolveResult r;
        if (algorithm == "diam3")
            r = as_decision(solve_diam3(g, p, solve_d, !solve_no_class_check), p);
        else if (algorithm == "rad2")
            r = as_decision(solve_rad2(g, p, solve_d, !solve_no_class_check), p);
        else
            r = mcut::oracle_search(g, p, solve_d, solve_timeout);
        nlohmann::json j = mcut::solve_result_json(r);
        j["algorithm"] = algorithm;
        emit(j);
        return 0;
    }

    if (*verify_cmd) {
        Graph g = mcut::read_graph_file(verify_graph);
        Problem p = parse_problem(verify_problem);
        std::string text = mcut::read_text_file(verify_colouring);
        text.erase(std::remove_if(text.begin(), text.end(),
                                  [](unsigned char ch) { return std::isspace(ch); }),
                   text.end());
        mcut::Colouring c = mcut::colouring_from_string(text);
        if (static_cast<int>(c.size()) != g.vertex_count())
            throw std::invalid_argument("colouring length does not match the graph");
        int d = p == Problem::DCut ? verify_d : 1;
        bool ok = false;
        switch (p) {
            case Problem::PerfectMatchingCut:
                ok = mcut::is_perfect_colouring(g, c);
                break;
            case Problem::DisconnectedPerfectMatching:
            case Problem::MaxDisconnectedPerfectMatching:
                ok = mcut::is_valid_d_colouring(g, c, 1) && mcut::is_perfect_extendable(g, c);
                break;
            default:
                ok = mcut::is_valid_d_colouring(g, c, d);
        }
        emit({{"ok", ok}, {"value", mcut::colouring_value(g, c)}});
        return 0;
    }

    if (*oracle_cmd) {
        Graph g = mcut::read_graph_file(oracle_graph);
        int d_max = 0;
        std::stringstream ss(oracle_ds);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                d_max = std::max(d_max, std::stoi(item));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad --d list: " + oracle_ds);
            }
        }
        if (d_max < 1) throw std::invalid_argument("need at least one d >= 1");

        std::string sidecar_path = oracle_blocks;
        if (sidecar_path.empty() && !oracle_no_blocks) {
            std::string candidate = oracle_graph + ".labels.json";
            if (std::filesystem::exists(candidate)) sidecar_path = candidate;
        }
        mcut::OracleReport rep;
        if (!sidecar_path.empty()) {
            mcut::LabelledGraph lg =
                mcut::sidecar_attach(std::move(g), mcut::read_json_file(sidecar_path));
            rep = mcut::oracle_enumerate_blocks(lg.graph, mcut::blocks_from_labels(lg),
                                                d_max, oracle_budget, oracle_timeout);
        } else {
            rep = mcut::oracle_enumerate(g, d_max, oracle_budget, oracle_timeout);
        }
        nlohmann::json j = mcut::oracle_report_json(rep);
        j["blocks"] = !sidecar_path.empty();
        emit(j);
        return 0;
    }

    if (*reduce_cmd) {
        mcut::LabelledGraph lg;
        if (reduce_from == "nae-pmc" || reduce_from == "nae-dcut") {
            mcut::NaeSatInstance inst =
                mcut::nae_instance_from_json(mcut::read_json_file(reduce_instance));
            if (reduce_from == "nae-pmc") {
                if (reduce_d != 0)
                    throw std::invalid_argument("--d only applies to nae-dcut");
                lg = mcut::reduce_nae_to_pmc(inst);
            } else {
                lg = mcut::reduce_nae_to_dcut(inst, reduce_d);
            }
        } else {
            if (reduce_d != 0) throw std::invalid_argument("--d only applies to nae-dcut");
            mcut::X3cInstance inst =
                mcut::x3c_instance_from_json(mcut::read_json_file(reduce_instance));
            lg = mcut::reduce_x3c_to_maxmc(inst);
        }
        mcut::write_text_file(reduce_out, mcut::write_graph_string(lg.graph));
        if (reduce_labels)
            mcut::write_text_file(reduce_out + ".labels.json",
                                  mcut::sidecar_json(lg).dump(2) + "\n");
        nlohmann::json j = mcut::sidecar_json(lg)["meta"];
        j["n"] = lg.graph.vertex_count();
        j["m"] = lg.graph.edge_count();
        j["out"] = reduce_out;
        emit(j);
        return 0;
    }

    if (*gen_cmd) {
        mcut::GenTarget target =
            gen_target == "diam3" ? mcut::GenTarget::Diam3 : mcut::GenTarget::Rad2;
        Graph g = mcut::random_bipartite_graph(gen_n, target, gen_seed, gen_attempts);
        if (gen_out.empty())
            std::cout << mcut::write_graph_string(g);
        else
            mcut::write_text_file(gen_out, mcut::write_graph_string(g));
        return 0;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const mcut::TimeoutError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const mcut::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const mcut::ClassViolationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        // Unreadable or unwritable files are usage errors too.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
