#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pg/bench.hpp"
#include "pg/families.hpp"
#include "pg/pgsolver_io.hpp"
#include "pg/solvers.hpp"
#include "pg/special.hpp"

namespace {

constexpr int exit_usage = 1;
constexpr int exit_precondition = 2;
constexpr int exit_parse = 3;

// Reads the whole input game text: from the file when given, else stdin.
std::string read_input(const std::string& path) {
    std::ostringstream buffer;
    if (path.empty()) {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open input file: " + path);
        buffer << in.rdbuf();
    }
    return buffer.str();
}

void print_region(std::ostream& out, const char* label, const pg::VertexSet& region) {
    out << label << ':';
    for (pg::VertexId v : region) out << ' ' << v;
    out << '\n';
}

void print_stats(std::ostream& out, const pg::SolveStats& stats) {
    out << "recursive_calls: " << stats.recursive_calls << '\n';
    out << "for_iterations: " << stats.for_iterations << '\n';
    out << "attractor_edge_visits: " << stats.attractor_edge_visits << '\n';
    out << "second_calls_total: " << stats.second_calls_total << '\n';
    out << "second_calls_empty: " << stats.second_calls_empty << '\n';
    out << "max_recursion_depth: " << stats.max_recursion_depth << '\n';
}

int cmd_generate(const std::string& family_token, int n, std::uint64_t seed,
                 const std::string& out_path) {
    auto family = pg::family_from_string(family_token);
    if (!family) {
        std::cerr << "error: unknown family '" << family_token << "'\n";
        return exit_usage;
    }
    pg::ParityGame game = pg::generate(pg::FamilySpec{*family, n, seed});
    std::string text = pg::write_pgsolver(game);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
        out << text;
    }
    return 0;
}

int cmd_solve(const std::string& algorithm_token, bool with_stats, const std::string& in_path) {
    auto algorithm = pg::algorithm_from_string(algorithm_token);
    if (!algorithm) {
        std::cerr << "error: unknown algorithm '" << algorithm_token << "'\n";
        return exit_usage;
    }
    pg::ParityGame game = pg::parse_pgsolver(read_input(in_path));
    pg::Solution solution = pg::solve_with(*algorithm, game);
    print_region(std::cout, "even", solution.even_region);
    print_region(std::cout, "odd", solution.odd_region);
    if (with_stats) print_stats(std::cout, solution.stats);
    return 0;
}

int cmd_classify(const std::string& in_path) {
    pg::ParityGame game = pg::parse_pgsolver(read_input(in_path));
    pg::GameClassReport report = pg::classify(game);

    std::cout << "weak: " << (report.is_weak ? "yes" : "no") << '\n';
    if (report.ascending_edge) {
        std::cout << "  ascending edge: " << report.ascending_edge->first << " -> "
                  << report.ascending_edge->second << '\n';
    }
    std::cout << "dull: " << (report.is_dull ? "yes" : "no") << '\n';
    if (report.cycle_overlap_vertex) {
        std::cout << "  vertex on overlapping even and odd cycles: " << *report.cycle_overlap_vertex
                  << '\n';
        std::cout << "  cycle of the non-dominant parity:";
        for (pg::VertexId v : report.opposite_cycle) std::cout << ' ' << v;
        std::cout << '\n';
    }
    std::cout << "solitaire: " << (report.is_solitaire ? "yes" : "no") << '\n';
    if (report.is_solitaire) {
        std::cout << "  choices belong to: "
                  << (report.solitaire_owner ? pg::to_string(*report.solitaire_owner) : "either")
                  << '\n';
    } else if (report.mixed_choice) {
        std::cout << "  choice vertices of both players: " << report.mixed_choice->first
                  << " (even) and " << report.mixed_choice->second << " (odd)\n";
    }
    std::cout << "nested-solitaire: " << (report.is_nested_solitaire ? "yes" : "no") << '\n';
    if (report.mixed_choice_in_component) {
        std::cout << "  choice vertices of both players in one component: "
                  << report.mixed_choice_in_component->first << " (even) and "
                  << report.mixed_choice_in_component->second << " (odd)\n";
    }
    return 0;
}

int cmd_bench(const std::string& family_token, int min_n, int max_n,
              const std::string& algorithms_token, const std::string& csv_path,
              double timeout_seconds, std::uint64_t seed) {
    pg::BenchOptions options;
    auto family = pg::family_from_string(family_token);
    if (!family) {
        std::cerr << "error: unknown family '" << family_token << "'\n";
        return exit_usage;
    }
    options.family = *family;
    options.min_n = min_n;
    options.max_n = max_n;
    options.timeout_seconds = timeout_seconds;
    options.seed = seed;
    if (min_n < 1 || max_n < min_n) {
        std::cerr << "error: need 1 <= min <= max\n";
        return exit_usage;
    }

    std::stringstream tokens(algorithms_token);
    std::string token;
    while (std::getline(tokens, token, ',')) {
        auto algorithm = pg::algorithm_from_string(token);
        if (!algorithm) {
            std::cerr << "error: unknown algorithm '" << token << "'\n";
            return exit_usage;
        }
        options.algorithms.push_back(*algorithm);
    }
    if (options.algorithms.empty()) {
        std::cerr << "error: no algorithms given\n";
        return exit_usage;
    }

    std::vector<pg::BenchRow> rows = pg::run_bench(options);
    if (csv_path.empty()) {
        pg::write_bench_csv(std::cout, rows);
    } else {
        std::ofstream out(csv_path);
        if (!out) throw std::invalid_argument("cannot open output file: " + csv_path);
        pg::write_bench_csv(out, rows);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity game toolbox: generators, solvers, classifier, benchmarks"};
    app.require_subcommand(1);

    std::string family_token;
    int n = 1;
    std::uint64_t seed = 1;
    std::string out_path;
    auto* generate = app.add_subcommand("generate", "write a family instance in PGSolver format");
    generate->add_option("--family", family_token,
                         "weak|solitaire|solitaire-strong|whitegame|random|random-weak|"
                         "random-dull|random-solitaire")
        ->required();
    generate->add_option("--n", n, "family size parameter")->required();
    generate->add_option("--seed", seed, "seed for the random families");
    generate->add_option("--out", out_path, "output file (default stdout)");

    std::string algorithm_token = "recursive";
    bool with_stats = false;
    std::string in_path;
    auto* solve = app.add_subcommand("solve", "compute the winning regions of a game");
    solve->add_option("--algorithm", algorithm_token,
                      "recursive|recursive-scc|weak|nested-solitaire|oracle");
    solve->add_flag("--stats", with_stats, "also print the solver counters");
    solve->add_option("file", in_path, "input game (default stdin)");

    std::string classify_path;
    auto* classify = app.add_subcommand("classify", "report the structural class of a game");
    classify->add_option("file", classify_path, "input game (default stdin)");

    std::string bench_family;
    int min_n = 1;
    int max_n = 8;
    std::string algorithms_token;
    std::string csv_path;
    double timeout_seconds = 10.0;
    std::uint64_t bench_seed = 1;
    auto* bench = app.add_subcommand("bench", "run solvers over a family range, emit CSV");
    bench->add_option("--family", bench_family, "family to generate")->required();
    bench->add_option("--min", min_n, "smallest n")->required();
    bench->add_option("--max", max_n, "largest n")->required();
    bench->add_option("--algorithms", algorithms_token, "comma-separated algorithm list")
        ->required();
    bench->add_option("--csv", csv_path, "output CSV file (default stdout)");
    bench->add_option("--timeout-seconds", timeout_seconds,
                      "per-instance wall-clock budget; <= 0 disables");
    bench->add_option("--seed", bench_seed, "seed for the random families");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (generate->parsed()) return cmd_generate(family_token, n, seed, out_path);
        if (solve->parsed()) return cmd_solve(algorithm_token, with_stats, in_path);
        if (classify->parsed()) return cmd_classify(classify_path);
        return cmd_bench(bench_family, min_n, max_n, algorithms_token, csv_path, timeout_seconds,
                         bench_seed);
    } catch (const pg::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const pg::TotalityError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const pg::EmptySuccessors& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const pg::DanglingEdge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const pg::GameError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_precondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
}
