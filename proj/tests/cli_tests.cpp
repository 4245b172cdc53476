#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "pg/bench.hpp"
#include "pg/families.hpp"
#include "pg/pgsolver_io.hpp"

using namespace pg;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string temp_path(const std::string& tag) {
    static int counter = 0;
    return "/tmp/pgsolve_cli_" + std::to_string(getpid()) + "_" + tag + "_" +
           std::to_string(counter++);
}

CliResult run_cli(const std::string& args, const std::string& stdin_text = "") {
    std::string in_path = temp_path("in");
    std::string out_path = temp_path("out");
    std::string err_path = temp_path("err");
    {
        std::ofstream in(in_path);
        in << stdin_text;
    }
    std::string command = std::string(PGSOLVE_BIN) + " " + args + " < " + in_path + " > " +
                          out_path + " 2> " + err_path;
    int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    std::remove(in_path.c_str());
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream stream(line);
    while (std::getline(stream, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

std::uint64_t stat_value(const std::string& out, const std::string& name) {
    for (const std::string& line : lines_of(out)) {
        if (line.rfind(name + ": ", 0) == 0) {
            return std::stoull(line.substr(name.size() + 2));
        }
    }
    FAIL("missing stat line: " << name);
    return 0;
}

}  // namespace

TEST_CASE("generate writes the family to stdout") {
    CliResult r = run_cli("generate --family weak --n 4");
    REQUIRE(r.exit_code == 0);
    CHECK(parse_pgsolver(r.out) == gen_weak(4));
}

TEST_CASE("generate writes to a file") {
    std::string path = temp_path("game");
    CliResult r = run_cli("generate --family solitaire-strong --n 3 --out " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(parse_pgsolver(slurp(path)) == gen_solitaire(3, true));
    std::remove(path.c_str());
}

TEST_CASE("solve reads stdin and prints regions") {
    CliResult r = run_cli("solve", write_pgsolver(gen_solitaire(3)));
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "even: 0 1 2 3 4 5 6 7 8");
    CHECK(lines[1] == "odd:");
}

TEST_CASE("solve reads a file and prints stats") {
    std::string path = temp_path("game");
    {
        std::ofstream out(path);
        out << write_pgsolver(gen_solitaire(3));
    }
    CliResult r = run_cli("solve --algorithm recursive --stats " + path);
    REQUIRE(r.exit_code == 0);
    CHECK(stat_value(r.out, "recursive_calls") >= 8);
    CHECK(stat_value(r.out, "second_calls_empty") <= stat_value(r.out, "second_calls_total"));
    std::remove(path.c_str());
}

TEST_CASE("solve agrees across algorithms") {
    std::string weak_game = write_pgsolver(gen_weak(6));
    CliResult recursive = run_cli("solve --algorithm recursive", weak_game);
    CliResult scc = run_cli("solve --algorithm recursive-scc", weak_game);
    CliResult weak = run_cli("solve --algorithm weak", weak_game);
    REQUIRE(recursive.exit_code == 0);
    CHECK(recursive.out == scc.out);
    CHECK(recursive.out == weak.out);
}

TEST_CASE("solver precondition failures exit with 2") {
    std::string solitaire = write_pgsolver(gen_solitaire(3));
    CliResult weak = run_cli("solve --algorithm weak", solitaire);
    CHECK(weak.exit_code == 2);
    CHECK(weak.err.find("6 -> 1") != std::string::npos);

    CliResult oracle = run_cli("solve --algorithm oracle", write_pgsolver(gen_weak(10)));
    CHECK(oracle.exit_code == 2);
    CHECK(oracle.err.find("oracle limit") != std::string::npos);

    CliResult dull = run_cli("solve --algorithm nested-solitaire",
                             write_pgsolver(gen_whitegame(4)));
    CHECK(dull.exit_code == 2);
}

TEST_CASE("parse failures exit with 3") {
    CHECK(run_cli("solve", "0 0 9 0;").exit_code == 3);
    CHECK(run_cli("solve", "0 0 0;").exit_code == 3);
    CHECK(run_cli("solve", "0 0 0 5;").exit_code == 3);
    CHECK(run_cli("classify", "garbage").exit_code == 3);
}

TEST_CASE("usage failures exit with 1") {
    CHECK(run_cli("frobnicate").exit_code == 1);
    CHECK(run_cli("generate --family nonsense --n 3").exit_code == 1);
    CHECK(run_cli("generate --family weak").exit_code == 1);
    CHECK(run_cli("generate --family weak --n 0").exit_code == 1);
    CHECK(run_cli("solve --algorithm nonsense", "0 0 0 0;").exit_code == 1);
    CHECK(run_cli("bench --family weak --min 3 --max 1 --algorithms recursive").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("solve --help").exit_code == 0);
}

TEST_CASE("classify reports classes and witnesses") {
    CliResult weak = run_cli("classify", write_pgsolver(gen_weak(4)));
    REQUIRE(weak.exit_code == 0);
    CHECK(weak.out.find("weak: yes") != std::string::npos);
    CHECK(weak.out.find("dull: yes") != std::string::npos);

    CliResult solitaire = run_cli("classify", write_pgsolver(gen_solitaire(3)));
    REQUIRE(solitaire.exit_code == 0);
    CHECK(solitaire.out.find("weak: no") != std::string::npos);
    CHECK(solitaire.out.find("ascending edge: 6 -> 1") != std::string::npos);
    CHECK(solitaire.out.find("solitaire: yes") != std::string::npos);
    CHECK(solitaire.out.find("choices belong to: even") != std::string::npos);

    CliResult white = run_cli("classify", write_pgsolver(gen_whitegame(4)));
    REQUIRE(white.exit_code == 0);
    CHECK(white.out.find("dull: no") != std::string::npos);
    CHECK(white.out.find("nested-solitaire: no") != std::string::npos);
}

TEST_CASE("bench emits one csv row per cell") {
    std::string path = temp_path("csv");
    CliResult r = run_cli(
        "bench --family whitegame --min 2 --max 4 "
        "--algorithms recursive,recursive-scc --csv " +
        path);
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(slurp(path));
    std::remove(path.c_str());
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == std::string(bench_csv_header));
    int expected_n[] = {2, 2, 3, 3, 4, 4};
    const char* expected_algorithm[] = {"recursive",     "recursive-scc", "recursive",
                                        "recursive-scc", "recursive",     "recursive-scc"};
    for (int i = 0; i < 6; i++) {
        auto cells = split_csv(lines[std::size_t(i) + 1]);
        REQUIRE(cells.size() == 12);
        CHECK(cells[0] == "whitegame");
        CHECK(cells[1] == std::to_string(expected_n[i]));
        CHECK(cells[2] == std::to_string(4 * expected_n[i] - 1));
        CHECK(cells[5] == expected_algorithm[i]);
        // Winning regions partition the vertices.
        CHECK(std::stoul(cells[10]) + std::stoul(cells[11]) == std::stoul(cells[2]));
    }
}

TEST_CASE("bench marks timeouts and stops rerunning the loser") {
    std::string path = temp_path("csv");
    CliResult r = run_cli(
        "bench --family solitaire --min 24 --max 25 --algorithms recursive "
        "--timeout-seconds 0.01 --csv " +
        path);
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(slurp(path));
    std::remove(path.c_str());
    REQUIRE(lines.size() == 3);
    for (int i = 1; i <= 2; i++) {
        auto cells = split_csv(lines[std::size_t(i)]);
        REQUIRE(cells.size() == 12);
        for (int c = 6; c < 12; c++) CHECK(cells[std::size_t(c)].empty());
    }
}

TEST_CASE("bench defaults to stdout") {
    CliResult r = run_cli("bench --family weak --min 1 --max 2 --algorithms weak");
    REQUIRE(r.exit_code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == std::string(bench_csv_header));
}

TEST_CASE("bench propagates precondition failures") {
    CliResult r = run_cli("bench --family solitaire --min 1 --max 2 --algorithms weak");
    CHECK(r.exit_code == 2);
}
