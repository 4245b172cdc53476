#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pg/families.hpp"
#include "pg/solvers.hpp"

namespace pg {

struct BenchRow {
    std::string family;
    int n = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t priorities = 0;
    std::string algorithm;
    bool timed_out = false;
    // The remaining fields are meaningful only when the run completed.
    SolveStats stats;
    std::uint64_t runtime_ns = 0;
    std::size_t even_region_size = 0;
    std::size_t odd_region_size = 0;
};

struct BenchOptions {
    Family family = Family::whitegame;
    int min_n = 1;
    int max_n = 8;
    std::vector<Algorithm> algorithms;
    // <= 0 disables the timeout.
    double timeout_seconds = 10.0;
    std::uint64_t seed = 1;
};

// Runs every (n, algorithm) cell sequentially, ordered by n and then by the
// requested algorithm order, one row per cell. A cell that exceeds the
// timeout produces a row with timed_out set; larger n for that algorithm are
// reported as timed out without being run.
std::vector<BenchRow> run_bench(const BenchOptions& options);

inline constexpr std::string_view bench_csv_header =
    "family,n,vertices,edges,priorities,algorithm,recursive_calls,for_iterations,"
    "attractor_edge_visits,runtime_nanoseconds,even_region_size,odd_region_size";

// CSV with the header above; timed-out rows leave the stat columns empty.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace pg
