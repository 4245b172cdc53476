#include "pg/bench.hpp"

#include <chrono>
#include <condition_variable>
#include <exception>
#include <memory>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>

namespace pg {

namespace {

struct RunState {
    std::mutex mutex;
    std::condition_variable done_cv;
    bool done = false;
    Solution solution;
    std::exception_ptr error;
    std::uint64_t runtime_ns = 0;
};

// Runs one solver call on a worker thread so a blown budget can be abandoned.
// On timeout the worker is detached; it keeps the game and the shared state
// alive through the shared_ptrs it captured and finishes on its own time.
bool solve_with_timeout(Algorithm algorithm, std::shared_ptr<const ParityGame> game,
                        double timeout_seconds, Solution& solution, std::uint64_t& runtime_ns) {
    auto state = std::make_shared<RunState>();
    std::thread worker([state, algorithm, game] {
        Solution result;
        std::exception_ptr error;
        auto start = std::chrono::steady_clock::now();
        try {
            result = solve_with(algorithm, *game);
        } catch (...) {
            error = std::current_exception();
        }
        auto stop = std::chrono::steady_clock::now();
        std::lock_guard lock(state->mutex);
        state->solution = std::move(result);
        state->error = error;
        state->runtime_ns =
            std::uint64_t(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        state->done = true;
        state->done_cv.notify_one();
    });

    {
        std::unique_lock lock(state->mutex);
        bool finished = true;
        if (timeout_seconds > 0) {
            finished = state->done_cv.wait_for(lock, std::chrono::duration<double>(timeout_seconds),
                                               [&] { return state->done; });
        } else {
            state->done_cv.wait(lock, [&] { return state->done; });
        }
        if (!finished) {
            lock.unlock();
            worker.detach();
            return false;
        }
    }
    worker.join();
    if (state->error) std::rethrow_exception(state->error);
    solution = std::move(state->solution);
    runtime_ns = state->runtime_ns;
    return true;
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchOptions& options) {
    std::vector<BenchRow> rows;
    // Once an algorithm times out, larger instances are reported as timed
    // out without being run.
    std::vector<char> skipped(options.algorithms.size(), 0);
    for (int n = options.min_n; n <= options.max_n; n++) {
        auto game = std::make_shared<const ParityGame>(
            generate(FamilySpec{options.family, n, options.seed}));
        for (std::size_t i = 0; i < options.algorithms.size(); i++) {
            BenchRow row;
            row.family = std::string(family_name(options.family));
            row.n = n;
            row.vertices = game->num_vertices();
            row.edges = game->num_edges();
            row.priorities = game->priority_count();
            row.algorithm = std::string(algorithm_name(options.algorithms[i]));
            Solution solution;
            std::uint64_t runtime_ns = 0;
            if (skipped[i]) {
                row.timed_out = true;
            } else if (solve_with_timeout(options.algorithms[i], game, options.timeout_seconds,
                                          solution, runtime_ns)) {
                row.stats = solution.stats;
                row.runtime_ns = runtime_ns;
                row.even_region_size = solution.even_region.count();
                row.odd_region_size = solution.odd_region.count();
            } else {
                row.timed_out = true;
                skipped[i] = 1;
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << bench_csv_header << '\n';
    for (const BenchRow& row : rows) {
        out << row.family << ',' << row.n << ',' << row.vertices << ',' << row.edges << ','
            << row.priorities << ',' << row.algorithm << ',';
        if (row.timed_out) {
            out << ",,,,,\n";
        } else {
            out << row.stats.recursive_calls << ',' << row.stats.for_iterations << ','
                << row.stats.attractor_edge_visits << ',' << row.runtime_ns << ','
                << row.even_region_size << ',' << row.odd_region_size << '\n';
        }
    }
}

}  // namespace pg
