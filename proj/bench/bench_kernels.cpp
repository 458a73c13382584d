// Serial vs OpenMP timings for the exhaustive search and the verdict table.
//
//   bench_kernels [--threads T] [--reps R]

#include <chrono>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <omp.h>

#include "gbf/criteria.hpp"
#include "gbf/search.hpp"

namespace {

template <class F>
double best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernel benchmark"};
    int threads = omp_get_max_threads();
    int reps = 3;
    app.add_option("--threads", threads)->check(CLI::PositiveNumber);
    app.add_option("--reps", reps)->check(CLI::PositiveNumber);
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d (hardware: %d)\n", threads, omp_get_num_procs());
    std::printf("%-26s %12s %12s %8s %s\n", "kernel", "serial s", "parallel s", "speedup", "agree");

    const std::pair<std::int64_t, int> cases[] = {{9, 3}, {13, 3}, {15, 3}, {8, 3}};
    for (auto [m, n] : cases) {
        gbf::SearchOptions opt;
        opt.threads = threads;
        gbf::SearchOutcome a, b;
        const double ts = best_of(reps, [&] { a = gbf::brute_force_serial(m, n, opt); });
        const double tp = best_of(reps, [&] { b = gbf::brute_force(m, n, opt); });
        const bool agree = a.status == b.status && a.examined == b.examined && a.witness == b.witness;
        const std::string name = "search (" + std::to_string(m) + "," + std::to_string(n) + ")";
        std::printf("%-26s %12.4f %12.4f %8.2f %s\n", name.c_str(), ts, tp, ts / tp, agree ? "yes" : "NO");
    }

    {
        gbf::SearchOptions opt;
        opt.threads = threads;
        opt.prune = false;
        gbf::SearchOutcome a, b;
        const double ts = best_of(reps, [&] { a = gbf::brute_force_serial(6, 3, opt); });
        const double tp = best_of(reps, [&] { b = gbf::brute_force(6, 3, opt); });
        const bool agree = a.status == b.status && a.examined == b.examined;
        std::printf("%-26s %12.4f %12.4f %8.2f %s\n", "search (6,3) no prune", ts, tp, ts / tp, agree ? "yes" : "NO");
    }

    {
        omp_set_num_threads(threads);
        std::vector<gbf::Verdict> a, b;
        const double ts = best_of(reps, [&] { a = gbf::verdict_table_serial(10000, 16); });
        const double tp = best_of(reps, [&] { b = gbf::verdict_table(10000, 16); });
        std::printf("%-26s %12.4f %12.4f %8.2f %s\n", "table 10000 x 16", ts, tp, ts / tp, a == b ? "yes" : "NO");
    }
    return 0;
}
