// Benchmark comparing the serial reference loops against the OpenMP lane on
// the two batch kernels used by `verify`: the exhaustive R(3,3) scan and a
// seeded per-graph invariant sweep.  Usage: pathcover-bench [count] [order]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "pathcover/rng.hpp"
#include "pathcover/solvers.hpp"
#include "pathcover/sweep.hpp"

using namespace pathcover;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct InvariantRecord {
    int alpha, pc, pp, cp;
};

std::vector<InvariantRecord> invariant_sweep(const std::vector<Graph>& graphs, bool parallel) {
    return sweep::map_indexed<InvariantRecord>(
        graphs.size(),
        [&](std::size_t i) {
            const Graph& g = graphs[i];
            return InvariantRecord{independence_number(g), path_cover_number(g).value,
                                   path_partition_number(g).value,
                                   cycle_partition_number(g).value};
        },
        parallel);
}

}  // namespace

int main(int argc, char** argv) {
    int count = argc > 1 ? std::atoi(argv[1]) : 400;
    int order = argc > 2 ? std::atoi(argv[2]) : 10;

    std::printf("ramsey33 scan (32768 graphs):\n");
    auto t0 = std::chrono::steady_clock::now();
    auto serial_scan = sweep::ramsey33_scan(false);
    double serial_s = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel_scan = sweep::ramsey33_scan(true);
    double parallel_s = seconds_since(t0);
    bool scan_match = serial_scan.holds() == parallel_scan.holds() &&
                      serial_scan.every_order6_graph_ok == parallel_scan.every_order6_graph_ok;
    std::printf("  serial   %8.4fs\n  parallel %8.4fs  (speedup %.2fx, results %s)\n", serial_s,
                parallel_s, serial_s / parallel_s, scan_match ? "match" : "MISMATCH");

    Rng rng(42);
    std::vector<Graph> graphs;
    graphs.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) graphs.push_back(random_graph(order, 0.4, rng));

    std::printf("invariant sweep (%d graphs of order %d):\n", count, order);
    t0 = std::chrono::steady_clock::now();
    auto serial_records = invariant_sweep(graphs, false);
    serial_s = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto parallel_records = invariant_sweep(graphs, true);
    parallel_s = seconds_since(t0);
    bool match = true;
    for (std::size_t i = 0; i < serial_records.size(); ++i)
        match = match && serial_records[i].alpha == parallel_records[i].alpha &&
                serial_records[i].pc == parallel_records[i].pc &&
                serial_records[i].pp == parallel_records[i].pp &&
                serial_records[i].cp == parallel_records[i].cp;
    std::printf("  serial   %8.4fs\n  parallel %8.4fs  (speedup %.2fx, results %s)\n", serial_s,
                parallel_s, serial_s / parallel_s, match ? "match" : "MISMATCH");
    return scan_match && match ? 0 : 1;
}
