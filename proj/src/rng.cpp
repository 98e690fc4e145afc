#include "pathcover/rng.hpp"

#include <cmath>

namespace pathcover {

std::uint32_t Rng::below(std::uint32_t bound) {
    if (bound == 0) throw InputError("Rng::below requires bound >= 1");
    // Reject the partial top interval so the result is exactly uniform.
    std::uint64_t limit = std::uint64_t{0xFFFFFFFF} / bound * bound;
    for (;;) {
        std::uint64_t r = next() >> 32;
        if (r < limit) return static_cast<std::uint32_t>(r % bound);
    }
}

std::uint64_t Rng::probability_threshold(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0,1]");
    return static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));  // p * 2^53
}

Graph random_graph(int order, double edge_prob, Rng& rng) {
    if (order < 0) throw InputError("graph order must be nonnegative");
    std::uint64_t threshold = Rng::probability_threshold(edge_prob);
    Graph g(order);
    for (int u = 0; u + 1 < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (rng.chance(threshold)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int order, double edge_prob, Rng& rng) {
    constexpr int kMaxAttempts = 1000000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Graph g = random_graph(order, edge_prob, rng);
        if (is_connected(g)) return g;
    }
    throw InputError("failed to sample a connected graph (edge probability too small?)");
}

}  // namespace pathcover
