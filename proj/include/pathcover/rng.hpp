#pragma once

#include <cstdint>
#include <random>

#include "pathcover/graph.hpp"

namespace pathcover {

// Seed-deterministic random source.  The generator is std::mt19937_64, whose
// output sequence is pinned down by the C++ standard, and all reductions
// (bounded integers, Bernoulli draws) are implemented here instead of going
// through std::uniform_*_distribution, which is implementation-defined.  Two
// builds given the same seed therefore produce identical streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, bound) by rejection sampling; bound >= 1.
    std::uint32_t below(std::uint32_t bound);

    // True with probability threshold / 2^53.
    bool chance(std::uint64_t threshold) { return (next() >> 11) < threshold; }

    // Maps a probability in [0,1] to a 53-bit threshold for chance().
    static std::uint64_t probability_threshold(double p);

private:
    std::mt19937_64 gen_;
};

// G(order, edge_prob): each pair {u,v} with u < v, visited in ascending (u,v)
// order, becomes an edge independently with probability edge_prob.  Exactly
// one draw is consumed per pair.
Graph random_graph(int order, double edge_prob, Rng& rng);

// Rejection-samples random_graph until the result is connected.
Graph random_connected_graph(int order, double edge_prob, Rng& rng);

}  // namespace pathcover
