#include "pathcover/sweep.hpp"

namespace pathcover::sweep {

namespace {

// Edge mask layout for order 6: bit index of pair {u,v}, u < v, in
// column-major order (same pair order as graph6).
constexpr int pair_bit(int u, int v) { return v * (v - 1) / 2 + u; }

bool has_triangle_or_independent_3set(std::uint32_t edges) {
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) {
                int e = ((edges >> pair_bit(i, j)) & 1) + ((edges >> pair_bit(i, k)) & 1) +
                        ((edges >> pair_bit(j, k)) & 1);
                if (e == 3 || e == 0) return true;
            }
    return false;
}

std::uint32_t c5_mask() {
    std::uint32_t edges = 0;
    int cyc[5] = {0, 1, 2, 3, 4};
    for (int i = 0; i < 5; ++i) {
        int u = cyc[i], v = cyc[(i + 1) % 5];
        if (u > v) std::swap(u, v);
        edges |= std::uint32_t{1} << pair_bit(u, v);
    }
    return edges;
}

bool c5_triangle_or_independent_3set() {
    // Same scan restricted to the first five vertices.
    std::uint32_t edges = c5_mask();
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int k = j + 1; k < 5; ++k) {
                int e = ((edges >> pair_bit(i, j)) & 1) + ((edges >> pair_bit(i, k)) & 1) +
                        ((edges >> pair_bit(j, k)) & 1);
                if (e == 3 || e == 0) return true;
            }
    return false;
}

}  // namespace

Ramsey33Result ramsey33_scan(bool parallel, int num_threads) {
    constexpr std::size_t kCount = std::size_t{1} << 15;
    std::vector<char> ok = map_indexed<char>(
        kCount,
        [](std::size_t mask) {
            return static_cast<char>(
                has_triangle_or_independent_3set(static_cast<std::uint32_t>(mask)));
        },
        parallel, num_threads);

    Ramsey33Result result;
    result.every_order6_graph_ok = true;
    for (std::size_t mask = 0; mask < kCount; ++mask) {
        if (!ok[mask]) {
            result.every_order6_graph_ok = false;
            result.first_bad_mask = static_cast<std::uint32_t>(mask);
            break;
        }
    }
    result.c5_has_neither = !c5_triangle_or_independent_3set();
    return result;
}

}  // namespace pathcover::sweep
