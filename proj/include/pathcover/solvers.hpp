#pragma once

#include <string>
#include <vector>

#include "pathcover/graph.hpp"

namespace pathcover {

enum class SystemMode { Cover, Partition };

// A family of paths whose vertex sets cover V(G); in Partition mode the
// paths are additionally pairwise vertex-disjoint.
struct PathSystem {
    SystemMode mode = SystemMode::Cover;
    std::vector<std::vector<int>> paths;

    int count() const { return static_cast<int>(paths.size()); }
};

enum class CycleElementKind { K1, K2, Cycle };

struct CycleElement {
    CycleElementKind kind;
    std::vector<int> vertices;  // cyclic order for Cycle elements
};

struct CycleSystem {
    SystemMode mode = SystemMode::Cover;
    std::vector<CycleElement> elements;

    int count() const { return static_cast<int>(elements.size()); }
};

// Witness checkers.  On failure, *why (when given) receives the violated
// invariant.
bool path_system_valid(const Graph& g, const PathSystem& ps, std::string* why = nullptr);
bool cycle_system_valid(const Graph& g, const CycleSystem& cs, std::string* why = nullptr);

// Largest exact-solver instance; callers wanting smaller budgets enforce
// them before calling.
constexpr int kMaxExactPathOrder = 20;
constexpr int kMaxExactCycleOrder = 18;

// alpha(G); 0 for the empty graph.  Branch-and-bound, no order cap beyond
// the VertexSet capacity.
int independence_number(const Graph& g);

// True iff some path visits every vertex exactly once.  Order 0 -> false,
// order 1 -> true.
bool has_hamiltonian_path(const Graph& g);

struct PathCountResult {
    int value;
    PathSystem system;
};

struct CycleCountResult {
    int value;
    CycleSystem system;
};

// Exact invariants with an optimal witness.  All four require order >= 1 and
// reject instances above the solver capacity.
PathCountResult path_cover_number(const Graph& g);
PathCountResult path_partition_number(const Graph& g);
CycleCountResult cycle_cover_number(const Graph& g);
CycleCountResult cycle_partition_number(const Graph& g);

// Gallai-Milgram style greedy: start from singletons and repeatedly join two
// paths whose endvertices are adjacent (lexicographically least eligible
// index pair first).  The result is a path partition of size <= alpha(G).
PathSystem greedy_path_partition(const Graph& g);

// Cycle analogue: every element carries an anchor pair (x, y) with xy an
// edge of the element (x = y for K1); two elements merge when their anchors
// are joined by the two cross edges, producing a spanning K2 or cycle.  A
// merge-stuck partition has size <= R(alpha+1, alpha+1) - 1 by the Ramsey
// coloring argument, for any upper bound R.
CycleSystem greedy_cycle_partition(const Graph& g);

}  // namespace pathcover
