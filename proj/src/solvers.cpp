#include "pathcover/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace pathcover {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
    for (int v = 0; v < g.order(); ++v) {
        Mask row = 0;
        g.neighbors(v).for_each([&](int u) { row |= Mask{1} << u; });
        adj[static_cast<std::size_t>(v)] = row;
    }
    return adj;
}

void require_order(const Graph& g, int cap, const char* what) {
    if (g.order() < 1) throw InputError(std::string(what) + " requires order >= 1");
    if (g.order() > cap)
        throw InputError(std::string(what) + " supports order <= " + std::to_string(cap) +
                         ", got " + std::to_string(g.order()));
}

// end_masks[S] = bitmask of vertices v such that some path with vertex set
// exactly S ends at v.
std::vector<Mask> path_end_masks(const std::vector<Mask>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<Mask> ends(std::size_t{1} << n, 0);
    for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = Mask{1} << v;
    Mask full = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
    for (Mask s = 1; s <= full; ++s) {
        Mask es = ends[s];
        while (es != 0) {
            int v = std::countr_zero(es);
            es &= es - 1;
            Mask cand = adj[static_cast<std::size_t>(v)] & ~s;
            while (cand != 0) {
                int u = std::countr_zero(cand);
                cand &= cand - 1;
                ends[s | (Mask{1} << u)] |= Mask{1} << u;
            }
        }
    }
    return ends;
}

// sup[S] = 1 iff some T >= S (superset) has pred[T] set.
std::vector<std::uint8_t> superset_or(std::vector<std::uint8_t> pred, int n) {
    for (int j = 0; j < n; ++j) {
        Mask bit = Mask{1} << j;
        for (Mask s = 0; s < (Mask{1} << n); ++s)
            if (!(s & bit) && pred[s | bit]) pred[s] = 1;
    }
    return pred;
}

// Recovers a concrete path with vertex set exactly `s`, lowest eligible
// choices first.
std::vector<int> materialize_path(const std::vector<Mask>& adj, const std::vector<Mask>& ends,
                                  Mask s) {
    std::vector<int> seq;
    Mask cur = s;
    int v = std::countr_zero(ends[s]);
    while (true) {
        seq.push_back(v);
        cur &= ~(Mask{1} << v);
        if (cur == 0) break;
        Mask prev = ends[cur] & adj[static_cast<std::size_t>(v)];
        v = std::countr_zero(prev);
    }
    std::reverse(seq.begin(), seq.end());
    return seq;
}

}  // namespace

// ---------------------------------------------------------------------------
// Witness validity

namespace {

bool check_path(const Graph& g, const std::vector<int>& path, std::string* why) {
    if (path.empty()) {
        if (why) *why = "empty path";
        return false;
    }
    VertexSet seen(g.order());
    for (std::size_t i = 0; i < path.size(); ++i) {
        int v = path[i];
        if (v < 0 || v >= g.order()) {
            if (why) *why = "vertex out of range";
            return false;
        }
        if (seen.contains(v)) {
            if (why) *why = "repeated vertex " + std::to_string(v) + " within a path";
            return false;
        }
        seen.add(v);
        if (i > 0 && !g.adjacent(path[i - 1], v)) {
            if (why)
                *why = "non-adjacent consecutive vertices " + std::to_string(path[i - 1]) + "," +
                       std::to_string(v);
            return false;
        }
    }
    return true;
}

}  // namespace

bool path_system_valid(const Graph& g, const PathSystem& ps, std::string* why) {
    VertexSet covered(g.order());
    int total = 0;
    for (const auto& path : ps.paths) {
        if (!check_path(g, path, why)) return false;
        for (int v : path) {
            if (ps.mode == SystemMode::Partition && covered.contains(v)) {
                if (why) *why = "vertex " + std::to_string(v) + " lies on two paths of a partition";
                return false;
            }
            covered.add(v);
        }
        total += static_cast<int>(path.size());
    }
    if (covered != VertexSet::full(g.order())) {
        if (why) *why = "paths do not cover every vertex";
        return false;
    }
    (void)total;
    return true;
}

bool cycle_system_valid(const Graph& g, const CycleSystem& cs, std::string* why) {
    VertexSet covered(g.order());
    for (const auto& el : cs.elements) {
        const auto& vs = el.vertices;
        switch (el.kind) {
            case CycleElementKind::K1:
                if (vs.size() != 1) {
                    if (why) *why = "K1 element must carry exactly one vertex";
                    return false;
                }
                break;
            case CycleElementKind::K2:
                if (vs.size() != 2 || !g.adjacent(vs[0], vs[1])) {
                    if (why) *why = "K2 element must be an edge of the graph";
                    return false;
                }
                break;
            case CycleElementKind::Cycle: {
                if (vs.size() < 3) {
                    if (why) *why = "cycle element needs at least three vertices";
                    return false;
                }
                if (!check_path(g, vs, why)) return false;
                if (!g.adjacent(vs.back(), vs.front())) {
                    if (why) *why = "cycle element does not close up";
                    return false;
                }
                break;
            }
        }
        for (int v : vs) {
            if (v < 0 || v >= g.order()) {
                if (why) *why = "vertex out of range";
                return false;
            }
            if (cs.mode == SystemMode::Partition && covered.contains(v)) {
                if (why) *why = "vertex " + std::to_string(v) + " lies on two elements of a partition";
                return false;
            }
            covered.add(v);
        }
    }
    if (covered != VertexSet::full(g.order())) {
        if (why) *why = "elements do not cover every vertex";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Independence number

namespace {

void alpha_branch(const Graph& g, VertexSet remaining, int current, int& best) {
    for (;;) {
        int room = remaining.count();
        if (current + room <= best) return;
        if (room == 0) {
            best = std::max(best, current);
            return;
        }
        // Pivot on a vertex of maximum degree within the remaining set.
        int pivot = -1, pivot_deg = -1;
        remaining.for_each([&](int v) {
            int d = (g.neighbors(v) & remaining).count();
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        });
        if (pivot_deg == 0) {
            best = std::max(best, current + room);
            return;
        }
        VertexSet with = remaining;
        with -= g.neighbors(pivot);
        with.erase(pivot);
        alpha_branch(g, with, current + 1, best);
        remaining.erase(pivot);  // continue with the exclude branch
    }
}

}  // namespace

int independence_number(const Graph& g) {
    if (g.order() == 0) return 0;
    int best = 0;
    alpha_branch(g, VertexSet::full(g.order()), 0, best);
    return best;
}

// ---------------------------------------------------------------------------
// Hamiltonian path

bool has_hamiltonian_path(const Graph& g) {
    if (g.order() == 0) return false;
    if (g.order() == 1) return true;
    require_order(g, kMaxExactPathOrder, "has_hamiltonian_path");
    auto adj = adjacency_masks(g);
    auto ends = path_end_masks(adj);
    Mask full = (Mask{1} << g.order()) - 1;
    return ends[full] != 0;
}

// ---------------------------------------------------------------------------
// Exact path cover number

namespace {

struct CoverSolver {
    int n;
    std::vector<Mask> adj;
    std::vector<Mask> ends;
    std::vector<std::uint8_t> is_path_set;   // exact vertex set of some path
    std::vector<std::uint8_t> sup;           // some path set contains S
    std::vector<std::vector<Mask>> moves;    // maximal path sets through v
    std::unordered_map<Mask, int> memo;

    explicit CoverSolver(const Graph& g) : n(g.order()), adj(adjacency_masks(g)) {
        ends = path_end_masks(adj);
        std::size_t states = std::size_t{1} << n;
        is_path_set.assign(states, 0);
        for (Mask s = 1; s < states; ++s) is_path_set[s] = ends[s] != 0;
        sup = superset_or(is_path_set, n);
        moves.assign(static_cast<std::size_t>(n), {});
        for (Mask s = 1; s < states; ++s) {
            if (!is_path_set[s]) continue;
            bool maximal = true;
            for (int j = 0; j < n && maximal; ++j)
                if (!(s & (Mask{1} << j)) && sup[s | (Mask{1} << j)]) maximal = false;
            if (!maximal) continue;
            Mask bits = s;
            while (bits != 0) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                moves[static_cast<std::size_t>(v)].push_back(s);
            }
        }
    }

    // Minimum number of paths (free to reuse covered vertices) whose union
    // contains the still-uncovered set.
    int solve(Mask uncovered) {
        if (uncovered == 0) return 0;
        if (sup[uncovered]) return 1;
        auto it = memo.find(uncovered);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(uncovered);
        int best = std::numeric_limits<int>::max();
        for (Mask s : moves[static_cast<std::size_t>(v)])
            best = std::min(best, 1 + solve(uncovered & ~s));
        memo.emplace(uncovered, best);
        return best;
    }

    // Grows `s` into a concrete path set containing it (sup[s] must hold).
    Mask path_superset(Mask s) const {
        while (!is_path_set[s]) {
            for (int j = 0; j < n; ++j) {
                Mask bit = Mask{1} << j;
                if (!(s & bit) && sup[s | bit]) {
                    s |= bit;
                    break;
                }
            }
        }
        return s;
    }

    PathSystem witness(Mask uncovered) {
        PathSystem ps{SystemMode::Cover, {}};
        while (uncovered != 0) {
            if (sup[uncovered]) {
                ps.paths.push_back(materialize_path(adj, ends, path_superset(uncovered)));
                break;
            }
            int target = solve(uncovered);
            int v = std::countr_zero(uncovered);
            for (Mask s : moves[static_cast<std::size_t>(v)]) {
                if (1 + solve(uncovered & ~s) == target) {
                    ps.paths.push_back(materialize_path(adj, ends, s));
                    uncovered &= ~s;
                    break;
                }
            }
        }
        return ps;
    }
};

}  // namespace

namespace {

// Witnesses are cheap to check relative to the exponential solve, so every
// solver validates what it hands back.
void require_witness(const Graph& g, const PathSystem& ps, int value, const char* who) {
    std::string why;
    if (!path_system_valid(g, ps, &why) || ps.count() != value)
        throw std::logic_error(std::string(who) + " produced an invalid witness: " + why);
}

void require_witness(const Graph& g, const CycleSystem& cs, int value, const char* who) {
    std::string why;
    if (!cycle_system_valid(g, cs, &why) || cs.count() != value)
        throw std::logic_error(std::string(who) + " produced an invalid witness: " + why);
}

}  // namespace

PathCountResult path_cover_number(const Graph& g) {
    require_order(g, kMaxExactPathOrder, "path_cover_number");
    CoverSolver solver(g);
    Mask full = (Mask{1} << g.order()) - 1;
    int value = solver.solve(full);
    PathSystem system = solver.witness(full);
    require_witness(g, system, value, "path_cover_number");
    return {value, std::move(system)};
}

// ---------------------------------------------------------------------------
// Exact path partition number

PathCountResult path_partition_number(const Graph& g) {
    require_order(g, kMaxExactPathOrder, "path_partition_number");
    int n = g.order();
    auto adj = adjacency_masks(g);
    std::size_t states = std::size_t{1} << n;
    constexpr std::uint8_t kInf = 0xFF;
    // dp[s*n + v]: fewest paths partitioning s with the open path ending at v.
    std::vector<std::uint8_t> dp(states * static_cast<std::size_t>(n), kInf);
    // parent: predecessor vertex, bit 7 set when v opened a fresh path.
    std::vector<std::uint8_t> par(states * static_cast<std::size_t>(n), 0);
    auto at = [n](Mask s, int v) { return std::size_t{s} * static_cast<std::size_t>(n) + static_cast<std::size_t>(v); };

    for (int v = 0; v < n; ++v) dp[at(Mask{1} << v, v)] = 1;
    Mask full = (Mask{1} << n) - 1;
    for (Mask s = 1; s <= full; ++s) {
        Mask bits = s;
        while (bits != 0) {
            int v = std::countr_zero(bits);
            bits &= bits - 1;
            std::uint8_t cur = dp[at(s, v)];
            if (cur == kInf) continue;
            Mask rest = full & ~s;
            Mask extend = rest & adj[static_cast<std::size_t>(v)];
            while (extend != 0) {
                int u = std::countr_zero(extend);
                extend &= extend - 1;
                std::size_t idx = at(s | (Mask{1} << u), u);
                if (cur < dp[idx]) {
                    dp[idx] = cur;
                    par[idx] = static_cast<std::uint8_t>(v);
                }
            }
            if (cur + 1 < kInf) {
                Mask fresh = rest;
                while (fresh != 0) {
                    int u = std::countr_zero(fresh);
                    fresh &= fresh - 1;
                    std::size_t idx = at(s | (Mask{1} << u), u);
                    if (cur + 1 < dp[idx]) {
                        dp[idx] = static_cast<std::uint8_t>(cur + 1);
                        par[idx] = static_cast<std::uint8_t>(v) | 0x80;
                    }
                }
            }
        }
    }

    int best_v = 0;
    for (int v = 1; v < n; ++v)
        if (dp[at(full, v)] < dp[at(full, best_v)]) best_v = v;
    int value = dp[at(full, best_v)];

    PathSystem system{SystemMode::Partition, {}};
    Mask s = full;
    int v = best_v;
    std::vector<int> rev{v};
    while (s != (Mask{1} << v)) {
        std::uint8_t p = par[at(s, v)];
        int u = p & 0x7F;
        bool fresh = (p & 0x80) != 0;
        s &= ~(Mask{1} << v);
        if (fresh) {
            std::reverse(rev.begin(), rev.end());
            system.paths.push_back(std::move(rev));
            rev = {u};
        } else {
            rev.push_back(u);
        }
        v = u;
    }
    std::reverse(rev.begin(), rev.end());
    system.paths.push_back(std::move(rev));
    std::reverse(system.paths.begin(), system.paths.end());
    require_witness(g, system, value, "path_partition_number");
    return {value, std::move(system)};
}

// ---------------------------------------------------------------------------
// Exact cycle cover / partition numbers

namespace {

struct CycleTables {
    int n;
    std::vector<Mask> adj;
    // rooted_ends[S]: ends of paths with vertex set exactly S starting at
    // lowest(S); only extensions above the root are recorded.
    std::vector<Mask> rooted_ends;
    std::vector<std::uint8_t> is_cycle_set;

    explicit CycleTables(const Graph& g) : n(g.order()), adj(adjacency_masks(g)) {
        std::size_t states = std::size_t{1} << n;
        rooted_ends.assign(states, 0);
        is_cycle_set.assign(states, 0);
        for (int v = 0; v < n; ++v) rooted_ends[std::size_t{1} << v] = Mask{1} << v;
        Mask full = (Mask{1} << n) - 1;
        for (Mask s = 1; s <= full; ++s) {
            Mask es = rooted_ends[s];
            if (es == 0) continue;
            int root = std::countr_zero(s);
            Mask above_root = ~((Mask{2} << root) - 1);
            Mask es_scan = es;
            while (es_scan != 0) {
                int v = std::countr_zero(es_scan);
                es_scan &= es_scan - 1;
                Mask cand = adj[static_cast<std::size_t>(v)] & ~s & above_root;
                while (cand != 0) {
                    int u = std::countr_zero(cand);
                    cand &= cand - 1;
                    rooted_ends[s | (Mask{1} << u)] |= Mask{1} << u;
                }
            }
            if (std::popcount(s) >= 3 &&
                (es & adj[static_cast<std::size_t>(root)] & ~(Mask{1} << root)) != 0)
                is_cycle_set[s] = 1;
        }
    }

    std::vector<int> materialize_cycle(Mask s) const {
        int root = std::countr_zero(s);
        Mask closers = rooted_ends[s] & adj[static_cast<std::size_t>(root)] & ~(Mask{1} << root);
        int v = std::countr_zero(closers);
        std::vector<int> seq;
        Mask cur = s;
        while (v != root) {
            seq.push_back(v);
            cur &= ~(Mask{1} << v);
            Mask prev = rooted_ends[cur] & adj[static_cast<std::size_t>(v)];
            v = std::countr_zero(prev);
        }
        seq.push_back(root);
        std::reverse(seq.begin(), seq.end());
        // root is minimal in s; fix the direction so seq[1] < seq.back().
        if (seq[1] > seq.back()) std::reverse(seq.begin() + 1, seq.end());
        return seq;
    }
};

struct CycleCoverSolver {
    CycleTables t;
    std::vector<std::uint8_t> sup;           // some cycle set contains S
    std::vector<std::vector<Mask>> moves;    // maximal cycle sets through v
    std::unordered_map<Mask, int> memo;

    explicit CycleCoverSolver(const Graph& g) : t(g) {
        sup = superset_or(t.is_cycle_set, t.n);
        moves.assign(static_cast<std::size_t>(t.n), {});
        std::size_t states = std::size_t{1} << t.n;
        for (Mask s = 1; s < states; ++s) {
            if (!t.is_cycle_set[s]) continue;
            bool maximal = true;
            for (int j = 0; j < t.n && maximal; ++j)
                if (!(s & (Mask{1} << j)) && sup[s | (Mask{1} << j)]) maximal = false;
            if (!maximal) continue;
            Mask bits = s;
            while (bits != 0) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                moves[static_cast<std::size_t>(v)].push_back(s);
            }
        }
    }

    int solve(Mask uncovered) {
        if (uncovered == 0) return 0;
        if (sup[uncovered]) return 1;
        auto it = memo.find(uncovered);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(uncovered);
        Mask vbit = Mask{1} << v;
        int best = 1 + solve(uncovered & ~vbit);  // K1 (or K2 with a covered partner)
        Mask partners = t.adj[static_cast<std::size_t>(v)] & uncovered;
        while (partners != 0) {
            int u = std::countr_zero(partners);
            partners &= partners - 1;
            best = std::min(best, 1 + solve(uncovered & ~vbit & ~(Mask{1} << u)));
        }
        for (Mask s : moves[static_cast<std::size_t>(v)])
            best = std::min(best, 1 + solve(uncovered & ~s));
        memo.emplace(uncovered, best);
        return best;
    }

    Mask cycle_superset(Mask s) const {
        while (!t.is_cycle_set[s]) {
            for (int j = 0; j < t.n; ++j) {
                Mask bit = Mask{1} << j;
                if (!(s & bit) && sup[s | bit]) {
                    s |= bit;
                    break;
                }
            }
        }
        return s;
    }

    CycleSystem witness(Mask uncovered) {
        CycleSystem cs{SystemMode::Cover, {}};
        while (uncovered != 0) {
            if (sup[uncovered]) {
                Mask s = uncovered;
                // A lone vertex or a covered edge may be cheaper than a cycle,
                // but never smaller in count; prefer a cycle only when one
                // actually contains everything left.
                cs.elements.push_back(
                    CycleElement{CycleElementKind::Cycle, t.materialize_cycle(cycle_superset(s))});
                break;
            }
            int target = solve(uncovered);
            int v = std::countr_zero(uncovered);
            Mask vbit = Mask{1} << v;
            if (1 + solve(uncovered & ~vbit) == target) {
                bool placed = false;
                // Prefer a K2 with an uncovered partner when it is as good.
                Mask partners = t.adj[static_cast<std::size_t>(v)] & uncovered & ~vbit;
                while (partners != 0 && !placed) {
                    int u = std::countr_zero(partners);
                    partners &= partners - 1;
                    if (1 + solve(uncovered & ~vbit & ~(Mask{1} << u)) == target) {
                        cs.elements.push_back(CycleElement{CycleElementKind::K2, {v, u}});
                        uncovered &= ~vbit & ~(Mask{1} << u);
                        placed = true;
                    }
                }
                if (!placed) {
                    cs.elements.push_back(CycleElement{CycleElementKind::K1, {v}});
                    uncovered &= ~vbit;
                }
                continue;
            }
            Mask partners = t.adj[static_cast<std::size_t>(v)] & uncovered;
            bool placed = false;
            while (partners != 0 && !placed) {
                int u = std::countr_zero(partners);
                partners &= partners - 1;
                if (1 + solve(uncovered & ~vbit & ~(Mask{1} << u)) == target) {
                    cs.elements.push_back(CycleElement{CycleElementKind::K2, {v, u}});
                    uncovered &= ~vbit & ~(Mask{1} << u);
                    placed = true;
                }
            }
            if (placed) continue;
            for (Mask s : moves[static_cast<std::size_t>(v)]) {
                if (1 + solve(uncovered & ~s) == target) {
                    cs.elements.push_back(
                        CycleElement{CycleElementKind::Cycle, t.materialize_cycle(s)});
                    uncovered &= ~s;
                    break;
                }
            }
        }
        return cs;
    }
};

struct CyclePartitionSolver {
    CycleTables t;
    std::vector<std::vector<Mask>> rooted_sets;  // cycle sets by lowest vertex
    std::unordered_map<Mask, int> memo;

    explicit CyclePartitionSolver(const Graph& g) : t(g) {
        rooted_sets.assign(static_cast<std::size_t>(t.n), {});
        std::size_t states = std::size_t{1} << t.n;
        for (Mask s = 1; s < states; ++s)
            if (t.is_cycle_set[s]) rooted_sets[static_cast<std::size_t>(std::countr_zero(s))].push_back(s);
    }

    int solve(Mask remaining) {
        if (remaining == 0) return 0;
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(remaining);
        Mask vbit = Mask{1} << v;
        int best = 1 + solve(remaining & ~vbit);  // K1
        Mask partners = t.adj[static_cast<std::size_t>(v)] & remaining;
        while (partners != 0) {
            int u = std::countr_zero(partners);
            partners &= partners - 1;
            best = std::min(best, 1 + solve(remaining & ~vbit & ~(Mask{1} << u)));
        }
        for (Mask s : rooted_sets[static_cast<std::size_t>(v)])
            if ((s & ~remaining) == 0) best = std::min(best, 1 + solve(remaining & ~s));
        memo.emplace(remaining, best);
        return best;
    }

    CycleSystem witness(Mask remaining) {
        CycleSystem cs{SystemMode::Partition, {}};
        while (remaining != 0) {
            int target = solve(remaining);
            int v = std::countr_zero(remaining);
            Mask vbit = Mask{1} << v;
            bool placed = false;
            for (Mask s : rooted_sets[static_cast<std::size_t>(v)]) {
                if ((s & ~remaining) == 0 && 1 + solve(remaining & ~s) == target) {
                    cs.elements.push_back(
                        CycleElement{CycleElementKind::Cycle, t.materialize_cycle(s)});
                    remaining &= ~s;
                    placed = true;
                    break;
                }
            }
            if (placed) continue;
            Mask partners = t.adj[static_cast<std::size_t>(v)] & remaining;
            while (partners != 0 && !placed) {
                int u = std::countr_zero(partners);
                partners &= partners - 1;
                if (1 + solve(remaining & ~vbit & ~(Mask{1} << u)) == target) {
                    cs.elements.push_back(CycleElement{CycleElementKind::K2, {v, u}});
                    remaining &= ~vbit & ~(Mask{1} << u);
                    placed = true;
                }
            }
            if (placed) continue;
            cs.elements.push_back(CycleElement{CycleElementKind::K1, {v}});
            remaining &= ~vbit;
        }
        return cs;
    }
};

}  // namespace

CycleCountResult cycle_cover_number(const Graph& g) {
    require_order(g, kMaxExactCycleOrder, "cycle_cover_number");
    CycleCoverSolver solver(g);
    Mask full = (Mask{1} << g.order()) - 1;
    int value = solver.solve(full);
    CycleSystem system = solver.witness(full);
    require_witness(g, system, value, "cycle_cover_number");
    return {value, std::move(system)};
}

CycleCountResult cycle_partition_number(const Graph& g) {
    require_order(g, kMaxExactCycleOrder, "cycle_partition_number");
    CyclePartitionSolver solver(g);
    Mask full = (Mask{1} << g.order()) - 1;
    int value = solver.solve(full);
    CycleSystem system = solver.witness(full);
    require_witness(g, system, value, "cycle_partition_number");
    return {value, std::move(system)};
}

// ---------------------------------------------------------------------------
// Greedy procedures

PathSystem greedy_path_partition(const Graph& g) {
    if (g.order() < 1) throw InputError("greedy_path_partition requires order >= 1");
    std::vector<std::vector<int>> paths;
    paths.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) paths.push_back({v});

    for (;;) {
        bool merged = false;
        for (std::size_t i = 0; i < paths.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < paths.size() && !merged; ++j) {
                int fi = paths[i].front(), bi = paths[i].back();
                int fj = paths[j].front(), bj = paths[j].back();
                std::vector<int> joined;
                if (g.adjacent(bi, fj)) {
                    joined = paths[i];
                    joined.insert(joined.end(), paths[j].begin(), paths[j].end());
                } else if (g.adjacent(bi, bj)) {
                    joined = paths[i];
                    joined.insert(joined.end(), paths[j].rbegin(), paths[j].rend());
                } else if (g.adjacent(fi, fj)) {
                    joined.assign(paths[i].rbegin(), paths[i].rend());
                    joined.insert(joined.end(), paths[j].begin(), paths[j].end());
                } else if (g.adjacent(fi, bj)) {
                    joined = paths[j];
                    joined.insert(joined.end(), paths[i].begin(), paths[i].end());
                } else {
                    continue;
                }
                paths[i] = std::move(joined);
                paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(j));
                merged = true;
            }
        }
        if (!merged) break;
    }
    PathSystem result{SystemMode::Partition, std::move(paths)};
    require_witness(g, result, result.count(), "greedy_path_partition");
    return result;
}

namespace {

struct GreedyCycleElement {
    CycleElementKind kind;
    std::vector<int> verts;
    int ax, ay;  // anchor pair; an edge of the element, ax = ay for K1
};

// The cycle's vertices as a path from `from` to `to`, where from/to are
// adjacent on the cycle; traverses the long way around.
std::vector<int> cycle_as_path(const std::vector<int>& cyc, int from, int to) {
    int len = static_cast<int>(cyc.size());
    int pos = 0;
    while (cyc[static_cast<std::size_t>(pos)] != from) ++pos;
    int fwd = (pos + 1) % len;
    int step = cyc[static_cast<std::size_t>(fwd)] == to ? -1 : 1;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int k = 0, p = pos; k < len; ++k, p = (p + step + len) % len)
        out.push_back(cyc[static_cast<std::size_t>(p)]);
    return out;
}

std::vector<int> canonical_cycle(std::vector<int> cyc) {
    auto min_it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), min_it, cyc.end());
    if (cyc[1] > cyc.back()) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

std::pair<int, int> least_cycle_edge(const std::vector<int>& cyc) {
    std::pair<int, int> best{-1, -1};
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
        if (u > v) std::swap(u, v);
        if (best.first < 0 || std::pair{u, v} < best) best = {u, v};
    }
    return best;
}

GreedyCycleElement merge_elements(const GreedyCycleElement& a, const GreedyCycleElement& b) {
    // Both K1: the two cross conditions coincide, the result is an edge.
    if (a.kind == CycleElementKind::K1 && b.kind == CycleElementKind::K1) {
        int u = std::min(a.ax, b.ax), w = std::max(a.ax, b.ax);
        return {CycleElementKind::K2, {u, w}, u, w};
    }
    std::vector<int> cyc;
    if (a.kind == CycleElementKind::K1) {
        // Insert the singleton between the other element's anchor edge.
        if (b.kind == CycleElementKind::K2) {
            cyc = {a.ax, b.ax, b.ay};
        } else {
            cyc = cycle_as_path(b.verts, b.ay, b.ax);  // b.ay ... b.ax
            cyc.push_back(a.ax);                       // close ax - a - ay
        }
    } else if (b.kind == CycleElementKind::K1) {
        return merge_elements(b, a);
    } else {
        // Break both anchor edges, join with the two cross edges
        // a.ax-b.ax and a.ay-b.ay.
        std::vector<int> left = a.kind == CycleElementKind::K2
                                    ? std::vector<int>{a.ay, a.ax}
                                    : cycle_as_path(a.verts, a.ay, a.ax);
        std::vector<int> right = b.kind == CycleElementKind::K2
                                     ? std::vector<int>{b.ax, b.ay}
                                     : cycle_as_path(b.verts, b.ax, b.ay);
        cyc = std::move(left);
        cyc.insert(cyc.end(), right.begin(), right.end());
    }
    cyc = canonical_cycle(std::move(cyc));
    auto [x, y] = least_cycle_edge(cyc);
    return {CycleElementKind::Cycle, std::move(cyc), x, y};
}

}  // namespace

CycleSystem greedy_cycle_partition(const Graph& g) {
    if (g.order() < 1) throw InputError("greedy_cycle_partition requires order >= 1");
    std::vector<GreedyCycleElement> els;
    els.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) els.push_back({CycleElementKind::K1, {v}, v, v});

    for (;;) {
        bool merged = false;
        for (std::size_t i = 0; i < els.size() && !merged; ++i) {
            for (std::size_t j = i + 1; j < els.size() && !merged; ++j) {
                GreedyCycleElement rhs = els[j];
                bool direct = g.adjacent(els[i].ax, rhs.ax) && g.adjacent(els[i].ay, rhs.ay);
                if (!direct) {
                    // Swapping one anchor pair is just a relabeling of that
                    // element's x/y roles; the Ramsey bound is unaffected.
                    std::swap(rhs.ax, rhs.ay);
                    if (!(g.adjacent(els[i].ax, rhs.ax) && g.adjacent(els[i].ay, rhs.ay)))
                        continue;
                }
                els[i] = merge_elements(els[i], rhs);
                els.erase(els.begin() + static_cast<std::ptrdiff_t>(j));
                merged = true;
            }
        }
        if (!merged) break;
    }

    CycleSystem cs{SystemMode::Partition, {}};
    for (auto& el : els) cs.elements.push_back(CycleElement{el.kind, std::move(el.verts)});
    require_witness(g, cs, cs.count(), "greedy_cycle_partition");
    return cs;
}

}  // namespace pathcover
