#include "pathcover/constructive.hpp"

#include <algorithm>
#include <string>

#include "pathcover/families.hpp"
#include "pathcover/graph6.hpp"
#include "pathcover/sweep.hpp"

namespace pathcover {

// ---------------------------------------------------------------------------
// Ramsey bounds and the alpha recursion

RamseyBound ramsey_upper(const BigInt& n1, const BigInt& n2) {
    if (n1 < 1 || n2 < 1) throw InputError("ramsey_upper requires positive arguments");
    BigInt k = std::min(n1, n2) - 1;
    if (k > 10000000) throw InputError("ramsey_upper argument too large for exact evaluation");
    // binomial(n1 + n2 - 2, min - 1), exact stepwise division
    BigInt top = n1 + n2 - 2;
    BigInt value = 1;
    for (BigInt i = 1; i <= k; ++i) {
        value *= top - k + i;
        value /= i;
    }
    bool exact = n1 <= 2 || n2 <= 2 || (n1 == 3 && n2 == 3);
    return RamseyBound{n1, n2, value, exact};
}

bool verify_ramsey_33() { return sweep::ramsey33_scan(true).holds(); }

int layer_constant(int n) {
    if (n < 2) throw InputError("layer_constant requires n >= 2");
    int base = (n * n - n - 2 + 1) / 2;  // ceil((n^2 - n - 2) / 2)
    return std::max(base, n);
}

std::vector<BigInt> alpha_sequence(int n) {
    int n0 = layer_constant(n);
    std::vector<BigInt> alphas;
    alphas.reserve(static_cast<std::size_t>(2 * n0));
    alphas.emplace_back(2 * ((n0 + 1) / 2));  // 2 ceil(n0 / 2)
    for (int i = 1; i < 2 * n0; ++i)
        alphas.push_back(BigInt(n - 1) * ramsey_upper(n, alphas.back() + 1).value - 1);
    return alphas;
}

// ---------------------------------------------------------------------------
// Longest induced path

namespace {

struct InducedPathSearch {
    const Graph& g;
    std::vector<int> path;
    std::vector<int> best;       // canonical reading of the best path
    VertexSet banned;            // on the path, or adjacent to a non-last path vertex

    explicit InducedPathSearch(const Graph& g_) : g(g_), banned(g_.order()) {}

    void consider() {
        std::vector<int> canon = path;
        std::vector<int> rev(path.rbegin(), path.rend());
        if (rev < canon) canon = rev;
        if (canon.size() > best.size() || (canon.size() == best.size() && canon < best))
            best = std::move(canon);
    }

    void extend() {
        consider();
        int last = path.back();
        VertexSet candidates = g.neighbors(last) - banned;
        candidates.for_each([&](int u) {
            VertexSet saved = banned;
            banned |= g.neighbors(last);  // last becomes an interior vertex
            banned.add(u);
            path.push_back(u);
            extend();
            path.pop_back();
            banned = saved;
        });
    }
};

}  // namespace

std::vector<int> longest_induced_path(const Graph& g) {
    if (g.order() == 0) throw InputError("longest_induced_path requires order >= 1");
    InducedPathSearch search(g);
    for (int start = 0; start < g.order(); ++start) {
        search.path = {start};
        search.banned = VertexSet(g.order());
        search.banned.add(start);
        search.extend();
    }
    return search.best;
}

// ---------------------------------------------------------------------------
// Layer decomposition

LayerDecomposition decompose(const Graph& g, int n) {
    if (n < 2) throw InputError("decompose requires n >= 2");
    if (!is_connected(g)) throw InputError("decompose requires a connected graph");

    LayerDecomposition d;
    d.spine = longest_induced_path(g);
    d.n0 = layer_constant(n);
    int m = static_cast<int>(d.spine.size());
    auto u = [&](int i) { return d.spine[static_cast<std::size_t>(i - 1)]; };  // 1-based u_i

    VertexSet spine_set(g.order());
    for (int v : d.spine) spine_set.add(v);

    VertexSet x0(g.order());
    for (int i = 1; i <= m; ++i)
        if (i <= d.n0 || i >= m - d.n0 + 1) x0.add(u(i));

    VertexSet middle = spine_set - x0;
    VertexSet n_of_x0 = neighborhood(g, x0);
    d.y = neighborhood(g, middle);
    d.y -= x0;
    d.y -= n_of_x0;

    d.x_layers.push_back(x0);
    // X_1 = N(X_0) \ V(P); Y is disjoint from N(X_0) by construction, and
    // X_i = N(X_{i-1}) \ (V(P) u Y u earlier layers) for i >= 2.
    VertexSet used = spine_set | d.y;
    for (int i = 1; i <= 2 * d.n0; ++i) {
        VertexSet xi = neighborhood(g, d.x_layers.back());
        xi -= used;
        used |= xi;
        if (i < 2 * d.n0)
            d.x_layers.push_back(xi);
        else
            d.x_overflow = xi;
    }
    d.layers_terminate = d.x_overflow.empty();

    // Y slots by leftmost spine neighbor within the middle window.
    for (int i = d.n0 + 1; i <= m - d.n0; ++i) d.y_slots.emplace(i, VertexSet(g.order()));
    d.y.for_each([&](int y) {
        for (int i = d.n0 + 1; i <= m - d.n0; ++i) {
            if (g.adjacent(y, u(i))) {
                d.y_slots.at(i).add(y);
                return;
            }
        }
        // Unreachable: y in N(middle) means some middle spine vertex is a
        // neighbor, and every spine neighbor of y lies in the window.
    });
    for (int i = d.n0 + 1; i <= m - d.n0; ++i) {
        VertexSet y1(g.order()), y2(g.order());
        d.y_slots.at(i).for_each([&](int y) {
            if (i + 1 <= m && g.adjacent(y, u(i + 1)))
                y1.add(y);
            else
                y2.add(y);
        });
        d.y_split.emplace(i, std::make_pair(std::move(y1), std::move(y2)));
    }
    d.last_slot_empty = m - d.n0 <= d.n0 || d.y_slots.at(m - d.n0).empty();

    VertexSet reached = spine_set | neighborhood(g, spine_set);
    for (int i = 2; i < 2 * d.n0; ++i) reached |= d.x_layers[static_cast<std::size_t>(i)];
    d.coverage = reached == VertexSet::full(g.order());
    return d;
}

// ---------------------------------------------------------------------------
// Spine cover / spine Hamiltonian path

namespace {

void require_valid_subgraph_path(const Graph& g, const std::vector<int>& seq,
                                 const char* predicate) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[i + 1]))
            throw HypothesisViolation(predicate, to_graph6(g),
                                      "constructed sequence is not a path: " +
                                          std::to_string(seq[i]) + " and " +
                                          std::to_string(seq[i + 1]) + " are not adjacent");
    VertexSet seen(g.order());
    for (int v : seq) {
        if (seen.contains(v))
            throw HypothesisViolation(predicate, to_graph6(g),
                                      "constructed sequence repeats vertex " + std::to_string(v));
        seen.add(v);
    }
}

// Relabels a partition of an induced subgraph back to host labels.
std::vector<std::vector<int>> lift_partition(const PathSystem& parts,
                                             const std::vector<int>& labels) {
    std::vector<std::vector<int>> lifted;
    lifted.reserve(parts.paths.size());
    for (const auto& p : parts.paths) {
        std::vector<int> q;
        q.reserve(p.size());
        for (int v : p) q.push_back(labels[static_cast<std::size_t>(v)]);
        lifted.push_back(std::move(q));
    }
    return lifted;
}

}  // namespace

PathSystem spine_cover(const Graph& g, const LayerDecomposition& d, int n) {
    int m = static_cast<int>(d.spine.size());
    auto u = [&](int i) { return d.spine[static_cast<std::size_t>(i - 1)]; };

    if (d.y.empty()) return PathSystem{SystemMode::Cover, {d.spine}};

    // A nonempty Y forces n >= 3 (each Y_{i,j} would otherwise carry an
    // independent set beating alpha <= n - 2 immediately).
    if (n < 3)
        throw HypothesisViolation("spine-cover-bound", to_graph6(g),
                                  "Y is nonempty although n = " + std::to_string(n));
    if (!d.last_slot_empty)
        throw HypothesisViolation("last-slot-empty", to_graph6(g),
                                  "Y_{m-n0} is nonempty; the connector families cannot reach it");

    // Greedy partitions of each Y_{i,j}, each certified to have at most
    // n - 2 parts via alpha(G[Y_{i,j}]) <= n - 2.
    std::map<int, std::array<std::vector<std::vector<int>>, 2>> slot_parts;
    for (const auto& [i, split] : d.y_split) {
        if (i > m - d.n0 - 1) continue;
        std::array<std::vector<std::vector<int>>, 2> parts;
        for (int j = 1; j <= 2; ++j) {
            const VertexSet& slot = j == 1 ? split.first : split.second;
            if (slot.empty()) continue;
            Graph sub = induced_subgraph(g, slot);
            int alpha = independence_number(sub);
            if (alpha > n - 2)
                throw HypothesisViolation(
                    "slot-alpha-bound", to_graph6(g),
                    "alpha(G[Y_{" + std::to_string(i) + "," + std::to_string(j) + "}]) = " +
                        std::to_string(alpha) + " exceeds n - 2 = " + std::to_string(n - 2));
            parts[static_cast<std::size_t>(j - 1)] =
                lift_partition(greedy_path_partition(sub), slot.to_vector());
        }
        slot_parts.emplace(i, std::move(parts));
    }

    // Connector from u_i to u_{i+j}: the t-th part of Y_{i,j} when it
    // exists, the spine segment otherwise.
    auto connector = [&](int t, int i, int j) {
        std::vector<int> seq{u(i)};
        auto it = slot_parts.find(i);
        const std::vector<std::vector<int>>* parts =
            it == slot_parts.end() ? nullptr : &it->second[static_cast<std::size_t>(j - 1)];
        if (parts != nullptr && t <= static_cast<int>(parts->size())) {
            const auto& q = (*parts)[static_cast<std::size_t>(t - 1)];
            seq.insert(seq.end(), q.begin(), q.end());
        } else {
            for (int k = i + 1; k < i + j; ++k) seq.push_back(u(k));
        }
        seq.push_back(u(i + j));
        return seq;
    };

    // Walks the spine up to the first connector site, chains connectors at
    // i, i+2 (j=2) or i, i+1 (j=1), ... while i <= last, then finishes along
    // the spine.
    auto build_family = [&](int t, int first, int last, int j, const char* predicate) {
        std::vector<int> seq;
        for (int k = 1; k < first; ++k) seq.push_back(u(k));
        int pos = first;  // next spine index to emit
        for (int i = first; i <= last; i += j == 1 ? 1 : 2) {
            std::vector<int> c = connector(t, i, j);
            seq.insert(seq.end(), c.begin(), c.end() - 1);  // connector ends at u_{i+j}
            pos = i + j;
        }
        for (int k = pos; k <= m; ++k) seq.push_back(u(k));
        require_valid_subgraph_path(g, seq, predicate);
        return seq;
    };

    int xi2 = m % 2 == 1 ? m - d.n0 : m - d.n0 - 1;
    int xi3 = m % 2 == 1 ? m - d.n0 - 1 : m - d.n0;

    PathSystem cover{SystemMode::Cover, {}};
    for (int t = 1; t <= n - 2; ++t) {
        cover.paths.push_back(build_family(t, d.n0 + 1, m - d.n0 - 1, 1, "spine-cover-connectors R1"));
        cover.paths.push_back(build_family(t, d.n0 + 1, xi2 - 2, 2, "spine-cover-connectors R2"));
        cover.paths.push_back(build_family(t, d.n0 + 2, xi3 - 2, 2, "spine-cover-connectors R3"));
    }

    VertexSet covered(g.order());
    for (const auto& p : cover.paths)
        for (int v : p) covered.add(v);
    VertexSet target(g.order());
    for (int v : d.spine) target.add(v);
    target |= d.y;
    if (covered != target)
        throw HypothesisViolation("spine-cover-coverage", to_graph6(g),
                                  "connector families miss part of V(P) u Y");
    return cover;
}

std::vector<int> spine_hamiltonian(const Graph& g, const LayerDecomposition& d, int n) {
    int m = static_cast<int>(d.spine.size());
    auto u = [&](int i) { return d.spine[static_cast<std::size_t>(i - 1)]; };
    if (d.y.empty()) return d.spine;

    if (!d.last_slot_empty)
        throw HypothesisViolation("last-slot-empty", to_graph6(g),
                                  "Y_{m-n0} is nonempty; no slot clique can absorb it");

    std::vector<int> seq;
    for (int k = 1; k <= d.n0; ++k) seq.push_back(u(k));
    for (int i = d.n0 + 1; i <= m - d.n0 - 1; ++i) {
        seq.push_back(u(i));
        const VertexSet& slot = d.y_slots.at(i);
        // Claim: {u_i, u_{i+1}} u Y_i is a clique.
        std::vector<int> members = slot.to_vector();
        members.push_back(u(i));
        members.push_back(u(i + 1));
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (!g.adjacent(members[a], members[b]))
                    throw HypothesisViolation(
                        "slot-clique", to_graph6(g),
                        "{u_" + std::to_string(i) + ", u_" + std::to_string(i + 1) +
                            "} u Y_" + std::to_string(i) + " is not a clique: " +
                            std::to_string(members[a]) + " !~ " + std::to_string(members[b]));
        slot.for_each([&](int y) { seq.push_back(y); });
    }
    for (int k = std::max(m - d.n0, d.n0 + 1); k <= m; ++k) seq.push_back(u(k));

    require_valid_subgraph_path(g, seq, "spine-walk");
    VertexSet covered(g.order());
    for (int v : seq) covered.add(v);
    VertexSet target(g.order());
    for (int v : d.spine) target.add(v);
    target |= d.y;
    if (covered != target)
        throw HypothesisViolation("spine-walk-coverage", to_graph6(g),
                                  "spine walk misses part of V(P) u Y");
    return seq;
}

// ---------------------------------------------------------------------------
// Full pipeline

std::vector<Graph> forbidden_family(int n, bool include_f34) {
    return target_family(include_f34 ? CharacterizationMode::A2 : CharacterizationMode::A1, n);
}

namespace {

const char* kFamilyNames[] = {"K_{1,n}", "K*_n", "F1(n,n)", "F2(n,n)", "F3(n,n)", "F4(n,n)"};

void check_free_or_throw(const Graph& g, int n, bool include_f34) {
    std::vector<Graph> family = forbidden_family(n, include_f34);
    for (std::size_t k = 0; k < family.size(); ++k) {
        if (auto hit = find_induced(g, family[k])) {
            std::string detail = "input contains an induced copy of ";
            detail += kFamilyNames[k];
            detail += " (n = " + std::to_string(n) + ") at vertices";
            for (int v : hit->mapping) detail += " " + std::to_string(v);
            throw HypothesisViolation("freeness", to_graph6(g), detail);
        }
    }
}

void check_predicates_or_throw(const Graph& g, const LayerDecomposition& d) {
    if (!d.layers_terminate)
        throw HypothesisViolation("layer-termination", to_graph6(g), "X_{2 n0} is nonempty");
    if (!d.last_slot_empty)
        throw HypothesisViolation("last-slot-empty", to_graph6(g), "Y_{m-n0} is nonempty");
    if (!d.coverage)
        throw HypothesisViolation("layer-coverage", to_graph6(g),
                                  "the layers do not exhaust the vertex set");
}

BoundedCoverResult assemble_pipeline(const Graph& g, int n, bool partition_mode) {
    LayerDecomposition d = decompose(g, n);
    check_predicates_or_throw(g, d);

    CoverCertificate cert;
    cert.n = n;
    cert.n0 = d.n0;
    cert.alpha_bounds = alpha_sequence(n);

    PathSystem system{partition_mode ? SystemMode::Partition : SystemMode::Cover, {}};
    if (partition_mode) {
        system.paths.push_back(spine_hamiltonian(g, d, n));
        cert.spine_bound = 1;
    } else {
        PathSystem spine = spine_cover(g, d, n);
        system.paths = std::move(spine.paths);
        cert.spine_bound = std::max(3 * n - 6, 1);
    }
    cert.spine_part_count = system.count();
    if (BigInt(cert.spine_part_count) > cert.spine_bound)
        throw HypothesisViolation("spine-cover-bound", to_graph6(g),
                                  "spine cover exceeded its certified bound");

    cert.total_bound = cert.spine_bound;
    for (int i = 1; i < 2 * d.n0; ++i) {
        const VertexSet& layer = d.x_layers[static_cast<std::size_t>(i)];
        int parts = 0;
        if (!layer.empty()) {
            Graph sub = induced_subgraph(g, layer);
            auto lifted = lift_partition(greedy_path_partition(sub), layer.to_vector());
            parts = static_cast<int>(lifted.size());
            for (auto& p : lifted) system.paths.push_back(std::move(p));
        }
        cert.layer_part_counts.push_back(parts);
        if (BigInt(parts) > cert.alpha_bounds[static_cast<std::size_t>(i)])
            throw HypothesisViolation("layer-alpha-bound", to_graph6(g),
                                      "greedy partition of X_" + std::to_string(i) +
                                          " exceeded alpha_" + std::to_string(i));
        cert.total_bound += cert.alpha_bounds[static_cast<std::size_t>(i)];
    }

    std::string why;
    if (!path_system_valid(g, system, &why))
        throw HypothesisViolation(partition_mode ? "partition-assembly" : "cover-assembly", to_graph6(g),
                                  "assembled system invalid: " + why);
    if (BigInt(system.count()) > cert.total_bound)
        throw HypothesisViolation("certificate-bound", to_graph6(g), "certificate bound exceeded");
    return {std::move(system), std::move(cert)};
}

}  // namespace

BoundedCoverResult bounded_path_cover(const Graph& g, int n, bool check_freeness) {
    if (n < 2) throw InputError("bounded_path_cover requires n >= 2");
    if (!is_connected(g)) throw InputError("bounded_path_cover requires a connected graph");
    if (check_freeness) check_free_or_throw(g, n, false);
    return assemble_pipeline(g, n, false);
}

BoundedCoverResult bounded_path_partition(const Graph& g, int n, bool check_freeness) {
    if (n < 2) throw InputError("bounded_path_partition requires n >= 2");
    if (!is_connected(g)) throw InputError("bounded_path_partition requires a connected graph");
    if (check_freeness) check_free_or_throw(g, n, true);
    return assemble_pipeline(g, n, true);
}

}  // namespace pathcover
