#include <doctest.h>

#include <algorithm>

#include "pathcover/constructive.hpp"
#include "pathcover/families.hpp"
#include "pathcover/graph.hpp"
#include "pathcover/rng.hpp"
#include "pathcover/solvers.hpp"

using namespace pathcover;

namespace {

Graph fam(FamilyKind k, int a, int b = 0) { return generate({k, a, b}); }

// P_9 on 0..8 plus extra vertices with prescribed attachments.
Graph path_plus(int order, std::initializer_list<std::pair<int, int>> extra) {
    Graph g(order);
    for (int v = 0; v + 1 < 9; ++v) g.add_edge(v, v + 1);
    for (auto [u, v] : extra) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("ramsey upper bounds") {
    CHECK(ramsey_upper(2, 5).value == 5);
    CHECK(ramsey_upper(2, 5).exact);
    CHECK(ramsey_upper(3, 3).value == 6);
    CHECK(ramsey_upper(3, 3).exact);
    CHECK(ramsey_upper(4, 4).value == 20);
    CHECK(!ramsey_upper(4, 4).exact);
    CHECK(ramsey_upper(1, 7).value == 1);
    CHECK(ramsey_upper(3, 5).value == 15);
    CHECK_THROWS_AS(ramsey_upper(0, 3), InputError);

    // dominates both arguments on the meaningful range
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= 8; ++b)
            CHECK(ramsey_upper(a, b).value >= std::max(a, b));

    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= 8; ++b)
            CHECK(ramsey_upper(a, b).value ==
                  ramsey_upper(a - 1, b).value + ramsey_upper(a, b - 1).value);
}

TEST_CASE("verify_ramsey_33 brute force") { CHECK(verify_ramsey_33()); }

TEST_CASE("alpha sequence") {
    CHECK(layer_constant(2) == 2);
    CHECK(layer_constant(3) == 3);
    CHECK(layer_constant(4) == 5);
    CHECK(layer_constant(6) == 14);
    CHECK_THROWS_AS(layer_constant(1), InputError);

    auto a3 = alpha_sequence(3);
    REQUIRE(a3.size() == 6);  // alpha_0 .. alpha_{2 n0 - 1} with n0 = 3
    CHECK(a3[0] == 4);
    CHECK(a3[1] == 29);   // 2 R'(3,5) - 1 = 2*15 - 1
    CHECK(a3[2] == 929);  // 2 R'(3,30) - 1 = 2*binomial(31,2) - 1

    auto a2 = alpha_sequence(2);
    REQUIRE(a2.size() == 4);
    CHECK(a2 == std::vector<BigInt>{2, 2, 2, 2});

    for (int n : {2, 3, 4}) {
        auto seq = alpha_sequence(n);
        for (std::size_t i = 1; i < seq.size(); ++i) {
            CHECK(seq[i] == BigInt(n - 1) * ramsey_upper(n, seq[i - 1] + 1).value - 1);
            if (i >= 2) CHECK(seq[i] >= seq[i - 1]);
        }
    }
}

TEST_CASE("longest induced path") {
    CHECK(longest_induced_path(fam(FamilyKind::Path, 7)) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
    CHECK(longest_induced_path(fam(FamilyKind::Complete, 5)) == std::vector<int>{0, 1});
    CHECK(longest_induced_path(fam(FamilyKind::Cycle, 6)) == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(longest_induced_path(fam(FamilyKind::Star, 3)) == std::vector<int>{1, 0, 2});
    CHECK(longest_induced_path(Graph(1)) == std::vector<int>{0});
    CHECK_THROWS_AS(longest_induced_path(Graph(0)), InputError);
}

TEST_CASE("decompose on a bare path") {
    Graph p9 = fam(FamilyKind::Path, 9);
    LayerDecomposition d = decompose(p9, 3);
    CHECK(d.spine == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(d.n0 == 3);
    CHECK(d.x_layers[0] == VertexSet(9, {0, 1, 2, 6, 7, 8}));
    CHECK(d.y.empty());
    for (std::size_t i = 1; i < d.x_layers.size(); ++i) CHECK(d.x_layers[i].empty());
    CHECK(d.layers_terminate);
    CHECK(d.coverage);
    CHECK(d.last_slot_empty);
    CHECK(d.y_slots.size() == 3);  // window 4..6

    // short spine: everything is X_0
    LayerDecomposition d3 = decompose(fam(FamilyKind::Path, 3), 3);
    CHECK(d3.x_layers[0] == VertexSet::full(3));
    CHECK(d3.y.empty());
    CHECK(d3.y_slots.empty());
    CHECK(d3.coverage);

    CHECK_THROWS_AS(decompose(Graph(2), 3), InputError);  // disconnected
    CHECK_THROWS_AS(decompose(p9, 1), InputError);
}

TEST_CASE("decompose places a middle attachment in Y") {
    // P_9 plus vertex 9 adjacent to u_5 and u_6 (vertices 4 and 5).
    Graph g = path_plus(10, {{9, 4}, {9, 5}});
    LayerDecomposition d = decompose(g, 3);
    CHECK(d.spine == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(d.y == VertexSet(10, {9}));
    CHECK(d.y_slots.at(5) == VertexSet(10, {9}));
    CHECK(d.y_split.at(5).first == VertexSet(10, {9}));  // adjacent to u_6
    CHECK(d.y_split.at(5).second.empty());
    CHECK(d.layers_terminate);
    CHECK(d.coverage);
    CHECK(d.last_slot_empty);
}

TEST_CASE("decompose layers a clique around its two-vertex spine") {
    // K_10: the longest induced path is a single edge, X_0 = V(P), and the
    // remaining eight vertices all land in X_1.
    Graph k10 = fam(FamilyKind::Complete, 10);
    LayerDecomposition d = decompose(k10, 3);
    CHECK(d.spine == std::vector<int>{0, 1});
    CHECK(d.x_layers[0] == VertexSet(10, {0, 1}));
    CHECK(d.x_layers[1].count() == 8);
    CHECK(d.x_layers[2].empty());
    CHECK(d.y.empty());
    CHECK(d.coverage);
    CHECK(d.layers_terminate);

    auto [system, cert] = bounded_path_cover(k10, 3);
    CHECK(system.count() == 2);  // spine edge + one greedy path over X_1
    CHECK(cert.layer_part_counts[0] == 1);
    std::string why;
    CHECK(path_system_valid(k10, system, &why));
}

TEST_CASE("spine cover") {
    Graph p9 = fam(FamilyKind::Path, 9);
    LayerDecomposition d = decompose(p9, 3);
    PathSystem trivial = spine_cover(p9, d, 3);
    CHECK(trivial.count() == 1);
    CHECK(trivial.paths[0] == d.spine);

    // Y_{5,1} case: connectors thread through the attachment.
    Graph g = path_plus(10, {{9, 4}, {9, 5}});
    LayerDecomposition dg = decompose(g, 3);
    PathSystem cover = spine_cover(g, dg, 3);
    CHECK(cover.count() <= 3);
    VertexSet covered(10);
    for (const auto& p : cover.paths) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(g.adjacent(p[i], p[i + 1]));
        for (int v : p) covered.add(v);
    }
    CHECK(covered == VertexSet::full(10));
    CHECK(path_cover_number(g).value <= 3);

    // Y_{4,2} case: vertex adjacent to u_4 and u_6 but not u_5 rides the
    // two-step connectors of R2/R3.
    Graph g2 = path_plus(10, {{9, 3}, {9, 5}});
    LayerDecomposition dg2 = decompose(g2, 3);
    CHECK(dg2.y_split.at(4).second == VertexSet(10, {9}));
    PathSystem cover2 = spine_cover(g2, dg2, 3);
    CHECK(cover2.count() <= 3);
    VertexSet covered2(10);
    for (const auto& p : cover2.paths)
        for (int v : p) covered2.add(v);
    CHECK(covered2 == VertexSet::full(10));

    // even spine order flips the xi_2 / xi_3 cutoffs
    Graph g3(11);
    for (int v = 0; v + 1 < 10; ++v) g3.add_edge(v, v + 1);
    g3.add_edge(10, 3);
    g3.add_edge(10, 5);
    LayerDecomposition dg3 = decompose(g3, 3);
    REQUIRE(dg3.spine.size() == 10);
    PathSystem cover3 = spine_cover(g3, dg3, 3);
    VertexSet covered3(11);
    for (const auto& p : cover3.paths)
        for (int v : p) covered3.add(v);
    CHECK(covered3 == VertexSet::full(11));

    // An independent pair inside one Y_{i,j} slot beats the slot alpha
    // bound n - 2 at n = 3 and must be reported.
    Graph bad = path_plus(11, {{9, 4}, {9, 5}, {10, 4}, {10, 5}});
    LayerDecomposition dbad = decompose(bad, 3);
    CHECK_THROWS_AS(spine_cover(bad, dbad, 3), HypothesisViolation);
}

TEST_CASE("spine hamiltonian path") {
    Graph p9 = fam(FamilyKind::Path, 9);
    LayerDecomposition d = decompose(p9, 3);
    CHECK(spine_hamiltonian(p9, d, 3) == d.spine);

    Graph g = path_plus(10, {{9, 4}, {9, 5}});
    LayerDecomposition dg = decompose(g, 3);
    CHECK(spine_hamiltonian(g, dg, 3) == std::vector<int>{0, 1, 2, 3, 4, 9, 5, 6, 7, 8});

    // two attachments in one slot, pairwise adjacent: visited in ascending
    // label order inside the slot clique
    Graph g2 = path_plus(11, {{9, 4}, {9, 5}, {10, 4}, {10, 5}, {9, 10}});
    LayerDecomposition dg2 = decompose(g2, 3);
    CHECK(spine_hamiltonian(g2, dg2, 3) == std::vector<int>{0, 1, 2, 3, 4, 9, 10, 5, 6, 7, 8});

    // dropping the 9-10 edge breaks the slot clique
    Graph bad = path_plus(11, {{9, 4}, {9, 5}, {10, 4}, {10, 5}});
    LayerDecomposition dbad = decompose(bad, 3);
    CHECK_THROWS_AS(spine_hamiltonian(bad, dbad, 3), HypothesisViolation);
}

TEST_CASE("bounded path cover pipeline") {
    auto [system, cert] = bounded_path_cover(fam(FamilyKind::Path, 9), 3);
    CHECK(system.count() == 1);
    CHECK(cert.spine_bound == 3);
    CHECK(cert.spine_part_count == 1);
    BigInt expected = cert.spine_bound;
    for (std::size_t i = 1; i < cert.alpha_bounds.size(); ++i) expected += cert.alpha_bounds[i];
    CHECK(cert.total_bound == expected);
    CHECK(cert.alpha_bounds[1] == 29);

    // K*_2 is a path in disguise
    auto [kstar_sys, kstar_cert] = bounded_path_cover(fam(FamilyKind::KStar, 2), 3);
    CHECK(kstar_sys.count() == 1);

    // the attachment graph assembles spine cover + empty layers
    Graph g = path_plus(10, {{9, 4}, {9, 5}});
    auto [gsys, gcert] = bounded_path_cover(g, 3);
    std::string why;
    CHECK(path_system_valid(g, gsys, &why));
    CHECK(BigInt(gsys.count()) <= gcert.total_bound);
    CHECK(gsys.count() >= path_cover_number(g).value);

    CHECK_THROWS_AS(bounded_path_cover(Graph(3), 3), InputError);  // disconnected
    CHECK_THROWS_AS(bounded_path_cover(fam(FamilyKind::Path, 4), 1), InputError);
}

TEST_CASE("bounded cover rejects forbidden inputs when asked") {
    Graph claw = fam(FamilyKind::Star, 3);
    CHECK_THROWS_AS(bounded_path_cover(claw, 3, true), HypothesisViolation);
    try {
        bounded_path_cover(claw, 3, true);
    } catch (const HypothesisViolation& e) {
        CHECK(e.predicate() == "freeness");
    }
    // without the flag the pipeline still covers the claw (bounds are loose)
    auto [system, cert] = bounded_path_cover(claw, 3, false);
    std::string why;
    CHECK(path_system_valid(claw, system, &why));
}

TEST_CASE("pipeline reports the violated predicate on non-free structures") {
    // spider with three legs of length 4: the third leg is unreachable from
    // the spine layers, so the coverage predicate fails
    Graph spider(13);
    for (int leg = 0; leg < 3; ++leg) {
        int prev = 12;  // center
        for (int k = 0; k < 4; ++k) {
            int v = leg * 4 + k;
            spider.add_edge(prev, v);
            prev = v;
        }
    }
    CHECK_THROWS_AS(bounded_path_cover(spider, 3), HypothesisViolation);
    try {
        bounded_path_cover(spider, 3);
    } catch (const HypothesisViolation& e) {
        CHECK(e.predicate() == "layer-coverage");
    }
}

TEST_CASE("bounded path partition pipeline") {
    Graph g = path_plus(10, {{9, 4}, {9, 5}});
    auto [system, cert] = bounded_path_partition(g, 3);
    CHECK(system.count() == 1);  // the spine walk absorbs the attachment
    CHECK(cert.spine_bound == 1);
    std::string why;
    CHECK(path_system_valid(g, system, &why));

    auto [p4sys, p4cert] = bounded_path_partition(fam(FamilyKind::Path, 4), 2);
    CHECK(p4sys.count() == 1);

    // partition mode also screens F3/F4 when asked
    Graph f3 = fam(FamilyKind::F3, 3, 3);
    CHECK_THROWS_AS(bounded_path_partition(f3, 3, true), HypothesisViolation);
}

TEST_CASE("pipeline against exact solvers on a qualifying sample") {
    std::vector<Graph> family = forbidden_family(3, false);
    Graph f3 = fam(FamilyKind::F3, 3, 3), f4 = fam(FamilyKind::F4, 3, 3);
    Rng rng(71);
    int covered = 0, partitioned = 0;
    while (covered < 40) {
        Graph g = random_graph(1 + static_cast<int>(rng.below(8)), 0.5, rng);
        if (!is_connected(g) || !is_family_free(g, family)) continue;
        ++covered;
        LayerDecomposition d = decompose(g, 3);
        CHECK(d.layers_terminate);
        CHECK(d.coverage);
        CHECK(d.last_slot_empty);
        auto [system, cert] = bounded_path_cover(g, 3);
        std::string why;
        CHECK(path_system_valid(g, system, &why));
        CHECK(cert.spine_part_count <= 3);
        CHECK(system.count() >= path_cover_number(g).value);
        CHECK(BigInt(system.count()) <= cert.total_bound);
        std::vector<Graph> f34{f3, f4};
        if (is_family_free(g, f34)) {
            ++partitioned;
            auto [psys, pcert] = bounded_path_partition(g, 3);
            CHECK(path_system_valid(g, psys, &why));
            CHECK(psys.count() >= path_partition_number(g).value);
            CHECK(BigInt(psys.count()) <= pcert.total_bound);
        }
    }
    CHECK(partitioned > 10);
}

TEST_CASE("decomposition invariants on random connected graphs") {
    // Y_i slots partition Y; Y_{i,1} / Y_{i,2} split each slot by adjacency
    // to u_{i+1}; layers are pairwise disjoint and disjoint from the spine
    // and Y.  These hold by construction on any connected input, free or
    // not.
    Rng rng(83);
    int checked = 0;
    while (checked < 80) {
        Graph g = random_graph(2 + static_cast<int>(rng.below(9)), 0.3, rng);
        if (!is_connected(g)) continue;
        ++checked;
        LayerDecomposition d = decompose(g, 3);
        VertexSet slot_union(g.order());
        for (const auto& [i, slot] : d.y_slots) {
            CHECK(!slot.intersects(slot_union));
            slot_union |= slot;
            const auto& [y1, y2] = d.y_split.at(i);
            CHECK((y1 | y2) == slot);
            CHECK(!y1.intersects(y2));
            int u_next = d.spine[static_cast<std::size_t>(i)];  // u_{i+1}
            y1.for_each([&](int y) { CHECK(g.adjacent(y, u_next)); });
            y2.for_each([&](int y) { CHECK(!g.adjacent(y, u_next)); });
        }
        CHECK(slot_union == d.y);

        VertexSet spine_set(g.order());
        for (int v : d.spine) spine_set.add(v);
        VertexSet seen = spine_set | d.y;
        for (std::size_t i = 1; i < d.x_layers.size(); ++i) {
            CHECK(!d.x_layers[i].intersects(seen));
            seen |= d.x_layers[i];
        }
    }
}

TEST_CASE("neighborhood independence bound on free samples") {
    int n = 3;
    std::vector<Graph> family{fam(FamilyKind::Star, n), fam(FamilyKind::KStar, n)};
    Rng rng(73);
    int checked = 0;
    while (checked < 60) {
        Graph g = random_graph(2 + static_cast<int>(rng.below(8)), 0.5, rng);
        if (!is_family_free(g, family)) continue;
        VertexSet x(g.order());
        for (int v = 0; v < g.order(); ++v)
            if (rng.below(2) == 1) x.add(v);
        if (x.empty()) continue;
        ++checked;
        int ax = independence_number(induced_subgraph(g, x));
        int an = independence_number(induced_subgraph(g, neighborhood(g, x)));
        CHECK(BigInt(an) <= BigInt(n - 1) * ramsey_upper(n, ax + 1).value - 1);
    }
}
