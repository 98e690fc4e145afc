// pathcover-lab: family generation, exact path/cycle invariants, forbidden
// induced-subgraph checks, the constructive bounded-cover pipeline, random
// sampling, and the verification suites.
//
// Report commands print a JSON object with the stable top-level keys
// {command, inputs, results, checks}; graph streams are line-oriented
// graph6.  Exit code 0 means no failed check and no error; 1 means some
// check failed (or a hypothesis was violated); 2 means bad input.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathcover/constructive.hpp"
#include "pathcover/families.hpp"
#include "pathcover/freeness.hpp"
#include "pathcover/graph6.hpp"
#include "pathcover/rng.hpp"
#include "pathcover/solvers.hpp"
#include "pathcover/sweep.hpp"

using json = nlohmann::json;
using namespace pathcover;

namespace {

int env_threads() {
    const char* raw = std::getenv("PATHCOVER_LAB_THREADS");
    if (raw == nullptr) return 0;
    int value = std::atoi(raw);
    return value > 0 ? value : 0;
}

json new_report(const std::string& command) {
    return json{{"command", command},
                {"inputs", json::object()},
                {"results", json::object()},
                {"checks", json::array()}};
}

void add_check(json& report, const std::string& name, bool pass, const std::string& detail,
               const std::string& instance = "") {
    json entry{{"name", name}, {"pass", pass}, {"detail", detail}};
    if (!instance.empty()) entry["graph6"] = instance;
    report["checks"].push_back(std::move(entry));
}

bool all_checks_pass(const json& report) {
    for (const auto& c : report["checks"])
        if (!c["pass"].get<bool>()) return false;
    return true;
}

int emit(const json& report, bool compact = false) {
    std::cout << report.dump(compact ? -1 : 2) << "\n";
    return all_checks_pass(report) ? 0 : 1;
}

// Graph arguments accept a family spec (e.g. Kstar(3)) or a graph6 string.
Graph parse_graph_arg(const std::string& text) {
    try {
        return generate(FamilySpec::parse(text));
    } catch (const ParseError&) {
        return from_graph6(text);
    }
}

// Runs fn once per input graph: either the single argument, or, when the
// argument is "-", one graph6 line of stdin at a time (compact one-line
// reports in that case).  Returns the bitwise OR of the exit codes.
template <typename Fn>
int for_each_input_graph(const std::string& arg, Fn&& fn) {
    if (arg != "-") return fn(parse_graph_arg(arg), false);
    std::string line;
    int rc = 0;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        rc |= fn(from_graph6(line), true);
    }
    return rc;
}

json path_system_json(const PathSystem& ps) {
    json j{{"mode", ps.mode == SystemMode::Cover ? "cover" : "partition"},
           {"paths", ps.paths},
           {"count", ps.count()}};
    return j;
}

json cycle_system_json(const CycleSystem& cs) {
    json elements = json::array();
    for (const auto& el : cs.elements) {
        const char* kind = el.kind == CycleElementKind::K1   ? "K1"
                           : el.kind == CycleElementKind::K2 ? "K2"
                                                             : "cycle";
        elements.push_back(json{{"kind", kind}, {"vertices", el.vertices}});
    }
    return json{{"mode", cs.mode == SystemMode::Cover ? "cover" : "partition"},
                {"elements", std::move(elements)},
                {"count", cs.count()}};
}

json certificate_json(const CoverCertificate& cert) {
    json alpha = json::array();
    for (const auto& a : cert.alpha_bounds) alpha.push_back(a.str());
    return json{{"n", cert.n},
                {"n0", cert.n0},
                {"alpha_bounds", std::move(alpha)},
                {"spine_part_count", cert.spine_part_count},
                {"layer_part_counts", cert.layer_part_counts},
                {"spine_bound", cert.spine_bound.str()},
                {"total_bound", cert.total_bound.str()}};
}

// ---------------------------------------------------------------------------

struct InvariantBudgets {
    int paths = 18;   // pc, pp, ham
    int cycles = 16;  // cc, cp
};

int run_invariants_one(const Graph& g, const std::vector<std::string>& which,
                       const InvariantBudgets& budgets, bool compact) {
    json report = new_report("invariants");
    report["inputs"] = {{"graph6", to_graph6(g)},
                        {"which", which},
                        {"max_order_exact", budgets.paths},
                        {"max_order_cycles", budgets.cycles}};
    for (const std::string& inv : which) {
        if (inv == "alpha") {
            report["results"]["alpha"] = independence_number(g);
        } else if (inv == "ham" || inv == "pc" || inv == "pp") {
            if (g.order() > budgets.paths)
                throw InputError("order " + std::to_string(g.order()) + " exceeds the exact path-solver budget " +
                                 std::to_string(budgets.paths) + " (raise --max-order-exact)");
            if (inv == "ham") {
                report["results"]["ham"] = has_hamiltonian_path(g);
            } else if (inv == "pc") {
                auto r = path_cover_number(g);
                report["results"]["pc"] = {{"value", r.value}, {"witness", path_system_json(r.system)}};
            } else {
                auto r = path_partition_number(g);
                report["results"]["pp"] = {{"value", r.value}, {"witness", path_system_json(r.system)}};
            }
        } else if (inv == "cc" || inv == "cp") {
            if (g.order() > budgets.cycles)
                throw InputError("order " + std::to_string(g.order()) + " exceeds the exact cycle-solver budget " +
                                 std::to_string(budgets.cycles) + " (raise --max-order-cycles)");
            if (inv == "cc") {
                auto r = cycle_cover_number(g);
                report["results"]["cc"] = {{"value", r.value}, {"witness", cycle_system_json(r.system)}};
            } else {
                auto r = cycle_partition_number(g);
                report["results"]["cp"] = {{"value", r.value}, {"witness", cycle_system_json(r.system)}};
            }
        } else {
            throw InputError("unknown invariant '" + inv + "' (expected alpha, pc, pp, cc, cp, ham)");
        }
    }
    return emit(report, compact);
}

// ---------------------------------------------------------------------------
// verify suites

struct SampleStream {
    Rng rng;
    explicit SampleStream(std::uint64_t seed) : rng(seed) {}

    Graph next_small(int max_order) {
        int order = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_order)));
        double p = (1 + rng.below(9)) / 10.0;
        return random_graph(order, p, rng);
    }
};

void verify_lemmas(json& report) {
    // Star and K* extremal values.
    for (int c = 1; c <= 3; ++c) {
        Graph star = generate({FamilyKind::Star, 2 * c + 1});
        Graph kstar = generate({FamilyKind::KStar, 2 * c + 1});
        int pc_star = path_cover_number(star).value;
        int pc_kstar = path_cover_number(kstar).value;
        add_check(report, "pc(K_{1," + std::to_string(2 * c + 1) + "})",
                  pc_star == c + 1, "expected " + std::to_string(c + 1) + ", got " + std::to_string(pc_star),
                  pc_star == c + 1 ? "" : to_graph6(star));
        add_check(report, "pc(K*_" + std::to_string(2 * c + 1) + ")",
                  pc_kstar == c + 1, "expected " + std::to_string(c + 1) + ", got " + std::to_string(pc_kstar),
                  pc_kstar == c + 1 ? "" : to_graph6(kstar));
    }
    // pc(H1) = pc(H2) = ceil((s+1)/2) at t = 3.
    for (int s = 2; s <= 4; ++s) {
        int expected = (s + 2) / 2;
        for (FamilyKind kind : {FamilyKind::H1, FamilyKind::H2}) {
            Graph h = generate({kind, s, 3});
            int got = path_cover_number(h).value;
            std::string name = std::string("pc(H") + (kind == FamilyKind::H1 ? "1" : "2") +
                               "(" + std::to_string(s) + ",3))";
            add_check(report, name, got == expected,
                      "expected " + std::to_string(expected) + ", got " + std::to_string(got),
                      got == expected ? "" : to_graph6(h));
        }
    }
    // pp(H3) = pp(H4) = s at t = 3.
    for (int s = 2; s <= 3; ++s) {
        for (FamilyKind kind : {FamilyKind::H3, FamilyKind::H4}) {
            Graph h = generate({kind, s, 3});
            int got = path_partition_number(h).value;
            std::string name = std::string("pp(H") + (kind == FamilyKind::H3 ? "3" : "4") +
                               "(" + std::to_string(s) + ",3))";
            add_check(report, name, got == s,
                      "expected " + std::to_string(s) + ", got " + std::to_string(got),
                      got == s ? "" : to_graph6(h));
        }
    }
    // Path/star cycle cover values.
    for (int c = 1; c <= 3; ++c) {
        Graph path = generate({FamilyKind::Path, 2 * c + 1});
        Graph star = generate({FamilyKind::Star, c + 1});
        int cc_path = cycle_cover_number(path).value;
        int cc_star = cycle_cover_number(star).value;
        add_check(report, "cc(P_" + std::to_string(2 * c + 1) + ")", cc_path == c + 1,
                  "expected " + std::to_string(c + 1) + ", got " + std::to_string(cc_path));
        add_check(report, "cc(K_{1," + std::to_string(c + 1) + "})", cc_star == c + 1,
                  "expected " + std::to_string(c + 1) + ", got " + std::to_string(cc_star));
    }
    // Freeness and the family order relation.
    Graph kstar3 = generate({FamilyKind::KStar, 3});
    Graph claw = generate({FamilyKind::Star, 3});
    add_check(report, "K*_3 is K_{1,3}-free", !find_induced(kstar3, claw).has_value(),
              "induced claw search in K*_3");
    Graph f11 = generate({FamilyKind::F1, 1, 1});
    add_check(report, "F1(1,1) isomorphic to K_{1,3}", is_isomorphic(f11, claw),
              "isomorphism via induced embedding");
    std::vector<Graph> small{claw, kstar3};
    std::vector<Graph> big = forbidden_family(5, false);
    add_check(report, "family_leq({K_{1,3},K*_3}, cover family at n=5)", family_leq(small, big),
              "every member of the n=5 family contains a member of the source");
}

void verify_ramsey(json& report, int threads) {
    auto scan = sweep::ramsey33_scan(true, threads);
    add_check(report, "R(3,3)=6 exhaustive order-6 scan", scan.every_order6_graph_ok,
              scan.every_order6_graph_ok
                  ? "all 32768 labeled graphs have K_3 or an independent 3-set"
                  : "counterexample edge mask " + std::to_string(scan.first_bad_mask));
    add_check(report, "R(3,3)>5 via C_5", scan.c5_has_neither,
              "pentagon has no triangle and no independent 3-set");
    bool pascal = true;
    for (int a = 2; a <= 8 && pascal; ++a)
        for (int b = 2; b <= 8 && pascal; ++b)
            pascal = ramsey_upper(a, b).value ==
                     ramsey_upper(a - 1, b).value + ramsey_upper(a, b - 1).value;
    add_check(report, "ramsey_upper Pascal identity 2..8", pascal, "R'(m,n) = R'(m-1,n) + R'(m,n-1)");
    add_check(report, "ramsey_upper(2,5)", ramsey_upper(2, 5).value == 5 && ramsey_upper(2, 5).exact,
              "R(2,k) = k line");
    add_check(report, "ramsey_upper(3,3)", ramsey_upper(3, 3).value == 6 && ramsey_upper(3, 3).exact,
              "value 6, exact");
    add_check(report, "ramsey_upper(4,4)", ramsey_upper(4, 4).value == 20 && !ramsey_upper(4, 4).exact,
              "binomial(6,3) = 20, upper bound only");
}

// Collects distinct connected graphs of order <= 9 that avoid the given
// family, from the seeded sampler.
std::vector<Graph> qualifying_sweep(std::uint64_t seed, const std::vector<Graph>& family,
                                    std::size_t want) {
    SampleStream stream(seed);
    std::vector<Graph> out;
    std::vector<std::string> seen;
    for (int attempts = 0; attempts < 60000 && out.size() < want; ++attempts) {
        Graph g = stream.next_small(9);
        if (!is_connected(g)) continue;
        if (!is_family_free(g, family)) continue;
        std::string key = to_graph6(g);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(std::move(key));
        out.push_back(std::move(g));
    }
    return out;
}

void verify_random(json& report, std::uint64_t seed, int count, int threads) {
    // The pc/pp/alpha chain, the greedy bounds, the Hamiltonian-path link,
    // subadditivity, and the graph6 round trip on one sample.
    SampleStream stream(seed);
    std::vector<Graph> sample;
    sample.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) sample.push_back(stream.next_small(9));

    struct ChainRecord {
        int alpha, pc, pp, greedy, cp, greedy_cp, cp_bound;
        bool ham, ham_ok, roundtrip_ok, subadd_ok;
    };
    Rng block_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::vector<int>> blocks(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) {
        blocks[i].resize(static_cast<std::size_t>(sample[i].order()));
        for (auto& b : blocks[i]) b = static_cast<int>(block_rng.below(3));
    }

    auto records = sweep::map_indexed<ChainRecord>(
        sample.size(),
        [&](std::size_t i) {
            const Graph& g = sample[i];
            ChainRecord r{};
            r.alpha = independence_number(g);
            r.pc = path_cover_number(g).value;
            r.pp = path_partition_number(g).value;
            r.greedy = greedy_path_partition(g).count();
            r.ham = has_hamiltonian_path(g);
            r.ham_ok = r.ham == (r.pp == 1);
            r.roundtrip_ok = from_graph6(to_graph6(g)) == g;
            CycleSystem gcp = greedy_cycle_partition(g);
            r.greedy_cp = gcp.count();
            r.cp = cycle_partition_number(g).value;
            BigInt bound = ramsey_upper(r.alpha + 1, r.alpha + 1).value - 1;
            r.cp_bound = static_cast<int>(bound);
            // pc and pp are subadditive over any vertex partition.
            VertexSet parts[3] = {VertexSet(g.order()), VertexSet(g.order()), VertexSet(g.order())};
            for (int v = 0; v < g.order(); ++v)
                parts[blocks[i][static_cast<std::size_t>(v)]].add(v);
            int pc_sum = 0, pp_sum = 0;
            for (const auto& part : parts) {
                if (part.empty()) continue;
                Graph sub = induced_subgraph(g, part);
                pc_sum += path_cover_number(sub).value;
                pp_sum += path_partition_number(sub).value;
            }
            r.subadd_ok = r.pc <= pc_sum && r.pp <= pp_sum;
            return r;
        },
        true, threads);

    auto aggregate = [&](const std::string& name, auto pred, const std::string& detail) {
        int bad = -1;
        for (std::size_t i = 0; i < records.size(); ++i)
            if (!pred(records[i])) {
                bad = static_cast<int>(i);
                break;
            }
        add_check(report, name, bad < 0,
                  bad < 0 ? detail + " on " + std::to_string(records.size()) + " graphs"
                          : "violated",
                  bad < 0 ? "" : to_graph6(sample[static_cast<std::size_t>(bad)]));
    };
    aggregate("pc<=pp<=alpha",
              [](const ChainRecord& r) { return r.pc <= r.pp && r.pp <= r.alpha; }, "chain holds");
    aggregate("greedy path partition within [pp, alpha]",
              [](const ChainRecord& r) { return r.greedy <= r.alpha && r.greedy >= r.pp; },
              "pp <= |greedy| <= alpha");
    aggregate("hamiltonian path iff pp=1", [](const ChainRecord& r) { return r.ham_ok; },
              "equivalence holds");
    aggregate("graph6 roundtrip", [](const ChainRecord& r) { return r.roundtrip_ok; },
              "encode/decode identity");
    aggregate("pc/pp subadditivity", [](const ChainRecord& r) { return r.subadd_ok; },
              "pc and pp subadditive over a random vertex partition");
    aggregate("greedy cycle partition Ramsey bound",
              [](const ChainRecord& r) { return r.greedy_cp <= r.cp_bound; },
              "|greedy| <= R'(alpha+1,alpha+1)-1");
    aggregate("cp <= greedy cycle partition",
              [](const ChainRecord& r) { return r.cp <= r.greedy_cp && r.cp <= r.cp_bound; },
              "exact cp below greedy and bound");

    // Neighborhood independence on {K_{1,n}, K*_n}-free samples.
    for (int n : {3, 4}) {
        std::vector<Graph> family{generate({FamilyKind::Star, n}), generate({FamilyKind::KStar, n})};
        SampleStream fs(seed + static_cast<std::uint64_t>(n));
        std::vector<Graph> free_sample;
        std::vector<VertexSet> xs;
        int want = std::min(count, 300);
        for (int attempts = 0; attempts < 60000 && static_cast<int>(free_sample.size()) < want;
             ++attempts) {
            Graph g = fs.next_small(10);
            if (!is_family_free(g, family)) continue;
            VertexSet x(g.order());
            for (int v = 0; v < g.order(); ++v)
                if (fs.rng.below(2) == 1) x.add(v);
            if (x.empty()) x.add(static_cast<int>(fs.rng.below(static_cast<std::uint32_t>(g.order()))));
            free_sample.push_back(std::move(g));
            xs.push_back(std::move(x));
        }
        auto ok = sweep::map_indexed<char>(
            free_sample.size(),
            [&](std::size_t i) {
                const Graph& g = free_sample[i];
                int ax = independence_number(induced_subgraph(g, xs[i]));
                int an = independence_number(induced_subgraph(g, neighborhood(g, xs[i])));
                BigInt bound = BigInt(n - 1) * ramsey_upper(n, ax + 1).value - 1;
                return static_cast<char>(BigInt(an) <= bound);
            },
            true, threads);
        int bad = -1;
        for (std::size_t i = 0; i < ok.size(); ++i)
            if (!ok[i]) {
                bad = static_cast<int>(i);
                break;
            }
        add_check(report, "neighborhood independence bound (n=" + std::to_string(n) + ")", bad < 0,
                  bad < 0 ? "holds on " + std::to_string(ok.size()) + " free graphs" : "violated",
                  bad < 0 ? "" : to_graph6(free_sample[static_cast<std::size_t>(bad)]));
    }

    // Decomposition predicates and the full pipeline on the qualifying sweep.
    std::vector<Graph> a1_family = forbidden_family(3, false);
    std::vector<Graph> sweep_graphs = qualifying_sweep(seed + 17, a1_family, 220);
    add_check(report, "qualifying sweep size", sweep_graphs.size() >= 200,
              std::to_string(sweep_graphs.size()) + " distinct connected free graphs of order <= 9");

    struct PipelineRecord {
        bool predicates_ok = false;
        bool cover_ok = false;
        bool partition_applicable = false;
        bool partition_ok = false;
        const char* which = "";
    };
    Graph f3 = generate({FamilyKind::F3, 3, 3});
    Graph f4 = generate({FamilyKind::F4, 3, 3});
    auto pipeline = sweep::map_indexed<PipelineRecord>(
        sweep_graphs.size(),
        [&](std::size_t i) {
            const Graph& g = sweep_graphs[i];
            PipelineRecord r;
            LayerDecomposition d = decompose(g, 3);
            r.predicates_ok = d.layers_terminate && d.coverage && d.last_slot_empty;
            if (!d.layers_terminate) r.which = "layer-termination";
            else if (!d.last_slot_empty) r.which = "last-slot-empty";
            else if (!d.coverage) r.which = "layer-coverage";
            auto cover = bounded_path_cover(g, 3);
            int pc = path_cover_number(g).value;
            std::string why;
            r.cover_ok = path_system_valid(g, cover.system, &why) &&
                         cover.system.count() >= pc &&
                         BigInt(cover.system.count()) <= cover.certificate.total_bound &&
                         cover.certificate.spine_part_count <= 3;
            std::vector<Graph> f34{f3, f4};
            r.partition_applicable = is_family_free(g, f34);
            if (r.partition_applicable) {
                auto part = bounded_path_partition(g, 3);
                int pp = path_partition_number(g).value;
                r.partition_ok = path_system_valid(g, part.system, &why) &&
                                 part.system.count() >= pp &&
                                 BigInt(part.system.count()) <= part.certificate.total_bound;
            }
            return r;
        },
        true, threads);

    int bad_pred = -1, bad_cover = -1, bad_part = -1, part_count = 0;
    for (std::size_t i = 0; i < pipeline.size(); ++i) {
        if (!pipeline[i].predicates_ok && bad_pred < 0) bad_pred = static_cast<int>(i);
        if (!pipeline[i].cover_ok && bad_cover < 0) bad_cover = static_cast<int>(i);
        if (pipeline[i].partition_applicable) {
            ++part_count;
            if (!pipeline[i].partition_ok && bad_part < 0) bad_part = static_cast<int>(i);
        }
    }
    add_check(report, "decomposition predicates sweep (n=3)", bad_pred < 0,
              bad_pred < 0 ? "all predicates hold on " + std::to_string(pipeline.size()) + " graphs"
                           : std::string("failed: ") + pipeline[static_cast<std::size_t>(bad_pred)].which,
              bad_pred < 0 ? "" : to_graph6(sweep_graphs[static_cast<std::size_t>(bad_pred)]));
    add_check(report, "bounded cover sweep", bad_cover < 0,
              bad_cover < 0 ? "valid, pc <= size <= bound, spine <= 3 on " +
                                  std::to_string(pipeline.size()) + " graphs"
                            : "violated",
              bad_cover < 0 ? "" : to_graph6(sweep_graphs[static_cast<std::size_t>(bad_cover)]));
    add_check(report, "bounded partition sweep", bad_part < 0,
              bad_part < 0 ? "valid, pp <= size <= bound on " + std::to_string(part_count) + " graphs"
                           : "violated",
              bad_part < 0 ? "" : to_graph6(sweep_graphs[static_cast<std::size_t>(bad_part)]));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"path cover / partition laboratory"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags are accepted after the subcommand too

    bool json_mode = false;
    std::uint64_t seed = 1;
    InvariantBudgets budgets;
    app.add_flag("--json", json_mode, "JSON output for graph-stream commands");
    app.add_option("--seed", seed, "random seed (default 1)");
    app.add_option("--max-order-exact", budgets.paths, "exact pc/pp/ham order budget (default 18)");
    app.add_option("--max-order-cycles", budgets.cycles, "exact cc/cp order budget (default 16)");

    auto* gen = app.add_subcommand("gen", "generate a family member as graph6");
    std::string gen_spec;
    gen->add_option("spec", gen_spec, "family spec, e.g. Kstar(3) or H1(2,3)")->required();

    auto* invariants = app.add_subcommand("invariants", "exact invariants with witnesses");
    std::string inv_graph;
    std::string inv_which = "alpha,pc,pp,cc,cp,ham";
    invariants->add_option("graph", inv_graph, "graph6 or family spec; '-' reads graph6 lines from stdin")
        ->required();
    invariants->add_option("--which", inv_which, "comma list from alpha,pc,pp,cc,cp,ham");

    auto* free_cmd = app.add_subcommand("free", "forbidden induced subgraph check");
    std::string free_graph;
    std::vector<std::string> free_family;
    free_cmd->add_option("graph", free_graph, "graph6 or family spec")->required();
    free_cmd->add_option("--family", free_family, "family members (specs or graph6)")->required();

    auto* cover = app.add_subcommand("cover", "constructive bounded path cover/partition");
    std::string cover_graph, cover_mode = "cover";
    int cover_n = 3;
    bool cover_check = false;
    cover->add_option("graph", cover_graph, "graph6 or family spec")->required();
    cover->add_option("--n", cover_n, "forbidden family parameter n >= 2")->required();
    cover->add_option("--mode", cover_mode, "cover or partition")
        ->check(CLI::IsMember({"cover", "partition"}));
    cover->add_flag("--check-freeness", cover_check, "verify the freeness hypothesis first");

    auto* verify = app.add_subcommand("verify", "verification suites");
    std::string verify_suite;
    int verify_count = 500;
    verify->add_option("suite", verify_suite, "lemmas, random, or ramsey")
        ->required()
        ->check(CLI::IsMember({"lemmas", "random", "ramsey"}));
    verify->add_option("--count", verify_count, "sample size for the random suite (default 500)");

    auto* sample = app.add_subcommand("sample", "seeded random graph stream (graph6 lines)");
    int sample_order = 0, sample_count = 1;
    double sample_prob = 0.5;
    bool sample_connected = false;
    sample->add_option("--order", sample_order, "graph order, 1..62")->required();
    sample->add_option("--edge-prob", sample_prob, "edge probability (default 0.5)");
    sample->add_option("--count", sample_count, "number of graphs (default 1)");
    sample->add_flag("--connected-only", sample_connected, "rejection-sample connected graphs");

    CLI11_PARSE(app, argc, argv);
    int threads = env_threads();

    try {
        if (gen->parsed()) {
            FamilySpec spec = FamilySpec::parse(gen_spec);
            std::string g6 = to_graph6(generate(spec));
            if (json_mode) {
                json report = new_report("gen");
                report["inputs"] = {{"spec", spec.to_string()}};
                report["results"] = {{"graph6", g6}};
                return emit(report);
            }
            std::cout << g6 << "\n";
            return 0;
        }

        if (invariants->parsed()) {
            std::vector<std::string> which;
            std::stringstream ss(inv_which);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) which.push_back(item);
            return for_each_input_graph(inv_graph, [&](const Graph& g, bool compact) {
                return run_invariants_one(g, which, budgets, compact);
            });
        }

        if (free_cmd->parsed()) {
            return for_each_input_graph(free_graph, [&](const Graph& g, bool compact) {
                json report = new_report("free");
                report["inputs"] = {{"graph6", to_graph6(g)}, {"family", free_family}};
                bool all_free = true;
                json members = json::array();
                for (const std::string& text : free_family) {
                    Graph h = parse_graph_arg(text);
                    auto hit = find_induced(g, h);
                    json entry{{"member", text}, {"free", !hit.has_value()}};
                    if (hit) {
                        entry["witness"] = hit->mapping;
                        all_free = false;
                    }
                    members.push_back(std::move(entry));
                }
                report["results"] = {{"free", all_free}, {"members", std::move(members)}};
                return emit(report, compact);
            });
        }

        if (cover->parsed()) {
            return for_each_input_graph(cover_graph, [&](const Graph& g, bool compact) {
                if (g.order() > budgets.paths)
                    throw InputError("order " + std::to_string(g.order()) +
                                     " exceeds the cover-pipeline budget " +
                                     std::to_string(budgets.paths) + " (raise --max-order-exact)");
                json report = new_report("cover");
                report["inputs"] = {{"graph6", to_graph6(g)},
                                    {"n", cover_n},
                                    {"mode", cover_mode},
                                    {"check_freeness", cover_check}};
                try {
                    BoundedCoverResult result =
                        cover_mode == "partition" ? bounded_path_partition(g, cover_n, cover_check)
                                                  : bounded_path_cover(g, cover_n, cover_check);
                    report["results"] = {{"system", path_system_json(result.system)},
                                         {"certificate", certificate_json(result.certificate)}};
                    std::string why;
                    bool valid = path_system_valid(g, result.system, &why);
                    add_check(report, "witness validity", valid, valid ? "checked" : why);
                    add_check(report, "size within certificate bound",
                              BigInt(result.system.count()) <= result.certificate.total_bound,
                              std::to_string(result.system.count()) + " <= " +
                                  result.certificate.total_bound.str());
                } catch (const HypothesisViolation& violation) {
                    add_check(report, violation.predicate(), false, violation.detail(),
                              violation.instance());
                }
                return emit(report, compact);
            });
        }

        if (verify->parsed()) {
            json report = new_report("verify");
            report["inputs"] = {{"suite", verify_suite}, {"seed", seed}, {"count", verify_count},
                                {"threads", threads}};
            if (verify_suite == "lemmas") verify_lemmas(report);
            if (verify_suite == "ramsey") verify_ramsey(report, threads);
            if (verify_suite == "random") verify_random(report, seed, verify_count, threads);
            return emit(report);
        }

        if (sample->parsed()) {
            if (sample_order < 1 || sample_order > 62)
                throw InputError("sample order must lie in 1..62");
            if (sample_count < 0) throw InputError("sample count must be nonnegative");
            Rng rng(seed);
            std::vector<std::string> lines;
            for (int i = 0; i < sample_count; ++i) {
                Graph g = sample_connected ? random_connected_graph(sample_order, sample_prob, rng)
                                           : random_graph(sample_order, sample_prob, rng);
                lines.push_back(to_graph6(g));
            }
            if (json_mode) {
                json report = new_report("sample");
                report["inputs"] = {{"order", sample_order},
                                    {"edge_prob", sample_prob},
                                    {"seed", seed},
                                    {"count", sample_count},
                                    {"connected_only", sample_connected}};
                report["results"] = {{"graphs", lines}};
                return emit(report);
            }
            for (const auto& line : lines) std::cout << line << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisViolation& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
