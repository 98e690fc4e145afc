#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
    std::string cmd;
    if (!stdin_data.empty()) {
        std::string tmp = std::string(PATHCOVER_CLI_PATH) + ".stdin.txt";
        std::FILE* f = std::fopen(tmp.c_str(), "w");
        REQUIRE(f != nullptr);
        std::fwrite(stdin_data.data(), 1, stdin_data.size(), f);
        std::fclose(f);
        cmd = std::string(PATHCOVER_CLI_PATH) + " " + args + " < " + tmp + " 2>/dev/null";
    } else {
        cmd = std::string(PATHCOVER_CLI_PATH) + " " + args + " 2>/dev/null";
    }
    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("gen prints hand-checked graph6") {
    CHECK(run_cli("gen 'K(3)'").out == "Bw\n");
    CHECK(run_cli("gen 'P(2)'").out == "A_\n");
    CHECK(run_cli("gen 'F1(1,1)'").out == "Cs\n");  // claw centered at x_1
    CHECK(run_cli("gen 'K(3)'").exit_code == 0);
    CHECK(run_cli("gen 'K(0)'").exit_code == 2);
    CHECK(run_cli("gen nonsense").exit_code == 2);
}

TEST_CASE("invariants report") {
    auto r = run_cli("invariants 'S(3)'");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["command"] == "invariants");
    CHECK(report["results"]["alpha"] == 3);
    CHECK(report["results"]["pc"]["value"] == 2);
    CHECK(report["results"]["pp"]["value"] == 2);
    CHECK(report["results"]["cc"]["value"] == 3);
    CHECK(report["results"]["cp"]["value"] == 3);
    CHECK(report["results"]["ham"] == false);
    for (const char* key : {"command", "inputs", "results", "checks"}) CHECK(report.contains(key));

    json p5 = json::parse(run_cli("invariants 'P(5)' --which pc,pp,cc").out);
    CHECK(p5["results"]["pc"]["value"] == 1);
    CHECK(p5["results"]["pp"]["value"] == 1);
    CHECK(p5["results"]["cc"]["value"] == 3);

    json h3 = json::parse(run_cli("invariants 'H3(2,3)' --which pp").out);
    CHECK(h3["results"]["pp"]["value"] == 2);
}

TEST_CASE("invariants respects the exact-order budget") {
    CHECK(run_cli("invariants 'K(19)' --which pc").exit_code == 2);
    CHECK(run_cli("invariants 'K(19)' --which alpha").exit_code == 0);
    CHECK(run_cli("invariants 'K(17)' --which cc").exit_code == 2);  // cycle budget 16
    CHECK(run_cli("--max-order-cycles 17 invariants 'K(17)' --which cc").exit_code == 0);
}

TEST_CASE("invariants reads graph6 lines from stdin") {
    auto r = run_cli("invariants - --which alpha", "Bw\nBg\n");
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(json::parse(line)["results"]["alpha"] == 1);
    std::getline(lines, line);
    CHECK(json::parse(line)["results"]["alpha"] == 2);
}

TEST_CASE("free command") {
    json free_report = json::parse(run_cli("free 'Kstar(3)' --family 'S(3)'").out);
    CHECK(free_report["results"]["free"] == true);

    json hit = json::parse(run_cli("free 'H1(3,3)' --family 'S(3)'").out);
    CHECK(hit["results"]["free"] == false);
    CHECK(hit["results"]["members"][0].contains("witness"));

    json multi = json::parse(run_cli("free 'P(9)' --family 'S(3)' --family 'Kstar(3)'").out);
    CHECK(multi["results"]["free"] == true);
    CHECK(run_cli("free 'P(9)' --family 'S(3)'").exit_code == 0);
}

TEST_CASE("cover command") {
    auto r = run_cli("cover 'P(9)' --n 3");
    REQUIRE(r.exit_code == 0);
    json report = json::parse(r.out);
    CHECK(report["results"]["system"]["count"] == 1);
    CHECK(report["results"]["certificate"]["spine_bound"] == "3");

    auto part = run_cli("cover 'P(9)' --n 3 --mode partition");
    CHECK(json::parse(part.out)["results"]["system"]["mode"] == "partition");

    // the forbidden graph itself trips the freeness check
    auto bad = run_cli("cover 'S(3)' --n 3 --check-freeness");
    CHECK(bad.exit_code == 1);
    json bad_report = json::parse(bad.out);
    CHECK(bad_report["checks"][0]["pass"] == false);
    CHECK(bad_report["checks"][0]["name"] == "freeness");

    auto disconnected = run_cli("cover ? --n 3");
    CHECK(disconnected.exit_code == 2);
}

TEST_CASE("verify suites") {
    auto ramsey = run_cli("verify ramsey");
    REQUIRE(ramsey.exit_code == 0);
    json report = json::parse(ramsey.out);
    bool found = false;
    for (const auto& check : report["checks"])
        if (check["name"] == "R(3,3)=6 exhaustive order-6 scan") {
            found = true;
            CHECK(check["pass"] == true);
        }
    CHECK(found);

    auto lemmas = run_cli("verify lemmas");
    CHECK(lemmas.exit_code == 0);
    json lem_report = json::parse(lemmas.out);
    CHECK(lem_report["checks"].size() >= 20);

    auto random = run_cli("verify random --seed 1 --count 60");
    CHECK(random.exit_code == 0);
    json rnd = json::parse(random.out);
    for (const auto& check : rnd["checks"]) {
        INFO(check.dump());
        CHECK(check["pass"] == true);
    }
}

TEST_CASE("sample determinism and extremes") {
    auto a = run_cli("--seed 7 sample --order 6 --edge-prob 0.5 --count 5");
    auto b = run_cli("--seed 7 sample --order 6 --edge-prob 0.5 --count 5");
    CHECK(a.out == b.out);
    CHECK(a.exit_code == 0);

    CHECK(run_cli("sample --order 5 --edge-prob 1").out == "D~{\n");  // K_5
    CHECK(run_cli("sample --order 4 --edge-prob 0").out == "C?\n");   // edgeless
    CHECK(run_cli("sample --order 0").exit_code == 2);
    CHECK(run_cli("sample --order 63").exit_code == 2);

    auto connected = run_cli("--seed 3 sample --order 7 --edge-prob 0.3 --count 3 --connected-only");
    CHECK(connected.exit_code == 0);
}

TEST_CASE("json mode wraps graph streams") {
    auto r = run_cli("--json gen 'Kstar(2)'");
    json report = json::parse(r.out);
    CHECK(report["command"] == "gen");
    CHECK(report["results"].contains("graph6"));
}
