#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "stressfree/catalog.hpp"
#include "stressfree/graph.hpp"

using json = nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(STRESSFREE_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) res.out += buf.data();
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("rigidity subcommand") {
    auto r = run("rigidity octahedron -d 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "stress_free: yes"));
    CHECK(contains(r.out, "rigid: yes"));
    CHECK(contains(r.out, "rank: 12"));
}

TEST_CASE("verdicts exit zero, errors exit nonzero") {
    CHECK(run("minor K4 --pattern K5").exit_code == 0);  // verdict "none"
    CHECK(contains(run("minor K4 --pattern K5").out, "minor: none"));
    CHECK(run("rigidity no_such_graph_xyz -d 3").exit_code != 0);
    CHECK(run("rigidity K4").exit_code != 0);      // missing -d
    CHECK(run("mader K4 -r 9").exit_code != 0);    // out of range
    CHECK(run("shift K4 --kind sideways").exit_code != 0);
    CHECK(run("surface K4 --genus nope").exit_code != 0);
    CHECK(run("surface K4 --genus 0").exit_code != 0);

    auto budget = run("minor K2,2,2,2,2 --pattern K8 --budget 100");
    CHECK(budget.exit_code != 0);
    CHECK(contains(budget.out, "node budget"));
}

TEST_CASE("edge-list files round-trip through the CLI") {
    std::string path = "cli_test_graph.txt";
    {
        std::ofstream out(path);
        out << "# test graph\n" << sf::format_edge_list(sf::octahedron());
    }
    auto r = run("rigidity " + path + " -d 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "rank: 12"));
    std::remove(path.c_str());
}

TEST_CASE("catalog dump emits parseable edge lists") {
    auto r = run("catalog dump K4");
    CHECK(r.exit_code == 0);
    CHECK(sf::parse_edge_list(r.out) == sf::complete_graph(4));
    CHECK(run("catalog dump nope_graph").exit_code != 0);
    auto l = run("catalog list");
    CHECK(l.exit_code == 0);
    CHECK(contains(l.out, "figure1_torus"));
}

TEST_CASE("certify with verification") {
    auto r = run("certify icosahedron -r 5 --verify");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "outcome: certificate"));
    CHECK(contains(r.out, "verify: ok"));
    CHECK(contains(r.out, "LE"));

    auto w = run("certify K6 -r 6");
    CHECK(w.exit_code == 0);
    CHECK(contains(w.out, "outcome: witness"));
}

TEST_CASE("surface and linkless and shift verdicts") {
    CHECK(contains(run("surface K8 --genus 1").out, "obstructed: yes"));
    CHECK(contains(run("surface figure1_torus --genus 1").out, "obstructed: no"));
    CHECK(contains(run("linkless figure1_torus").out, "linkless: yes"));
    CHECK(contains(run("linkless K6").out, "linkless: no"));
    CHECK(contains(run("shift P3 --kind exterior").out, "chromatic: 2"));
    CHECK(contains(run("mader K7-e -r 6").out, "within_bound: no"));
}

TEST_CASE("json payloads are reproducible for fixed seeds") {
    auto a = run("rigidity icosahedron -d 3 --seed 9 --json");
    auto b = run("rigidity icosahedron -d 3 --seed 9 --json");
    REQUIRE(a.exit_code == 0);
    json ja = json::parse(a.out), jb = json::parse(b.out);
    CHECK(ja["results"] == jb["results"]);
    CHECK(ja["seeds"] == jb["seeds"]);
    CHECK(ja["input"]["digest"] == jb["input"]["digest"]);

    auto c = run("shift C4 --kind symmetric --json");
    json jc = json::parse(c.out);
    CHECK(jc["results"]["edge_count"] == 4);
    CHECK(jc["results"]["chromatic"].get<int>() >= 2);

    auto m = run("minor petersen --pattern K5 --json");
    json jm = json::parse(m.out);
    CHECK(jm["results"]["found"] == true);
    CHECK(jm["results"]["branch_sets"].size() == 5);
}
