#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "domishold/catalog.hpp"
#include "domishold/cli.hpp"
#include "domishold/generators.hpp"
#include "domishold/io.hpp"

using namespace domishold;
using json = nlohmann::json;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Temporary file removed on scope exit.
struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path("cli_test_" + name) {
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const std::string data = DOMISHOLD_TEST_DATA;

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("recognize-td on K4") {
    const Run r = run({"--json", "recognize-td", data + "/k4.graph"});
    CHECK(r.code == kExitYes);
    const json j = r.report();
    CHECK(j["verdict"] == "yes");
    CHECK(j["structure"]["weights"] == json::array({1, 1, 1, 1}));
    CHECK(j["structure"]["t"] == 2);
    CHECK(j["exit_code"] == 0);
    CHECK(j["command"] == "recognize-td");
    const Run text = run({"recognize-td", data + "/k4.graph"});
    CHECK(text.out.find("weights: 1 1 1 1") != std::string::npos);
    CHECK(text.out.find("t: 2") != std::string::npos);
}

TEST_CASE("recognize-td on C4 prints a witness") {
    const Run r = run({"--json", "recognize-td", data + "/c4.graph"});
    CHECK(r.code == kExitNo);
    const json j = r.report();
    CHECK(j["verdict"] == "no");
    CHECK(j.contains("witness"));
    CHECK(j["witness"]["false_points"].size() == 2);
    CHECK(j.contains("certificate"));
    CHECK(run({"recognize-td", data + "/c4.graph"}).out.find("witness:") != std::string::npos);
}

TEST_CASE("input errors exit with 2") {
    const Run bad = run({"recognize-td", data + "/malformed.graph"});
    CHECK(bad.code == kExitError);
    CHECK(bad.err.find("line 1") != std::string::npos);
    CHECK(run({"recognize-td", data + "/missing.graph"}).code == kExitError);
    CHECK(run({"frobnicate"}).code == kExitError);
    CHECK(run({}).code == kExitError);
    CHECK(run({"solve", data + "/k4.graph"}).code == kExitError);
    CHECK(run({"solve", data + "/k4.graph", "--tds", "--ds"}).code == kExitError);
    CHECK(run({"--max-oracle-n", "30", "recognize-td", data + "/k4.graph"}).code == kExitError);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).out.find(version()) != std::string::npos);
}

TEST_CASE("recognize-htd") {
    CHECK(run({"recognize-htd", data + "/p4.graph"}).code == kExitYes);
    const Run p = run({"--json", "recognize-htd", data + "/2p3.graph"});
    CHECK(p.code == kExitNo);
    CHECK(p.report()["witness"]["forbidden"] == "F5");
    const TempFile f13("f13.graph", to_text(forbidden_graph(13).graph));
    const Run r = run({"--json", "recognize-htd", f13.path});
    CHECK(r.report()["witness"]["forbidden"] == "F13");
    CHECK(r.report()["witness"]["embedding"] == json::array({1, 2, 3, 4, 5, 6}));
    CHECK(run({"recognize-htd", f13.path}).out.find("F13") != std::string::npos);
}

TEST_CASE("solve") {
    const Run k4 = run({"--json", "solve", data + "/k4.graph", "--tds"});
    CHECK(k4.code == kExitYes);
    CHECK(k4.report()["size"] == 2);
    CHECK(k4.report()["method"] == "greedy");
    const TempFile star("star.graph", to_text(star_graph(4)));
    const Run ds = run({"--json", "--oracle", "solve", star.path, "--ds"});
    CHECK(ds.code == kExitYes);
    CHECK(ds.report()["size"].get<int>() <= 2);
    CHECK(ds.report()["oracle"]["agrees"] == true);
    CHECK(run({"solve", data + "/c4.graph", "--tds"}).code == kExitNo);
    const Run oracle = run({"--json", "--oracle", "solve", data + "/k4.graph", "--tds"});
    CHECK(oracle.report()["oracle"]["size"] == 2);
    const TempFile iso("iso.graph", to_text(add_isolated(complete_graph(3))));
    CHECK(run({"solve", iso.path, "--tds"}).code == kExitError);
}

TEST_CASE("hypergraph") {
    const TempFile h("h.hgraph", "p hgraph 3 2\nh 1 2\nh 1 3\n");
    const Run t = run({"--json", "hypergraph", h.path, "--threshold"});
    CHECK(t.code == kExitYes);
    CHECK(t.report()["structure"]["weights"] == json::array({2, 1, 1}));
    CHECK(t.report()["structure"]["t"] == 2);
    const TempFile tri("tri.hgraph", "p hgraph 3 3\nh 1 2\nh 1 3\nh 2 3\n");
    CHECK(run({"hypergraph", tri.path, "--dually-sperner"}).code == kExitYes);
    const TempFile two("two.hgraph", "p hgraph 4 2\nh 1 2\nh 3 4\n");
    const Run pair = run({"--json", "hypergraph", two.path, "--dually-sperner"});
    CHECK(pair.code == kExitNo);
    CHECK(pair.report()["violation"] == json::array({json::array({1, 2}), json::array({3, 4})}));
    CHECK(run({"hypergraph", h.path, "--dually-sperner"}).code == kExitYes);
    const TempFile c4("c4.hgraph", "p hgraph 4 2\nh 1 3\nh 2 4\n");
    CHECK(run({"hypergraph", c4.path, "--threshold"}).code == kExitNo);
    const Run dsp = run({"--json", "hypergraph", c4.path, "--dually-sperner"});
    CHECK(dsp.code == kExitNo);
    CHECK(dsp.report()["violation"].size() == 2);
    const TempFile one("one.dnf", "p dnf 2 1\ni\n");
    const Run c1 = run({"--json", "hypergraph", one.path, "--threshold"});
    CHECK(c1.code == kExitYes);
    CHECK(c1.report()["constant_one"] == true);
    CHECK(run({"hypergraph", h.path}).code == kExitError);
}

TEST_CASE("generate") {
    const Run f9 = run({"generate", "forbidden", "9"});
    CHECK(f9.code == kExitYes);
    CHECK(parse_graph(f9.out) == forbidden_graph(9).graph);
    const Run seq = run({"generate", "threshold_from_sequence", "iuiu"});
    CHECK(parse_graph(seq.out) == threshold_from_sequence(parse_creation_sequence("iuiu")));
    const Run k5 = run({"generate", "complete", "5", "--format", "graph6"});
    CHECK(decode_graph6(k5.out.substr(0, k5.out.size() - 1)) == complete_graph(5));
    CHECK(run({"generate", "nonsense", "3"}).code == kExitError);
    CHECK(run({"generate", "complete", "5", "--format", "dot"}).code == kExitError);
}

TEST_CASE("random families follow the seed") {
    const Run a = run({"--seed", "7", "generate", "random", "10", "0.5"});
    const Run b = run({"--seed", "7", "generate", "random", "10", "0.5"});
    CHECK(a.code == kExitYes);
    CHECK(a.out == b.out);
    setenv("DOMISHOLD_SEED", "7", 1);
    const Run c = run({"generate", "random", "10", "0.5"});
    unsetenv("DOMISHOLD_SEED");
    CHECK(c.out == a.out);
    setenv("DOMISHOLD_SEED", "x", 1);
    CHECK(run({"generate", "random", "10", "0.5"}).code == kExitError);
    unsetenv("DOMISHOLD_SEED");
}

TEST_CASE("equivalence") {
    const Run p4 = run({"--json", "equivalence", data + "/p4.graph"});
    CHECK(p4.code == kExitYes);
    CHECK(p4.report()["legs"].size() == 7);
    CHECK(p4.report()["verdict"] == "yes");
    const Run c4 = run({"--json", "equivalence", data + "/c4.graph"});
    CHECK(c4.code == kExitYes);
    CHECK(c4.report()["verdict"] == "no");
    const Run census = run({"--json", "equivalence", "--census", "5"});
    CHECK(census.code == kExitYes);
    CHECK(census.report()["graphs"] == 1 + 1 + 2 + 8 + 64 + 1024);
    CHECK(census.report()["disagreements"] == 0);
    const Run rnd = run({"--json", "--seed", "3", "equivalence", "--random", "20"});
    CHECK(rnd.code == kExitYes);
    CHECK(run({"equivalence"}).code == kExitError);
    CHECK(run({"equivalence", data + "/p4.graph", "--census", "2"}).code == kExitError);
}

TEST_CASE("emitted reports verify") {
    const TempFile star("vstar.graph", to_text(star_graph(3)));
    const TempFile h("v.hgraph", "p hgraph 4 2\nh 1 3\nh 2 4\n");
    const std::vector<std::vector<std::string>> commands{
        {"recognize-td", data + "/k4.graph"},    {"recognize-td", data + "/c4.graph"},
        {"recognize-htd", data + "/2p3.graph"},  {"solve", data + "/k4.graph", "--tds"},
        {"solve", star.path, "--ds"},            {"hypergraph", h.path, "--threshold"},
        {"hypergraph", h.path, "--dually-sperner"}, {"equivalence", data + "/c4.graph"},
    };
    for (const auto& cmd : commands) {
        CAPTURE(cmd[0]);
        const TempFile report("report.json", "");
        std::vector<std::string> args{"--json", "--out", report.path};
        args.insert(args.end(), cmd.begin(), cmd.end());
        const Run r = run(args);
        CHECK(r.code != kExitError);
        CHECK(r.out.empty());
        const Run v = run({"verify", cmd[1], report.path});
        CHECK(v.code == kExitYes);
        CHECK(v.out.find("report verified") != std::string::npos);
    }
}

TEST_CASE("tampered reports are rejected") {
    const TempFile report("tampered.json", "");
    run({"--json", "--out", report.path, "recognize-td", data + "/k4.graph"});
    json j;
    std::ifstream(report.path) >> j;
    j["structure"]["t"] = 3;
    std::ofstream(report.path) << j.dump();
    CHECK(run({"verify", data + "/k4.graph", report.path}).code == kExitNo);
    std::ofstream(report.path) << "not json";
    CHECK(run({"verify", data + "/k4.graph", report.path}).code == kExitError);
}

TEST_CASE("batch") {
    const Run r = run({"--json", "batch", data + "/k4.graph", data + "/c4.graph", data + "/2p3.graph"});
    CHECK(r.code == kExitYes);
    const json j = r.report();
    REQUIRE(j["results"].size() == 3);
    CHECK(j["results"][0]["td"]["verdict"] == "yes");
    CHECK(j["results"][1]["td"]["verdict"] == "no");
    CHECK(j["results"][2]["htd"]["witness"]["forbidden"] == "F5");
    CHECK(run({"batch", data + "/k4.graph", data + "/malformed.graph"}).code == kExitError);
}

TEST_CASE("oracle cross-check on recognition") {
    const Run r = run({"--json", "--oracle", "recognize-td", data + "/p4.graph"});
    CHECK(r.report()["oracle"]["agrees"] == true);
    const Run h = run({"--json", "--oracle", "recognize-htd", data + "/2p3.graph"});
    CHECK(h.report()["oracle"]["agrees"] == true);
}

}  // TEST_SUITE
