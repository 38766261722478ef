#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "flowerkit/cli.hpp"
#include "flowerkit/constructions.hpp"
#include "flowerkit/io.hpp"

using namespace flowerkit;

namespace {

struct RunOutcome {
    int exit = 0;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

RunOutcome run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch() {
    auto dir = std::filesystem::temp_directory_path() / "flowerkit_tooling_tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string scratch_file(const std::string& name, const std::string& bytes) {
    auto path = (scratch() / name).string();
    write_file(path, bytes);
    return path;
}

} // namespace

TEST_CASE("input digest matches the reference vectors") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a64_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("file helpers") {
    auto path = scratch_file("roundtrip.txt", "payload\n");
    CHECK(read_file(path) == "payload\n");
    CHECK_THROWS_AS(read_file((scratch() / "does-not-exist").string()), Error);
}

TEST_CASE("json shapes") {
    Json fam = family_json(fano());
    CHECK(fam["n"] == 7);
    CHECK(fam["size"] == 7);
    CHECK(fam["edges"][0] == Json::array({1, 2, 4}));
    RunManifest man;
    man.command = "demo";
    Json mj = manifest_json(man);
    CHECK(mj["tool_version"] == "0.1.0");
    CHECK(mj["input_digest"] == "none");
    CHECK(mj["outputs"] == Json::array());
}

TEST_CASE("construct reports the family and its invariants") {
    auto res = run({"construct", "fano", "--C", "3/2", "--C", "2"});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["manifest"]["command"] == "construct");
    CHECK(rep["manifest"]["parameters"]["kind"] == "fano");
    CHECK(rep["family"]["n"] == 7);
    CHECK(rep["family"]["size"] == 7);
    CHECK(rep["summary"]["max_degree"] == 3);
    CHECK(rep["summary"]["tau"] == 3);
    CHECK(rep["summary"]["intersecting"] == true);
    CHECK(rep["summary"]["values"][0]["value"] == "5/2");
    CHECK(rep["summary"]["values"][1]["value"] == "1");
    CHECK(rep["family_text"] == fano().to_text());

    auto star = run({"construct", "star", "--n", "5", "--r", "2"});
    REQUIRE(star.exit == 0);
    CHECK(star.json()["family"]["size"] == 4);
}

TEST_CASE("construct writes the family file") {
    auto path = (scratch() / "ak.fam").string();
    auto res = run({"construct", "a_k", "--n", "10", "--r", "3", "--out", path});
    REQUIRE(res.exit == 0);
    CHECK(read_file(path) == a_k(10, 3).to_text());
    Json rep = res.json();
    CHECK(rep["family_text"] == a_k(10, 3).to_text());
    CHECK(rep["manifest"]["outputs"] == Json::array({path}));
}

TEST_CASE("construct rejects unknown kinds and bad parameters") {
    auto res = run({"construct", "bogus"});
    CHECK(res.exit == 2);
    CHECK(res.json()["error"]["code"] == "BadParams");
    auto missing = run({"construct", "star", "--r", "2"});
    CHECK(missing.exit == 2);
    CHECK(missing.json()["error"]["code"] == "BadParams");
    CHECK(run({"construct"}).exit == 2); // CLI-level: positional missing
}

TEST_CASE("analyze reports invariants from a family file") {
    std::string text = fano().to_text();
    auto path = scratch_file("fano.fam", text);
    auto res = run({"analyze", "--family", path, "--C", "1"});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["manifest"]["input_digest"] == fnv1a64_hex(text));
    CHECK(rep["family"]["size"] == 7);
    CHECK_FALSE(rep["family"].contains("edges")); // header only: input is on disk
    CHECK(rep["analysis"]["tau"] == 3);
    CHECK(rep["analysis"]["degree_ratio"] == "3/7");
    CHECK(rep["analysis"]["values"][0]["value"] == "4");
    CHECK(rep["analysis"]["two_out_of_three"]["defined"] == false);

    // a family carrying the two-out-of-three structure reports its triple
    auto akp = scratch_file("ak8.fam", a_k(8, 3).to_text());
    Json arep = run({"analyze", "--family", akp}).json();
    CHECK(arep["analysis"]["two_out_of_three"]["defined"] == true);
    CHECK(arep["analysis"]["two_out_of_three"]["triple"] == Json::array({1, 2, 3}));
    CHECK(arep["analysis"]["two_out_of_three"]["additions"] == "0");
}

TEST_CASE("analyze propagates parse errors with line numbers") {
    auto bad = scratch_file("bad.fam", "5 2\n1 9\n");
    auto res = run({"analyze", "--family", bad});
    CHECK(res.exit == 2);
    Json rep = res.json();
    CHECK(rep["error"]["code"] == "ParseError");
    CHECK(rep["error"]["line"] == 2);

    auto gone = run({"analyze", "--family", (scratch() / "nope.fam").string()});
    CHECK(gone.exit == 2);
    CHECK(gone.json()["error"]["code"] == "ParseError");
    CHECK_FALSE(gone.json()["error"].contains("line"));
}

TEST_CASE("flower-base extracts the base with inheritance and bounds") {
    auto path = scratch_file("hm.fam", hilton_milner(9, 3).to_text());
    auto res = run({"flower-base", "--family", path, "--alpha", "3"});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["tau"] == 2);
    CHECK(rep["base"]["size"] == 4);
    CHECK(rep["base"]["members"][0]["set"] == Json::array({1, 2}));
    CHECK(rep["base"]["members"][0]["origin"] == "core");
    CHECK(rep["base"]["members"][3]["set"] == Json::array({2, 3, 4}));
    CHECK(rep["base"]["members"][3]["origin"] == "edge");
    CHECK(rep["inheritance"]["pass"] == true);
    REQUIRE(rep["cardinality_bounds"].size() == 3);
    CHECK(rep["cardinality_bounds"][2]["k"] == 3);
    CHECK(rep["cardinality_bounds"][2]["bound5"] == "102");

    auto fano_path = scratch_file("fano2.fam", fano().to_text());
    auto low = run({"flower-base", "--family", fano_path, "--alpha", "2"});
    CHECK(low.exit == 2);
    CHECK(low.json()["error"]["code"] == "ThresholdTooSmall");
}

TEST_CASE("search is exact by default and reruns byte-identically") {
    auto res = run({"search", "--n", "5", "--r", "2", "--C", "1"});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["result"]["best_value"] == "1");
    CHECK(rep["result"]["exhaustive"] == true);
    CHECK_FALSE(rep["result"].contains("seed"));
    CHECK(rep["result"]["witness"]["size"] == 3);
    auto again = run({"search", "--n", "5", "--r", "2", "--C", "1"});
    CHECK(again.out == res.out);
}

TEST_CASE("search anneal records the seed and is reproducible") {
    std::vector<std::string> args{"search", "--n", "7", "--r", "3", "--C", "1",
                                  "--anneal", "--iterations", "2000", "--seed", "5"};
    auto a = run(args);
    auto b = run(args);
    REQUIRE(a.exit == 0);
    CHECK(a.out == b.out);
    Json rep = a.json();
    CHECK(rep["result"]["exhaustive"] == false);
    CHECK(rep["result"]["seed"] == 5);
    CHECK(rep["manifest"]["parameters"]["mode"] == "anneal");

    auto both = run({"search", "--n", "5", "--r", "2", "--C", "1", "--exhaustive", "--anneal"});
    CHECK(both.exit == 2);
    CHECK(both.json()["error"]["code"] == "BadParams");
}

TEST_CASE("reports can be redirected to a file") {
    auto path = (scratch() / "search.json").string();
    auto res = run({"search", "--n", "5", "--r", "2", "--C", "1", "--out", path});
    REQUIRE(res.exit == 0);
    CHECK(res.out.empty());
    std::string first = read_file(path);
    Json rep = Json::parse(first);
    CHECK(rep["result"]["best_value"] == "1");
    CHECK(rep["manifest"]["parameters"]["out"] == path);
    CHECK(rep["manifest"]["outputs"] == Json::array({path}));
    run({"search", "--n", "5", "--r", "2", "--C", "1", "--out", path});
    CHECK(read_file(path) == first);
}

TEST_CASE("verify folklore cli") {
    auto res = run({"verify", "folklore", "--n0", "7"});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["report"]["count"] == 3215);
    CHECK(rep["report"]["max_edges"] == 10);
    CHECK(rep["report"]["max_span"] == 7);
    CHECK(rep["report"]["witnesses"].size() == 7);
    CHECK(rep["pass"] == true);
    CHECK(run({"verify", "folklore", "--n0", "12"}).exit == 2);
}

TEST_CASE("verify designs cli") {
    auto res = run({"verify", "designs", "--v", "7", "--k", "3", "--lambda", "1",
                    "--expect-count", "30"});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["count"] == 30);
    CHECK(rep["isomorphism_classes"] == 1);
    CHECK(rep["coverage_verified"] == true);
    CHECK(rep["all_fano"] == true);
    CHECK(rep["pass"] == true);

    auto wrong = run({"verify", "designs", "--v", "7", "--k", "3", "--lambda", "1",
                      "--expect-count", "31"});
    CHECK(wrong.exit == 1);
    CHECK(wrong.json()["pass"] == false);

    auto none = run({"verify", "designs", "--v", "6", "--k", "3", "--lambda", "1"});
    CHECK(none.exit == 0);
    CHECK(none.json()["count"] == 0);
}

TEST_CASE("verify stability cli") {
    auto res = run({"verify", "stability", "--trials", "25", "--seed", "3"});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["ekr_degree_family"]["pass"] == true);
    CHECK(rep["stability"]["base_diversity"] == 36);
    CHECK(rep["stability"]["violations"] == Json::array());
    CHECK(rep["pass"] == true);
}

TEST_CASE("verify constructions cli reports the known mismatch points") {
    auto res = run({"verify", "constructions"});
    CHECK(res.exit == 1); // documented: the closed forms fail where the max degree moves
    Json rep = res.json();
    CHECK(rep["checks"] == 2480);
    CHECK(rep["pass"] == false);
    REQUIRE(rep["mismatches"].size() == 5);
    auto point = [&](size_t i) {
        return std::tuple<std::string, int, int>(rep["mismatches"][i]["construction"],
                                                 rep["mismatches"][i]["n"], rep["mismatches"][i]["r"]);
    };
    CHECK(point(0) == std::tuple<std::string, int, int>{"a_f", 9, 4});
    CHECK(point(1) == std::tuple<std::string, int, int>{"a_f", 11, 5});
    CHECK(point(2) == std::tuple<std::string, int, int>{"design_3", 14, 5});
    CHECK(point(3) == std::tuple<std::string, int, int>{"design_3", 15, 5});
    CHECK(point(4) == std::tuple<std::string, int, int>{"design_3", 16, 5});
}

TEST_CASE("lp-check baby-lemma cli") {
    auto res = run({"lp-check", "baby-lemma", "--C", "7/4"});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["report"]["pass"] == true);
    CHECK(rep["report"]["threshold"] == "3/4");
    CHECK(rep["report"]["families_checked"] == 6);

    auto path = scratch_file("fano3.fam", fano().to_text());
    auto one = run({"lp-check", "baby-lemma", "--C", "7/4", "--family", path});
    REQUIRE(one.exit == 0);
    Json orep = one.json();
    CHECK(orep["is_fano"] == true);
    CHECK(orep["margin"] == "1");
    CHECK(orep["lp"]["status"] == "optimal");
    CHECK(orep["lp"]["duality_verified"] == true);
    CHECK(orep["pass"] == true);

    auto low = run({"lp-check", "baby-lemma", "--C", "1"});
    CHECK(low.exit == 2);
    CHECK(low.json()["error"]["code"] == "BadParams");
}

TEST_CASE("lp-check solve cli") {
    auto opt = scratch_file("opt.lp",
                            "vars 2\nobjective 1 1\nrow <= 3 1 1\nbound 1 0 -\nbound 2 0 -\n");
    auto res = run({"lp-check", "solve", "--lp", opt});
    REQUIRE(res.exit == 0);
    Json rep = res.json();
    CHECK(rep["outcome"]["status"] == "optimal");
    CHECK(rep["outcome"]["value"] == "3");
    CHECK(rep["outcome"]["duality_verified"] == true);

    auto inf = scratch_file("inf.lp", "vars 1\nobjective 1\nrow >= 2 1\nrow <= 1 1\n");
    CHECK(run({"lp-check", "solve", "--lp", inf}).json()["outcome"]["status"] == "infeasible");

    auto unb = scratch_file("unb.lp", "vars 1\nobjective 1\n");
    CHECK(run({"lp-check", "solve", "--lp", unb}).json()["outcome"]["status"] == "unbounded");

    auto bad = scratch_file("bad.lp", "vars 1\nobjective 1\nrow ?? 1 1\n");
    auto err = run({"lp-check", "solve", "--lp", bad});
    CHECK(err.exit == 2);
    CHECK(err.json()["error"]["line"] == 3);
}

TEST_CASE("cli usage errors") {
    CHECK(run({}).exit == 2);                       // a subcommand is required
    CHECK(run({"frobnicate"}).exit == 2);           // unknown subcommand
    CHECK(run({"--help"}).exit == 0);               // help is not an error
    CHECK(run({"verify"}).exit == 2);               // verify needs a suite
    CHECK(run({"search", "--n", "5"}).exit == 2);   // missing required options
}
