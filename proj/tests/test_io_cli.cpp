#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "macforge/io.hpp"
#include "macforge/splitting.hpp"

using namespace macforge;

namespace {

std::string data_path(const std::string& name) {
    return std::string(MACFORGE_TEST_DATA_DIR) + "/" + name;
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

/// Runs the built binary through the shell, capturing stdout bytes exactly.
/// `prefix` lets tests prepend environment assignments.
CliResult run_cli(const std::string& args, const std::string& prefix = "") {
    static int counter = 0;
    const std::string capture = "/tmp/macforge_cli_test_" + std::to_string(++counter) + ".out";
    const std::string command =
        prefix + "\"" + MACFORGE_CLI_PATH + "\" " + args + " > " + capture + " 2>/dev/null";
    const int status = std::system(command.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture, std::ios::binary);
    result.output.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    std::remove(capture.c_str());
    return result;
}

}  // namespace

TEST_CASE("json and text inputs describe the same complex") {
    const SimplicialComplex from_json = parse_complex_file(data_path("square.json"));
    const SimplicialComplex from_text = parse_complex_file(data_path("square.txt"));
    CHECK(from_json == from_text);
    CHECK(from_json == square_complex());
    CHECK(input_hash(from_json) == input_hash(from_text));
}

TEST_CASE("json parser rejects malformed input") {
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 4, \"facets\": [[1,3]"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("[1,2,3]"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("{\"facets\": [[1]]}"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 2}"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": \"2\", \"facets\": [[1]]}"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 2, \"facets\": 7}"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 2, \"facets\": [7]}"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 2, \"facets\": [[\"a\"]]}"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 0, \"facets\": [[1]]}"), parse_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 99, \"facets\": [[1]]}"), parse_error);

    // Schema-valid JSON with mathematically invalid content is a validation
    // problem, not a parse problem.
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 2, \"facets\": []}"), validation_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 2, \"facets\": [[3]]}"), validation_error);
    CHECK_THROWS_AS(parse_complex_json("{\"m\": 3, \"facets\": [[1,2]]}"), validation_error);
    CHECK_NOTHROW(parse_complex_json("{\"m\": 3, \"facets\": [[1,2]]}", /*allow_ghost=*/true));
}

TEST_CASE("text parser rejects malformed input") {
    CHECK(parse_complex_text("m=2\n1\n2\n") == disjoint_points(2));
    CHECK(parse_complex_text("  # leading comment\n\nm=2\n 1 \n2") == disjoint_points(2));
    CHECK_THROWS_AS(parse_complex_text(""), parse_error);
    CHECK_THROWS_AS(parse_complex_text("2\n1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_complex_text("m=two\n1\n"), parse_error);
    CHECK_THROWS_AS(parse_complex_text("m=2\n1 x\n"), parse_error);
    CHECK_THROWS_AS(parse_complex_text("m=2\n1 2 3\n"), validation_error);
}

TEST_CASE("input hash is frozen and insensitive to facet presentation") {
    CHECK(input_hash(square_complex()) == "0xd3ba441e5266a2be");

    // Same face set through a different facet list: subsumed faces and
    // permuted order leave the hash alone.
    const SimplicialComplex shuffled = SimplicialComplex::from_facets(
        4, {{2, 4}, {1, 4}, {2, 3}, {1, 3}, {3}, {1}});
    CHECK(input_hash(shuffled) == input_hash(square_complex()));

    CHECK(input_hash(rp2_complex()) != input_hash(square_complex()));
    CHECK(input_hash(disjoint_points(2)) != input_hash(full_simplex(2)));
}

TEST_CASE("json emitters have frozen shapes") {
    CHECK(to_json(AbelianGroup{0, {Int(2)}}).dump() ==
          "{\"rank\":0,\"torsion\":[2],\"text\":\"Z/2\"}");
    CHECK(to_json(AbelianGroup::free(3)).dump() == "{\"rank\":3,\"torsion\":[],\"text\":\"Z^3\"}");
    CHECK(to_json(GWElement{2, 3}).dump() ==
          "{\"a\":2,\"b\":3,\"rank\":5,\"signature\":-1,\"text\":\"2<1> + 3<-1>\"}");
    CHECK(complex_to_json(square_complex()).dump() ==
          "{\"m\":4,\"facets\":[[1,3],[2,3],[1,4],[2,4]]}");

    BigradedTable table;
    table.add(0, 0, 1);
    table.add(3, 2, 2);
    CHECK(to_json(table).dump() == "[{\"i\":0,\"j\":0,\"rank\":1},{\"i\":3,\"j\":2,\"rank\":2}]");

    const Json splitting = to_json(stable_splitting(square_complex(), Flavor::motivic));
    CHECK(splitting["flavor"] == "motivic");
    CHECK(splitting["summands"].size() == 7);
    CHECK(splitting["summands"][0]["I"] == Json::array({1, 2}));
    CHECK(splitting["summands"][0]["shift"] == Json::array({4, 2}));
}

TEST_CASE("cli reports are byte-stable") {
    const std::string args = "invariants " + data_path("square.json") + " --markdown";
    const CliResult first = run_cli(args);
    const CliResult second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(!first.output.empty());

    // Worker count must never leak into the bytes.
    const CliResult one_thread = run_cli(args, "MACFORGE_THREADS=1 ");
    const CliResult many_threads = run_cli(args, "MACFORGE_THREADS=13 ");
    CHECK(one_thread.exit_code == 0);
    CHECK(one_thread.output == first.output);
    CHECK(many_threads.output == first.output);

    const std::string random_args = "oracle-verify --random 4 5 --seed 11";
    CHECK(run_cli(random_args).output == run_cli(random_args).output);
}

TEST_CASE("cli exit codes follow the error taxonomy") {
    CHECK(run_cli("invariants " + data_path("corrupt.json")).exit_code == 2);
    CHECK(run_cli("invariants /nonexistent/path.json").exit_code == 2);
    CHECK(run_cli("no-such-subcommand").exit_code == 2);
    CHECK(run_cli("invariants " + data_path("ghost.json")).exit_code == 3);
    CHECK(run_cli("invariants " + data_path("ghost.json") + " --allow-ghost").exit_code == 0);
    CHECK(run_cli("euler " + data_path("square.json") + " --field Q").exit_code == 2);
    CHECK(run_cli("oracle-verify").exit_code == 2);
}

TEST_CASE("cli invariants output carries the expected values") {
    const CliResult square = run_cli("invariants " + data_path("square.json"));
    REQUIRE(square.exit_code == 0);
    const Json report = Json::parse(square.output);
    CHECK(report["subcommand"] == "invariants");
    CHECK(report["input"]["hash"] == "0xd3ba441e5266a2be");
    CHECK(report["payload"]["euler"]["chi_a1"]["text"] == "0");
    CHECK(to_json(a1_betti_numbers(square_complex())) == report["payload"]["a1_betti"]);
    for (const Json& check : report["checks"]) CHECK(check["passed"] == true);

    const CliResult rp2 = run_cli("invariants " + data_path("rp2.json"));
    REQUIRE(rp2.exit_code == 0);
    CHECK(rp2.output.find("KMW(3)^10 ⊕ KMW(4)^15 ⊕ KMW(5)^6 ⊕ (Z/2 ⊗ KMW(6))") !=
          std::string::npos);

    const CliResult simplex = run_cli("invariants " + data_path("simplex3.json"));
    REQUIRE(simplex.exit_code == 0);
    const Json simplex_report = Json::parse(simplex.output);
    CHECK(simplex_report["payload"]["euler"]["chi_a1"]["text"] == "<1>");
    CHECK(simplex_report["payload"]["splitting"]["summands"].empty());
}

TEST_CASE("cli subcommand payloads") {
    const Json betti =
        Json::parse(run_cli("betti " + data_path("rp2.json") + " --markdown").output);
    CHECK(betti["payload"]["a1_betti_markdown"].get<std::string>().find("| i \\ j |") == 0);
    CHECK(betti["checks"][0]["name"] == "classical table reindexes to the a1 table");
    CHECK(betti["checks"][0]["passed"] == true);

    const Json affine =
        Json::parse(run_cli("affine " + data_path("two_points.json") + " --model dual").output);
    CHECK(affine["payload"]["presentation"]["text"] == "k[x1,x2,y1,y2]/(x1*y1 + x2*y2 - 1)");

    const Json homology = Json::parse(run_cli("homology " + data_path("square.json")).output);
    CHECK(homology["payload"]["zk_cohomology"].size() == 7);
    CHECK(homology["payload"]["zk_cohomology"][6]["rank"] == 1);
    CHECK(homology["payload"]["rzk_homology"][2]["rank"] == 1);

    const Json verify = Json::parse(run_cli("oracle-verify --exhaustive 3").output);
    CHECK(verify["payload"]["complexes_checked"] == 12);
    REQUIRE(verify["checks"].size() == 5);
    for (const Json& check : verify["checks"]) {
        CHECK(check["passed"] == true);
        CHECK(check["ran"] == 12);
    }

    const Json single = Json::parse(run_cli("oracle-verify " + data_path("rp2.json")).output);
    for (const Json& check : single["checks"]) CHECK(check["passed"] == true);
}
