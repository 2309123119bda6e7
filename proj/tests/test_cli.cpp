#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dcycle/cli.hpp"
#include "dcycle/corpus.hpp"
#include "dcycle/io.hpp"

using namespace dcycle;
using nlohmann::json;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "dcycle-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
    std::ofstream f(p, std::ios::binary);
    f << content;
}

} // namespace

TEST_CASE("homology subcommand reports exact Betti numbers") {
    CliRun r = run_cli({"homology", "corpus:rp2_6", "--field", "gf2"});
    REQUIRE(r.code == 0);
    json report = json::parse(r.out);
    CHECK(report["name"] == "rp2_6");
    CHECK(report["field"] == "gf2");
    CHECK(report["betti"]["0"] == 0);
    CHECK(report["betti"]["1"] == 1);
    CHECK(report["betti"]["2"] == 1);

    CliRun rq = run_cli({"homology", "corpus:rp2_6", "--field", "q", "--dim", "2"});
    json rq_report = json::parse(rq.out);
    CHECK(rq_report["betti"] == json{{"2", 0}});
}

TEST_CASE("classify subcommand") {
    CliRun r = run_cli({"classify", "corpus:glued_pyramids"});
    REQUIRE(r.code == 0);
    json report = json::parse(r.out);
    CHECK(report["cycle"] == true);
    CHECK(report["face_minimal"] == false);
    CHECK(report["pseudo_manifold"] == false);
    CHECK(report["orientable"] == true);
}

TEST_CASE("certify subcommand and exit codes") {
    CliRun hit = run_cli({"certify", "corpus:hollow_tetrahedron", "--field", "q", "--dim", "2"});
    REQUIRE(hit.code == 0);
    json cert = json::parse(hit.out);
    CHECK(cert["kind"] == "orientable_cycle");
    CHECK(cert["verified"] == true);

    CliRun miss = run_cli({"certify", "corpus:rp2_6", "--field", "q", "--dim", "2"});
    CHECK(miss.code == 1);
    CHECK(json::parse(miss.out)["certificate"].is_null());

    CliRun graph = run_cli({"certify", "corpus:six_cycle", "--field", "gf3", "--dim", "1"});
    REQUIRE(graph.code == 0);
    json gcert = json::parse(graph.out);
    CHECK(gcert["kind"] == "graph_cycle");
    CHECK(gcert["vertex_sequence"].size() == 6);
}

TEST_CASE("cycles, orient, decompose and oracle subcommands") {
    CHECK(run_cli({"cycles", "corpus:octahedron"}).code == 0);
    CHECK(run_cli({"cycles", "corpus:moore_mod3"}).code == 1);

    CHECK(run_cli({"orient", "corpus:torus_7"}).code == 0);
    CliRun rp2 = run_cli({"orient", "corpus:rp2_6"});
    CHECK(rp2.code == 1);
    CHECK(json::parse(rp2.out)["orientable"] == false);

    CliRun dec = run_cli({"decompose", "corpus:glued_pyramids"});
    REQUIRE(dec.code == 0);
    CHECK(json::parse(dec.out)["parts"].size() == 2);
    CHECK(run_cli({"decompose", "corpus:moore_mod3"}).code == 2); // not a cycle: input error

    CliRun oracle = run_cli({"oracle", "corpus:hollow_tetrahedron", "--dim", "2"});
    REQUIRE(oracle.code == 0);
    json o = json::parse(oracle.out);
    CHECK(o["cycles"] == 2);
    CHECK(o["boundaries"] == 1);
    CHECK(o["betti"] == 1);
    CHECK(run_cli({"oracle", "corpus:moore_mod3", "--dim", "2"}).code == 2); // over bound
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli({"homology", "corpus:nonexistent"}).code == 2);
    CHECK(run_cli({"homology", "/nonexistent/file.json"}).code == 2);
    CHECK(run_cli({"homology", "corpus:six_cycle", "--field", "gf:4"}).code == 2);
    CHECK(run_cli({"nonsense"}).code == 2);

    const auto bad = temp_dir() / "bad.json";
    write_file(bad, "{\"facets\": [[\"a\"");
    CHECK(run_cli({"homology", bad.string()}).code == 2);
}

TEST_CASE("corpus list and emit") {
    CliRun list = run_cli({"corpus", "list"});
    REQUIRE(list.code == 0);
    CHECK(list.out.find("rp2_6\n") != std::string::npos);
    CHECK(list.out.find("moore_mod3\n") != std::string::npos);

    CliRun emit = run_cli({"corpus", "emit", "octahedron"});
    REQUIRE(emit.code == 0);
    SimplicialComplex parsed = io::parse(emit.out, "octahedron");
    CHECK(parsed == corpus::corpus_get("octahedron"));

    CliRun text = run_cli({"corpus", "emit", "octahedron", "--format", "text"});
    REQUIRE(text.code == 0);
    CHECK(io::parse(text.out, "octahedron") == corpus::corpus_get("octahedron"));

    CHECK(run_cli({"corpus", "emit", "nope"}).code == 2);
}

TEST_CASE("round trip through both file formats for every corpus entry") {
    for (const auto& entry : corpus::corpus_list()) {
        SimplicialComplex original = entry.builder();

        SimplicialComplex via_json = io::parse_json(io::emit_json(original), "x");
        CHECK(via_json == original);
        CHECK(via_json.name() == original.name());

        SimplicialComplex via_text = io::parse_text(io::emit_text(original), original.name());
        CHECK(via_text == original);

        // emission is canonical: a second round trip is byte-identical
        CHECK(io::emit_json(via_json) == io::emit_json(original));
        CHECK(io::emit_text(via_text) == io::emit_text(original));
    }
}

TEST_CASE("small reports match their golden bytes") {
    CliRun r = run_cli({"homology", "corpus:hollow_tetrahedron", "--field", "gf2"});
    REQUIRE(r.code == 0);
    CHECK(r.out ==
          "{\n"
          "  \"betti\": {\n"
          "    \"0\": 0,\n"
          "    \"1\": 0,\n"
          "    \"2\": 1\n"
          "  },\n"
          "  \"field\": \"gf2\",\n"
          "  \"name\": \"hollow_tetrahedron\"\n"
          "}\n");
}

TEST_CASE("cycles --dim checks the pure skeleton of that dimension") {
    // the 1-skeleton of the tetrahedron shell is K4: every vertex has odd
    // degree, so it is not a 1-dimensional cycle
    CliRun skel = run_cli({"cycles", "corpus:hollow_tetrahedron", "--dim", "1"});
    CHECK(skel.code == 1);
    json report = json::parse(skel.out);
    CHECK(report["cycle"] == false);
    CHECK(report["odd_ridges"].size() == 4);

    CliRun top = run_cli({"cycles", "corpus:hollow_tetrahedron"});
    CHECK(top.code == 0);
}

TEST_CASE("arbitrary prime fields via gf:<p>") {
    CliRun r = run_cli({"homology", "corpus:torus_7", "--field", "gf:13"});
    REQUIRE(r.code == 0);
    json report = json::parse(r.out);
    CHECK(report["field"] == "gf:13");
    CHECK(report["betti"]["1"] == 2);
    CHECK(report["betti"]["2"] == 1);
}

TEST_CASE("reports are byte-deterministic across runs") {
    for (const auto& entry : corpus::corpus_list()) {
        const std::string source = "corpus:" + entry.name;
        CliRun a = run_cli({"homology", source, "--field", "gf2"});
        CliRun b = run_cli({"homology", source, "--field", "gf2"});
        CHECK(a.out == b.out);
        CliRun c1 = run_cli({"classify", source});
        CliRun c2 = run_cli({"classify", source});
        CHECK(c1.out == c2.out);
    }
}

TEST_CASE("file loading supports text comments and format sniffing") {
    const auto dir = temp_dir();
    write_file(dir / "square.txt",
               "# a square\n"
               "a b\nb c\n\nc d\nd a # closing edge\n");
    CliRun r = run_cli({"cycles", (dir / "square.txt").string()});
    REQUIRE(r.code == 0);
    json report = json::parse(r.out);
    CHECK(report["cycle"] == true);
    CHECK(report["name"] == "square");

    write_file(dir / "square.json",
               "{\"name\": \"square\", \"facets\": [[\"a\",\"b\"],[\"b\",\"c\"],[\"c\",\"d\"],[\"d\",\"a\"]]}");
    CliRun rj = run_cli({"cycles", (dir / "square.json").string()});
    REQUIRE(rj.code == 0);
    CHECK(json::parse(rj.out)["cycle"] == true);
}

TEST_CASE("directory batches run per file with deterministic order") {
    const auto dir = temp_dir() / "batch";
    std::filesystem::create_directories(dir);
    write_file(dir / "a_square.txt", "a b\nb c\nc d\nd a\n");
    write_file(dir / "b_path.txt", "a b\nb c\n");

    CliRun seq = run_cli({"cycles", dir.string()});
    CHECK(seq.code == 1); // the path is not a cycle
    json reports = json::parse(seq.out);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0]["file"] == "a_square.txt");
    CHECK(reports[0]["report"]["cycle"] == true);
    CHECK(reports[1]["file"] == "b_path.txt");
    CHECK(reports[1]["report"]["cycle"] == false);

    CliRun par = run_cli({"cycles", dir.string(), "--jobs", "3"});
    CHECK(par.out == seq.out);
    CHECK(par.code == seq.code);
}
