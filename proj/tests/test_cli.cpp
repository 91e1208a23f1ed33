#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "groundkit/cli_app.hpp"
#include "groundkit/graph_io.hpp"
#include "support/corpus_fixtures.hpp"

using namespace groundkit;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::streambuf* old_out = std::cout.rdbuf(out.rdbuf());
  std::streambuf* old_err = std::cerr.rdbuf(err.rdbuf());
  int code = cli::run_cli(args);
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str(), err.str()};
}

// Fresh directory per test case, removed on destruction.
struct TempDir {
  fs::path path;

  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("groundkit_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
  std::string file(const char* name, std::string_view content) const {
    std::string p = (path / name).string();
    write_text_file(p, content);
    return p;
  }
  std::string at(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("build converts a corpus and reports preprocessing metrics") {
  TempDir tmp;
  std::string corpus = tmp.file("corpus.txt", testing::kEightEntryCorpus);
  CliRun r = run({"build", corpus, "--out", tmp.at("out")});
  REQUIRE(r.code == 0);

  json j = json::parse(r.out);
  CHECK(j["definition_quantity"] == 8);
  CHECK(j["initial_invalid"] == 5);
  CHECK(j["saved"] == 1);
  CHECK(j["final_invalid"] == 4);
  CHECK(j["polysemy_filtered"] == 1);
  CHECK(j["symbol_collisions"] == 0);
  CHECK(j["final_quantity"] == 3);

  // stdout and metrics.json carry the same document
  CHECK(read_text_file(tmp.at("out/metrics.json")) == r.out);

  LoadedGraph g = read_arc_list_file(tmp.at("out/graph.tsv"));
  CHECK(g.graph.vertex_count() == 11);
  CHECK(g.graph.arc_count() == 8);
  REQUIRE(g.annotations.find("fruit", "apple") != nullptr);
  CHECK(g.annotations.find("fruit", "apple")->count("define-01") == 1);

  LoadedGraph side = read_arc_list_file(tmp.at("out/preserved.tsv"));
  CHECK(side.annotations.size() == 5);
  REQUIRE(side.annotations.find("silly", "way") != nullptr);
  CHECK(side.annotations.find("silly", "way")->count(":manner") == 1);
}

TEST_CASE("build converts a dictionary with a stoplist") {
  TempDir tmp;
  std::string dict =
      tmp.file("dict.jsonl",
               "{\"lexeme\": \"apple\", \"definitions\": [\"a red fruit\", \"an unused sense\"]}\n"
               "{\"lexeme\": \"red\", \"definitions\": [\"a warm colour\"]}\n");
  std::string stop = tmp.file("stop.txt", "a\n");
  CliRun r = run({"build", dict, "--stoplist", stop, "--out", tmp.at("out")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  // One definition per lexeme feeds the graph, so both quantities count
  // lexemes (2), not raw senses (3).
  CHECK(j["definition_quantity"] == 2);
  CHECK(j["final_quantity"] == 2);

  LoadedGraph g = read_arc_list_file(tmp.at("out/graph.tsv"));
  CHECK(g.graph.arc_count() == 4);
  CHECK(g.graph.has_arc(g.graph.find("red"), g.graph.find("apple")));
  CHECK(g.graph.has_arc(g.graph.find("fruit"), g.graph.find("apple")));
  CHECK(g.graph.has_arc(g.graph.find("warm"), g.graph.find("red")));
  CHECK(g.graph.has_arc(g.graph.find("colour"), g.graph.find("red")));
  CHECK(g.graph.find("a") == kNoVertex);
  CHECK(g.graph.find("unused") == kNoVertex);
}

TEST_CASE("build refuses an arc-list input") {
  TempDir tmp;
  std::string arcs = tmp.file("g.tsv", "a\tb\n");
  CliRun r = run({"build", arcs, "--out", tmp.at("out")});
  CHECK(r.code == 2);
  CHECK(r.err.find("arc list") != std::string::npos);
}

TEST_CASE("kernel trims undefined and undefining vertices") {
  TempDir tmp;
  std::string arcs = tmp.file("g.tsv", "a\tb\nb\tc\nc\td\nd\te\ne\td\n");
  CliRun r = run({"kernel", arcs, "--out", tmp.at("out")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["initial_vertices"] == 5);
  CHECK(j["size_kernel"] == 2);
  CHECK(j["kernel_nb_arcs"] == 2);
  CHECK(j["nb_undefined"] == 3);
  CHECK(j["nb_undefining"] == 0);

  LoadedGraph k = read_arc_list_file(tmp.at("out/kernel.tsv"));
  CHECK(k.graph.vertex_count() == 2);
  CHECK(k.graph.has_arc(k.graph.find("d"), k.graph.find("e")));
  CHECK(k.graph.has_arc(k.graph.find("e"), k.graph.find("d")));
}

TEST_CASE("kernel consumes a PENMAN corpus directly") {
  TempDir tmp;
  std::string corpus = tmp.file("corpus.txt", testing::kEightEntryCorpus);
  CliRun r = run({"kernel", corpus, "--out", tmp.at("out")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  // pass 1: the eight defining words fall in the in-phase, then the three
  // headwords (now arc-less) fall in the same pass's out-phase
  CHECK(j["initial_vertices"] == 11);
  CHECK(j["size_kernel"] == 0);
  CHECK(j["nb_undefined"] == 8);
  CHECK(j["nb_undefining"] == 3);
}

TEST_CASE("a leading plain comment leaves the input an arc list") {
  TempDir tmp;
  std::string arcs = tmp.file("g.tsv", "# plain comment, not metadata\nu\tv\nv\tu\n");
  CliRun r = run({"kernel", arcs, "--out", tmp.at("out")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["initial_vertices"] == 2);
  CHECK(j["size_kernel"] == 2);
}

TEST_CASE("reduce dissolves a 2-cycle and logs the trace") {
  TempDir tmp;
  std::string arcs = tmp.file("g.tsv", "u\tv\nv\tu\n");
  CliRun r = run({"reduce", arcs, "--out", tmp.at("out")});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["initial_vertices"] == 2);
  CHECK(j["remaining_vertices"] == 0);
  CHECK(j["remaining_arcs"] == 0);
  CHECK(j["included"] == 1);
  CHECK(j["excluded"] == 1);
  CHECK(j["reductions_total"] == 2);
  CHECK(j["subset"] == 1);
  CHECK(j["in_clique"] == 1);
  CHECK(j["pie"] == 0);
  CHECK(j["partial_mfvs"] == json::array({"u"}));

  CHECK(read_text_file(tmp.at("out/trace.json")) == r.out);
  LoadedGraph reduced = read_arc_list_file(tmp.at("out/reduced.tsv"));
  CHECK(reduced.graph.vertex_count() == 0);
}

TEST_CASE("reduce --verify vouches for the result with the oracle") {
  TempDir tmp;
  std::string arcs = tmp.file("g.tsv", "a\tb\nb\tc\nc\ta\nb\tb\n");
  CliRun r = run({"reduce", arcs, "--verify", "--out", tmp.at("out")});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
}

TEST_CASE("reduce is reproducible for a fixed seed and confluent across seeds") {
  TempDir tmp;
  std::mt19937_64 rng(99);
  std::string text;
  std::uniform_int_distribution<int> pick(0, 13);
  for (int i = 0; i < 44; ++i) {
    int u = pick(rng), v = pick(rng);
    text += "n" + std::to_string(u) + "\tn" + std::to_string(v) + "\n";
  }
  std::string arcs = tmp.file("g.tsv", text);

  CliRun a = run({"reduce", arcs, "--seed", "7", "--out", tmp.at("a")});
  CliRun b = run({"reduce", arcs, "--seed", "7", "--out", tmp.at("b")});
  CliRun c = run({"reduce", arcs, "--seed", "8", "--out", tmp.at("c")});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(read_text_file(tmp.at("a/reduced.tsv")) == read_text_file(tmp.at("b/reduced.tsv")));
  // the confluent family lands on the same remaining graph whatever the order
  CHECK(read_text_file(tmp.at("a/reduced.tsv")) == read_text_file(tmp.at("c/reduced.tsv")));
  json ja = json::parse(a.out), jc = json::parse(c.out);
  CHECK(ja["remaining_vertices"] == jc["remaining_vertices"]);
  CHECK(ja["included"] == jc["included"]);
}

TEST_CASE("stats prints the metrics table and writes csv + json") {
  TempDir tmp;
  std::string arcs = tmp.file("g.tsv", "p\tu\nu\tv\nv\tu\n");
  CliRun r = run({"stats", arcs, "--out", tmp.at("out")});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("Kernel Density  1.0000") != std::string::npos);

  std::string csv = read_text_file(tmp.at("out/metrics.csv"));
  CHECK(csv ==
        "Nb vertices,Size Kernel,Size Red. Ker.,NC Red Ker.,Init. Nb Arcs,Final Nb Arcs,"
        "NC Final Arcs,Nb Undefined,Nb Undefining,Nb SCCs Kernel,Kernel Nb Arcs,Kernel Density\n"
        "3,2,0,0,3,0,0,1,0,1,2,1.0000\n");

  json j = json::parse(read_text_file(tmp.at("out/metrics.json")));
  CHECK(j["nb_vertices"] == 3);
  CHECK(j["size_kernel"] == 2);
  CHECK(j["size_reduced_kernel"] == 0);
  CHECK(j["nc_reduced_kernel"] == 0);
  CHECK(j["nb_sccs_kernel"] == 1);
  CHECK(j["kernel_density"] == "1.0000");
}

TEST_CASE("mfvs reports the optimum and the first witness") {
  TempDir tmp;
  std::string arcs = tmp.file("g.tsv", "a\tb\nb\tc\nc\ta\nd\te\ne\tf\nf\td\n");
  CliRun r = run({"mfvs", arcs});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["size"] == 2);
  CHECK(j["witness_count"] == 9);  // 3 choices per triangle
  CHECK(j["witness"] == json::array({"a", "d"}));
}

TEST_CASE("mfvs respects and reports the size cap") {
  TempDir tmp;
  std::string text;
  for (int i = 0; i < 22; ++i) text += "v" + std::to_string(i) + "\n";
  std::string arcs = tmp.file("g.tsv", text);

  CliRun capped = run({"mfvs", arcs});
  CHECK(capped.code == 3);
  CHECK(capped.err.find("groundkit:") != std::string::npos);

  CliRun lifted = run({"mfvs", arcs, "--max-n", "24"});
  REQUIRE(lifted.code == 0);
  json j = json::parse(lifted.out);
  CHECK(j["size"] == 0);
  CHECK(j["witness_count"] == 1);
  CHECK(j["witness"] == json::array());
}

TEST_CASE("common intersects the symbol sets of many graphs") {
  TempDir tmp;
  std::string g1 = tmp.file("g1.tsv", "x\ty\nz\n");
  std::string g2 = tmp.file("g2.tsv", "y\tz\n");
  std::string g3 = tmp.file("g3.tsv", "z\ty\nw\n");

  const char* saved = std::getenv("GROUNDKIT_THREADS");
  std::string saved_value = saved ? saved : "";
  ::setenv("GROUNDKIT_THREADS", "1", 1);
  CliRun r = run({"common", g1, g2, g3, "--out", tmp.at("out")});
  if (saved)
    ::setenv("GROUNDKIT_THREADS", saved_value.c_str(), 1);
  else
    ::unsetenv("GROUNDKIT_THREADS");

  REQUIRE(r.code == 0);
  CHECK(r.out == "y\nz\n");
  CHECK(read_text_file(tmp.at("out/common.txt")) == "y\nz\n");

  CliRun single = run({"common", g3});
  CHECK(single.out == "w\ny\nz\n");
}

TEST_CASE("export-dot renders quoted labels and tags") {
  TempDir tmp;
  std::string arcs = tmp.file("g.tsv", "a b\tc d\tt1\n");
  CliRun r = run({"export-dot", arcs, "--out", tmp.at("out")});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("\"a b\" -> \"c d\"") != std::string::npos);
  CHECK(r.out.find("t1") != std::string::npos);
  CHECK(read_text_file(tmp.at("out/graph.dot")) == r.out);
}

TEST_CASE("exit codes distinguish io, format and usage failures") {
  TempDir tmp;
  CliRun io = run({"kernel", tmp.at("missing.tsv")});
  CHECK(io.code == 1);
  CHECK(io.err.find("cannot open") != std::string::npos);

  std::string bad = tmp.file("bad.jsonl", "{broken json\n");
  CHECK(run({"kernel", bad}).code == 2);

  CHECK(run({"reduce"}).code == 2);                       // missing input
  CHECK(run({"bogus"}).code == 2);                        // unknown command
  std::string arcs = tmp.file("g.tsv", "a\tb\n");
  CHECK(run({"reduce", arcs, "--mode", "bogus"}).code == 2);
  CHECK(run({"reduce", arcs, "--max-n", "99"}).code == 2);

  CliRun help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("reduce") != std::string::npos);
}

TEST_CASE("selftest runs its property checks") {
  CliRun r = run({"selftest", "--seed", "5"});
  REQUIRE(r.code == 0);
  std::size_t count = 0;
  for (std::size_t at = r.out.find("ok "); at != std::string::npos;
       at = r.out.find("ok ", at + 1))
    ++count;
  CHECK(count == 5);
}

TEST_SUITE_END();
