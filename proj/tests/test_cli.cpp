#include <algorithm>
#include <cstdlib>

#include "cli_support.hpp"
#include "doctest.h"
#include "json.hpp"
#include "peaknet/io.hpp"

using cli_support::files_in;
using cli_support::read_file;
using cli_support::run;
using cli_support::TempDir;
using cli_support::write_file;

namespace {

const char* kFixture =
    "# act one\n"
    "Ann | Ben | Cara\n"
    "Ben | Cara\n"
    "Sheriff | Deputy | Ann\n"
    "Sheriff | Deputy\n"
    "Agent | Sheriff | Deputy | Doc\n"
    "Agent | Sheriff\n"
    "Agent | Diner Owner\n"
    "Doc | Ann\n";

bool has_version(const std::string& content) {
  return content.find(peaknet::kToolVersion) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("build on the two-scene fixture: (A,B) = 2") {
    TempDir dir;
    write_file(dir / "two.scenes", "A|B\nA|B|C\n");
    const auto r = run({"build", "--scenes", dir / "two.scenes", "--out", dir / "out"});
    REQUIRE(r.code == 0);
    const auto csv = read_file(dir / "out/adjacency.csv");
    CHECK(csv.find("\nA,0,2,1\n") != std::string::npos);
    CHECK(csv.find("\nB,2,0,1\n") != std::string::npos);
    CHECK(files_in(dir.path() / "out") ==
          std::vector<std::string>{"adjacency.csv", "adjacency_simple.csv", "network.dot",
                                   "network.graphml", "network_simple.dot", "network_simple.graphml"});
  }

  TEST_CASE("every subcommand writes newline-terminated, versioned artifacts") {
    TempDir dir;
    write_file(dir / "tp.scenes", kFixture);
    write_file(dir / "aliases.txt", "Doctor => Doc\n");
    write_file(dir / "law.txt", "# law enforcement\nSheriff\nDeputy\nAgent\n");
    const std::string s = dir / "tp.scenes";
    const std::vector<std::vector<std::string>> runs{
        {"build", "--scenes", s, "--out", dir / "build"},
        {"stats", "--scenes", s, "--aliases", dir / "aliases.txt", "--top-k", "3", "--pivot-name",
         "Doctor", "--out", dir / "stats"},
        {"ccdf", "--scenes", s, "--weighted", "--out", dir / "ccdf"},
        {"cluster", "--scenes", s, "--seed", "3", "--out", dir / "cluster"},
        {"cluster", "--scenes", s, "--remove-list", dir / "law.txt", "--binary", "--out",
         dir / "cluster_removed"},
        {"dce", "--scenes", s, "--pivot", "2", "--out", dir / "dce"},
        {"dce", "--scenes", s, "--out", dir / "dce_scan"},
        {"prune", "--scenes", s, "--pivot", "3", "--out", dir / "prune"},
        {"remove", "--scenes", s, "--remove-list", dir / "law.txt", "--out", dir / "remove"},
        {"simulate", "er", "--n", "50", "--p", "0.1", "--seeds", "3", "--out", dir / "sim_er"},
        {"simulate", "ba", "--n", "300", "--seeds", "2", "--out", dir / "sim_ba"},
        {"simulate", "spliced", "--seeds", "2", "--threads", "2", "--out", dir / "sim_sp"},
    };
    for (const auto& args : runs) {
      CAPTURE(args[0]);
      const auto r = run(args);
      CHECK_MESSAGE(r.code == 0, r.err);
      const auto out_dir = args.back();
      const auto files = files_in(out_dir);
      CHECK_FALSE(files.empty());
      for (const auto& f : files) {
        CAPTURE(f);
        const auto content = read_file(out_dir + "/" + f);
        CHECK(content.back() == '\n');
        CHECK(has_version(content));
        if (f.ends_with(".json")) {
          const auto j = nlohmann::json::parse(content);
          CHECK(j["schema_version"] == peaknet::kSchemaVersion);
          CHECK(j["tool_version"] == peaknet::kToolVersion);
        }
      }
    }
  }

  TEST_CASE("stats resolves the pivot through aliases") {
    TempDir dir;
    write_file(dir / "tp.scenes", kFixture);
    write_file(dir / "aliases.txt", "Doctor => Doc\n");
    const auto r = run({"stats", "--scenes", dir / "tp.scenes", "--aliases", dir / "aliases.txt",
                        "--pivot-name", "Doctor", "--out", dir / "o"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(read_file(dir / "o/stats.json"));
    CHECK(j["nodes"] == 8);
    CHECK(j["split"]["pivot_index"] == 6);
  }

  TEST_CASE("simulate er aggregate mean degree near 20") {
    TempDir dir;
    const auto r = run({"simulate", "er", "--n", "200", "--p", "0.1", "--seeds", "100", "--out", dir / "o"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(read_file(dir / "o/simulate.json"));
    const double mean = j["aggregate"]["mean_degree"];
    CHECK(mean >= 19.4);
    CHECK(mean <= 20.4);
    CHECK(j["per_seed"].size() == 100);
  }

  TEST_CASE("seeded runs are byte-identical; thread count does not matter") {
    TempDir dir;
    write_file(dir / "tp.scenes", kFixture);
    for (const std::string sub : {"a", "b"}) {
      REQUIRE(run({"simulate", "spliced", "--seeds", "6", "--threads", sub == "a" ? "1" : "4", "--out",
                   dir / sub})
                  .code == 0);
      REQUIRE(run({"cluster", "--scenes", dir / "tp.scenes", "--seed", "7", "--out", dir / (sub + "c")})
                  .code == 0);
    }
    CHECK(read_file(dir / "a/simulate.json") == read_file(dir / "b/simulate.json"));
    CHECK(read_file(dir / "a/ccdf_mean.csv") == read_file(dir / "b/ccdf_mean.csv"));
    CHECK(read_file(dir / "ac/partition.csv") == read_file(dir / "bc/partition.csv"));
    CHECK(read_file(dir / "ac/cluster.json") == read_file(dir / "bc/cluster.json"));
  }

  TEST_CASE("PEAKNET_SEED supplies the default seed") {
    TempDir dir;
    ::setenv("PEAKNET_SEED", "41", 1);
    const auto r = run({"simulate", "er", "--n", "30", "--out", dir / "env"});
    ::unsetenv("PEAKNET_SEED");
    REQUIRE(r.code == 0);
    REQUIRE(run({"simulate", "er", "--n", "30", "--seed", "41", "--out", dir / "flag"}).code == 0);
    CHECK(read_file(dir / "env/simulate.json") == read_file(dir / "flag/simulate.json"));
    const auto j = nlohmann::json::parse(read_file(dir / "env/simulate.json"));
    CHECK(j["params"]["seed"] == 41);
  }

  TEST_CASE("parse errors carry file and line, and nothing is written") {
    TempDir dir;
    write_file(dir / "bad.scenes", "A | B\n\nC |  | D\n");
    const auto r = run({"build", "--scenes", dir / "bad.scenes", "--out", dir / "o"});
    CHECK(r.code == 1);
    CHECK(r.err.rfind("peaknet: error: ", 0) == 0);
    CHECK(r.err.find("bad.scenes") != std::string::npos);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(files_in(dir.path() / "o").empty());
  }

  TEST_CASE("module errors exit nonzero with a diagnostic") {
    TempDir dir;
    write_file(dir / "tp.scenes", kFixture);
    write_file(dir / "unknown.txt", "Nobody\nSheriff\n");
    write_file(dir / "lonely.scenes", "A\nB\n");
    const std::string s = dir / "tp.scenes";

    auto r = run({"remove", "--scenes", s, "--remove-list", dir / "unknown.txt", "--out", dir / "o1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("Nobody") != std::string::npos);

    r = run({"dce", "--scenes", s, "--pivot", "99", "--out", dir / "o2"});
    CHECK(r.code == 1);

    r = run({"dce", "--scenes", s, "--pivot-name", "Nobody", "--out", dir / "o3"});
    CHECK(r.code == 1);

    r = run({"cluster", "--scenes", dir / "lonely.scenes", "--out", dir / "o4"});
    CHECK(r.code == 1);
    CHECK(r.err.find("no edges to cluster") != std::string::npos);

    r = run({"simulate", "ba", "--n", "3", "--m", "4", "--out", dir / "o5"});
    CHECK(r.code == 1);

    for (const auto* d : {"o1", "o2", "o3", "o4", "o5"}) CHECK(files_in(dir.path() / d).empty());
  }

  TEST_CASE("usage errors exit with 2") {
    TempDir dir;
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"build", "--out", dir / "o"}).code == 2);
    CHECK(run({"build", "--scenes", dir / "missing.scenes", "--out", dir / "o"}).code == 2);
    CHECK(run({"simulate", "pareto", "--out", dir / "o"}).code == 2);
    CHECK(run({"cluster", "--scenes", dir / "x", "--resolution", "-1", "--out", dir / "o"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("an unwritable output location removes partial output") {
    TempDir dir;
    write_file(dir / "tp.scenes", kFixture);
    // a regular file where the output directory should go
    write_file(dir / "blocked", "x");
    const auto r = run({"build", "--scenes", dir / "tp.scenes", "--out", dir / "blocked"});
    CHECK(r.code == 1);
    CHECK(read_file(dir / "blocked") == "x");

    // a directory squatting on one artifact name makes that single write fail
    std::filesystem::create_directories(dir.path() / "partial" / "network_simple.dot");
    const auto r2 = run({"build", "--scenes", dir / "tp.scenes", "--out", dir / "partial"});
    CHECK(r2.code == 1);
    CHECK(files_in(dir.path() / "partial").empty());
  }
}
