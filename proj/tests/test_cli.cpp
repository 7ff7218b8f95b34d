#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "jlab/cli.hpp"
#include "jlab/version.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = jlab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("alpha of the Petersen graph") {
  const auto r = run({"alpha", "--n", "5", "--r", "2", "--s", "0"});
  CHECK(r.code == jlab::cli::kExitOk);
  CHECK(has(r.out, "alpha=4 "));
  CHECK(has(r.out, "optimal=1"));
  CHECK(has(r.out, "# jlab " + std::string(jlab::kVersion) + " alpha"));
  CHECK(has(r.out, "seed=1"));
}

TEST_CASE("p0 value") {
  const auto r = run({"bounds", "p0", "--n", "20", "--r", "3"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "p0=0.0822"));
  const auto bad = run({"bounds", "p0", "--n", "5", "--r", "3"});
  CHECK(bad.code == jlab::cli::kExitError);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({"alpha", "--bogus"}).code == jlab::cli::kExitError);
  CHECK(run({"nosuchcommand"}).code == jlab::cli::kExitError);
  CHECK(run({"graph", "build", "--n", "5", "--r", "2", "--s", "0", "--format", "xml"}).code == jlab::cli::kExitError);
  CHECK(run({"graph", "build", "--n", "3", "--r", "5"}).code == jlab::cli::kExitError);
}

TEST_CASE("budget exhaustion exits with 2") {
  const auto r = run({"alpha", "--n", "7", "--r", "3", "--s", "1", "--budget-nodes", "1"});
  CHECK(r.code == jlab::cli::kExitBudget);
  CHECK(has(r.out, "optimal=0"));
}

TEST_CASE("graph export and import") {
  const auto path = std::filesystem::temp_directory_path() / "jlab_test_cli_graph.txt";
  const auto e = run({"graph", "export", "--n", "6", "--r", "3", "--s", "1", "--p", "0.5", "--seed", "4", "--out",
                      path.string()});
  REQUIRE(e.code == 0);
  const auto a = run({"graph", "build", "--n", "6", "--r", "3", "--s", "1", "--p", "0.5", "--seed", "4"});
  const auto b = run({"graph", "build", "--in", path.string()});
  CHECK(a.code == 0);
  CHECK(b.code == 0);
  auto hash_line = [](const std::string& s) {
    const auto pos = s.find("hash=");
    return pos == std::string::npos ? std::string() : s.substr(pos, s.find_first_of(" \n", pos) - pos);
  };
  CHECK_FALSE(hash_line(a.out).empty());
  CHECK(hash_line(a.out) == hash_line(b.out));
  std::filesystem::remove(path);
}

TEST_CASE("family analysis from a file") {
  const auto path = std::filesystem::temp_directory_path() / "jlab_test_cli_family.txt";
  {
    std::ofstream f(path);
    f << "n=8 r=4\n1 2 3 4\n1 2 5 6\n3 5 7 8\n";
  }
  const auto r = run({"family", "analyze", "--in", path.string(), "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
  CHECK(j["stats"]["d"] == 2);
  CHECK(j["stats"]["iX"] == 4);
  std::filesystem::remove(path);
  CHECK(run({"family", "analyze", "--in", path.string()}).code == jlab::cli::kExitError);
}

TEST_CASE("Monte Carlo CSV carries seed and stream") {
  const auto r = run({"mc", "sweep", "--n", "5", "--r", "2", "--s", "0", "--trials", "20", "--seed", "9", "--p-grid",
                      "0.5,1", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "master_seed=9"));
  CHECK(has(r.out, "stream=jlab-ctr-splitmix64-v1"));
  CHECK(has(r.out, "n,r,s,p,trials,successes"));
}
