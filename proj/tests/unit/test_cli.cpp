#include "doctest.h"
#include "support.hpp"

#include <fstream>
#include <sstream>

#include "algdist/cli.hpp"

using namespace algdist;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "algdist");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text, bool skip_comments = true) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!skip_comments || line.empty() || line[0] != '#') out.push_back(line);
  return out;
}

const char* kK2 = "%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n2 1\n";

std::string small_graph_mtx(std::uint64_t seed) {
  const auto g = testing::random_connected(40, 60, seed);
  std::ostringstream s;
  s << "%%MatrixMarket matrix coordinate real symmetric\n40 40 " << g.num_edges() << '\n';
  for (const auto& e : g.edges()) s << e.v + 1 << ' ' << e.u + 1 << ' ' << e.weight << '\n';
  return s.str();
}

}  // namespace

TEST_CASE("distance on K2 emits one row and echoes the defaults") {
  testing::TempDir dir("cli");
  const auto f = dir.write("k2.mtx", kK2);
  const auto r = run({"distance", f.string(), "--seed", "3"});
  REQUIRE(r.code == 0);
  const auto all = lines(r.out, false);
  REQUIRE(all.size() == 3);
  CHECK(all[0].find("# algdist distance input=k2.mtx omega=0.5 k=20 R=10 p=inf seed=3") == 0);
  CHECK(all[1] == "i,j,rho");
  CHECK(all[2].rfind("1,2,", 0) == 0);
  CHECK(std::stod(all[2].substr(4)) >= 0.0);
}

TEST_CASE("distance output is deterministic and worker-independent") {
  testing::TempDir dir("cli");
  const auto f = dir.write("g.mtx", small_graph_mtx(3));
  const auto a = run({"distance", f.string(), "--seed", "9", "--workers", "1"});
  const auto b = run({"distance", f.string(), "--seed", "9", "--workers", "4"});
  const auto c = run({"distance", f.string(), "--seed", "10"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  const auto out = dir.path() / "d.csv";
  CHECK(run({"distance", f.string(), "--seed", "9", "--out", out.string()}).code == 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == a.out);
}

TEST_CASE("usage errors give a nonzero exit") {
  testing::TempDir dir("cli");
  const auto f = dir.write("k2.mtx", kK2);
  CHECK(run({}).code != 0);
  CHECK(run({"distance", f.string(), "--bogus"}).code != 0);
  const auto missing = run({"distance", (dir.path() / "nope.mtx").string()});
  CHECK(missing.code != 0);
  CHECK(missing.err.find("nope.mtx") != std::string::npos);
  CHECK(run({"distance", f.string(), "--p", "3"}).code != 0);
  CHECK(run({"distance", f.string(), "--omega", "2.5"}).code != 0);
  CHECK(run({"frobnicate"}).code != 0);
}

TEST_CASE("disconnected input needs --largest-component") {
  testing::TempDir dir("cli");
  const auto f = dir.write(
      "split.mtx", "%%MatrixMarket matrix coordinate pattern symmetric\n5 5 3\n2 1\n3 2\n5 4\n");
  CHECK(run({"distance", f.string()}).code != 0);
  const auto r = run({"distance", f.string(), "--largest-component"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 3);
  CHECK(r.err.find("largest component") != std::string::npos);
}

TEST_CASE("match subcommand") {
  testing::TempDir dir("cli");
  const auto f = dir.write("g.mtx", small_graph_mtx(4));
  const auto r = run({"match", f.string(), "--seeds", "5", "--algo", "path"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 6);
  CHECK(r.out.find("# mean_weight_ratio=") != std::string::npos);
}

TEST_CASE("hpart subcommand with the fallback bisector") {
  testing::TempDir dir("cli");
  const auto f = dir.write("h.hgr", "4 6 1\n2 1 2\n1 2 3\n3 3 4 5\n1 5 6\n");
  const auto r = run({"hpart", f.string(), "--seeds", "4", "--imbalance", "0.2"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 5);
  CHECK(r.out.find("# mean_ratio=") != std::string::npos);
  const auto bad = run({"hpart", f.string(), "--partitioner", (dir.path() / "none").string()});
  CHECK(bad.code != 0);
  CHECK(bad.err.find("fallback") != std::string::npos);
}

TEST_CASE("diag subcommand") {
  testing::TempDir dir("cli");
  const auto f = dir.write("g.mtx", small_graph_mtx(5));
  const auto r = run({"diag", f.string(), "--theta-points", "7"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("angle_defect") != std::string::npos);
  CHECK(r.out.find("model_residual") != std::string::npos);
  CHECK(r.out.find("omega,theta,sigma2,limit") != std::string::npos);
}

TEST_CASE("bench over five files") {
  testing::TempDir dir("cli");
  for (int i = 0; i < 4; ++i) dir.write("g" + std::to_string(i) + ".mtx", small_graph_mtx(10 + i));
  dir.write("h.hgr", "4 6 1\n2 1 2\n1 2 3\n3 3 4 5\n1 5 6\n");
  dir.write("notes.txt", "ignored\n");
  const auto a = run({"bench", dir.path().string(), "--imbalance", "0.2", "--workers", "1"});
  REQUIRE(a.code == 0);
  const auto rows = lines(a.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].rfind("input,kind,vertices,edges,method,mean_weight_ratio", 0) == 0);
  CHECK(rows[1].rfind("g0.mtx,graph,40,", 0) == 0);
  CHECK(rows[5].rfind("h.hgr,hypergraph,6,4,fallback", 0) == 0);
  const auto b = run({"bench", dir.path().string(), "--imbalance", "0.2", "--workers", "3"});
  CHECK(a.out == b.out);
  const auto t = run({"bench", dir.path().string(), "--imbalance", "0.2", "--seeds", "2", "--timings"});
  CHECK(lines(t.out)[0].find("experiment_seconds") != std::string::npos);
}
