#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "matchnet/io.hpp"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("matchnet_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(MATCHNET_CLI) + " " + args + " > " + file("stdout.txt") + " 2> " + file("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string read(const std::string& name) const { return matchnet::read_text(file(name)); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateBuildVerifyExport) {
  ASSERT_EQ(run("generate --graph mesh:3,3 --out " + file("g.json")), 0);
  const auto g = matchnet::parse_json(read("g.json"));
  EXPECT_EQ(g["n"], 9);
  ASSERT_EQ(run("build --construction product --graph " + file("g.json") + " --out " + file("net.json")), 0);
  EXPECT_EQ(run("verify --net " + file("net.json")), 0);
  EXPECT_NE(read("stdout.txt").find("pass"), std::string::npos);
  EXPECT_EQ(run("verify --net " + file("net.json") + " --method random --trials 200 --seed 4"), 0);
  ASSERT_EQ(run("export --net " + file("net.json") + " --format dot --out " + file("net.dot")), 0);
  EXPECT_EQ(read("net.dot").rfind("graph G {", 0), 0u);
  ASSERT_EQ(run("export --net " + file("net.json") + " --format json --out " + file("net2.json")), 0);
  EXPECT_EQ(read("net2.json"), read("net.json"));
}

TEST_F(Cli, VerifyExitCodes) {
  // One comparator on P_3 does not sort.
  matchnet::write_text(file("bad.json"), R"({"version":1,"graph":{"n":3,"edges":[[1,2],[2,3]],"family":null,"order":null},
    "order":[1,2,3],"stages":[{"cmp":[[1,2,"dir"]]}]})");
  EXPECT_EQ(run("verify --net " + file("bad.json")), 1);
  EXPECT_NE(read("stdout.txt").find("counterexample"), std::string::npos);
  ASSERT_EQ(run("build --construction odd-even --graph path:21 --out " + file("p21.json")), 0);
  EXPECT_EQ(run("verify --net " + file("p21.json")), 2);
  EXPECT_EQ(run("verify --net " + file("p21.json") + " --method exhaustive"), 2);
  EXPECT_EQ(run("verify --net " + file("missing.json")), 3);
  matchnet::write_text(file("overlap.json"), R"({"version":1,"graph":{"n":3,"edges":[[1,2],[2,3]],"family":null,"order":null},
    "order":[1,2,3],"stages":[{"cmp":[[1,2,"dir"],[2,3,"dir"]]}]})");
  EXPECT_EQ(run("verify --net " + file("overlap.json")), 3);
  EXPECT_NE(read("stderr.txt").find("stage 0"), std::string::npos);
}

TEST_F(Cli, BuildErrors) {
  EXPECT_EQ(run("build --construction bitonic --graph path:5"), 3);
  EXPECT_EQ(run("generate --graph path:0"), 3);
}

TEST_F(Cli, RouteAndOracle) {
  ASSERT_EQ(run("route --graph complete:4 --perm 2,3,4,1 --out " + file("plan.json")), 0);
  const auto plan = matchnet::parse_json(read("plan.json"));
  EXPECT_EQ(plan["realized"], matchnet::Json::parse("[2,3,4,1]"));
  EXPECT_LE(plan["stages"].size(), 2u);
  ASSERT_EQ(run("oracle --quantity st --graph path:3"), 0);
  EXPECT_NE(read("stdout.txt").find("st = 3"), std::string::npos);
  ASSERT_EQ(run("oracle --quantity rt --graph complete:4"), 0);
  EXPECT_NE(read("stdout.txt").find("rt = 2"), std::string::npos);
  ASSERT_EQ(run("oracle --quantity rt_p --graph complete:4 --p 3"), 0);
  EXPECT_NE(read("stdout.txt").find("= 2"), std::string::npos);
  EXPECT_EQ(run("oracle --quantity st --graph path:7"), 2);
}

TEST_F(Cli, BenchCsvIsDeterministic) {
  ASSERT_EQ(run("bench --suite paths --max-n 8 --csv " + file("a.csv")), 0);
  ASSERT_EQ(run("bench --suite paths --max-n 8 --csv " + file("b.csv")), 0);
  const std::string a = read("a.csv");
  EXPECT_EQ(a, read("b.csv"));
  EXPECT_EQ(a.rfind("family,construction,n,depth,bound,method,verdict\n", 0), 0u);
}
