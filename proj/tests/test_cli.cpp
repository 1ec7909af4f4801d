#include <doctest.h>

#include <hyptree/table_io.hpp>

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

using namespace hyptree;

TEST_SUITE_BEGIN("cli");

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hyptree");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("hyptree_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate, optimize, greedy, rules round trip") {
  TempDir dir;
  auto table_path = dir.file("s3.dtab");
  auto r = run_cli({"generate", "--problem", "sorting", "--n", "3", "--out", table_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("6 rows, 3 attributes") != std::string::npos);
  CHECK(load_table_file(table_path).row_count() == 6);

  auto tree_path = dir.file("s3.dtree");
  r = run_cli({"optimize", "--table", table_path, "--type", "3", "--cost", "nodes",
               "--emit-tree", tree_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("minimum realizable nodes (type 3): 9") != std::string::npos);

  r = run_cli({"rules", "--table", table_path, "--tree", tree_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("mean minimum rule length:") != std::string::npos);

  auto greedy_tree_path = dir.file("s3_greedy.dtree");
  auto rules_path = dir.file("s3.rules");
  r = run_cli({"greedy", "--table", table_path, "--type", "2", "--emit-tree", greedy_tree_path,
               "--dump-rules"});
  CHECK(r.code != 0);  // unknown flag for this subcommand

  r = run_cli({"greedy", "--table", table_path, "--type", "2", "--emit-tree", greedy_tree_path});
  CHECK(r.code == 0);
  CHECK(r.out.find("depth 2, realizable nodes 14") != std::string::npos);
  CHECK(r.out.find("mean minimum rule length 2.17") != std::string::npos);

  r = run_cli({"rules", "--table", table_path, "--tree", greedy_tree_path, "--dump-rules",
               rules_path});
  CHECK(r.code == 0);
  std::ifstream rules_file(rules_path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(rules_file, line)) ++lines;
  CHECK(lines == 10);
}

TEST_CASE("generate prints the monotone decision legend") {
  TempDir dir;
  auto r = run_cli({"generate", "--problem", "monotone", "--n", "2", "--out", dir.file("r2.dtab")});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 = x1&x2") != std::string::npos);
  CHECK(r.out.find("7 = x1 | x2") != std::string::npos);
}

TEST_CASE("csv import is accepted by the table flag") {
  TempDir dir;
  auto csv_path = dir.file("t.csv");
  {
    std::ofstream f(csv_path);
    f << "a,b,d\n0,0,x\n0,1,y\n1,0,z\n";
  }
  auto r = run_cli({"optimize", "--table", csv_path, "--type", "1", "--cost", "depth"});
  CHECK(r.code == 0);
  CHECK(r.out.find("minimum depth (type 1): 2") != std::string::npos);
}

TEST_CASE("report renders the sorting depth table") {
  auto r = run_cli({"report", "--problem", "sorting", "--n", "3-4", "--algo", "dp", "--metric",
                    "depth"});
  CHECK(r.code == 0);
  CHECK(r.out.find("| 3 | 3 | **2** | **2** | **2** | **2** |") != std::string::npos);
  CHECK(r.out.find("| 4 | 5 | **4** | **4** | **4** | **4** |") != std::string::npos);
}

TEST_CASE("verify analytic suite passes") {
  auto r = run_cli({"verify", "--suite", "analytic", "--max-mono-n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
}

TEST_CASE("bad usage fails with a nonzero exit") {
  auto r = run_cli({"optimize", "--table", "/nonexistent/file", "--type", "1"});
  CHECK(r.code != 0);
  CHECK(r.err.find("error:") != std::string::npos);

  r = run_cli({"generate", "--problem", "nonsense", "--n", "3", "--out", "/tmp/x"});
  CHECK(r.code != 0);

  r = run_cli({"optimize", "--table", "/tmp/x", "--type", "9"});
  CHECK(r.code != 0);

  r = run_cli({});
  CHECK(r.code != 0);
}

TEST_SUITE_END();
