// End-to-end checks of the latinsq binary. The binary path comes from the
// build system via LATINSQ_BIN.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "test_util.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("latinsq-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run(const std::string& args) {
  const fs::path out = scratch_dir() / "stdout.txt";
  const std::string cmd =
      std::string(LATINSQ_BIN) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  return r;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << content;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct five-eight reproduces the table byte for byte") {
  const fs::path out = scratch_dir() / "five_eight.txt";
  const RunResult r = run("construct five-eight -o " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(slurp(out) == latin::test::kFiveEightPartial);
  CHECK(r.out == "k=8 colored=17 empty=8\n");
}

TEST_CASE("construct cell counts") {
  SUBCASE("two-n-minus-one at order 4 colors 12 cells") {
    const RunResult r = run("construct two-n-minus-one -n 4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"colored\": 12") != std::string::npos);
  }

  SUBCASE("block-ten-m at order 10 colors 84 cells") {
    const RunResult r = run("construct block-ten-m -n 10 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"colored\": 84") != std::string::npos);
    CHECK(r.out.find("\"empty\": 16") != std::string::npos);
  }

  SUBCASE("invalid parameters exit nonzero") {
    CHECK(run("construct two-n-minus-one -n 5").exit_code == 2);
    CHECK(run("construct block-ten-m -n 12").exit_code == 2);
    CHECK(run("construct nonsense").exit_code == 2);
  }
}

TEST_CASE("construct then verify round-trips for every kind") {
  const std::vector<std::string> kinds = {
      "construct two-n-minus-one -n 2 -o ", "construct five-eight -o ",
      "construct block-ten-m -n 10 -o "};
  for (const std::string& args : kinds) {
    const fs::path grid = scratch_dir() / "roundtrip.txt";
    REQUIRE(run(args + grid.string()).exit_code == 0);
    const RunResult v = run("verify " + grid.string());
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("verdict: unique") != std::string::npos);
  }
}

TEST_CASE("verify reports the completion of the five-eight grid") {
  const fs::path grid =
      write_file("five_eight_in.txt", latin::test::kFiveEightPartial);
  const fs::path completion = scratch_dir() / "completion.txt";
  const RunResult r =
      run("verify " + grid.string() + " -o " + completion.string());
  CHECK(r.exit_code == 0);
  CHECK(slurp(completion) == latin::test::kFiveEightCompletion);
}

TEST_CASE("verify exit codes distinguish the failure modes") {
  SUBCASE("multiple completions") {
    const fs::path grid = write_file("open.txt", "1 2\n.\n");
    const RunResult r = run("verify " + grid.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("verdict: multiple") != std::string::npos);
  }

  SUBCASE("parse error") {
    const fs::path grid = write_file("bad.txt", "2 3\n1 x\n2 1\n");
    CHECK(run("verify " + grid.string()).exit_code == 3);
  }

  SUBCASE("improper grid") {
    const fs::path grid = write_file("clash.txt", "2 3\n1 1\n. .\n");
    CHECK(run("verify " + grid.string()).exit_code == 4);
  }

  SUBCASE("node budget abort") {
    const fs::path grid = write_file("wide.txt", "4 7\n. . . .\n. . . .\n. . . .\n. . . .\n");
    const RunResult r = run("verify " + grid.string() + " --budget-nodes 2");
    CHECK(r.exit_code == 6);
    CHECK(r.out.find("verdict: aborted") != std::string::npos);
  }
}

TEST_CASE("detect prints witnesses or none") {
  SUBCASE("clean construction") {
    const fs::path grid = scratch_dir() / "clean.txt";
    REQUIRE(run("construct block-ten-m -n 10 -o " + grid.string()).exit_code ==
            0);
    const RunResult r = run("detect " + grid.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out == "none\n");
  }

  SUBCASE("rectangle of empty cells") {
    const fs::path grid = write_file("rect.txt",
                                     "4 7\n"
                                     ". 7 . 6\n"
                                     "3 1 6 5\n"
                                     "1 2 4 7\n"
                                     ". 4 . 2\n");
    const RunResult r = run("detect " + grid.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("rectangle:") != std::string::npos);
  }

  SUBCASE("three empty cells in a row") {
    const fs::path grid = write_file("three.txt", "3 5\n. . .\n1 2 3\n2 3 4\n");
    const RunResult r = run("detect " + grid.string());
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("three-in-line:") != std::string::npos);
  }
}

TEST_CASE("search prints the defining number and witness") {
  SUBCASE("d(L(2,3)) = 2") {
    const fs::path witness = scratch_dir() / "witness.txt";
    const RunResult r = run("search 2 3 -o " + witness.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("2 3 2 " + witness.string()) != std::string::npos);
    const RunResult v = run("verify " + witness.string());
    CHECK(v.exit_code == 0);
  }

  SUBCASE("d(L(2,4)) = 4") {
    const RunResult r = run("search 2 4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"d\": 4") != std::string::npos);
    CHECK(r.out.find("exhaustive-search") != std::string::npos);
  }

  SUBCASE("budget refusals carry their own exit code") {
    CHECK(run("search 4 7").exit_code == 5);
  }
}

TEST_CASE("grids pipe between subcommands via stdin") {
  const fs::path out = scratch_dir() / "pipe_out.txt";
  const std::string cmd = std::string(LATINSQ_BIN) +
                          " construct five-eight 2>/dev/null | " +
                          LATINSQ_BIN + " verify - > " + out.string() +
                          " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
  CHECK(slurp(out).find("verdict: unique") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
}

}  // TEST_SUITE
