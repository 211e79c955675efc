#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "hp/io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HP_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("containment and simplicity queries") {
  auto r = run_cli("contains 391867452 51342");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "true\n");
  CHECK(run_cli("contains 2413 3142").out == "false\n");
  CHECK(run_cli("simple 2413").out == "true\n");
  CHECK(run_cli("simple 123").out == "false\n");
}

TEST_CASE("enum-simple") {
  CHECK(run_cli("enum-simple --n 7 --count").out == "338\n");
  const auto listed = run_cli("enum-simple --n 4");
  CHECK(listed.out == "2 4 1 3\n3 1 4 2\n");
}

TEST_CASE("decompose output") {
  CHECK(run_cli("decompose 3412").out == "(chain21 (chain12 0 1) (chain12 2 3))\n");
  CHECK(run_cli("decompose 2413").out == "(ind2413 0 1 2 3)\n");
}

TEST_CASE("avoid and closure agree and are deterministic across workers") {
  const std::string base = "--basis 2413 --basis 3142 --max-n 6";
  const auto serial = run_cli("avoid " + base + " --workers 1");
  const auto parallel = run_cli("avoid " + base + " --workers 4");
  CHECK(serial.exit_code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(serial.out == "n,count\n1,1\n2,2\n3,6\n4,22\n5,90\n6,394\n");

  const auto closure = run_cli("closure --gen 12 --gen 21 --max-n 6 --workers 4");
  CHECK(closure.out == serial.out);
}

TEST_CASE("archives written by avoid re-parse to equal levels") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "hp_cli_archive";
  fs::remove_all(dir);
  const auto r = run_cli("avoid --basis 2413 --basis 3142 --max-n 5 --out " + dir.string());
  CHECK(r.exit_code == 0);
  const auto levels = hp::io::load_levels(dir);
  CHECK(levels.max_n() == 5);
  CHECK(levels.count(5) == 90);
  levels.verify_heredity();

  const auto prof = run_cli("profile --in " + dir.string() + " --include-empty");
  CHECK(prof.out == "n,count\n0,1\n1,1\n2,2\n3,6\n4,22\n5,90\n");
  fs::remove_all(dir);
}

TEST_CASE("series subcommands") {
  CHECK(run_cli("series solve --p 2 --order 5").out == "series 5\n0 1 2 6 22 90\n");
  CHECK(run_cli("series expand --numer-coeffs 1,-1 --denom-coeffs 1,-2,0,-1 --order 5").out ==
        "series 5\n1 1 2 5 11 24\n");

  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "hp_cli_series";
  fs::create_directories(dir);
  hp::io::write_file(dir / "sep.poly", "1 0 2\n1 1 1\n-1 0 1\n1 1 0\n");
  hp::io::write_file(dir / "sep.series", "series 5\n0 1 2 6 22 90\n");
  const auto r =
      run_cli("series residual --poly " + (dir / "sep.poly").string() + " --series " +
              (dir / "sep.series").string());
  CHECK(r.out == "zero up to order 5\n");
  fs::remove_all(dir);
}

TEST_CASE("catalog subcommand") {
  CHECK(run_cli("catalog --family exceptional-iii --m 3").out == "4 1 5 2 6 3\n");
  CHECK(run_cli("catalog --family oscillation --n 4 --format perm").out == "3 1 4 2\n");
  CHECK(run_cli("catalog --family seq-fib-k --k 2 --n 5").out == "8\n");
  CHECK(run_cli("catalog --family seq-partitions --n 5").out == "7\n");
  const auto bichain = run_cli("catalog --family critical-bichain-1 --m 2 --format perm");
  CHECK(bichain.out == "2 4 1 3\n");
}

TEST_CASE("antichain subcommand") {
  CHECK(run_cli("antichain --marked-oscillations 4..8").out == "antichain\n");
}

TEST_CASE("exit codes distinguish domain errors from resource caps") {
  CHECK(run_cli("contains 111 1").exit_code == 1);          // malformed permutation
  CHECK(run_cli("avoid --max-n 9 --max-candidates 10").exit_code == 2);
  CHECK(run_cli("avoid --max-n 3 --no-such-flag").exit_code == 1);  // unknown flags are errors
  CHECK(run_cli("enum-simple --n 4 --count").exit_code == 0);
}

TEST_SUITE_END();
