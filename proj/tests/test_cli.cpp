// End-to-end tests that spawn the installed command-line binary. The build
// passes its path via the CMOPT_CLI_PATH compile definition.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef CMOPT_CLI_PATH
#error "CMOPT_CLI_PATH must point at the cli binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                               "/cmopt_cli_test_out.txt";
  const std::string cmd = std::string(CMOPT_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                           "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const std::string kSquare =
    "dim 2\n"
    "n 4\n"
    "1 0\n"
    "0 1\n"
    "-1 0\n"
    "0 -1\n"
    "matroid uniform 2\n"
    "objective sqnorm\n";

}  // namespace

TEST_CASE("solve prints the exact text report") {
  const std::string path = write_temp("cli_square.cm", kSquare);
  RunResult r = run_cli("solve " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "basis: 1 2\n"
        "point: 1 1\n"
        "value: 2\n"
        "chambers: 8\n");
}

TEST_CASE("solve --json carries the same answer") {
  const std::string path = write_temp("cli_square.cm", kSquare);
  RunResult r = run_cli("--json solve " + path);
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["best"]["basis"] == std::vector<int>({1, 2}));
  CHECK(j["best"]["value"] == doctest::Approx(2.0));
  CHECK(j["chambers"] == 8);
  CHECK(j["oracle_queries"].get<std::uint64_t>() > 0);
}

TEST_CASE("verify agrees with brute force and exits 0") {
  const std::string path = write_temp("cli_square.cm", kSquare);
  RunResult r = run_cli("verify " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("match: yes\n") != std::string::npos);
}

TEST_CASE("chambers reports both half-planes for a single wall") {
  const std::string path = write_temp(
      "cli_wall.cm", "dim 2\nn 2\n1 0\n0 1\nmatroid uniform 1\nobjective sqnorm\n");
  RunResult r = run_cli("chambers " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("chambers: 2\n") == 0);

  RunResult pts = run_cli("chambers --points " + path);
  CHECK(pts.exit_code == 0);
  const bool order_a = pts.out == "1,0\n0,1\n";
  const bool order_b = pts.out == "0,1\n1,0\n";
  CHECK((order_a || order_b));
}

TEST_CASE("cluster and qassign subcommands") {
  const std::string pts = write_temp("cli_pts.cm", "dim 1\nn 4\n0\n1\n2\n3\n");
  RunResult c = run_cli("cluster " + pts);
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("variance_sum: 0.5\n") != std::string::npos);

  const std::string mat = write_temp("cli_mat.cm", "dim 2\nn 3\n1 1 -1\n0 0 1\n");
  RunResult q = run_cli("qassign " + mat);
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("x: 1 1 0\n") != std::string::npos);
  CHECK(q.out.find("value: 4\n") != std::string::npos);
}

TEST_CASE("verify refuses oversized enumerations with exit code 3") {
  const std::string path = write_temp("cli_square.cm", kSquare);
  RunResult r = run_cli("--max-enum 1 verify " + path);
  CHECK(r.exit_code == 3);
}

TEST_CASE("parse errors exit 1 and name the line") {
  const std::string path =
      write_temp("cli_bad.cm", "dim 1\nn 2\n3\n1\nmatroid uniform 5\nobjective sqnorm\n");
  RunResult r = run_cli("solve " + path);
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("error:") != std::string::npos);
  RunResult missing = run_cli("solve /nonexistent/file.cm");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("threads flag leaves the output unchanged") {
  const std::string path = write_temp("cli_square.cm", kSquare);
  RunResult one = run_cli("solve " + path);
  RunResult four = run_cli("--threads 4 solve " + path);
  CHECK(one.exit_code == 0);
  CHECK(four.exit_code == 0);
  CHECK(one.out == four.out);
}
