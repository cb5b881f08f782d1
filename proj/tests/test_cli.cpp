// Drives the installed CLI binary end to end: table layouts, bijection
// demos, exit codes, and output determinism.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TIERED_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

int count_lines(const std::string& s) {
  int lines = 0;
  for (char c : s) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("qpolys table reproduces the reference rows") {
  RunResult r = run_cli("table qpolys --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 19);  // header + 18 rows
  CHECK(r.out.find("\"(1, 1, 1)\",q + 4\n") != std::string::npos);
  CHECK(r.out.find("\"(1, 2, 2)\",q^4 + 6q^3 + 22q^2 + 51q + 66\n") != std::string::npos);
  CHECK(r.out.find("\"(1, 1, 1, 1, 1, 1)\",q^10 + 10q^9 + 54q^8 + 209q^7 + 649q^6 + 1681q^5 + "
                   "3691q^4 + 6921q^3 + 10805q^2 + 13139q + 9460\n") != std::string::npos);

  // identical invocations are byte-identical
  CHECK(run_cli("table qpolys --max-n 5").out == run_cli("table qpolys --max-n 5").out);
}

TEST_CASE("counts table matches the reference values") {
  RunResult r = run_cli("table counts --max-n 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,m,T,P\n") == 0);
  CHECK(r.out.find("3,3,11,5\n") != std::string::npos);
  CHECK(r.out.find("5,5,16274,1324\n") != std::string::npos);
  CHECK(r.out.find("6,6,1414050,46620\n") != std::string::npos);
}

TEST_CASE("triangle table") {
  RunResult r = run_cli("table triangle --rows 4 --cols 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n,k,T\n") == 0);
  CHECK(r.out.find("3,1,6\n") != std::string::npos);
  CHECK(r.out.find("6,2,49\n") != std::string::npos);
  CHECK(r.out.find("8,4,155\n") != std::string::npos);

  RunResult latex = run_cli("table triangle --rows 4 --cols 9 --format latex");
  CHECK(latex.exit_code == 0);
  CHECK(latex.out.find("1&3&6&12&20&35&54&86&128\\\\") != std::string::npos);
}

TEST_CASE("perm-tree bijection command") {
  RunResult r = run_cli("bijection perm-tree 8594673201");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["stats"]["maxima"] == 6);
  CHECK(j["stats"]["weight"] == 0);
  CHECK(j["stats"]["descents"] == 5);
  CHECK(j["tree"]["n"] == 11);

  // inverse: the star with the adjoined maximum at the hub is the identity
  RunResult inv =
      run_cli(R"(bijection perm-tree --inverse '{"n":4,"tiers":[1,1,1,2],"edges":[[1,4],[2,4],[3,4]]}')");
  CHECK(inv.exit_code == 0);
  auto ji = nlohmann::json::parse(inv.out);
  CHECK(ji["permutation"]["word"] == nlohmann::json::parse("[1,2,3]"));

  // a positive-weight tree is a domain violation
  RunResult bad =
      run_cli(R"(bijection perm-tree --inverse '{"n":4,"tiers":[1,1,2,2],"edges":[[1,4],[2,3],[2,4]]}')");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("partition-perm bijection command") {
  RunResult r = run_cli("bijection partition-perm \"25|6130|798|4\"");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["permutation"]["compact"] == "7892540136");
  CHECK(j["stats"]["descents"] == 3);

  RunResult inv = run_cli("bijection partition-perm --inverse 7892540136");
  CHECK(inv.exit_code == 0);
  auto ji = nlohmann::json::parse(inv.out);
  CHECK(ji["stats"]["blocks"] == 4);
}

TEST_CASE("cycle-insert bijection command") {
  RunResult r = run_cli("bijection cycle-insert \"(237)(418)(69)(5)\" --after 2");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["permutation"]["compact"] == "6941850372");
  CHECK(j["stats"]["blocks"] == 4);

  RunResult own = run_cli("bijection cycle-insert \"(237)(418)(69)(5)\" --own-cycle");
  CHECK(own.exit_code == 0);
  auto jo = nlohmann::json::parse(own.out);
  CHECK(jo["permutation"]["compact"] == "6941823750");
  CHECK(jo["stats"]["blocks"] == 4);
}

TEST_CASE("cnat-tiered bijection command") {
  RunResult r = run_cli(R"(bijection cnat-tiered '{"k":1,"points":[[1,1],[1,2],[2,1]]}')");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["tree"]["n"] == 2);
  CHECK(j["stats"]["weight"] == 0);

  RunResult inv =
      run_cli(R"(bijection cnat-tiered --inverse '{"n":2,"tiers":[1,2],"edges":[[1,2]]}')");
  CHECK(inv.exit_code == 0);
  auto ji = nlohmann::json::parse(inv.out);
  CHECK(ji["cnat"]["points"] == nlohmann::json::parse("[[1,1],[1,2],[2,1]]"));
}

TEST_CASE("verify command") {
  RunResult r = run_cli("verify --scope weight --profile quick");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  RunResult js = run_cli("verify --scope algebra --profile quick --format json");
  CHECK(js.exit_code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["failed"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("table nonsense").exit_code == 2);
  CHECK(run_cli("bijection perm-tree 11").exit_code == 2);   // not a permutation
  CHECK(run_cli("table qpolys --max-n 9").exit_code == 3);   // capacity refusal
  CHECK(run_cli("--help").exit_code == 0);
}
