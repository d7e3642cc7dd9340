#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace {

struct run_result {
  int exit_code = -1;
  std::string out;
};

run_result run_cli(const std::string& args) {
  const std::string cmd = std::string(CANTOR_CLI_PATH) + " " + args + " 2>/dev/null";
  run_result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out += std::string(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("apply product prints the canonical union") {
  const auto r = run_cli("apply product --omega \"|10\" --input \"|1000 ; 01|0\"");
  CHECK(r.exit_code == 0);
  // {0,4,8,...} union {1}
  CHECK(r.out == "11|0010\n");
}

TEST_CASE("apply square round trips byte for byte") {
  const auto fwd = run_cli(
      "apply square --filter dyadic --input \"|10 ; 1|0010\"");
  REQUIRE(fwd.exit_code == 0);
  std::string image = fwd.out;
  REQUIRE(!image.empty());
  image.pop_back();  // trailing newline
  const auto back =
      run_cli("apply square --filter dyadic --inverse --input \"" + image + "\"");
  CHECK(back.exit_code == 0);
  CHECK(back.out == "|10\n1|0010\n");
}

TEST_CASE("apply main rejects non-disjoint spill pairs") {
  const auto r = run_cli("apply main --omega \"|10\" --input \"|10 ; |10 ; |01 ; |01\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("mem distinguishes the zoo") {
  const auto in = run_cli("mem dyadic \"|10\"");
  CHECK(in.exit_code == 0);
  CHECK(in.out == "in\n");
  const auto out = run_cli("mem frechet \"|10\"");
  CHECK(out.exit_code == 1);
  CHECK(out.out == "out\n");
  const auto semi = run_cli("mem semifilter-T \"|10\"");
  CHECK(semi.exit_code == 0);
  const auto principal = run_cli("mem \"principal:|10\" \"1|10\"");
  CHECK(principal.exit_code == 0);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("mem dyadic \"|#\"").exit_code == 2);
  CHECK(run_cli("mem nosuch \"|1\"").exit_code == 2);
  CHECK(run_cli("apply nosuch --input \"|1\"").exit_code == 2);
  CHECK(run_cli("apply square --filter frechet --input \"|1 ; |1\"").exit_code == 2);
  CHECK(run_cli("apply product --input \"|1 ; |0\"").exit_code == 2);
}

TEST_CASE("verify writes reports and exit codes reflect the verdict") {
  const std::string path = "cli_report.tsv";
  const auto r = run_cli("verify roundtrip --homeo code --trials 20 --seed 3 --out " +
                         path);
  CHECK(r.exit_code == 0);
  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 256> line;
  REQUIRE(std::fgets(line.data(), line.size(), f) != nullptr);
  CHECK(std::string(line.data()) == "# suite=roundtrip seed=3 trials=20\n");
  std::fclose(f);
  std::remove(path.c_str());

  const auto pres =
      run_cli("verify preservation --filter dyadic --trials 20 --seed 3 --serial");
  CHECK(pres.exit_code == 0);
}

TEST_CASE("modulus prints the probe table") {
  const auto r = run_cli("modulus square --filter dyadic --k 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("position\tqueries\tmax_index\n", 0) == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 9);
}

TEST_CASE("zoo list names the inhabitants") {
  const auto r = run_cli("zoo list");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("frechet") != std::string::npos);
  CHECK(r.out.find("dyadic") != std::string::npos);
  CHECK(r.out.find("semifilter-T") != std::string::npos);
}
