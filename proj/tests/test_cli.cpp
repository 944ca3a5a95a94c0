#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + GBL_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("eval prints values to 12 significant digits") {
  RunResult r = run("eval --norm summing --n evens --vector n1:1,n2:-1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("1\n", 0) == 0);

  RunResult r2 = run("eval --norm l1l2 --vector 1:1,2:1,4:1");
  CHECK(r2.exit_code == 0);
  CHECK(r2.out.find("2.41421356237") != std::string::npos);

  RunResult r3 = run("eval --norm split --vector n1:1");
  CHECK(r3.exit_code == 0);
  CHECK(r3.out.rfind("1\n", 0) == 0);
}

TEST_CASE("error exits follow the contract") {
  CHECK(run("eval --norm no_such_norm --vector 1:1").exit_code == 2);
  CHECK(run("eval --norm l1l2 --vector bogus").exit_code == 2);
  CHECK(run("table --param conservative --norm l1l2 --m 2 --window 4096 --caps 6").exit_code ==
        2);
  CHECK(run("verify --suite unknown").exit_code == 2);
}

TEST_CASE("parameter tables match the known ladders") {
  RunResult sc = run("table --param sc --norm split --m 1..4 --window 28");
  CHECK(sc.exit_code == 0);
  CHECK(sc.out.find("# greedy-bases-lab v1\n") == 0);
  CHECK(sc.out.find("1,1,exact") != std::string::npos);
  CHECK(sc.out.find("2,1,exact") != std::string::npos);
  CHECK(sc.out.find("3,2,exact") != std::string::npos);
  CHECK(sc.out.find("4,2,exact") != std::string::npos);

  RunResult om = run("table --param omega --norm summing --m 1..3");
  CHECK(om.exit_code == 0);
  CHECK(om.out.find("1,5,lower_bound") != std::string::npos);
  CHECK(om.out.find("2,9,lower_bound") != std::string::npos);
  CHECK(om.out.find("3,13,lower_bound") != std::string::npos);

  RunResult cons = run("table --param conservative --norm l1l2 --window 20 --caps 6 --signs --m 1");
  CHECK(cons.exit_code == 0);
  CHECK(cons.out.find("1,1,exact") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
  const std::string cmd = "table --param omega --norm summing --m 1..2";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  RunResult p1 = run("profile --norm split --vector n1:1,n3:1,n6:0.5 --mmax 3");
  RunResult p2 = run("profile --norm split --vector n1:1,n3:1,n6:0.5 --mmax 3");
  CHECK(p1.exit_code == 0);
  CHECK(p1.out == p2.out);
  CHECK(p1.out.find("# greedy-bases-lab v1\n") == 0);
  CHECK(p1.out.find("m,gamma,sigma_hat,sigma_tilde,sigma_check,sigma_bar,ratio") !=
        std::string::npos);
}

TEST_CASE("oracle suite passes clean and catches a sabotaged pairing") {
  RunResult ok = run("verify --suite oracles");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("ALL PASS") != std::string::npos);

  // mutation: pairing the largest moduli with the smallest weights must trip
  // the weighted-rearrangement oracle check
  RunResult bad = run("verify --suite oracles", "GBL_MUTATE=ascending_pairing");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("[FAIL] oracle-wrearr") != std::string::npos);
}

TEST_CASE("catalog dump and config-file loading") {
  RunResult list = run("catalog");
  CHECK(list.exit_code == 0);
  CHECK(list.out.find("l1l2") != std::string::npos);
  CHECK(list.out.find("summing") != std::string::npos);

  RunResult dump = run("catalog --norm split");
  CHECK(dump.exit_code == 0);
  CHECK(dump.out.find("split_l1_sup") != std::string::npos);

  // a dumped document round-trips through the file loader
  const char* path = "/tmp/gbl_norm_roundtrip.json";
  std::FILE* f = std::fopen(path, "w");
  REQUIRE(f != nullptr);
  std::fputs(run("catalog --norm wrearr").out.c_str(), f);
  std::fclose(f);
  RunResult viafile = run(std::string("eval --norm ") + path + " --vector 2:1,4:1");
  RunResult direct = run("eval --norm wrearr --vector 2:1,4:1");
  CHECK(viafile.exit_code == 0);
  CHECK(viafile.out == direct.out);
  std::remove(path);
}

TEST_CASE("witness flag dumps attaining configurations") {
  RunResult r = run("table --param sc --norm split --m 3 --window 28 --witness");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# witness") != std::string::npos);
  CHECK(r.out.find("reevaluates_to") != std::string::npos);
}

TEST_CASE("worker count does not change results") {
  RunResult one = run("table --param sc --norm split --m 1..3 --window 28", "GBL_THREADS=1");
  RunResult four = run("table --param sc --norm split --m 1..3 --window 28", "GBL_THREADS=4");
  CHECK(one.exit_code == 0);
  CHECK(one.out == four.out);
}
