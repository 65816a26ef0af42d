#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& rel) { return std::string(FIXTURE_DIR) + "/" + rel; }

std::string read(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / ("bracoid_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(cli("check " + fx("group/s3.json")).code == 0);
  CHECK(cli("check --suite full " + fx("bracoid/p_of_left_multiplication_on_s3.json")).code == 0);
  Run bad = cli("check " + fx("negative/corrupted_gskb_c4.json"));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL  action associativity") != std::string::npos);
  CHECK(bad.out.find("witness: input (1, 2, 1)") != std::string::npos);
  fs::path d = scratch();
  std::ofstream(d / "broken.json") << "{\"kind\": \"group\", \"payload\": {\"order\": 2}}";
  Run parse = cli("check " + (d / "broken.json").string());
  CHECK(parse.code == 2);
  CHECK(parse.out.find("/payload: missing field") != std::string::npos);
  CHECK(cli("check --suite nope " + fx("group/s3.json")).code == 2);
  CHECK(std::system(("BRACOID_MAX_DIM=4 " + std::string(CLI_PATH) + " check " + fx("hopf/ks3.json") +
                     " >/dev/null 2>&1; test $? -eq 3")
                        .c_str()) == 0);
  fs::remove_all(d);
}

TEST_CASE("build then check") {
  fs::path d = scratch();
  const std::string p = (d / "p.json").string(), r = (d / "r.json").string(), pr = (d / "pr.json").string();
  REQUIRE(cli("build --functor P --out " + p + " " + fx("gskb/c2_on_c3_2.json")).code == 0);
  CHECK(cli("check --suite full " + p).code == 0);
  REQUIRE(cli("build --functor R --out " + r + " " + p).code == 0);
  CHECK(read(r) == read(fx("gskb/c2_on_c3_2.json")));
  REQUIRE(cli("build --functor P --out " + pr + " " + r).code == 0);
  CHECK(read(pr) == read(p));

  const std::string t = (d / "t.json").string();
  REQUIRE(cli("build --functor tensor --out " + t + " " + p + " " + fx("bracoid/unit.json")).code == 0);
  CHECK(read(t) == read(p));

  Run opp = cli("build --functor opposite " + fx("bracoid/sweedler_left_multiplication.json"));
  CHECK(opp.code == 1);
  CHECK(opp.out == "refused: opposite: H not cocommutative\n");

  for (const char* f : {"T", "Tprime"}) {
    const std::string out = (d / (std::string(f) + ".json")).string();
    REQUIRE(cli(std::string("build --functor ") + f + " --out " + out + " " + fx("brace/opposite_ks3.json")).code == 0);
    CHECK(cli("check --suite full " + out).code == 0);
  }
  CHECK(read(d / "T.json") != read(d / "Tprime.json"));

  const std::string f = (d / "f.json").string(), g = (d / "g.json").string();
  REQUIRE(cli("build --functor F --out " + f + " " + fx("cocycle/identity_on_opposite_brace_ks3.json")).code == 0);
  REQUIRE(cli("build --functor G --out " + g + " " + f).code == 0);
  CHECK(read(g) == read(fx("cocycle/identity_on_opposite_brace_ks3.json")));
  Run q = cli("build --functor Q " + fx("cocycle/identity_on_opposite_brace_ks3.json"));
  CHECK(q.code == 0);
  CHECK(q.out.find("\"kind\": \"brace\"") != std::string::npos);

  Run l = cli("build --functor L " + fx("group/q8.json"));
  CHECK(l.code == 0);
  CHECK(l.out.find("\"dim\": 8") != std::string::npos);
  fs::remove_all(d);
}

TEST_CASE("enumerate") {
  Run one = cli("enumerate --g " + fx("group/c1.json") + " --n " + fx("group/s3.json"));
  CHECK(one.code == 0);
  CHECK(one.out.find("count: 1\n") != std::string::npos);
  Run c2c3 = cli("enumerate --g " + fx("group/c2.json") + " --n " + fx("group/c3.json"));
  CHECK(c2c3.out.find("[0 1 2] [0 1 2]\n") != std::string::npos);
  CHECK(c2c3.out.find("[0 1 2] [0 2 1]\n") != std::string::npos);

  std::map<std::string, std::string> counts;
  std::ifstream in(fx("oracle_counts.txt"));
  std::string g, n, c;
  std::getline(in, g);
  while (in >> g >> n >> c) counts[g + " " + n] = c;
  Run c2c4 = cli("enumerate --g " + fx("group/c2.json") + " --n " + fx("group/c4.json"));
  CHECK(c2c4.out.find("count: " + counts.at("C2 C4") + "\n") != std::string::npos);

  CHECK(cli("enumerate --g " + fx("group/q8.json") + " --n " + fx("group/c2.json") + " --max-order 4").code == 3);
  Run iso = cli("enumerate --iso-classes --format machine --g " + fx("group/c2.json") + " --n " + fx("group/c3.json"));
  CHECK(iso.out.find("\"class_count\":3") != std::string::npos);
}

TEST_CASE("roundtrip") {
  CHECK(cli("roundtrip --pair PR " + fx("gskb")).code == 0);
  CHECK(cli("roundtrip --pair FG " + fx("cocycle")).code == 0);
  Run refused = cli("roundtrip --pair PR " + fx("bracoid/sweedler_left_multiplication.json"));
  CHECK(refused.code == 1);
  CHECK(refused.out.find("refused: ") != std::string::npos);
  CHECK(refused.out.find("not pointed cosemisimple") != std::string::npos);
}

TEST_CASE("parallel output is deterministic") {
  Run a = cli("check --suite full --format machine --jobs 1 " + fx(""));
  Run b = cli("check --suite full --format machine --jobs 8 " + fx(""));
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  CHECK(cli("enumerate --format machine --jobs 1 --g " + fx("group/s3.json") + " --n " + fx("group/s3.json")).out ==
        cli("enumerate --format machine --jobs 8 --g " + fx("group/s3.json") + " --n " + fx("group/s3.json")).out);
}
