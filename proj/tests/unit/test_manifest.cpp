#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bracoid/catalog.hpp"
#include "bracoid/errors.hpp"
#include "bracoid/functors.hpp"
#include "bracoid/manifest.hpp"
#include "bracoid/suites.hpp"

using namespace bracoid;
namespace fs = std::filesystem;

namespace {

std::string read(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<fs::path> fixtures() {
  std::vector<fs::path> out;
  for (const auto& e : fs::recursive_directory_iterator(FIXTURE_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

const char* kC2 = R"({
  "kind": "hopf",
  "payload": {
    "dim": 2,
    "unit": [[0, 0, "1"]],
    "mult": [[1, 1, "1"], [0, 0, "1"], [1, 2, "1"], [0, 3, "1"]],
    "counit": [[0, 1, "1"], [0, 0, "2/2"]],
    "comult": [[0, 0, "1"], [3, 1, "1"]],
    "antipode": [[0, 0, "1"], [1, 1, "1"], [1, 0, "0"]]
  }
})";

}  // namespace

TEST_CASE("parse and serialize are inverse on every fixture") {
  auto files = fixtures();
  CHECK(files.size() >= 100);
  for (const auto& p : files) {
    CAPTURE(p.string());
    const std::string text = read(p);
    Manifest m = parse_manifest(text);
    CHECK(serialize_manifest(m) == text);
    CHECK(parse_manifest(serialize_manifest(m)) == m);
  }
}

TEST_CASE("serialization canonicalizes order, fractions and zeros") {
  Manifest m = parse_manifest(kC2);
  CHECK(m.kind() == Kind::hopf);
  CHECK(std::get<HopfAlgebraData>(m.payload) == linearize_group(cyclic_group(2)));
  const std::string canon = serialize_manifest(m);
  CHECK(canon.find("\"2/2\"") == std::string::npos);
  CHECK(canon.find("\"0\"") == std::string::npos);
  CHECK(canon.find("\"mult\": [\n      [0, 0, \"1\"],\n      [0, 3, \"1\"],\n      [1, 1, \"1\"],\n      [1, 2, \"1\"]\n    ]") !=
        std::string::npos);
  CHECK(serialize_manifest(parse_manifest(canon)) == canon);
}

TEST_CASE("every payload kind roundtrips") {
  const FiniteGroup s3 = symmetric_group(3);
  const GeneralizedSkewBracoid lm = left_multiplication_gskb(s3);
  std::vector<Manifest> ms = {
      {"g", "", GroupData{s3.table(), s3.unit()}},
      {"h", "notes", sweedler_hopf()},
      {"gskb", "", lm},
      {"bracoid", "", functor_P(lm)},
      {"brace", "", opposite_brace(s3)},
      {"cocycle", "", brace_cocycle(opposite_brace(s3))},
      {"gm", "", GskbMorphismData{lm, lm, GskbMorphism{{0, 1, 2, 3, 4, 5}, {0, 1, 2, 3, 4, 5}}}},
      {"bm", "", BracoidMorphismData{functor_P(lm), functor_P(lm), identity_morphism(functor_P(lm))}},
  };
  for (const auto& m : ms) {
    CAPTURE(m.name);
    CHECK(parse_manifest(serialize_manifest(m)) == m);
  }
}

TEST_CASE("parse errors carry a location") {
  auto message = [](const std::string& text) {
    try {
      parse_manifest(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{").find("malformed JSON at byte") != std::string::npos);
  CHECK(message(R"({"kind": "widget", "payload": {}})").find("/kind: unknown kind 'widget'") != std::string::npos);
  CHECK(message(R"({"kind": "group", "payload": {"order": 2, "unit": 0}})").find("/payload: missing field 'table'") !=
        std::string::npos);
  CHECK(message(R"({"kind": "group", "payload": {"order": 2, "unit": 0, "table": [[0, 1], [1, "0"]]}})")
            .find("/payload/table/1/1: expected a non-negative integer") != std::string::npos);
  std::string bad_scalar = kC2;
  bad_scalar.replace(bad_scalar.find("\"2/2\""), 5, "\"2/0\"");
  CHECK(message(bad_scalar).find("/payload/counit/1/2: invalid rational '2/0'") != std::string::npos);
  CHECK(message(R"({"kind": "group", "extra": 1, "payload": {}})").find("unknown field 'extra'") != std::string::npos);
}

TEST_CASE("shape errors and refusals") {
  std::string out_of_range = kC2;
  out_of_range.replace(out_of_range.find("[3, 1, \"1\"]"), 11, "[4, 1, \"1\"]");
  CHECK_THROWS_AS(parse_manifest(out_of_range), ShapeError);
  std::string duplicate = kC2;
  duplicate.replace(duplicate.find("[1, 0, \"0\"]"), 11, "[1, 1, \"2\"]");
  CHECK_THROWS_AS(parse_manifest(duplicate), ShapeError);
  CHECK_THROWS_AS(parse_manifest(R"({"kind": "group", "payload": {"order": 2, "unit": 0, "table": [[0, 1]]}})"),
                  ShapeError);
  const char* not_group = R"({"kind": "gskb", "payload": {
    "G": {"order": 2, "unit": 0, "table": [[0, 1], [1, 1]]},
    "N": {"order": 1, "unit": 0, "table": [[0]]},
    "action": [[0], [0]]}})";
  CHECK_THROWS_AS(parse_manifest(not_group), PreconditionError);
}

TEST_CASE("dimension cap") {
  const std::size_t saved = max_dim();
  set_max_dim(3);
  CHECK_THROWS_AS(parse_manifest(serialize_manifest({"s", "", sweedler_hopf()})), BoundExceeded);
  CHECK_NOTHROW(parse_manifest(kC2));
  set_max_dim(saved);
  CHECK_NOTHROW(parse_manifest(serialize_manifest({"s", "", sweedler_hopf()})));
}

TEST_CASE("check suites by kind") {
  for (const auto& p : fixtures()) {
    CAPTURE(p.string());
    Manifest m = parse_manifest(read(p));
    const bool negative = p.parent_path().filename() == "negative";
    Report basic = check_manifest(m, Suite::basic);
    Report full = check_manifest(m, Suite::full);
    CHECK(basic.passed() == !negative);
    CHECK(full.passed() == !negative);
    if (negative) {
      REQUIRE(full.first_failure() != nullptr);
      CHECK(full.first_failure()->witness.has_value());
    }
    CHECK(full.results().size() >= basic.results().size());
  }
}

TEST_CASE("report rendering") {
  Report r("x");
  r.add(CheckResult{"law one", Status::pass, std::nullopt, {}, false});
  r.add(CheckResult{"law two", Status::fail, Witness{{1, 2}, {0}, "1", "0"}, {}, false});
  r.add(skipped("law three", "needs law two"));
  r.add(info("flag", true));
  CHECK(render_text(r) ==
        "x: FAIL\n"
        "  pass  law one\n"
        "  FAIL  law two\n"
        "      witness: input (1, 2) output (0): lhs 1, rhs 0\n"
        "  skipped  law three\n"
        "      (needs law two)\n"
        "  info  flag = true\n");
  CHECK(render_machine(r) ==
        R"({"results":[{"equation":"law one","status":"pass","theorem":false},)"
        R"({"equation":"law two","status":"FAIL","theorem":false,"witness":{"input":[1,2],"lhs":"1","output":[0],"rhs":"0"}},)"
        R"({"detail":"needs law two","equation":"law three","status":"skipped","theorem":true},)"
        R"({"detail":"true","equation":"flag","status":"info","theorem":false}],"subject":"x","verdict":"fail"})"
        "\n");
}
