#include <doctest.h>

#include <json.hpp>

#include "lcskit/report.hpp"

using namespace lcs;

namespace {

LcsReport run(const char* text, int max_weight) {
  LcsEngine e(parse_presentation(text), {.max_weight = max_weight});
  return e.report();
}

}  // namespace

TEST_CASE("dihedral json") {
  const LcsReport r = run("gens x, y\nrels x^2, y^2", 3);
  const auto j = nlohmann::json::parse(render_json(r));
  CHECK(j["schema"] == 1);
  const auto expected = nlohmann::json::parse(
      R"([{"n":1,"torsion":[2,2],"free_rank":0},{"n":2,"torsion":[2],"free_rank":0},)"
      R"({"n":3,"torsion":[2],"free_rank":0}])");
  CHECK(j["factors"] == expected);
  CHECK(j["diagnostics"].size() == 3);
}

TEST_CASE("json round trip") {
  for (const char* text : {"gens x, y\nrels x^2, y^2", "gens x, y\nrels", "gens x\nrels x^3",
                           "gens x, y, z\nrels x^2, y^4, [y,x], [z,x], [z,y]"}) {
    const LcsReport r = run(text, 3);
    CHECK(parse_report_json(render_json(r)) == r);
    CHECK(parse_report_json(render_json(r, -1)) == r);
  }
}

TEST_CASE("large torsion survives json") {
  LcsReport r;
  AbelianInvariants a;
  a.torsion.emplace_back("123456789012345678901234567890");
  r.factors.push_back({1, a});
  const std::string s = render_json(r);
  CHECK(s.find("\"123456789012345678901234567890\"") != std::string::npos);
  CHECK(parse_report_json(s) == r);
}

TEST_CASE("json schema errors") {
  CHECK_THROWS_AS(parse_report_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_json(R"({"schema":2,"factors":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_report_json(R"({"schema":1})"), std::invalid_argument);
}

TEST_CASE("table rows") {
  const std::string t = render_table(run("gens x, y\nrels", 3));
  CHECK(t.rfind("n", 0) == 0);
  CHECK(t.find("\n1  ") != std::string::npos);
  CHECK(t.find("Z^2") != std::string::npos);
  const LcsReport back = parse_report_table(t);
  REQUIRE(back.factors.size() == 3);
  CHECK(to_string(back.factors[0].factor) == "Z^2");
  CHECK(to_string(back.factors[1].factor) == "Z");
  CHECK(to_string(back.factors[2].factor) == "Z^2");
}

TEST_CASE("table and json carry the same data") {
  for (const char* text : {"gens x, y\nrels x^2, y^2", "gens x, y\nrels [y,x,x], [y,x,y]", "gens x\nrels x^3"}) {
    const LcsReport r = run(text, 3);
    CHECK(parse_report_table(render_table(r)) == parse_report_json(render_json(r)));
  }
}

TEST_CASE("basics listing") {
  LcsEngine e(parse_presentation("gens x, y\nrels x^2, y^2"), {.max_weight = 2});
  e.report();
  const std::vector<std::string> names{"x", "y"};
  const std::string s = render_basics(e.stages(), e.collector().basis(), names);
  CHECK(s.find("[y,x]") != std::string::npos);
  CHECK(s.find("d=2") != std::string::npos);
}
