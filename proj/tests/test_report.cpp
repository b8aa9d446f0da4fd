#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "e6wb/report.hpp"

using namespace e6wb;

TEST_CASE("light verification sections pass") {
  std::vector<Section> sections = run_verify({"basis", "star", "comm", "splitting"});
  REQUIRE(sections.size() == 4);
  CHECK(all_passed(sections));
}

TEST_CASE("verify output is byte-identical across runs") {
  std::vector<std::string> only = {"basis", "splitting", "intersections", "maps", "orbit"};
  std::string a = render_text(run_verify(only));
  std::string b = render_text(run_verify(only));
  CHECK(a == b);
  CHECK(a.find("SUMMARY:") != std::string::npos);
}

TEST_CASE("json report round-trips the pass states") {
  std::vector<Section> sections = run_verify({"grading", "maps"});
  nlohmann::json parsed = nlohmann::json::parse(render_json(sections));
  CHECK(parsed["all_passed"].get<bool>() == all_passed(sections));
  REQUIRE(parsed["sections"].size() == sections.size());
  for (std::size_t i = 0; i < sections.size(); ++i) {
    CHECK(parsed["sections"][i]["name"] == sections[i].name);
    REQUIRE(parsed["sections"][i]["checks"].size() == sections[i].checks.size());
    for (std::size_t j = 0; j < sections[i].checks.size(); ++j) {
      const auto& c = parsed["sections"][i]["checks"][j];
      CHECK(c["pass"].get<bool>() ==
            (c["expected"].get<std::string>() == c["computed"].get<std::string>()));
      CHECK(c["pass"].get<bool>() == sections[i].checks[j].pass);
    }
  }
}

TEST_CASE("unknown section and table names are rejected") {
  CHECK_THROWS_AS(run_verify({"nonsense"}), std::invalid_argument);
  CHECK_THROWS_AS(render_table("nonsense", false), std::invalid_argument);
}

TEST_CASE("tables render in both formats") {
  std::string text = render_table("subht", false);
  CHECK(text.find("r_H") != std::string::npos);
  CHECK(text.find("24") != std::string::npos);
  nlohmann::json js = nlohmann::json::parse(render_table("subt", true));
  CHECK(js["table"] == "subt");
  REQUIRE(js["rows"].size() == 4);
  CHECK(js["rows"][0]["key"] == "r1");
  CHECK(js["rows"][0]["expected"] == "36");
  CHECK(js["rows"][0]["computed"] == "36");
}

TEST_CASE("section name list matches the dispatch table") {
  const std::vector<std::string>& names = section_names();
  CHECK(names.size() == 14);
  CHECK(names.front() == "basis");
  CHECK(names.back() == "chains");
}
