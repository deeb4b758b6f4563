#include <doctest.h>

#include <json.hpp>

#include "stacksort/closed_forms.hpp"
#include "stacksort/perm_core.hpp"
#include "stacksort/report.hpp"
#include "stacksort/sortability.hpp"

using namespace stacksort;
using nlohmann::json;

TEST_CASE("enumeration tables") {
  EnumerationQuery q;
  q.n = 3;
  auto h = enumerate_histogram(q);
  CHECK(render_enumeration(q, h, true, Format::Csv) == "k_0,k_1,count\n0,2,1\n1,1,4\n2,0,1\n");
  CHECK(render_enumeration(q, h, false, Format::Csv) == "n,r,count\n3,1,6\n");
  auto j = json::parse(render_enumeration(q, h, true, Format::Json));
  CHECK(j["total"] == "6");
  CHECK(j["n"] == "3");
  // Rendering twice gives identical bytes.
  CHECK(render_enumeration(q, h, true, Format::Json) == render_enumeration(q, h, true, Format::Json));
}

TEST_CASE("formula tables") {
  auto j = json::parse(render_formula("2ss-total", 4, 1, std::nullopt, Format::Json));
  CHECK(j["value"] == "22");
  auto t = json::parse(render_formula("ss", 3, 1, std::nullopt, Format::Json));
  CHECK(t["total"] == "5");
  CHECK(t["rows"].size() == 3);
  auto one = json::parse(render_formula("2ss", 0, 1, DescentVector({1, 1}), Format::Json));
  CHECK(one["value"] == "4");
  CHECK(render_formula("2ss", 3, 1, std::nullopt, Format::Csv) == "k_0,k_1,count\n0,2,1\n1,1,4\n2,0,1\n");
  CHECK_THROWS(render_formula("bogus", 3, 1, std::nullopt, Format::Json));
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("check verdicts") {
  Word p = parse_word("2341");
  auto res = t_char_check(p, 2);
  auto j = json::parse(render_check(2, "char", res.sortable, res.witness, p));
  CHECK(j["sortable"] == false);
  CHECK(j["witness"]["positions"] == json::array({"1", "2", "3", "4"}));
  CHECK(j["witness"]["letters"] == json::array({"2", "3", "4", "1"}));
  auto ok = json::parse(render_check(1, "iterate", true, std::nullopt, parse_word("12")));
  CHECK(ok["witness"].is_null());
}

TEST_CASE("descent report") {
  auto j = json::parse(render_descents({parse_word("544453222335611166")}, 3));
  CHECK(j["vector"] == json::array({"1", "3", "1", "0"}));
  CHECK(j["sets"][1] == json::array({"3", "5", "6"}));
}
