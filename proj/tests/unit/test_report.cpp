#include "doctest.h"

#include "cosetforge/error.hpp"
#include "cosetforge/report.hpp"

using namespace cosetforge;
using nlohmann::json;

TEST_CASE("suite catalogue") {
  CHECK(report::suite_names().size() == 7);
  const auto all = report::check_names("all");
  std::size_t sum = 0;
  for (const auto& s : report::suite_names()) {
    if (s != "all") sum += report::check_names(s).size();
  }
  CHECK(all.size() == sum);
  CHECK_THROWS_AS(report::check_names("nonsense"), InvalidArgument);
  report::SuiteOptions o;
  o.check = "no-such-check";
  CHECK_THROWS_AS(report::run_suite("codes", o), InvalidArgument);
}

TEST_CASE("single check") {
  report::SuiteOptions o;
  o.check = "intersection-array";
  o.meta = false;
  const auto r = report::run_suite("graphs", o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].status == report::Status::pass);
  CHECK(r[0].computed == "{33,30,15;1,2,15}");
  CHECK(r[0].elapsed_ms == 0);
  const auto j = report::to_json("graphs", r);
  CHECK(j["version"] == report::kVersion);
  CHECK(j["results"][0]["status"] == "pass");
}

TEST_CASE("codes suite is reproducible") {
  report::SuiteOptions o;
  o.meta = false;
  const auto a = report::run_suite("codes", o);
  const auto b = report::run_suite("codes", o);
  CHECK(report::all_passed(a));
  CHECK(report::to_json("codes", a).dump() == report::to_json("codes", b).dump());
  bool found = false;
  for (const auto& r : a) {
    if (r.name == "weight-distribution") {
      found = true;
      CHECK(r.computed == json::parse("[[0,1],[5,198],[6,198],[7,990],[8,495],[9,1650],[10,330],[11,234]]"));
    }
  }
  CHECK(found);
}

TEST_CASE("exports") {
  const auto edges = report::render_export("graph:coset-D-", "edgelist");
  CHECK(std::count(edges.begin(), edges.end(), '\n') == 16896);
  CHECK(report::render_export("code:D-", "code-text").rfind("F4 n=11 rows=12\n", 0) == 0);
  const auto p = json::parse(report::render_export("scheme:P-matrices", "json"));
  CHECK(p["coset_scheme"]["p"] == json::parse("[[1,33,495,495],[1,9,15,-25],[1,1,-17,15],[1,-7,15,-9]]"));
  CHECK(p["distance_scheme"]["p"] == json::parse("[[1,198,495,330],[1,54,15,-70],[1,6,-17,10],[1,-10,15,-6]]"));
  CHECK(report::render_export("graph:cayley-1024", "dot").rfind("graph cayley_1024 {", 0) == 0);
  CHECK(report::render_export("code:B-", "code-text").rfind("F2 n=33 rows=23\n", 0) == 0);
  CHECK_THROWS_AS(report::render_export("code:D-", "dot"), InvalidArgument);
  CHECK_THROWS_AS(report::render_export("graph:petersen", "dot"), InvalidArgument);
}
