#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "dcr/app.hpp"
#include "dcr/error.hpp"
#include "dcr/vkdecomp.hpp"

using namespace dcr;

namespace {

app::RunConfig config_for(std::uint64_t q, std::uint64_t seed = 1) {
  app::RunConfig c;
  c.q = q;
  c.policy.seed = seed;
  return c;
}

std::vector<std::string> keys(const json::ordered& j) {
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) out.push_back(k);
  return out;
}

}  // namespace

TEST_CASE("field resolution") {
  CHECK(app::resolve_field(config_for(9))->q() == 9);
  app::RunConfig pr;
  pr.p = 2;
  pr.r = 3;
  CHECK(app::resolve_field(pr)->q() == 8);
  pr.q = 8;
  CHECK(app::resolve_field(pr)->q() == 8);
  pr.q = 9;
  CHECK_THROWS_AS(app::resolve_field(pr), ParseError);
  CHECK_THROWS_AS(app::resolve_field(config_for(6)), NotPrimePower);
  CHECK_THROWS_AS(app::resolve_field(app::RunConfig{}), ParseError);
}

TEST_CASE("report field order is fixed") {
  const auto f = app::resolve_field(config_for(3));
  const auto r = app::run_verify(f, config_for(3));
  CHECK(r.certified);
  const auto k = keys(r.report);
  REQUIRE(k.size() >= 6);
  CHECK(std::vector<std::string>(k.begin(), k.begin() + 4) ==
        std::vector<std::string>{"q", "genus", "summands", "semisimple"});
  CHECK(r.report.at("summands").size() == 2);
  CHECK(keys(r.report.at("summands")[0]) ==
        std::vector<std::string>{"k", "dim", "indecomposable", "simple", "certificate"});
  for (const auto& [name, entry] : r.report.at("checks").items()) {
    CAPTURE(name);
    CHECK(entry.at("status") == "pass");
    CHECK(keys(entry).front() == "status");
  }
  CHECK_FALSE(r.report.contains("timings_ms"));
}

TEST_CASE("identical configurations give identical bytes") {
  for (std::uint64_t q : {4u, 5u}) {
    const auto f = app::resolve_field(config_for(q, 42));
    const auto a = app::render_json(app::run_verify(f, config_for(q, 42)).report);
    const auto b = app::render_json(app::run_verify(f, config_for(q, 42)).report);
    CHECK(a == b);
  }
}

TEST_CASE("seeds are recorded and change the sampled checks only") {
  auto c = config_for(7, 5);
  c.policy.mode = SamplingPolicy::Mode::sampled;
  c.policy.samples = 300;
  const auto f = app::resolve_field(c);
  const auto a = app::run_verify(f, c);
  CHECK(a.report.at("seed") == 5);
  CHECK(a.report.at("policy") == "sampled");
  CHECK(a.certified);
}

TEST_CASE("text report rendering") {
  const auto f3 = app::resolve_field(config_for(3));
  const auto text3 = app::render_report(app::run_verify(f3, config_for(3)).report);
  CHECK(text3.find("semisimple: yes") != std::string::npos);
  const auto f9 = app::resolve_field(config_for(9));
  const auto text9 = app::render_report(app::run_verify(f9, config_for(9)).report);
  CHECK(text9.find("semisimple: no (witness k=3)") != std::string::npos);
}

TEST_CASE("reports round trip through a file") {
  const auto f = app::resolve_field(config_for(4));
  const auto r = app::run_verify(f, config_for(4));
  const std::string path = "report_roundtrip_test.json";
  {
    std::ofstream out(path);
    out << app::render_json(r.report);
  }
  const auto loaded = app::load_report(path);
  CHECK(app::render_json(loaded) == app::render_json(r.report));
  CHECK(app::render_report(loaded).find("semisimple: no (witness k=2)") != std::string::npos);
  std::remove(path.c_str());
  CHECK_THROWS_AS(app::load_report("does_not_exist.json"), ParseError);
}

TEST_CASE("orders table") {
  const auto o3 = app::run_orders(app::resolve_field(config_for(3)));
  CHECK(o3.ok);
  CHECK(o3.rows.size() == 3);
  for (const auto& row : o3.rows) CHECK(row.at("total") == 4);
  const auto o2 = app::run_orders(app::resolve_field(config_for(2)));
  CHECK(o2.rows.size() == 1);
  CHECK(o2.rows[0].at("total") == 0);
  const auto o5 = app::run_orders(app::resolve_field(config_for(5)));
  CHECK(o5.rows.size() == 10);
  for (const auto& row : o5.rows) CHECK(row.at("total") == 18);
}

TEST_CASE("matrix dumps") {
  const auto f3 = app::resolve_field(config_for(3));
  CHECK(app::matrix_dump(sl2::GroupElement::identity(f3), std::nullopt) ==
        "3 3 all\n3 3\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK(app::matrix_dump(sl2::GroupElement::lower(f3, 1), 1) == "3 3 1\n2 2\n1 2\n0 1\n");
}
