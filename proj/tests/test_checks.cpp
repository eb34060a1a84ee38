// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "graycat/checks.hpp"

using namespace graycat;

TEST_CASE("config round-trips and the shipped default matches the built-in one") {
  const Config c;
  const Config back = Config::from_json_text(c.to_json_text());
  CHECK(back.to_json_text() == c.to_json_text());
  CHECK(back.hash() == c.hash());

  const Config shipped = Config::load(GRAYCAT_SOURCE_DIR "/config/default.json");
  CHECK(shipped.hash() == c.hash());

  Config other;
  other.site_max_n = 3;
  CHECK(other.hash() != c.hash());
}

TEST_CASE("malformed configs are rejected") {
  CHECK_THROWS_AS(Config::from_json_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(Config::from_json_text(R"({"version":1,"bogus":2})"),
                  std::invalid_argument);
}

TEST_CASE("unknown ids and parameters are rejected") {
  CHECK_THROWS_AS(run_check("no-such-check", {}), std::invalid_argument);
  CHECK_THROWS_AS(run_check("step2", {{"zzz", "1"}}), std::invalid_argument);
}

TEST_CASE("every registered check passes on the default config") {
  for (const CheckInfo& info : check_registry()) {
    CAPTURE(info.id);
    CHECK(run_check(info.id, {}).verdict == Verdict::pass);
  }
}

TEST_CASE("falsified candidates are caught") {
  for (const CheckInfo& info : check_registry()) {
    if (!info.can_falsify) continue;
    CAPTURE(info.id);
    RunOptions opt;
    opt.falsify = true;
    CHECK(run_check(info.id, {}, opt).verdict == Verdict::fail);
  }
}

TEST_CASE("parallel and sequential runs give identical reports") {
  const RunOptions opt;
  const Summary seq = run_all(opt, 1);
  const Summary par = run_all(opt, 4);
  REQUIRE(seq.reports.size() == check_registry().size());
  REQUIRE(par.reports.size() == seq.reports.size());
  for (std::size_t i = 0; i < seq.reports.size(); ++i) {
    CHECK(seq.reports[i].id == check_registry()[i].id);
    CHECK(report_json(seq.reports[i]) == report_json(par.reports[i]));
  }
  CHECK(seq.verdict() == Verdict::pass);
}

TEST_CASE("run_all with one falsified check fails overall") {
  const Summary s = run_all({}, 2, "cech-equals-sq");
  CHECK(s.verdict() == Verdict::fail);
  int fails = 0;
  for (const auto& r : s.reports) fails += r.verdict == Verdict::fail;
  CHECK(fails == 1);
}

TEST_CASE("verdicts map to exit codes") {
  CHECK(exit_code(Verdict::pass) == 0);
  CHECK(exit_code(Verdict::fail) == 1);
  CHECK(exit_code(Verdict::inconclusive) == 2);
}

TEST_CASE("property suite is large enough and clean") {
  const PropertySuiteReport r = run_property_suite();
  CHECK(r.instances >= 50);
  CHECK(r.violations == 0);
}
