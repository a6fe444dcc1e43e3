#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "kstab/report.hpp"
#include "kstab/suites.hpp"

using namespace kstab;

namespace {

Check make(std::string suite, Status status, std::int64_t ms = 7) {
  Check c;
  c.suite = std::move(suite);
  c.params = {{"n", "5"}, {"k", "2"}};
  c.expected = "x";
  c.actual = "y";
  c.status = status;
  c.duration_ms = ms;
  return c;
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("summary and keys") {
    VerificationReport r;
    r.add(make("a", Status::pass));
    r.add(make("b", Status::discrepancy_noted));
    CHECK(r.ok());
    r.add(make("c", Status::fail));
    const Summary s = r.summary();
    CHECK(s.pass == 1);
    CHECK(s.fail == 1);
    CHECK(s.discrepancy_noted == 1);
    CHECK_FALSE(r.ok());
    CHECK(r.checks()[0].key() == "a[n=5,k=2]");
    CHECK(r.discrepancy_keys() == std::vector<std::string>{"b[n=5,k=2]"});

    VerificationReport other;
    other.append(r);
    other.append(r);
    CHECK(other.checks().size() == 6);
  }

  TEST_CASE("json document") {
    VerificationReport r;
    r.add(make("a", Status::pass, 12));
    r.add(make("b", Status::discrepancy_noted, 3));
    const auto doc = nlohmann::json::parse(r.to_json());
    CHECK(doc["schema"] == std::string(kReportSchema));
    CHECK(doc["tool_version"] == tool_version());
    REQUIRE(doc["checks"].size() == 2);
    const auto& c = doc["checks"][1];
    CHECK(c["suite"] == "b");
    CHECK(c["params"]["n"] == "5");
    CHECK(c["status"] == "discrepancy-noted");
    CHECK(c["duration_ms"] == 3);
    CHECK(doc["summary"]["pass"] == 1);
    CHECK(doc["summary"]["discrepancy-noted"] == 1);

    const auto quiet = nlohmann::json::parse(r.to_json(false));
    for (const auto& check : quiet["checks"]) CHECK(check["duration_ms"] == 0);
  }

  TEST_CASE("text output") {
    VerificationReport r;
    r.add(make("a", Status::fail));
    std::ostringstream out;
    r.write_text(out);
    CHECK(out.str().find("fail") == 0);
    CHECK(out.str().find("summary: 0 pass, 1 fail, 0 discrepancy-noted") != std::string::npos);
  }

  TEST_CASE("discrepancy pin") {
    CHECK(pinned_discrepancies().size() == 2);
    CHECK(discrepancy_pin_check(VerificationReport{}).status == Status::fail);

    VerificationReport r = suite_constructions(1);
    CHECK(r.discrepancy_keys() == pinned_discrepancies());
    CHECK(discrepancy_pin_check(r).status == Status::pass);
    r.add(make("extra", Status::discrepancy_noted));
    CHECK(discrepancy_pin_check(r).status == Status::fail);
  }

  TEST_CASE("suite runs are deterministic") {
    RunConfig config;
    config.max_n = 6;
    config.jobs = 1;
    const std::string one = run_all(config).to_json(false);
    config.jobs = 3;
    const std::string three = run_all(config).to_json(false);
    CHECK(one == three);
    const auto doc = nlohmann::json::parse(one);
    CHECK(doc["summary"]["fail"] == 0);
    CHECK(doc["summary"]["discrepancy-noted"] == 2);

    config.suites = {"nope"};
    CHECK_THROWS_AS(run_all(config), std::invalid_argument);
  }

  TEST_CASE("suite guards") {
    CHECK_THROWS_AS(suite_stability_bound(9), std::invalid_argument);
    CHECK_THROWS_AS(suite_lift(8), std::invalid_argument);
    CHECK_THROWS_AS(suite_uniqueness(4), std::invalid_argument);
    CHECK_THROWS_AS(suite_uniqueness(11), std::invalid_argument);
    CHECK(suite_stability_bound(1).checks().empty());
  }
}
