#include <doctest.h>

#include <json.hpp>

#include "gamma2/verifier.hpp"

using namespace gamma2;

TEST_CASE("theorem relator suite") {
  Report r1 = check_canonical_presentation(1);
  CHECK(r1.all_pass());
  CHECK(r1.checks.size() == 1 + 8);  // one relator plus the census checks

  Report r2 = check_canonical_presentation(2);
  CHECK(r2.all_pass());
  CHECK(r2.checks.size() == 7 + 8);

  Report r3 = check_canonical_presentation(3);
  CHECK(r3.all_pass());
  CHECK(r3.checks.size() == 37 + 8);

  CHECK_THROWS_AS(check_canonical_presentation(0), std::invalid_argument);
  CHECK_THROWS_AS(check_canonical_presentation(7), std::invalid_argument);
}

TEST_CASE("appendix manifest") {
  Report r = check_appendix_identities();
  INFO(r.to_text());
  CHECK(r.all_pass());
  CHECK(r.checks.size() == 13);  // 12 identities plus the coverage count
}

TEST_CASE("edge system suite") {
  Report r = check_edge_systems();
  INFO(r.to_text());
  CHECK(r.all_pass());
}

TEST_CASE("round-trip suite") {
  Report r = roundtrip_suite(2, 25, 14, 7);
  CHECK(r.all_pass());
  CHECK(r.checks.size() == 25);

  Report trivial = roundtrip_suite(2, 1, 0, 123);
  CHECK(trivial.all_pass());

  // determinism: same seed, same labels and outcomes
  Report again = roundtrip_suite(2, 25, 14, 7);
  REQUIRE(again.checks.size() == r.checks.size());
  for (size_t i = 0; i < r.checks.size(); ++i) {
    CHECK(again.checks[i].label == r.checks[i].label);
    CHECK(again.checks[i].pass == r.checks[i].pass);
  }

  CHECK_THROWS_AS(roundtrip_suite(1, 5, 5, 7), std::invalid_argument);
}

TEST_CASE("abelianization cross-check") {
  Report r = cross_check_abelianization();
  INFO(r.to_text());
  CHECK(r.all_pass());
  CHECK(r.checks.size() == 4);
}

TEST_CASE("report bookkeeping and serialization") {
  Report r;
  r.suite = "demo";
  r.check("first", true);
  r.check("second", false, "why it failed");
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  CHECK_FALSE(r.all_pass());

  auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["suite"] == "demo");
  CHECK(j["passed"] == 1);
  CHECK(j["failed"] == 1);
  CHECK(j["checks"].size() == 2);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(j["checks"][1]["status"] == "fail");
  CHECK(j["checks"][1]["detail"] == "why it failed");

  std::string text = r.to_text();
  CHECK(text.find("demo: 1/2 passed") != std::string::npos);
  CHECK(text.find("[FAIL] second -- why it failed") != std::string::npos);
}
