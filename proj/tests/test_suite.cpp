#include <doctest.h>

#include <json.hpp>

#include "rainbow/json_reports.hpp"
#include "rainbow/suite.hpp"

using namespace rainbow;

TEST_SUITE("cli-ops") {

TEST_CASE("paper suite passes at small scale") {
    VerificationSuite suite = run_paper_suite(8, {3, 4, 5, 6, 7, 8}, 50'000'000);
    CHECK_FALSE(suite.any_fail());
    CHECK(suite.count("pass") > 10);
    CHECK(suite.count("inconclusive") == 0);
}

TEST_CASE("suite below the residue gate reports the skip") {
    VerificationSuite suite = run_paper_suite(6, {3, 4, 5}, 10'000'000);
    CHECK_FALSE(suite.any_fail());
    bool skipped = false;
    for (const auto& c : suite.checks)
        if (c.status == "vacuous" && c.detail.rfind("skipped", 0) == 0) skipped = true;
    CHECK(skipped);
}

TEST_CASE("starved budget yields inconclusive entries, not failures") {
    VerificationSuite suite = run_paper_suite(8, {4, 5, 7, 8}, 50);
    CHECK_FALSE(suite.any_fail());
    CHECK(suite.count("inconclusive") > 0);
}

TEST_CASE("suite json round trips") {
    VerificationSuite suite = run_paper_suite(6, {3, 4}, 10'000'000);
    nlohmann::json j = to_json(suite);
    nlohmann::json reparsed = nlohmann::json::parse(j.dump());
    CHECK(j == reparsed);
    CHECK(j["fail"] == 0);
    CHECK(j["checks"].size() == suite.checks.size());
}

TEST_CASE("threshold exploration") {
    ThresholdReport r = explore_threshold(9, 4, 20, 7);
    CHECK(r.palette_size == 5);  // ceil(14/3)
    CHECK(r.threshold == 5);
    CHECK(r.accepted <= 20);
    CHECK(r.with_rainbow <= r.accepted);

    // deterministic given the seed
    ThresholdReport again = explore_threshold(9, 4, 20, 7);
    CHECK(to_json(r) == to_json(again));
    ThresholdReport other = explore_threshold(9, 4, 20, 8);
    CHECK(other.trials == 20);

    ThresholdReport empty = explore_threshold(9, 4, 0, 7);
    CHECK(empty.accepted == 0);
    CHECK(empty.hit_rate == 0.0);
}

}  // TEST_SUITE
