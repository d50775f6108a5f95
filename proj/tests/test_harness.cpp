#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hyperell/report_io.hpp"
#include "hyperell/verify.hpp"

using namespace hyperell;

namespace {

const verify::CheckResult* find(const verify::SuiteReport& report, const std::string& name,
                                const std::string& key, const std::string& value) {
    for (const auto& r : report.results) {
        auto it = r.params.find(key);
        if (r.name == name && it != r.params.end() && it->second == value) return &r;
    }
    return nullptr;
}

} // namespace

TEST_CASE("period suite passes on a sub-grid") {
    const auto report = verify::verify_theorem_period({0.25, 1.0 / 3.0, 1.0, 3.0}, 1e-8);
    CHECK(report.suite == "period");
    CHECK(report.passed == 4);
    CHECK(report.failed == 0);
    for (const auto& r : report.results) CHECK(r.residual < 1e-8);
}

TEST_CASE("period suite reports domain violations as failures, not exceptions") {
    const auto report = verify::verify_theorem_period({0.25, -1.0}, 1e-8);
    CHECK(report.passed == 1);
    CHECK(report.failed == 1);
    CHECK(report.results[1].params.count("error") == 1);
}

TEST_CASE("corollary suite: closed forms at lambda = 1/3") {
    const auto report = verify::verify_corollary(1e-9);
    CHECK(report.passed == 3);
    CHECK(report.failed == 0);
    CHECK(report.results[0].name == "binomial-form");
    CHECK(report.results[1].name == "gamma-form");
    CHECK(report.results[2].name == "ratio-consistency");
}

TEST_CASE("ono suite: exact rational matches, with skip markers") {
    const auto report = verify::verify_ono({1, 3}, {3, 5, 7, 11, 13});
    // p = 3 fails the ord condition -> one skip marker; the rest contribute
    // a direct and a transformed check each.
    CHECK(report.failed == 0);
    CHECK(report.passed == 9);

    const auto* skipped = find(report, "direct", "p", "3");
    REQUIRE(skipped != nullptr);
    CHECK(skipped->params.count("skipped") == 1);

    const auto* direct7 = find(report, "direct", "p", "7");
    REQUIRE(direct7 != nullptr);
    CHECK(direct7->lhs == "9/49");
    CHECK(direct7->rhs == "9/49");
    CHECK(direct7->params.at("a_p") == "-4");

    const auto* transformed7 = find(report, "transformed", "p", "7");
    REQUIRE(transformed7 != nullptr);
    CHECK(transformed7->lhs == "-9/49");
}

TEST_CASE("greene inversion suite over F_7") {
    const auto report = verify::verify_greene_inversion(7);
    CHECK(report.suite == "inversion");
    CHECK(report.passed == 6);  // t = 1..6
    CHECK(report.failed == 0);
    const auto* t4 = find(report, "greene-inversion", "t", "4");
    REQUIRE(t4 != nullptr);
    CHECK(t4->lhs == "-9/49");  // 3F2(2)_7, since 1/4 = 2 mod 7
    CHECK(t4->params.at("inv_t") == "2");
}

TEST_CASE("trace-binomial suite: both parts, both residue classes") {
    const auto report = verify::verify_theorem_binomial({5, 7, 13, 31});
    CHECK(report.passed == 8);
    CHECK(report.failed == 0);

    const auto* p7 = find(report, "part1", "p", "7");
    REQUIRE(p7 != nullptr);
    CHECK(p7->lhs == "-4/7");
    const auto* p13 = find(report, "part2", "p", "13");
    REQUIRE(p13 != nullptr);
    CHECK(p13->lhs == "-2");
    const auto* p5 = find(report, "part1", "p", "5");
    REQUIRE(p5 != nullptr);
    CHECK(p5->lhs == "0");
    CHECK(p5->params.at("branch").find("constant-one") != std::string::npos);
}

TEST_CASE("transformation suite: fixed grid plus seeded random instances") {
    const auto report = verify::verify_transformations({0.0, 0.25, 0.5}, 1e-9, 12345);
    CHECK(report.passed == 3 * 3 + 20);
    CHECK(report.failed == 0);
    // seeded reruns are identical
    const auto again = verify::verify_transformations({0.0, 0.25, 0.5}, 1e-9, 12345);
    REQUIRE(report.results.size() == again.results.size());
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        CHECK(report.results[i].lhs == again.results[i].lhs);
        CHECK(report.results[i].params == again.results[i].params);
    }
}

TEST_CASE("twist suite skips p | t and passes elsewhere") {
    const auto report = verify::verify_twist_relation({5, 7, 11, 13});
    CHECK(report.failed == 0);
    CHECK(report.passed == 12);  // 3 twists x 4 primes, one of them a skip
    const auto* skipped = find(report, "twist", "t", "5");
    REQUIRE(skipped != nullptr);
    bool found_skip = false;
    for (const auto& r : report.results) found_skip |= r.params.count("skipped") == 1;
    CHECK(found_skip);
}

TEST_CASE("jacobsthal suite") {
    const auto report = verify::verify_jacobsthal({5, 7, 13, 31});
    CHECK(report.passed == 4);
    CHECK(report.failed == 0);
    const auto* p13 = find(report, "jacobsthal", "p", "13");
    REQUIRE(p13 != nullptr);
    CHECK(p13->lhs == "-2");
    CHECK(p13->params.at("a") == "-1");
}

TEST_CASE("run_suite rejects unknown names") {
    CHECK_THROWS_AS(verify::run_suite("nonsense"), std::invalid_argument);
}

TEST_CASE("run_all on reduced grids: every suite green") {
    verify::Config cfg;
    cfg.ono_primes_max = 13;
    cfg.binomial_primes_max = 31;
    cfg.jacobsthal_primes_max = 31;
    cfg.twist_primes_max = 13;
    cfg.inversion_primes = {5, 7};
    cfg.lambda_grid = {0.25, 1.0, 3.0};
    cfg.z_grid = {0.0, 0.25, 0.5};
    const auto reports = verify::run_all(cfg);
    CHECK(reports.size() == verify::suite_names().size());
    for (const auto& r : reports) {
        CAPTURE(r.suite);
        CHECK(r.failed == 0);
        CHECK(r.passed > 0);
    }
}

TEST_CASE("JSON report round-trips byte-identically") {
    verify::Config cfg;
    cfg.inversion_primes = {7};
    std::vector<verify::SuiteReport> reports{verify::run_suite("inversion", cfg),
                                             verify::verify_corollary(1e-9)};
    const std::string text = report::to_json(reports);
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed.dump(2) + "\n" == text);
    CHECK(parsed["total_failed"] == 0);
    CHECK(parsed["reports"][0]["suite"] == "inversion");
    CHECK(parsed["reports"][0]["results"][0]["params"].contains("p"));
}

TEST_CASE("CSV report shape") {
    verify::Config cfg;
    cfg.inversion_primes = {7};
    const auto reports = std::vector<verify::SuiteReport>{verify::run_suite("inversion", cfg)};
    const std::string text = report::to_csv(reports);

    std::istringstream lines(text);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "suite,name,params,lhs,rhs,residual,passed");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(line.find("inversion") != std::string::npos);
        CHECK(line.rfind(",true") == line.size() - 5);
    }
    CHECK(rows == reports[0].results.size());
    CHECK(text.find("9/49") != std::string::npos);
}

TEST_CASE("human report marks failures loudly") {
    verify::SuiteReport fake;
    fake.suite = "demo";
    verify::CheckResult bad;
    bad.name = "broken";
    bad.lhs = "1/2";
    bad.rhs = "1/3";
    bad.residual = 0.1666;
    bad.passed = false;
    fake.add(bad);
    const auto text = report::to_human({fake});
    CHECK(text.find("FAIL broken") != std::string::npos);
    CHECK(text.find("FAILURES PRESENT") != std::string::npos);

    const auto ok = report::to_human({verify::verify_corollary(1e-9)});
    CHECK(ok.find("ALL PASSED") != std::string::npos);
}
