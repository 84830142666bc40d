#include "tridesign/report.hpp"

#include "doctest.h"
#include "json.hpp"

#include <sstream>

using namespace tridesign;

TEST_SUITE("cli-report") {
  TEST_CASE("record schema") {
    const auto j = nlohmann::json::parse(candidate_json(classify(341, 638352)));
    CHECK(j["n"] == 341);
    CHECK(j["M"] == "638352");
    CHECK(j["T"] == "3744");
    CHECK(j["status"] == "SurvivorRefutedByDerived");
    CHECK(j["inner_products"] == nlohmann::json::array({"-1/7", "-1/35", "1/14"}));
    CHECK(j["distribution"] == nlohmann::json::array({"23205", "406250", "208896"}));
    CHECK(j["families"].empty());
    REQUIRE(j["derived"].size() == 3);
    CHECK(j["derived"][0]["which"] == "a");
    CHECK(j["derived"][0]["products"] == nlohmann::json::array({"-1/6", "-1/20", "5/96"}));
    CHECK(j["derived"][0]["values"][0] == "1872/7");
    CHECK(j["derived"][0]["verdict"] == "ContradictionNonInteger");
  }

  TEST_CASE("intervals serialize as string pairs") {
    const auto j = nlohmann::json::parse(candidate_json(classify(3, 12)));
    CHECK(j["inner_products"][0] == "-1");
    REQUIRE(j["inner_products"][2].is_array());
    CHECK(j["inner_products"][2].size() == 2);
    CHECK(j["inner_products"][2][0].is_string());
    CHECK(j["families"][0] == "Tight5(icosahedron)");
  }

  TEST_CASE("scan report is deterministic") {
    ScanOptions options;
    options.jobs = 2;
    ReportMetadata meta;
    meta.n_min = 3;
    meta.n_max = 60;
    meta.include_timestamp = false;
    const std::string first = scan_report_json(scan_range(3, 60, options), meta);
    options.jobs = 1;
    const std::string second = scan_report_json(scan_range(3, 60, options), meta);
    CHECK(first == second);
    const auto j = nlohmann::json::parse(first);
    CHECK(j["metadata"]["version"] == version_string());
    CHECK_FALSE(j["metadata"].contains("timestamp"));
    CHECK(j["metadata"]["counts"]["KnownFamilyMatch"] == 6);
    meta.include_timestamp = true;
    meta.timestamp = "2000-01-01T00:00:00Z";
    CHECK(nlohmann::json::parse(scan_report_json(scan_range(3, 10, options), meta))["metadata"]["timestamp"] ==
          "2000-01-01T00:00:00Z");
  }

  TEST_CASE("CSV and JSON carry the same records") {
    ScanOptions options;
    options.verbose = true;
    const auto result = scan_range(3, 25, options);
    ReportMetadata meta;
    meta.n_min = 3;
    meta.n_max = 25;
    const auto j = nlohmann::json::parse(scan_report_json(result, meta));
    std::istringstream csv(scan_report_csv(result));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "n,M,T,status,inner_products,distribution,families,derived_a,derived_b,derived_c");
    std::size_t rows = 0;
    while (std::getline(csv, line)) {
      const auto& record = j["records"][rows];
      std::istringstream fields(line);
      std::string n, M, T, status;
      std::getline(fields, n, ',');
      std::getline(fields, M, ',');
      std::getline(fields, T, ',');
      std::getline(fields, status, ',');
      CHECK(std::to_string(record["n"].get<int>()) == n);
      CHECK(record["M"] == M);
      CHECK(record["status"] == status);
      ++rows;
    }
    CHECK(rows == j["records"].size());
    CHECK(rows > 100);
  }

  TEST_CASE("analysis text") {
    const std::string text = analysis_text(classify(638, 2236509));
    CHECK(text.find("a = -1/8") != std::string::npos);
    CHECK(text.find("X = 40508") != std::string::npos);
    CHECK(text.find("52193/224") != std::string::npos);
    CHECK(text.find("status: SurvivorRefutedByDerived") != std::string::npos);
  }
}
