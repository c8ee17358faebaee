#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jpst/report.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace jpst;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("time parsing") {
  CHECK(parse_time("pi") == doctest::Approx(kPi));
  CHECK(parse_time("pi/2") == doctest::Approx(kPi / 2));
  CHECK(parse_time("3pi/4") == doctest::Approx(3 * kPi / 4));
  CHECK(parse_time("2pi") == doctest::Approx(2 * kPi));
  CHECK(parse_time("2*pi") == doctest::Approx(2 * kPi));
  CHECK(parse_time(" pi / 2 ") == doctest::Approx(kPi / 2));
  CHECK(parse_time("0.75") == doctest::Approx(0.75));
  CHECK(parse_time("3") == doctest::Approx(3.0));
  CHECK_THROWS_AS(parse_time("pie"), std::invalid_argument);
  CHECK_THROWS_AS(parse_time("pi/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_time(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_time("two"), std::invalid_argument);
}

TEST_CASE("envelope shape and determinism") {
  const auto a = cmd_scheme_info(6, 3);
  CHECK(a.at("command") == "scheme-info");
  CHECK(a.at("version") == std::string(artifact_version()));
  CHECK(a.contains("timestamp"));
  CHECK(a.at("parameters").at("n") == 6);

  const auto b = cmd_scheme_info(6, 3);
  CHECK(a.at("results").dump() == b.at("results").dump());
}

TEST_CASE("scheme-info payload") {
  const auto env = cmd_scheme_info(6, 3);
  const auto& r = env.at("results");
  CHECK(r.at("scheme").at("v") == "20");
  CHECK(r.at("involution_classes") == std::vector<int>{3});
  CHECK(r.at("connectivity").size() == 3);
  CHECK(r.at("connectivity")[0].at("predicted_connected") == false);  // Kneser
  CHECK(r.at("connectivity")[1].at("predicted_connected") == true);
}

TEST_CASE("pst command: decided yes with amplitude confirmation") {
  const auto res = cmd_pst(12, 6, {0});
  CHECK(res.exit_code == 0);
  const auto& r = res.envelope.at("results");
  CHECK(r.at("verdict").at("has_pst") == true);
  CHECK(r.at("oracle").at("kind") == "amplitude_at_time");
  CHECK(r.at("oracle").at("confirms_pst") == true);
  CHECK(std::abs(r.at("oracle").at("modulus").get<double>() - 1.0) < 1e-9);
}

TEST_CASE("pst command: union yes at pi/2") {
  const auto res = cmd_pst(6, 3, {1, 2});
  CHECK(res.exit_code == 0);
  CHECK(res.envelope.at("results").at("verdict").at("has_pst") == true);
  CHECK(res.envelope.at("results").at("oracle").at("confirms_pst") == true);
}

TEST_CASE("pst command: refuted union carries scan evidence") {
  const auto res = cmd_pst(6, 3, {0, 1});
  CHECK(res.exit_code == 0);
  const auto& r = res.envelope.at("results");
  CHECK(r.at("verdict").at("status") == "NO_PST");
  CHECK(r.at("verdict").at("obstruction").at("tag") == "ORD2_FAIL");
  CHECK(r.at("oracle").at("kind") == "scan");
  CHECK(r.at("oracle").at("below_pst_threshold") == true);
  CHECK(r.at("oracle").at("max_modulus").get<double>() < 0.999);
}

TEST_CASE("pst command: inconclusive pass exits 3 and is oracle-confirmed") {
  const auto res = cmd_pst(8, 4, {0, 1, 3});
  CHECK(res.exit_code == 3);
  const auto& r = res.envelope.at("results");
  CHECK(r.at("verdict").at("status") == "INCONCLUSIVE_PASS");
  CHECK(r.at("oracle").at("kind") == "scan");
  // this particular union really does transfer at pi/2
  CHECK(r.at("oracle").at("detects_pst") == true);
}

TEST_CASE("pst command: n != 2k reports an automorphism witness") {
  const auto res = cmd_pst(5, 2, {1});
  CHECK(res.exit_code == 0);
  const auto& r = res.envelope.at("results");
  CHECK(r.at("verdict").at("obstruction").at("tag") == "NOT_2K");
  CHECK(r.at("oracle").at("kind") == "automorphism_witness");
  CHECK(r.at("oracle").at("transposition").is_array());
}

TEST_CASE("survey rows") {
  const auto env = cmd_survey(3);
  const auto& rows = env.at("results").at("rows");
  REQUIRE(rows.size() == 5);  // (2,0),(2,1),(3,0),(3,1),(3,2)
  CHECK(rows[0].at("k") == 2);
  CHECK(rows[0].at("i") == 0);
  CHECK(rows[0].at("has_pst") == true);
  CHECK(rows[1].at("obstruction") == "DEGREE_EVEN");
  CHECK(rows[2].at("has_pst") == true);   // (3,0)
  CHECK(rows[3].at("obstruction") == "ODD_EVEN");
  CHECK(rows[4].at("obstruction") == "ODD_ODD");
  for (const auto& row : rows)
    if (row.at("i").get<int>() > 0) CHECK(row.at("has_pst") == false);

  const std::string csv = survey_csv(env);
  CHECK(csv.find("k,i,binom_k_i_parity") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows
  CHECK(csv.find("2,0,odd,odd,yes,,2,1") != std::string::npos);

  CHECK_THROWS_AS(cmd_survey(1), std::invalid_argument);
}

TEST_CASE("verify passes on a small range") {
  const auto res = cmd_verify(6);
  CHECK(res.ok);
  CHECK(res.envelope.at("results").at("ok") == true);
  for (const auto& suite : res.envelope.at("results").at("suites")) {
    CAPTURE(suite.at("name").get<std::string>());
    CHECK(suite.at("failures").empty());
    CHECK(suite.at("checked").get<long long>() > 0);
  }
}

TEST_CASE("verify --corrupt must fail") {
  const auto res = cmd_verify(6, /*corrupt=*/true);
  CHECK_FALSE(res.ok);
  bool closed_form_failed = false;
  for (const auto& suite : res.envelope.at("results").at("suites"))
    if (suite.at("name") == "closed_form_consistency")
      closed_form_failed = !suite.at("failures").empty();
  CHECK(closed_form_failed);
}

TEST_CASE("walk command payload") {
  const auto env = cmd_walk(6, 3, {1, 2}, KSubset(6, {1, 2, 3}),
                            KSubset(6, {4, 5, 6}), parse_time("pi/2"));
  const auto& r = env.at("results");
  CHECK(r.at("re").get<double>() == doctest::Approx(-1.0));
  CHECK(r.at("modulus").get<double>() == doctest::Approx(1.0));

  const auto id = cmd_walk(6, 3, {1}, KSubset(6, {1, 2, 3}),
                           KSubset(6, {1, 2, 3}), 0.0);
  CHECK(id.at("results").at("re").get<double>() == doctest::Approx(1.0));
  CHECK(id.at("results").at("im").get<double>() == doctest::Approx(0.0));
}

TEST_CASE("walk trace CSV") {
  const std::string csv = walk_trace_csv(6, 3, {0}, KSubset(6, {1, 2, 3}),
                                         KSubset(6, {4, 5, 6}), kPi, 100);
  CHECK(csv.find("t,re,im,modulus\n") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 101);
}
