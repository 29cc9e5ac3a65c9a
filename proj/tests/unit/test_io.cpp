#include <doctest.h>

#include <cmath>
#include <sstream>

#include "bohrlab/errors.hpp"
#include "bohrlab/io.hpp"

using namespace bohrlab;
using nlohmann::json;

TEST_CASE("series json round trip") {
  const auto f = mobius_series(0.3, 32);
  const json j = io::to_json(f);
  CHECK(j.at("vanish_order") == 0);
  CHECK(j.at("coeffs").size() == 33);
  CHECK(j.at("coeffs")[1][0].get<double>() == f[1].real());
  CHECK(j.at("tail").at("q").get<double>() == doctest::Approx(0.3));
  const auto back = io::series_from_json(json::parse(j.dump()));
  CHECK(back == f);
  REQUIRE(back.tail());
  CHECK(back.tail()->B == f.tail()->B);

  const PowerSeries bare({0.0, Complex{0.25, -0.5}});
  const json jb = io::to_json(bare);
  CHECK(jb.at("tail").is_null());
  CHECK(jb.at("vanish_order") == 1);
  CHECK(io::series_from_json(jb) == bare);
}

TEST_CASE("series json rejects malformed input") {
  CHECK_THROWS_AS(io::series_from_json(json::parse(R"({"coeffs": []})")), ContractError);
  CHECK_THROWS_AS(io::series_from_json(json::parse(R"({"coeffs": [[1]]})")), ContractError);
  CHECK_THROWS_AS(io::series_from_json(json::parse(R"({"vanish_order": 2, "coeffs": [[0,0],[1,0]]})")),
                  ContractError);
  CHECK_THROWS_AS(io::series_from_json(json::parse(R"({"tail": null})")), ContractError);
}

TEST_CASE("truncation toward zero") {
  CHECK(io::truncate_decimals(0.2865262) == "0.28652");
  CHECK(io::truncate_decimals(0.2865299999) == "0.28652");
  CHECK(io::truncate_decimals(0.3) == "0.29999");  // 0.3 is stored below 0.3
  CHECK(io::truncate_decimals(0.5) == "0.50000");
  CHECK(io::truncate_decimals(-1.234567, 3) == "-1.234");
  CHECK(io::truncate_decimals(-0.000001) == "0.00000");
  CHECK(io::truncate_decimals(2.0, 0) == "2");
  CHECK_THROWS_AS(io::truncate_decimals(1.0, 16), ContractError);
  CHECK(io::full(0.1) == "0.10000000000000001");
}

TEST_CASE("table csv carries full precision") {
  const std::vector<double> a{0.4, 0.5};
  const auto rows = comparison_table(a);
  const auto csv = io::table_csv(rows);
  std::istringstream in(csv);
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(header == "a,old_lower,s_floor,new_lower,upper");
  CHECK(first.rfind("0.40000000000000002,", 0) == 0);
  CHECK(first.find(",2,") != std::string::npos);
  // the new-bound columns stay empty in the exact regime
  CHECK(second.find(",,,") != std::string::npos);
  std::istringstream fields(first);
  std::string cell;
  std::vector<std::string> cells;
  while (std::getline(fields, cell, ',')) cells.push_back(cell);
  REQUIRE(cells.size() == 5);
  CHECK(std::stod(cells[3]) == *rows[0].new_lower);
  CHECK(std::stod(cells[4]) == rows[0].upper);
}

TEST_CASE("text table") {
  const std::vector<double> a{0.4, 0.5};
  const auto text = io::render_table(comparison_table(a));
  CHECK(text.find("0.4      0.23623    2     0.28651    0.29520") != std::string::npos);
  CHECK(text.find("Theorem E regime") != std::string::npos);
}

TEST_CASE("report json fields") {
  const auto rep = g_ratio_bound(WeightSequence::identity(), std::sqrt(0.6));
  const json j = io::to_json(rep);
  CHECK(j.at("s") == 2);
  CHECK(j.at("value").get<double>() == doctest::Approx(1.2));
  CHECK(j.at("all_ok") == true);
  const json e = io::to_json(theorem_E_radius(1, 1.0));
  CHECK(e.at("condition_ok") == true);
  FuzzReport fr;
  fr.bound_id = "area";
  const json jf = io::to_json(fr);
  CHECK(jf.at("lower").is_null());
  CHECK(jf.at("passed") == true);
  CHECK(jf.at("tol").get<double>() == 1e-9);
}
