#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "vibronic/errors.hpp"
#include "vibronic/report.hpp"

using namespace vibronic;

TEST_CASE("sideband ratio sign pattern") {
  for (double eta : {0.1, 0.2, 0.3}) {
    for (int l : {1, 2}) CHECK(sideband_ratio(l, eta) < 0.0);
    for (int l : {3, 4, 5}) CHECK(sideband_ratio(l, eta) > 0.0);
  }
  // Small-eta limit of the first sideband ratio: (2/pi)(8/9).
  CHECK(sideband_ratio(1, 1e-3) == doctest::Approx(std::log10(0.5658842421045167)).epsilon(1e-6));
  CHECK_THROWS_AS(sideband_ratio(-1, 0.1), DomainError);
  CHECK_THROWS_AS(sideband_ratio(1, 0.0), DomainError);
}

TEST_CASE("carrier comparison") {
  const auto rows = carrier_comparison({0.0, 0.5});
  CHECK(rows[0].harmonic == 1.0);  // identity coupling
  CHECK(rows[0].hardwall == 1.0);
  CHECK(rows[1].harmonic == doctest::Approx(0.8824969025845955).epsilon(1e-13));
  CHECK(rows[1].hardwall == doctest::Approx(0.9603374039009132).epsilon(1e-13));

  // Hard-wall carrier stronger than harmonic across (0, 1].
  for (double eta = 0.05; eta <= 1.0; eta += 0.05) {
    const auto row = carrier_comparison({eta}).front();
    CHECK(row.hardwall > row.harmonic);
  }
}

TEST_CASE("csv number format uses 12 significant digits") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.0) == "2");
  CHECK(format_number(-1.25e-11) == "-1.25e-11");
}

TEST_CASE("csv round trip is idempotent") {
  const std::vector<CarrierRow> rows = carrier_comparison({0.123456789123456, 0.9});
  std::ostringstream first;
  write_carrier_table(first, rows, OutputFormat::Csv);

  // Parse back and re-emit; the second pass must be byte-identical.
  std::istringstream in(first.str());
  std::string header;
  std::getline(in, header);
  std::vector<CarrierRow> parsed;
  std::string line;
  while (std::getline(in, line)) {
    CarrierRow row;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &row.eta, &row.harmonic, &row.hardwall) == 3);
    parsed.push_back(row);
  }
  std::ostringstream second;
  write_carrier_table(second, parsed, OutputFormat::Csv);
  CHECK(first.str() == second.str());
}

TEST_CASE("json round trip is bit exact") {
  const std::vector<CarrierRow> rows = carrier_comparison({0.123456789123456, 0.77, 1.0});
  std::ostringstream out;
  write_carrier_table(out, rows, OutputFormat::Json);
  const auto parsed = nlohmann::json::parse(out.str());
  REQUIRE(parsed["carrier"].size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed["carrier"][i]["eta"].get<double>() == rows[i].eta);
    CHECK(parsed["carrier"][i]["harmonic"].get<double>() == rows[i].harmonic);
    CHECK(parsed["carrier"][i]["hardwall"].get<double>() == rows[i].hardwall);
  }
}

TEST_CASE("ratio table layout") {
  const auto rows = ratio_table({1, 3}, {0.1, 0.2});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].l == 1);
  CHECK(rows[0].eta == 0.1);
  std::ostringstream out;
  write_ratio_table(out, rows, OutputFormat::Csv);
  CHECK(out.str().substr(0, 18) == "l,eta,log10_ratio\n");
}
