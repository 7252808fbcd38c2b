#include <doctest.h>

#include "fixtures.hpp"
#include "omega/birkhoff.hpp"
#include "omega/entropy.hpp"
#include "omega/json_io.hpp"
#include "omega/report.hpp"

using namespace omega;

TEST_CASE("empty report is valid") {
  ReportResults r;
  auto j = Json::parse(report_json(r));
  CHECK(j["format"] == 1);
  CHECK(report_csv(r) == "kind,name,n,value\n");
}

TEST_CASE("report contents and determinism") {
  ReportResults r;
  auto d = fx::alternating(fx::periodic(2, "0"), fx::periodic(2, "1"));
  auto b = birkhoff_bounds(d, Observable::indicator(2, parse_word("1")), 1 << 12);
  r.records.push_back({"doubling", to_json(b)});
  r.birkhoff.push_back({"doubling", b.series});
  r.entropy.push_back({"fair", katok_entropy_estimate(MarkovMeasure::bernoulli({0.5, 0.5}), 0.5, 12)});
  auto js = report_json(r), csv = report_csv(r);
  CHECK(js == report_json(r));
  CHECK(csv == report_csv(r));
  CHECK(csv.find("birkhoff,doubling,") != std::string::npos);
  CHECK(csv.find("katok,fair,12,") != std::string::npos);
  auto j = Json::parse(js);
  CHECK(j["log_base"] == "e");
}
