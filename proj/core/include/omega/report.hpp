#pragma once
#include <string>
#include <utility>
#include <vector>

#include "omega/json_io.hpp"

namespace omega {

struct ReportResults {
  std::vector<std::pair<std::string, Json>> records;
  // prefix Birkhoff averages (n, value) per named schedule
  std::vector<std::pair<std::string, std::vector<std::pair<std::uint64_t, double>>>> birkhoff;
  // entropy estimates whose series are (n, log r_n / n) slopes
  std::vector<std::pair<std::string, EntropyEstimate>> entropy;
};

std::string report_json(const ReportResults& r);
// columns: kind,name,n,value
std::string report_csv(const ReportResults& r);
void emit_report(const ReportResults& r, const std::string& json_path, const std::string& csv_path);

}  // namespace omega
