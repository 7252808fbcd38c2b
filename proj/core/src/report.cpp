#include "omega/report.hpp"

#include <cstdio>

namespace omega {

std::string report_json(const ReportResults& r) {
  Json j;
  j["format"] = kJsonFormat;
  j["log_base"] = "e";
  Json rec = Json::object();
  for (auto& [k, v] : r.records) rec[k] = v;
  j["records"] = rec;
  Json b = Json::object();
  for (auto& [k, s] : r.birkhoff) {
    Json a = Json::array();
    for (auto& [n, v] : s) a.push_back(Json::array({n, v}));
    b[k] = a;
  }
  j["birkhoff_series"] = b;
  Json e = Json::object();
  for (auto& [k, est] : r.entropy) e[k] = to_json(est);
  j["entropy"] = e;
  return j.dump(2) + "\n";
}

std::string report_csv(const ReportResults& r) {
  std::string out = "kind,name,n,value\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  for (auto& [k, s] : r.birkhoff)
    for (auto& [n, v] : s) out += "birkhoff," + k + "," + std::to_string(n) + "," + num(v) + "\n";
  for (auto& [k, e] : r.entropy) {
    const std::string kind = e.method.rfind("katok", 0) == 0 ? "katok," : "entropy,";
    for (auto& [n, v] : e.series) out += kind + k + "," + std::to_string(n) + "," + num(v) + "\n";
  }
  return out;
}

void emit_report(const ReportResults& r, const std::string& json_path, const std::string& csv_path) {
  if (!json_path.empty()) write_text_file(json_path, report_json(r));
  if (!csv_path.empty()) write_text_file(csv_path, report_csv(r));
}

}  // namespace omega
