#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace tlab {

using nlohmann::json;

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Violated: return "violated";
  }
  return "unknown";
}

Verdict classify(double gap, double tol_violation, double equality_metric,
                 double tol_equality) {
  if (gap < -tol_violation) return Verdict::Violated;
  if (equality_metric <= tol_equality) return Verdict::Equality;
  return Verdict::Holds;
}

namespace {

json report_json_object(const VerificationReport& r, const std::string& config_echo) {
  json j;
  j["check"] = r.check;
  j["inputs"] = r.inputs;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["gap"] = r.gap;
  j["tol"] = r.tol;
  j["verdict"] = verdict_name(r.verdict);
  j["diagnostics"] = r.diagnostics;
  j["timing_ms"] = r.timing_ms;
  if (!config_echo.empty()) {
    json cfg = json::parse(config_echo, nullptr, false);
    j["config"] = cfg.is_discarded() ? json(config_echo) : cfg;
  }
  return j;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace

std::string report_to_json(const VerificationReport& r, const std::string& config_echo) {
  return report_json_object(r, config_echo).dump();
}

std::string report_csv_header() {
  return "check,inputs,lhs,rhs,gap,tol,verdict,diagnostics,timing_ms";
}

std::string report_to_csv(const VerificationReport& r) {
  std::ostringstream os;
  os.precision(17);
  os << csv_escape(r.check) << ",";
  os << csv_escape(json(r.inputs).dump()) << ",";
  os << r.lhs << "," << r.rhs << "," << r.gap << "," << r.tol << ",";
  os << verdict_name(r.verdict) << ",";
  os << csv_escape(json(r.diagnostics).dump()) << ",";
  os << r.timing_ms;
  return os.str();
}

void CampaignResult::add(VerificationReport r) {
  switch (r.verdict) {
    case Verdict::Holds: ++passed; break;
    case Verdict::Equality: ++equality; break;
    case Verdict::Violated: ++violated; break;
  }
  timing_ms += r.timing_ms;
  reports.push_back(std::move(r));
}

std::string CampaignResult::to_json() const {
  json j;
  if (!config_echo.empty()) {
    json cfg = json::parse(config_echo, nullptr, false);
    j["config"] = cfg.is_discarded() ? json(config_echo) : cfg;
  }
  j["reports"] = json::array();
  for (const auto& r : reports)
    j["reports"].push_back(report_json_object(r, ""));
  j["summary"] = {{"passed", passed}, {"equality", equality}, {"violated", violated}};
  j["timing_ms"] = timing_ms;
  return j.dump(2);
}

std::string CampaignResult::to_csv() const {
  std::ostringstream os;
  os << report_csv_header() << "\n";
  for (const auto& r : reports) os << report_to_csv(r) << "\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::InvalidArgument, "cannot open '" + tmp + "' for writing");
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    fail(ErrorCode::InvalidArgument, "cannot rename '" + tmp + "' to '" + path + "'");
}

}  // namespace tlab
