#pragma once
#include <map>
#include <string>
#include <vector>

namespace tlab {

enum class Verdict { Holds, Equality, Violated };

const char* verdict_name(Verdict v);

/// Flat record of one verification: the two sides of the checked
/// identity/inequality, their gap, the applied tolerance and the verdict,
/// plus free-form numeric diagnostics. One record serializes to one JSON
/// object or one CSV row.
struct VerificationReport {
  std::string check;
  std::map<std::string, std::string> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  ///< rhs - lhs at the worst sample
  double tol = 0.0;  ///< violation threshold actually applied (absolute)
  Verdict verdict = Verdict::Holds;
  std::map<std::string, double> diagnostics;
  double timing_ms = 0.0;

  bool violated() const { return verdict == Verdict::Violated; }
};

/// verdict from the signed gap: violated when gap < -tol_violation,
/// equality when the equality metric stays within tol_equality.
Verdict classify(double gap, double tol_violation, double equality_metric,
                 double tol_equality);

std::string report_to_json(const VerificationReport& r, const std::string& config_echo);
std::string report_csv_header();
std::string report_to_csv(const VerificationReport& r);

struct CampaignResult {
  std::string config_echo;
  std::vector<VerificationReport> reports;
  int passed = 0;
  int equality = 0;
  int violated = 0;
  double timing_ms = 0.0;

  void add(VerificationReport r);
  std::string to_json() const;
  std::string to_csv() const;
};

/// Writes content to path via a temporary file and rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tlab
