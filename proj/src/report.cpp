#include "burnside/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace burnside {

std::string status_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  throw std::logic_error("bad status");
}

nlohmann::json report_to_json(const VerificationReport& r) {
  return nlohmann::json{
      {"group", r.group},     {"order", r.order},
      {"check", r.check},     {"status", status_string(r.status)},
      {"witness", r.witness}, {"millis", r.millis},
  };
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(report_to_json(r));
  return arr;
}

// Catalog names can contain commas, e.g. PSL(2,7).
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string reports_to_csv(const std::vector<VerificationReport>& rs) {
  std::ostringstream os;
  os << "group,order,check,status,millis\n";
  for (const auto& r : rs) {
    os << csv_field(r.group) << ',' << r.order << ',' << csv_field(r.check)
       << ',' << status_string(r.status) << ',' << r.millis << '\n';
  }
  return os.str();
}

std::string reports_to_text(const std::vector<VerificationReport>& rs) {
  std::ostringstream os;
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& r : rs) {
    os << status_string(r.status);
    if (r.status == CheckStatus::fail)
      os << (r.counterexample ? " (counterexample)" : " (bug)");
    os << "  " << r.check << "  " << r.group << " (order " << r.order << ")  "
       << r.millis << "ms\n";
    if (r.status == CheckStatus::fail && !r.witness.is_null())
      os << "  witness: " << r.witness.dump() << "\n";
    switch (r.status) {
      case CheckStatus::pass: ++pass; break;
      case CheckStatus::fail: ++fail; break;
      case CheckStatus::skipped: ++skipped; break;
    }
  }
  os << pass << " passed, " << fail << " failed, " << skipped << " skipped\n";
  return os.str();
}

void sort_reports(std::vector<VerificationReport>& rs) {
  std::stable_sort(rs.begin(), rs.end(),
                   [](const VerificationReport& a, const VerificationReport& b) {
                     return std::tie(a.order, a.group, a.check) <
                            std::tie(b.order, b.group, b.check);
                   });
}

int exit_code_for(const std::vector<VerificationReport>& rs) {
  bool bug = false, counterexample = false;
  for (const auto& r : rs) {
    if (r.status != CheckStatus::fail) continue;
    (r.counterexample ? counterexample : bug) = true;
  }
  if (bug) return 2;
  if (counterexample) return 3;
  return 0;
}

}  // namespace burnside
