#pragma once

#include <string>
#include <vector>

#include "burnside/bgroup.hpp"

namespace burnside {

std::string status_string(CheckStatus s);

// Quotes a value for CSV output when it contains commas, quotes or newlines.
std::string csv_field(const std::string& s);

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs);

// CSV projection, header "group,order,check,status,millis".
std::string reports_to_csv(const std::vector<VerificationReport>& rs);
std::string reports_to_text(const std::vector<VerificationReport>& rs);

// Deterministic emission order: (order, group, check).
void sort_reports(std::vector<VerificationReport>& rs);

// 0 all good; 2 a proven statement failed (bug); 3 a conjectured statement
// failed (counterexample). Bugs win: a counterexample from buggy code is
// worthless until the bug is fixed.
int exit_code_for(const std::vector<VerificationReport>& rs);

}  // namespace burnside
