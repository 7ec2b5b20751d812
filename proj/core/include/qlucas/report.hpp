#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qlucas/harness.hpp"

namespace qlucas {

// {b, d, p, case, x, y, u, v, eta, u_pred, v_pred, u_actual, v_actual, status}
std::string to_jsonl(const VerifyRecord& r);

inline constexpr const char* csv_header = "b,d,p,case,x,y,u,v,eta,u_pred,v_pred,u_actual,v_actual,status";
std::string to_csv_row(const VerifyRecord& r);

void write_records(std::ostream& out, const std::vector<VerifyRecord>& records, ReportFormat format);

// Throws IoError when the file cannot be opened or written.
void write_report(const std::string& path, const std::vector<VerifyRecord>& records, ReportFormat format);

// Multi-line plain-text rendering used by the CLI.
std::string describe(const VerifyRecord& r);

} // namespace qlucas
