#pragma once

#include <string>
#include <vector>

#include "hsg/verify.hpp"

namespace hsg {

enum class ReportFormat { Json, Csv };

// Serializes reports with a fixed field order and floats at 17 significant
// digits, so identical runs produce identical bytes. Timing fields are
// emitted only when include_timing is set (they vary run to run).
std::string serialize_reports(const std::string& command,
                              const std::vector<std::pair<std::string, std::string>>& params,
                              const std::vector<VerificationReport>& reports,
                              ReportFormat format, bool include_timing = false);

// "-" streams to stdout
void write_report(const std::string& path, const std::string& payload);

}  // namespace hsg
