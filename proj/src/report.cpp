#include "hsg/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace hsg {

namespace {

std::string num(double v) {
    if (std::isnan(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string serialize_reports(const std::string& command,
                              const std::vector<std::pair<std::string, std::string>>& params,
                              const std::vector<VerificationReport>& reports,
                              ReportFormat format, bool include_timing) {
    std::ostringstream os;
    if (format == ReportFormat::Json) {
        os << "{\n  \"version\": 1,\n  \"command\": " << quoted(command) << ",\n  \"params\": {";
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (i) os << ", ";
            os << quoted(params[i].first) << ": " << quoted(params[i].second);
        }
        os << "},\n  \"results\": [\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            os << "    {\"name\": " << quoted(r.name) << ", \"params\": {";
            for (std::size_t p = 0; p < r.params.size(); ++p) {
                if (p) os << ", ";
                os << quoted(r.params[p].first) << ": " << quoted(r.params[p].second);
            }
            os << "}, \"measured\": " << num(r.measured) << ", \"bound\": " << num(r.bound)
               << ", \"margin\": " << num(r.margin)
               << ", \"pass\": " << (r.pass ? "true" : "false") << ", \"residuals\": {";
            for (std::size_t p = 0; p < r.residuals.size(); ++p) {
                if (p) os << ", ";
                os << quoted(r.residuals[p].first) << ": " << num(r.residuals[p].second);
            }
            os << "}";
            if (include_timing) os << ", \"runtime_ms\": " << r.runtime_ms;
            os << "}";
            if (i + 1 < reports.size()) os << ",";
            os << "\n";
        }
        os << "  ]";
        if (include_timing) {
            long long total = 0;
            for (const auto& r : reports) total += r.runtime_ms;
            os << ",\n  \"runtime_ms\": " << total;
        }
        os << "\n}\n";
        return os.str();
    }

    os << "name,measured,bound,margin,pass,residuals";
    if (include_timing) os << ",runtime_ms";
    os << "\n";
    for (const auto& r : reports) {
        os << r.name << "," << num(r.measured) << "," << num(r.bound) << "," << num(r.margin)
           << "," << (r.pass ? "true" : "false") << ",";
        for (std::size_t p = 0; p < r.residuals.size(); ++p) {
            if (p) os << ";";
            os << r.residuals[p].first << "=" << num(r.residuals[p].second);
        }
        if (include_timing) os << "," << r.runtime_ms;
        os << "\n";
    }
    return os.str();
}

void write_report(const std::string& path, const std::string& payload) {
    if (path == "-" || path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open report path: " + path);
    out << payload;
    if (!out) throw std::runtime_error("failed writing report to: " + path);
}

}  // namespace hsg
