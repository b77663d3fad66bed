#include "disclab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

namespace disclab {

ReportRow audit_row(std::string quantity, double value, double tolerance, std::string claim) {
    ReportRow r;
    r.quantity = std::move(quantity);
    r.value = value;
    r.tolerance = tolerance;
    r.pass = std::isfinite(value) && value <= tolerance;
    r.claim = std::move(claim);
    return r;
}

ReportRow info_row(std::string quantity, double value, std::string claim) {
    ReportRow r;
    r.quantity = std::move(quantity);
    r.value = value;
    r.tolerance = std::numeric_limits<double>::infinity();
    r.pass = true;
    r.claim = std::move(claim);
    return r;
}

std::string format_sig17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

std::string json_number(double v) {
    if (std::isnan(v)) return "\"nan\"";
    if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
    return format_sig17(v);
}

void sort_rows(std::vector<ReportRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
        if (a.claim != b.claim) return a.claim < b.claim;
        return a.quantity < b.quantity;
    });
}

}  // namespace

void write_jsonl(std::ostream& os, std::vector<ReportRow> rows) {
    sort_rows(rows);
    for (const auto& r : rows) {
        os << "{\"quantity\":\"" << json_escape(r.quantity) << "\",\"value\":" << json_number(r.value)
           << ",\"tolerance\":" << json_number(r.tolerance) << ",\"pass\":" << (r.pass ? "true" : "false")
           << ",\"claim\":\"" << json_escape(r.claim) << "\"";
        for (const auto& [k, v] : r.extra) os << ",\"" << json_escape(k) << "\":\"" << json_escape(v) << "\"";
        os << "}\n";
    }
}

void write_table(std::ostream& os, std::vector<ReportRow> rows) {
    sort_rows(rows);
    for (const auto& r : rows) {
        os << (r.pass ? "PASS " : "FAIL ") << r.claim << " :: " << r.quantity << " = " << format_sig17(r.value);
        if (std::isfinite(r.tolerance)) os << " (tol " << format_sig17(r.tolerance) << ")";
        for (const auto& [k, v] : r.extra) os << " " << k << "=" << v;
        os << "\n";
    }
}

bool all_pass(const std::vector<ReportRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

void append(std::vector<ReportRow>& into, std::vector<ReportRow> rows) {
    for (auto& r : rows) into.push_back(std::move(r));
}

}  // namespace disclab
