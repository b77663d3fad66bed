#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace disclab {

// one audited quantity; `claim` is a stable key naming the property checked
struct ReportRow {
    std::string quantity;
    double value = 0.0;
    double tolerance = 0.0;  // +inf marks an informational row
    bool pass = true;
    std::string claim;
    std::vector<std::pair<std::string, std::string>> extra;
};

ReportRow audit_row(std::string quantity, double value, double tolerance, std::string claim);
ReportRow info_row(std::string quantity, double value, std::string claim);

// full double precision, 17 significant digits
std::string format_sig17(double v);

// rows are emitted sorted by (claim, quantity)
void write_jsonl(std::ostream& os, std::vector<ReportRow> rows);
void write_table(std::ostream& os, std::vector<ReportRow> rows);

bool all_pass(const std::vector<ReportRow>& rows);

void append(std::vector<ReportRow>& into, std::vector<ReportRow> rows);

}  // namespace disclab
