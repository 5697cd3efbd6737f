#pragma once

#include <string>
#include <vector>

namespace qpart {

inline constexpr const char* kToolName = "qpart";
inline constexpr const char* kToolVersion = "1.0.0";

struct ReportRow {
    std::string module;
    std::string check;
    std::string params;
    std::string status;  // match / mismatch / pass / fail / recorded:...
    std::string detail;  // first difference, residual, value, ...
    double elapsed_ms = 0;
    bool ok = true;
    bool claim = false;
};

struct Report {
    std::vector<ReportRow> rows;

    /// Deterministic text form: one line per row, no timestamps.
    std::string to_text() const;
    /// JSON form; carries tool/version metadata plus a generated_at timestamp.
    std::string to_json() const;

    /// Failure iff some row with ok == false is not claim-flagged, or, when
    /// strict, any row with ok == false.
    bool failed(bool strict) const;
};

}  // namespace qpart
