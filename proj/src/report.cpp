#include "qpart/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "json.hpp"

namespace qpart {

std::string Report::to_text() const {
    std::ostringstream out;
    for (const auto& r : rows) {
        out << r.status << "  " << r.module << "/" << r.check;
        if (!r.params.empty()) out << " [" << r.params << "]";
        if (!r.detail.empty()) out << "  " << r.detail;
        if (r.claim) out << "  (claim)";
        out << "\n";
    }
    return out.str();
}

std::string Report::to_json() const {
    nlohmann::json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["generated_at"] = buf;
    j["results"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row;
        row["module"] = r.module;
        row["check"] = r.check;
        row["params"] = r.params;
        row["status"] = r.status;
        row["detail"] = r.detail;
        row["elapsed_ms"] = r.elapsed_ms;
        row["ok"] = r.ok;
        row["claim"] = r.claim;
        j["results"].push_back(row);
    }
    return j.dump(2) + "\n";
}

bool Report::failed(bool strict) const {
    for (const auto& r : rows) {
        if (r.ok) continue;
        if (strict || !r.claim) return true;
    }
    return false;
}

}  // namespace qpart
