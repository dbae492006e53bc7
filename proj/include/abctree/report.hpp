// report.hpp — run reports and their JSON/CSV serialization.
//
// Reports are deterministic byte for byte: fixed field order, numbers
// rendered with 12 significant digits, and no volatile fields (wall-clock
// timing stays in memory and goes to stderr, never into a document).
#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "abctree/verify.hpp"
#include "abctree/version.hpp"

namespace abctree {

enum class ReportFormat { Json, Csv };

struct RunReport {
    std::string command;
    nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
    std::vector<BoundsRecord> records;
    std::vector<LemmaSweepReport> sweeps;
    std::vector<Violation> violations;
    std::vector<EqualityFinding> equality;
    double timing_ms = 0.0; // in-memory only
};

// Render with 12 significant digits, then parse back: the nearest double to
// that decimal prints with at most the same digits in JSON.
inline std::string format12(double x) {
    if (x == 0.0)
        x = 0.0; // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

inline double round12(double x) { return std::strtod(format12(x).c_str(), nullptr); }

namespace detail {

inline nlohmann::ordered_json record_json(const BoundsRecord& r) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["canonical"] = r.canonical;
    j["gamma_r"] = r.gamma_r;
    j["abc"] = round12(r.abc);
    j["f_min"] = round12(r.f_min);
    j["f_max"] = round12(r.f_max);
    j["lower_gap"] = round12(r.lower_gap);
    j["upper_gap"] = round12(r.upper_gap);
    j["attains_lower"] = r.attains_lower;
    j["attains_upper"] = r.attains_upper;
    j["is_path"] = r.is_path;
    j["is_star"] = r.is_star;
    return j;
}

inline nlohmann::ordered_json sweep_json(const LemmaSweepReport& r) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["grid"] = r.grid;
    j["worst"] = r.two_dim
                     ? nlohmann::ordered_json::array({round12(r.worst_a), round12(r.worst_b)})
                     : nlohmann::ordered_json::array({round12(r.worst_a)});
    j["min_slack"] = round12(r.min_slack);
    j["observed_min"] = round12(r.observed_min);
    j["pass"] = r.pass;
    return j;
}

inline nlohmann::ordered_json findings_json(const RunReport& report) {
    nlohmann::ordered_json f;
    f["violations"] = nlohmann::ordered_json::array();
    for (const Violation& v : report.violations) {
        nlohmann::ordered_json j = record_json(v.record);
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (const Edge& e : v.edges)
            edges.push_back({e.first, e.second});
        j["edges"] = edges;
        f["violations"].push_back(j);
    }
    f["equality"] = nlohmann::ordered_json::array();
    for (const EqualityFinding& e : report.equality) {
        nlohmann::ordered_json j;
        j["n"] = e.n;
        j["lower"] = e.lower;
        j["upper"] = e.upper;
        j["lower_only_path"] = e.lower_only_path;
        j["upper_only_star"] = e.upper_only_star;
        f["equality"].push_back(j);
    }
    return f;
}

} // namespace detail

inline std::string write_report_json(const RunReport& report) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = kReportSchemaVersion;
    doc["tool"] = kToolName;
    doc["tool_version"] = kToolVersion;
    doc["command"] = report.command;
    doc["parameters"] = report.parameters;
    doc["records"] = nlohmann::ordered_json::array();
    for (const BoundsRecord& r : report.records)
        doc["records"].push_back(detail::record_json(r));
    doc["sweeps"] = nlohmann::ordered_json::array();
    for (const LemmaSweepReport& r : report.sweeps)
        doc["sweeps"].push_back(detail::sweep_json(r));
    doc["findings"] = detail::findings_json(report);
    return doc.dump(2) + "\n";
}

// Findings alone; written as the sidecar next to CSV output.
inline std::string write_findings_json(const RunReport& report) {
    return detail::findings_json(report).dump(2) + "\n";
}

// The records table only, one row per BoundsRecord; booleans as 0/1.
inline std::string write_report_csv(const RunReport& report) {
    std::string out =
        "n,canonical,gamma_r,abc,f_min,f_max,lower_gap,upper_gap,"
        "attains_lower,attains_upper,is_path,is_star\n";
    for (const BoundsRecord& r : report.records) {
        out += std::to_string(r.n);
        out.push_back(',');
        out += r.canonical;
        out.push_back(',');
        out += std::to_string(r.gamma_r);
        out.push_back(',');
        out += format12(r.abc);
        out.push_back(',');
        out += format12(r.f_min);
        out.push_back(',');
        out += format12(r.f_max);
        out.push_back(',');
        out += format12(r.lower_gap);
        out.push_back(',');
        out += format12(r.upper_gap);
        out.push_back(',');
        out += r.attains_lower ? "1" : "0";
        out.push_back(',');
        out += r.attains_upper ? "1" : "0";
        out.push_back(',');
        out += r.is_path ? "1" : "0";
        out.push_back(',');
        out += r.is_star ? "1" : "0";
        out.push_back('\n');
    }
    return out;
}

inline std::string write_report(const RunReport& report, ReportFormat format) {
    return format == ReportFormat::Json ? write_report_json(report)
                                        : write_report_csv(report);
}

} // namespace abctree
