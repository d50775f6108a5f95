#include "hyperell/report_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace hyperell::report {

namespace {

nlohmann::json check_to_json(const verify::CheckResult& r) {
    // nlohmann's default object keeps keys sorted, which is what makes the
    // output canonical.
    nlohmann::json j;
    j["name"] = r.name;
    j["params"] = r.params;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual"] = r.residual;
    j["passed"] = r.passed;
    j["elapsed_s"] = r.elapsed_s;
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string fmt_residual(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

} // namespace

std::string to_json(const std::vector<verify::SuiteReport>& reports) {
    nlohmann::json root;
    int total_passed = 0, total_failed = 0;
    root["reports"] = nlohmann::json::array();
    for (const auto& report : reports) {
        nlohmann::json j;
        j["suite"] = report.suite;
        j["passed"] = report.passed;
        j["failed"] = report.failed;
        j["results"] = nlohmann::json::array();
        for (const auto& r : report.results) j["results"].push_back(check_to_json(r));
        root["reports"].push_back(std::move(j));
        total_passed += report.passed;
        total_failed += report.failed;
    }
    root["total_passed"] = total_passed;
    root["total_failed"] = total_failed;
    return root.dump(2) + "\n";
}

std::string to_csv(const std::vector<verify::SuiteReport>& reports) {
    std::ostringstream out;
    out << "suite,name,params,lhs,rhs,residual,passed\n";
    for (const auto& report : reports) {
        for (const auto& r : report.results) {
            std::string params;
            for (const auto& [k, v] : r.params) {
                if (!params.empty()) params += ';';
                params += k + "=" + v;
            }
            out << csv_field(report.suite) << ',' << csv_field(r.name) << ','
                << csv_field(params) << ',' << csv_field(r.lhs) << ',' << csv_field(r.rhs)
                << ',' << fmt_residual(r.residual) << ',' << (r.passed ? "true" : "false")
                << '\n';
        }
    }
    return out.str();
}

std::string to_human(const std::vector<verify::SuiteReport>& reports) {
    std::ostringstream out;
    int total_passed = 0, total_failed = 0;
    for (const auto& report : reports) {
        out << report.suite << ": " << report.passed << "/" << (report.passed + report.failed)
            << " checks passed\n";
        for (const auto& r : report.results) {
            if (r.passed) continue;
            out << "  FAIL " << r.name;
            for (const auto& [k, v] : r.params) out << " " << k << "=" << v;
            out << "\n       lhs=" << r.lhs << " rhs=" << r.rhs
                << " residual=" << fmt_residual(r.residual) << "\n";
        }
        total_passed += report.passed;
        total_failed += report.failed;
    }
    out << (total_failed == 0 ? "ALL PASSED" : "FAILURES PRESENT") << " (" << total_passed
        << " passed, " << total_failed << " failed)\n";
    return out.str();
}

} // namespace hyperell::report
