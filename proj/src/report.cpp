#include "hypersum/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "hypersum/errors.hpp"
#include "hypersum/field.hpp"

namespace hypersum {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::error: return "error";
    }
    return "error";
}

ReportFormat parse_report_format(const std::string& name) {
    if (name == "text") return ReportFormat::text;
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    throw UsageError("unknown report format \"" + name + "\"");
}

namespace {

std::string flatten_params(const VerificationReport& r) {
    std::string out;
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) out += ";";
        out += r.params[i].first + "=" + r.params[i].second;
    }
    return out;
}

std::string csv_quote(const std::string& s) {
    bool need = s.find_first_of(",\"\n") != std::string::npos;
    if (!need) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string emit_text(const std::vector<VerificationReport>& reports, bool timings) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "[" << status_name(r.status) << "] " << r.identity_id;
        for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
        if (r.status == Status::error) {
            os << "  error=" << r.error_kind;
        } else {
            os << "  lhs=" << r.lhs << "  rhs=" << r.rhs;
        }
        if (timings) os << "  (" << r.elapsed_micros << " us)";
        os << "\n";
    }
    return os.str();
}

std::string emit_json(const std::vector<VerificationReport>& reports, bool timings) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json obj;
        obj["identity_id"] = r.identity_id;
        nlohmann::ordered_json params;
        for (const auto& [k, v] : r.params) params[k] = v;
        obj["params"] = params;
        obj["lhs"] = r.lhs;
        obj["rhs"] = r.rhs;
        obj["status"] = status_name(r.status);
        obj["error_kind"] = r.error_kind;
        obj["elapsed_micros"] = timings ? r.elapsed_micros : 0;
        arr.push_back(std::move(obj));
    }
    return arr.dump(2) + "\n";
}

std::string emit_csv(const std::vector<VerificationReport>& reports, bool timings) {
    std::ostringstream os;
    os << "identity_id,params,lhs,rhs,status,error_kind,elapsed_micros\n";
    for (const auto& r : reports) {
        os << csv_quote(r.identity_id) << "," << csv_quote(flatten_params(r)) << ","
           << csv_quote(r.lhs) << "," << csv_quote(r.rhs) << "," << status_name(r.status) << ","
           << csv_quote(r.error_kind) << "," << (timings ? r.elapsed_micros : 0) << "\n";
    }
    return os.str();
}

} // namespace

std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                        bool include_timings) {
    switch (format) {
        case ReportFormat::text: return emit_text(reports, include_timings);
        case ReportFormat::json: return emit_json(reports, include_timings);
        case ReportFormat::csv: return emit_csv(reports, include_timings);
    }
    return {};
}

int worst_exit_code(const std::vector<VerificationReport>& reports) {
    int worst = 0;
    for (const auto& r : reports) {
        int code = r.status == Status::pass ? 0 : r.status == Status::fail ? 1 : 2;
        if (code > worst) worst = code;
    }
    return worst;
}

VerificationReport make_report(std::string identity_id,
                               std::vector<std::pair<std::string, std::string>> params,
                               std::string lhs, std::string rhs, bool pass,
                               std::int64_t elapsed_micros) {
    VerificationReport r;
    r.identity_id = std::move(identity_id);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.status = pass ? Status::pass : Status::fail;
    r.elapsed_micros = elapsed_micros;
    return r;
}

} // namespace hypersum
