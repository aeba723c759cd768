#ifndef HYPERSUM_REPORT_HPP
#define HYPERSUM_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hypersum {

enum class Status { pass, fail, error };

const char* status_name(Status s);

// One identity check at one parameter point.  Exact values are canonical
// strings so "pass" can be audited by string equality; numeric values are
// printed with round-trip precision.
struct VerificationReport {
    std::string identity_id;
    std::vector<std::pair<std::string, std::string>> params;  // ordered
    std::string lhs;
    std::string rhs;
    Status status = Status::error;
    std::string error_kind;          // empty unless status == error
    std::int64_t elapsed_micros = 0;

    bool passed() const { return status == Status::pass; }
};

enum class ReportFormat { text, json, csv };

ReportFormat parse_report_format(const std::string& name);

// Deterministic serialization: identical report lists produce identical
// bytes.  Timing fields are zeroed unless include_timings is set, so sweep
// output stays byte-identical across reruns and parallelism levels.
std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                        bool include_timings = false);

// pass < fail < error; maps to process exit codes 0 / 1 / 2.
int worst_exit_code(const std::vector<VerificationReport>& reports);

// Shorthand used by all verification drivers.
VerificationReport make_report(std::string identity_id,
                               std::vector<std::pair<std::string, std::string>> params,
                               std::string lhs, std::string rhs, bool pass,
                               std::int64_t elapsed_micros);

} // namespace hypersum

#endif
