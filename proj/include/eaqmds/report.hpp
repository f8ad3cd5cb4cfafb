#pragma once

/**
 * Flat, serializable verification records and their renderers.
 *
 * A ReportRecord captures one verified instance: the constructed parameters,
 * the named check results (in render order), and a canonical description of
 * the root of unity delta that pins the whole construction down.  Renderers
 * are byte-deterministic; the timestamp is omitted in reproducible mode so
 * output can be golden-file tested.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "families.hpp"

namespace eaqmds {

struct ReportRecord {
    int family = 0;
    std::uint64_t q = 0;
    std::uint64_t lambda = 0;
    std::uint64_t n = 0;
    std::int64_t k = 0;
    std::uint64_t d = 0;
    std::uint64_t c = 0;
    std::int64_t singleton_defect = 0;
    std::vector<std::pair<std::string, std::string>> checks;  // name -> result
    std::string delta_repr;  // canonical delta description
    std::string timestamp;   // ISO-8601 UTC; empty in reproducible mode

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

/// True when no check result starts with "fail".
bool record_all_pass(const ReportRecord& rec);

/// Assemble a record from a built instance and its verification report.
ReportRecord make_report(const FamilyInstance& inst, const VerificationReport& rep,
                         bool reproducible);

/// Canonical description of delta: field, modulus digits, element digits.
std::string describe_delta(const ConstacyclicCode& code);

/// Multi-line human-readable rendering.
std::string render_text(const ReportRecord& rec);

/// JSON object with the fields exactly as the type; checks as a name->result
/// map in check order.  Pretty-printed, trailing newline.
std::string render_json(const ReportRecord& rec);

/// CSV schema: one fixed header plus one row per record.
std::string csv_header();
std::string render_csv_row(const ReportRecord& rec);

/// Inverse of render_json; propagates parse errors for malformed text.
ReportRecord report_from_json_text(const std::string& text);

}  // namespace eaqmds
