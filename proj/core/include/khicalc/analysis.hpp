#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "khicalc/field.hpp"

namespace khicalc {

// Library backing of the command-line verbs. Output JSON is deterministic:
// same input, same bytes; no timestamps.

struct AnalyzeOutcome {
    std::string json;
    int exit_code = 0; // 0 ok, 2 when some rows failed to parse
};

// Per-row report: normalized Alexander polynomial, determinant bound,
// coherent-form detection (with the reconstructed one-per-grading profile
// when present), genus-one thin data, surgery dimensions, and the
// representation-abundance verdict. Failed rows are collected under
// "errors" and valid rows are still processed.
AnalyzeOutcome analyze_knot_table(std::istream& csv, bool pretty = false);

// Closed-form surgery dimension for one knot of the table at slope "u/v".
std::string surgery_query(std::istream& csv, const std::string& knot, const std::string& slope,
                          std::optional<int> nu_override = std::nullopt, bool pretty = false);

// Bent / dual-bent homology of a profile fixture: dimensions at one s, or
// the full large-surgery report for --surgery n.
std::string bent_query(const std::string& complex_json, std::optional<int> s,
                       std::optional<long> surgery_n,
                       std::optional<Field> field_override = std::nullopt, bool pretty = false);

// Spectral sequence of a filtered complex fixture: per-page dimensions, the
// stable page, the convergence target, and the lift round-trip verdict.
std::string ss_query(const std::string& complex_json,
                     std::optional<Field> field_override = std::nullopt, bool pretty = false);

} // namespace khicalc
