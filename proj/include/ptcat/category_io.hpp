#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptcat/fusion.hpp"
#include "ptcat/report.hpp"

namespace ptcat {

/// Malformed or inconsistent category file (unknown labels, bad vectors,
/// missing fields).  Distinct from verification failures.
struct CategoryFileError : std::runtime_error {
  explicit CategoryFileError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr const char* kCategorySchema = "ptcat.category/1";

/// Canonical JSON serialization: fixed key order, entries sorted by label
/// tuple, coefficient vectors over the zeta-power basis with trailing zeros
/// trimmed.  Emitting the same data twice yields identical bytes.
std::string emit_category(const FusionData& d);

/// Parse and validate a category file; throws CategoryFileError on schema
/// violations.
FusionData parse_category(const std::string& text);

/// Human-readable rendering with exact values and a numeric column.
std::string render_reports_text(const std::vector<Report>& reports);

/// Machine-readable rendering.
std::string render_reports_json(const std::vector<Report>& reports);

}  // namespace ptcat
