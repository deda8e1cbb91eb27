#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sheun/diffop.hpp"

namespace sheun {

inline constexpr const char* kStatusPass = "pass";
inline constexpr const char* kStatusFail = "fail";
inline constexpr const char* kStatusResampled = "degenerate-resampled";

// One report entry per (relation, parameter tuple).  A relation verified in
// its stated form that fails may be accompanied by a second entry whose id
// carries the ".corrected" suffix holding the documented corrected variant;
// neither entry replaces the other.
struct Report {
  std::string suite;
  std::string relation_id;
  std::string status;
  std::vector<std::string> params;
  std::optional<int> residual_offset;
  std::optional<std::string> residual_coeff;
  // Ordered key/value pairs: measured constants, signs, correction notes.
  std::vector<std::pair<std::string, std::string>> empirical;

  bool is_correction() const;
  std::string base_id() const;  // relation_id without the .corrected suffix
};

enum class ReportFormat { text, json, csv };

ReportFormat report_format_from_string(const std::string& name);

std::string render_reports(const std::vector<Report>& reports,
                           ReportFormat format);

// A run fails only when a stated relation fails and no matching corrected
// entry (same suite, base id and params) passes.
bool reports_failed(const std::vector<Report>& reports);

// Stable emission order: suite (input order preserved), then relation id,
// then tuple index (input order within equal ids).
void sort_reports(std::vector<Report>& reports);

// Operator and polynomial JSON: operators serialize as an object keyed by
// signed shift offset with [numerator, denominator] coefficient lists,
// polynomials as coefficient lists, all rational strings lowest degree
// first.
std::string diffop_to_json(const DiffOp& op);
DiffOp diffop_from_json(const std::string& text);
std::string lambda_poly_to_json(const LambdaPoly& q);
LambdaPoly lambda_poly_from_json(const std::string& text);

}  // namespace sheun
