#include "sheun/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace sheun {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kCorrectedSuffix = ".corrected";

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    out += ch;
  }
  out += "\"";
  return out;
}

}  // namespace

bool Report::is_correction() const {
  return relation_id.size() >= std::string(kCorrectedSuffix).size() &&
         relation_id.rfind(kCorrectedSuffix) ==
             relation_id.size() - std::string(kCorrectedSuffix).size();
}

std::string Report::base_id() const {
  if (!is_correction()) return relation_id;
  return relation_id.substr(0,
                            relation_id.size() - std::string(kCorrectedSuffix).size());
}

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw std::invalid_argument("unknown format: " + name);
}

void sort_reports(std::vector<Report>& reports) {
  // Stable sort by relation id inside each contiguous suite section keeps
  // tuple order for equal ids and leaves the suite sequence untouched.
  size_t start = 0;
  while (start < reports.size()) {
    size_t end = start;
    while (end < reports.size() && reports[end].suite == reports[start].suite)
      ++end;
    std::stable_sort(reports.begin() + static_cast<long>(start),
                     reports.begin() + static_cast<long>(end),
                     [](const Report& a, const Report& b) {
                       return a.relation_id < b.relation_id;
                     });
    start = end;
  }
}

bool reports_failed(const std::vector<Report>& reports) {
  // Key corrected passes by (suite, base id, params).
  std::set<std::string> corrected_pass;
  for (const Report& r : reports)
    if (r.is_correction() && r.status == kStatusPass)
      corrected_pass.insert(r.suite + "\x1f" + r.base_id() + "\x1f" +
                            join(r.params, ","));
  for (const Report& r : reports) {
    if (r.is_correction() || r.status != kStatusFail) continue;
    if (!corrected_pass.count(r.suite + "\x1f" + r.relation_id + "\x1f" +
                              join(r.params, ",")))
      return true;
  }
  return false;
}

namespace {

ordered_json report_to_json(const Report& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["relation_id"] = r.relation_id;
  j["status"] = r.status;
  j["params"] = r.params;
  if (r.residual_offset) j["residual_offset"] = *r.residual_offset;
  if (r.residual_coeff) j["residual_coeff"] = *r.residual_coeff;
  if (!r.empirical.empty()) {
    ordered_json e;
    for (const auto& [k, v] : r.empirical) e[k] = v;
    j["empirical_constants"] = e;
  }
  return j;
}

}  // namespace

std::string render_reports(const std::vector<Report>& reports,
                           ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const Report& r : reports) arr.push_back(report_to_json(r));
      os << arr.dump(2) << "\n";
      break;
    }
    case ReportFormat::csv: {
      os << "suite,relation_id,status,params,residual_offset,residual_coeff,"
            "empirical_constants\n";
      for (const Report& r : reports) {
        std::vector<std::string> emp;
        for (const auto& [k, v] : r.empirical) emp.push_back(k + "=" + v);
        os << csv_quote(r.suite) << "," << csv_quote(r.relation_id) << ","
           << csv_quote(r.status) << "," << csv_quote(join(r.params, ";"))
           << ","
           << (r.residual_offset ? std::to_string(*r.residual_offset) : "")
           << "," << csv_quote(r.residual_coeff.value_or("")) << ","
           << csv_quote(join(emp, ";")) << "\n";
      }
      break;
    }
    case ReportFormat::text: {
      std::string suite;
      size_t pass = 0, fail = 0, resampled = 0;
      for (const Report& r : reports) {
        if (r.suite != suite) {
          suite = r.suite;
          os << "== suite " << suite << " ==\n";
        }
        std::string tag = r.status == kStatusPass   ? "PASS"
                          : r.status == kStatusFail ? "FAIL"
                                                    : "RESAMPLED";
        (r.status == kStatusPass   ? pass
         : r.status == kStatusFail ? fail
                                   : resampled)++;
        os << tag << " " << r.relation_id;
        if (!r.params.empty()) os << " params=[" << join(r.params, ", ") << "]";
        if (r.residual_offset)
          os << " residual_offset=" << *r.residual_offset;
        if (r.residual_coeff) os << " residual_coeff=" << *r.residual_coeff;
        for (const auto& [k, v] : r.empirical) os << " " << k << "=" << v;
        os << "\n";
      }
      os << "== totals: " << pass << " pass, " << fail << " fail, "
         << resampled << " resampled ==\n";
      break;
    }
  }
  return os.str();
}

namespace {

std::string offset_key(int offset) {
  return offset > 0 ? "+" + std::to_string(offset) : std::to_string(offset);
}

ordered_json poly_coeffs_json(const Poly& p) {
  ordered_json arr = ordered_json::array();
  if (p.is_zero()) {
    arr.push_back("0");
    return arr;
  }
  for (const Rational& c : p.coeffs()) arr.push_back(rat_str(c));
  return arr;
}

Poly poly_coeffs_parse(const ordered_json& arr) {
  std::vector<Rational> c;
  for (const auto& v : arr) c.push_back(rat_parse(v.get<std::string>()));
  return Poly(std::move(c));
}

}  // namespace

std::string diffop_to_json(const DiffOp& op) {
  ordered_json j = ordered_json::object();
  for (const auto& [offset, coeff] : op.terms()) {
    ordered_json pair = ordered_json::array();
    pair.push_back(poly_coeffs_json(coeff.num()));
    pair.push_back(poly_coeffs_json(coeff.den()));
    j[offset_key(offset)] = pair;
  }
  return j.dump();
}

DiffOp diffop_from_json(const std::string& text) {
  ordered_json j = ordered_json::parse(text);
  DiffOp op;
  for (const auto& [key, value] : j.items()) {
    int offset = std::stoi(key);
    op = op + DiffOp::term(offset, RatFunc(poly_coeffs_parse(value.at(0)),
                                           poly_coeffs_parse(value.at(1))));
  }
  return op;
}

std::string lambda_poly_to_json(const LambdaPoly& q) {
  ordered_json arr = ordered_json::array();
  if (q.is_zero()) {
    arr.push_back("0");
  } else {
    for (const Rational& c : q.coeffs()) arr.push_back(rat_str(c));
  }
  return arr.dump();
}

LambdaPoly lambda_poly_from_json(const std::string& text) {
  ordered_json arr = ordered_json::parse(text);
  std::vector<Rational> c;
  for (const auto& v : arr) c.push_back(rat_parse(v.get<std::string>()));
  return LambdaPoly(std::move(c));
}

}  // namespace sheun
