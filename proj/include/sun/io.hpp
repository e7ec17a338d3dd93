#pragma once

// Text formats: complex literals, JSON for states, polynomials and reports,
// CSV rows at full precision.

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sun/bargmann.hpp"
#include "sun/coherent.hpp"
#include "sun/intelligent.hpp"
#include "sun/rep_core.hpp"

namespace sun::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kVersion = "0.1.0";

namespace detail {

inline double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty()) throw DomainError("malformed complex literal '" + std::string(whole) + "'");
  double value = 0.0;
  const char* first = text.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw DomainError("malformed complex literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses "a", "bi", "a+bi", "a-bi" (no whitespace). A bare "i" means 1i.
inline Complex parse_complex(std::string_view text) {
  if (text.empty()) throw DomainError("empty complex literal");
  if (text.back() != 'i') return {detail::parse_real(text, text), 0.0};
  const std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not leading and not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return detail::parse_real(s, text);
  };
  if (split == std::string_view::npos) return {0.0, imag_part(body)};
  return {detail::parse_real(body.substr(0, split), text), imag_part(body.substr(split))};
}

inline std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

inline std::string format_complex(Complex z) {
  std::ostringstream os;
  os << std::setprecision(17) << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << 'i';
  return os.str();
}

inline json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

inline std::string occupation_key(const OccupationVector& n) {
  std::string key;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (k) key += ',';
    key += std::to_string(n[k]);
  }
  return key;
}

/// {"j1,0,...": [re, im], ...} in basis order.
inline json state_json(const StateVector& v) {
  json out = json::object();
  for (std::size_t b = 0; b < v.rep->dim(); ++b) out[occupation_key(v.rep->state(b))] = complex_json(v.amp(static_cast<Eigen::Index>(b)));
  return out;
}

inline json polynomial_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponents", e}, {"re", c.real()}, {"im", c.imag()}});
  return out;
}

inline json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

inline json report_json(const UncertaintyReport& r) {
  return {{"mean_p", r.mean_p},
          {"mean_q", r.mean_q},
          {"mean_h", r.mean_h},
          {"var_p", r.var_p},
          {"var_q", r.var_q},
          {"cov", r.covariance},
          {"delta_i", r.delta},
          {"sr_residual", r.sr_residual},
          {"u", optional_json(r.u)},
          {"v", optional_json(r.v)},
          {"var_p_from_h", optional_json(r.var_p_from_h)},
          {"var_q_from_h", optional_json(r.var_q_from_h)},
          {"cov_from_h", optional_json(r.covariance_from_h)},
          {"class", to_string(r.cls)}};
}

inline json solution_json(const IntelligentSolution& s) {
  const auto c = classify(s);
  json out = {{"alpha", complex_json(s.alpha)},
              {"lambda", complex_json(s.lambda)},
              {"residual", s.residual},
              {"branch", to_string(s.branch)},
              {"ill_conditioned", s.ill_conditioned},
              {"report", report_json(s.report)},
              {"variance_ratio", optional_json(c.variance_ratio)},
              {"variance_law_error", optional_json(c.variance_law_error)},
              {"state", state_json(s.state)}};
  if (s.trace) out["sector"] = s.trace->sector, out["lambda_prime"] = s.trace->lambda_prime;
  return out;
}

inline json eigenpair_json(const Eigenpair& e) {
  return {{"lambda", complex_json(e.lambda)},
          {"residual", e.residual},
          {"ill_conditioned", e.ill_conditioned},
          {"block", e.block},
          {"state", state_json(e.state)}};
}

inline json resolution_json(const ResolutionReport& r) {
  return {{"N", r.N},
          {"j1", r.j1},
          {"method", to_string(r.method)},
          {"method_detail", r.method_detail},
          {"budget", r.budget},
          {"deviation", r.deviation},
          {"warning", r.warning},
          {"estimate", matrix_json(r.estimate)}};
}

inline json exactness_json(const ExactnessReport& r) {
  return {{"N", r.N},
          {"j1", r.j1},
          {"orientation", to_string(r.orientation)},
          {"transport_deviation", r.transport_deviation},
          {"orientation_deviation", r.orientation_deviation},
          {"chain_chart_deviation", r.chain_chart_deviation},
          {"per_generator", r.per_generator},
          {"algebra_residuals", r.algebra_residuals},
          {"symbolic_residuals", r.symbolic_residuals},
          {"h1_on_constant", r.h1_on_constant}};
}

/// Column order of the sweep table.
inline const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols = {"N",     "j1",     "i",        "re_alpha",    "im_alpha",
                                                "eig_index", "re_lambda", "im_lambda", "var_p", "var_q",
                                                "cov",   "mean_h", "delta_i",  "sr_residual", "class"};
  return cols;
}

inline std::vector<std::string> sweep_row(int N, int j1, int i, std::size_t eig_index, const IntelligentSolution& s) {
  const auto& r = s.report;
  return {std::to_string(N),          std::to_string(j1),           std::to_string(i),
          format_double(s.alpha.real()), format_double(s.alpha.imag()), std::to_string(eig_index),
          format_double(s.lambda.real()), format_double(s.lambda.imag()), format_double(r.var_p),
          format_double(r.var_q),     format_double(r.covariance),  format_double(r.mean_h),
          format_double(r.delta),     format_double(r.sr_residual), to_string(r.cls)};
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

/// CSV with "# key=value" metadata lines ahead of the mandatory header row.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const json& meta, const std::vector<std::string>& header) : os_(os) {
    for (const auto& [k, v] : meta.items()) os_ << "# " << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump()) << "\r\n";
    row(header);
  }
  void row(const std::vector<std::string>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) os_ << (k ? "," : "") << csv_field(fields[k]);
    os_ << "\r\n";
  }

 private:
  std::ostream& os_;
};

}  // namespace sun::io
