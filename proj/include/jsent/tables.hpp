// Copyright 2026 The jsent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Delimiter-separated output tables. Numbers print with 6 significant digits
// unless full precision is requested; absent values print as NA.

#pragma once

#include <cstdio>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jsent/bounds.hpp"
#include "jsent/error.hpp"
#include "jsent/pipeline.hpp"
#include "jsent/risk.hpp"

namespace jsent {

inline constexpr const char* kAbsent = "NA";

struct TableFormat {
  bool full_precision = false;
  char delimiter = ',';
};

inline std::string format_number(double x, const TableFormat& format = {}) {
  char buf[40];
  std::snprintf(buf, sizeof buf, format.full_precision ? "%.17g" : "%.6g", x);
  return buf;
}

inline std::string format_number(const std::optional<double>& x, const TableFormat& format = {}) {
  return x ? format_number(*x, format) : std::string(kAbsent);
}

inline std::string format_bool(bool b) { return b ? "true" : "false"; }

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) {
      throw ValidationError("table row has " + std::to_string(row.size()) + " fields, header has " +
                            std::to_string(header_.size()));
    }
    rows_.push_back(std::move(row));
  }

  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }

  void write(std::ostream& out, char delimiter = ',') const {
    write_line(out, header_, delimiter);
    for (const auto& row : rows_) write_line(out, row, delimiter);
  }

 private:
  static std::string quote(const std::string& field, char delimiter) {
    if (field.find_first_of(std::string{delimiter, '"', '\n'}) == std::string::npos) return field;
    std::string q = "\"";
    for (char c : field) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + '"';
  }

  static void write_line(std::ostream& out, const std::vector<std::string>& fields, char delimiter) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << delimiter;
      out << quote(fields[i], delimiter);
    }
    out << '\n';
  }

  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline Table comparison_table(std::span<const ComparisonRow> rows, const TableFormat& f = {}) {
  Table table({"state_label", "parameter_a", "sum_experimental", "sum_js", "sum_theory",
               "delta_raw", "delta_js", "factor", "sigma2", "sigma2_source", "clamped"});
  for (const auto& r : rows) {
    table.add_row({r.state_label, format_number(r.parameter_a, f),
                   format_number(r.sum_experimental, f), format_number(r.sum_js, f),
                   format_number(r.sum_theory, f), format_number(r.delta_raw, f),
                   format_number(r.delta_js, f), format_number(r.factor, f),
                   format_number(r.sigma2, f), to_string(r.sigma2_source), format_bool(r.clamped)});
  }
  return table;
}

inline Table curve_table(std::span<const CurvePoint> points, const TableFormat& f = {}) {
  Table table({"a", "sum_theory"});
  for (const auto& p : points) table.add_row({format_number(p.a, f), format_number(p.sum_theory, f)});
  return table;
}

inline Table risk_table(std::span<const RiskReport> reports, const TableFormat& f = {}) {
  Table table({"n", "theta_norm", "sigma", "trials", "estimator", "risk", "std_error",
               "ratio_vs_ls", "gain_vs_ls", "gain_std_error"});
  for (const auto& report : reports) {
    for (const auto& e : report.entries) {
      table.add_row({std::to_string(report.n), format_number(report.theta_norm, f),
                     format_number(report.sigma, f), std::to_string(report.trials),
                     to_string(e.estimator), format_number(e.risk, f),
                     format_number(e.std_error, f), format_number(e.ratio_vs_ls, f),
                     format_number(e.gain_vs_ls, f), format_number(e.gain_std_error, f)});
    }
  }
  return table;
}

struct LabeledBoundReport {
  std::string state_label;
  std::optional<double> parameter_a;
  BoundReport report;
};

inline Table bound_table(std::span<const LabeledBoundReport> reports, const TableFormat& f = {}) {
  Table table({"state_label", "parameter_a", "n", "b_used", "von_neumann", "bound_value",
               "sum_raw", "sum_js", "slack_raw", "slack_js", "satisfied_raw", "satisfied_js"});
  for (const auto& [label, a, r] : reports) {
    table.add_row({label, format_number(a, f), std::to_string(r.n), format_number(r.b_used, f),
                   format_number(r.von_neumann, f), format_number(r.bound_value, f),
                   format_number(r.sum_raw, f), format_number(r.sum_js, f),
                   format_number(r.slack_raw, f), format_number(r.slack_js, f),
                   format_bool(r.satisfied_raw), format_bool(r.satisfied_js)});
  }
  return table;
}

}  // namespace jsent
