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

// Experiment files.
//
// Block form, one directive per line, '#' starts a comment:
//
//     format_version = 1
//     metadata source = lab notebook 7
//
//     record
//     state_label = zero
//     parameter_a = 0.5
//     measurement Sx = 0.5496, 0.446, 0.0044
//     measurement Sz = 1, 0, 0
//
// Flat form, a CSV whose header is exactly
//
//     state_label,parameter_a,measurement_label,outcome_index,probability
//
// with one row per outcome. Rows sharing (state_label, parameter_a) form one
// record; records and measurements keep first-appearance order.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jsent/entropy.hpp"
#include "jsent/error.hpp"
#include "jsent/quantum.hpp"

namespace jsent {

inline constexpr std::string_view kFormatVersion = "1";
inline constexpr std::string_view kFlatHeader =
    "state_label,parameter_a,measurement_label,outcome_index,probability";

struct ExperimentMeasurement {
  std::string label;
  std::vector<double> probabilities;

  friend bool operator==(const ExperimentMeasurement&, const ExperimentMeasurement&) = default;
};

struct ExperimentRecord {
  std::string state_label;
  std::optional<double> parameter_a;
  std::vector<ExperimentMeasurement> measurements;

  friend bool operator==(const ExperimentRecord&, const ExperimentRecord&) = default;
};

/// Probabilities are kept exactly as read; validated distributions are
/// produced on demand by to_measurement_records().
struct ExperimentFile {
  std::string format_version{kFormatVersion};
  std::map<std::string, std::string> metadata;
  std::vector<ExperimentRecord> records;

  friend bool operator==(const ExperimentFile&, const ExperimentFile&) = default;
};

struct LoadOptions {
  /// Strict: sums within 1e-9, stored as given. Lenient: within `tolerance`, renormalized.
  bool strict = false;
  double tolerance = ProbabilityDistribution::kDefaultLenientTolerance;
};

/// Validated distributions for one record. Renormalization notes are appended to `notes`.
inline std::vector<MeasurementRecord> to_measurement_records(const ExperimentRecord& record,
                                                             const LoadOptions& options = {},
                                                             std::vector<std::string>* notes =
                                                                 nullptr) {
  std::vector<MeasurementRecord> out;
  out.reserve(record.measurements.size());
  for (const auto& m : record.measurements) {
    try {
      auto dist = options.strict ? ProbabilityDistribution::strict(m.probabilities)
                                 : ProbabilityDistribution::lenient(m.probabilities,
                                                                    options.tolerance);
      if (notes && dist.normalization_note()) {
        notes->push_back("record '" + record.state_label + "' measurement '" + m.label +
                         "': " + *dist.normalization_note());
      }
      out.push_back({m.label, std::move(dist)});
    } catch (const ValidationError& e) {
      throw ValidationError("measurement '" + m.label + "': " + e.what());
    }
  }
  check_record_labels(out);
  return out;
}

/// Checks every invariant; returns the renormalization notes.
inline std::vector<std::string> validate_experiment(const ExperimentFile& file,
                                                    const LoadOptions& options = {}) {
  if (file.format_version != kFormatVersion) {
    throw ValidationError("unsupported format_version '" + file.format_version + "'");
  }
  if (file.records.empty()) {
    throw ValidationError("experiment file has no records");
  }
  std::vector<std::string> notes;
  for (std::size_t i = 0; i < file.records.size(); ++i) {
    const auto& record = file.records[i];
    try {
      if (record.state_label.empty()) throw ValidationError("state_label is empty");
      if (record.measurements.empty()) throw ValidationError("record has no measurements");
      if (record.parameter_a && !(*record.parameter_a > 0.0 && *record.parameter_a < 1.0)) {
        throw ValidationError("parameter_a must lie strictly inside (0, 1)");
      }
      to_measurement_records(record, options, &notes);
    } catch (const ValidationError& e) {
      throw ValidationError("record " + std::to_string(i) + ": " + e.what());
    }
  }
  return notes;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline double parse_real(std::string_view text, const std::string& context) {
  const std::string owned(trim(text));
  if (owned.empty()) throw ParseError(context + ": expected a number");
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(owned, &used);
  } catch (const std::exception&) {
    throw ParseError(context + ": '" + owned + "' is not a number");
  }
  if (used != owned.size() || !std::isfinite(value)) {
    throw ParseError(context + ": '" + owned + "' is not a finite number");
  }
  return value;
}

inline std::vector<double> parse_real_list(std::string_view text, const std::string& context) {
  std::vector<double> values;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    values.push_back(parse_real(piece, context + " (entry " + std::to_string(values.size()) + ")"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

inline std::string line_context(std::size_t line_no) { return "line " + std::to_string(line_no); }

// Splits "<key> = <value>" at the first '='.
inline std::pair<std::string_view, std::string_view> split_assignment(std::string_view line,
                                                                      std::size_t line_no) {
  const auto eq = line.find('=');
  if (eq == std::string_view::npos) {
    throw ParseError(line_context(line_no) + ": expected '<key> = <value>'");
  }
  return {trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
}

inline std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw ParseError(line_context(line_no) + ": unterminated quote");
  fields.push_back(std::move(field));
  return fields;
}

inline ExperimentFile parse_block_form(std::istream& in) {
  ExperimentFile file;
  file.format_version.clear();
  ExperimentRecord* current = nullptr;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto ctx = line_context(line_no);

    if (line == "record") {
      file.records.emplace_back();
      current = &file.records.back();
      continue;
    }
    const auto space = line.find_first_of(" \t=");
    const std::string_view keyword = line.substr(0, space);

    if (keyword == "metadata") {
      const auto [key, value] = split_assignment(line.substr(keyword.size()), line_no);
      if (key.empty()) throw ParseError(ctx + ": metadata key is empty");
      file.metadata[std::string(key)] = std::string(value);
    } else if (keyword == "measurement") {
      if (!current) throw ParseError(ctx + ": measurement outside a record");
      const auto [label, probs] = split_assignment(line.substr(keyword.size()), line_no);
      if (label.empty()) throw ParseError(ctx + ": measurement label is empty");
      current->measurements.push_back(
          {std::string(label), parse_real_list(probs, ctx + " field probabilities")});
    } else {
      const auto [key, value] = split_assignment(line, line_no);
      if (key == "format_version") {
        if (current) throw ParseError(ctx + ": format_version must precede records");
        file.format_version = std::string(value);
      } else if (key == "state_label") {
        if (!current) throw ParseError(ctx + ": state_label outside a record");
        current->state_label = std::string(value);
      } else if (key == "parameter_a") {
        if (!current) throw ParseError(ctx + ": parameter_a outside a record");
        current->parameter_a = parse_real(value, ctx + " field parameter_a");
      } else {
        throw ParseError(ctx + ": unknown key '" + std::string(key) + "'");
      }
    }
  }
  if (file.format_version.empty()) throw ParseError("missing format_version");
  return file;
}

inline ExperimentFile parse_flat_form(std::istream& in) {
  ExperimentFile file;
  std::string raw;
  std::size_t line_no = 0;
  bool header_seen = false;
  // (state_label, parameter_a text) -> record index
  std::map<std::pair<std::string, std::string>, std::size_t> record_index;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kFlatHeader) throw ParseError(line_context(line_no) + ": unexpected header");
      header_seen = true;
      continue;
    }
    const auto ctx = line_context(line_no);
    const auto fields = split_csv_line(std::string(line), line_no);
    if (fields.size() != 5) {
      throw ParseError(ctx + ": expected 5 fields, got " + std::to_string(fields.size()));
    }
    const std::string a_text(trim(fields[1]));
    const auto key = std::make_pair(fields[0], a_text);
    auto it = record_index.find(key);
    if (it == record_index.end()) {
      ExperimentRecord record;
      record.state_label = fields[0];
      if (!a_text.empty()) record.parameter_a = parse_real(a_text, ctx + " field parameter_a");
      file.records.push_back(std::move(record));
      it = record_index.emplace(key, file.records.size() - 1).first;
    }
    auto& record = file.records[it->second];
    const double index_value = parse_real(fields[3], ctx + " field outcome_index");
    if (index_value < 0 || index_value != std::floor(index_value)) {
      throw ParseError(ctx + " field outcome_index: must be a nonnegative integer");
    }
    const auto outcome = static_cast<std::size_t>(index_value);
    const double p = parse_real(fields[4], ctx + " field probability");

    ExperimentMeasurement* m = nullptr;
    for (auto& candidate : record.measurements) {
      if (candidate.label == fields[2]) m = &candidate;
    }
    if (!m) {
      record.measurements.push_back({fields[2], {}});
      m = &record.measurements.back();
    }
    if (outcome != m->probabilities.size()) {
      throw ParseError(ctx + " field outcome_index: expected " +
                       std::to_string(m->probabilities.size()) + ", got " +
                       std::to_string(outcome));
    }
    m->probabilities.push_back(p);
  }
  if (!header_seen) throw ParseError("flat experiment file has no header");
  return file;
}

}  // namespace detail

/// Parses either form (chosen by the first non-comment line) and validates.
inline ExperimentFile parse_experiment(std::istream& in, const LoadOptions& options = {},
                                       std::vector<std::string>* notes = nullptr) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  bool flat = false;
  {
    std::istringstream probe(text);
    std::string raw;
    while (std::getline(probe, raw)) {
      const auto line = detail::trim(raw);
      if (line.empty() || line.front() == '#') continue;
      flat = line.starts_with("state_label,");
      break;
    }
  }
  std::istringstream body(text);
  ExperimentFile file = flat ? detail::parse_flat_form(body) : detail::parse_block_form(body);
  auto found = validate_experiment(file, options);
  if (notes) notes->insert(notes->end(), found.begin(), found.end());
  return file;
}

inline ExperimentFile load_experiment(const std::string& path, const LoadOptions& options = {},
                                      std::vector<std::string>* notes = nullptr) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open experiment file '" + path + "'");
  try {
    return parse_experiment(in, options, notes);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace detail {

// Text that would not survive a write/parse cycle unchanged.
inline void check_writable(const std::string& text, const char* what, bool allow_equals) {
  const bool bad = text.find('\n') != std::string::npos ||
                   (!allow_equals && text.find('=') != std::string::npos) ||
                   trim(text) != text;
  if (bad) {
    throw ValidationError(std::string(what) + " '" + text +
                          "' cannot be written (newline, '=' or surrounding whitespace)");
  }
}

inline std::string exact_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

/// Block form with round-trip exact numbers.
inline void write_experiment(std::ostream& out, const ExperimentFile& file) {
  for (const auto& [key, value] : file.metadata) {
    detail::check_writable(key, "metadata key", false);
    detail::check_writable(value, "metadata value", true);
  }
  for (const auto& record : file.records) {
    detail::check_writable(record.state_label, "state_label", true);
    for (const auto& m : record.measurements) detail::check_writable(m.label, "label", false);
  }
  out << "format_version = " << file.format_version << '\n';
  for (const auto& [key, value] : file.metadata) {
    out << "metadata " << key << " = " << value << '\n';
  }
  for (const auto& record : file.records) {
    out << "\nrecord\n";
    out << "state_label = " << record.state_label << '\n';
    if (record.parameter_a) out << "parameter_a = " << detail::exact_number(*record.parameter_a) << '\n';
    for (const auto& m : record.measurements) {
      out << "measurement " << m.label << " =";
      for (std::size_t i = 0; i < m.probabilities.size(); ++i) {
        out << (i == 0 ? " " : ", ") << detail::exact_number(m.probabilities[i]);
      }
      out << '\n';
    }
  }
}

/// Density matrix text: one matrix row per line, entries separated by
/// whitespace, each a real number or a complex pair "(re,im)". '#' lines are
/// comments.
inline DensityMatrix parse_density_matrix(std::istream& in) {
  std::vector<std::vector<Complex>> rows;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = detail::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields{std::string(line)};
    std::vector<Complex> row;
    Complex value;
    while (fields >> value) row.push_back(value);
    if (!fields.eof()) {
      throw ParseError(detail::line_context(line_no) + ": entry " + std::to_string(row.size()) +
                       " is not a number or (re,im) pair");
    }
    rows.push_back(std::move(row));
  }
  const auto dim = static_cast<Eigen::Index>(rows.size());
  Eigen::MatrixXcd m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(row.size()) != dim) {
      throw ParseError("density matrix row " + std::to_string(i) + " has " +
                       std::to_string(row.size()) + " entries, expected " + std::to_string(dim));
    }
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  return DensityMatrix(m);
}

inline DensityMatrix load_density_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open density matrix file '" + path + "'");
  try {
    return parse_density_matrix(in);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace jsent
