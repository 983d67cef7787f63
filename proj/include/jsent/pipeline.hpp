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

// Experiment-vs-shrunk-vs-theory comparison for every record of a file.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jsent/entropy.hpp"
#include "jsent/error.hpp"
#include "jsent/estimators.hpp"
#include "jsent/experiment_io.hpp"
#include "jsent/quantum_sim.hpp"

namespace jsent {

struct ComparisonRow {
  std::string state_label;
  std::optional<double> parameter_a;
  double sum_experimental;
  double sum_js;
  std::optional<double> sum_theory;
  std::optional<double> delta_raw;
  std::optional<double> delta_js;
  double factor;
  double sigma2;
  Sigma2Source sigma2_source;
  bool clamped;
};

struct RecordError {
  std::size_t record_index;
  std::string state_label;
  std::string message;
};

struct PipelineResult {
  std::vector<ComparisonRow> rows;
  std::vector<RecordError> errors;
  std::vector<std::string> notes;
};

/// Which closed-form curve a record is compared against.
enum class TheoryCurve {
  FromLabel,  // by state label ("zero"/"minus1" and aliases); unknown labels get none
  None,
  Zero,
  MinusOne,
};

struct PipelineOptions {
  ShrinkageConfig shrinkage;
  TheoryCurve theory = TheoryCurve::FromLabel;
  LoadOptions load;
};

namespace detail {

inline std::optional<TheoryState> curve_for(const ExperimentRecord& record, TheoryCurve curve) {
  if (!record.parameter_a) return std::nullopt;
  switch (curve) {
    case TheoryCurve::FromLabel: return parse_theory_state(record.state_label);
    case TheoryCurve::None: return std::nullopt;
    case TheoryCurve::Zero: return TheoryState::Zero;
    case TheoryCurve::MinusOne: return TheoryState::MinusOne;
  }
  return std::nullopt;
}

}  // namespace detail

/// One record after entropy evaluation and shrinkage.
struct RecordShrinkage {
  std::vector<std::string> labels;
  ShrinkageResult result;
  std::optional<double> theory;
};

/// Entropies and James-Stein shrinkage for one record.
///
/// sigma^2 "from reference" uses the theory sum split evenly over the n
/// measurements as the reference vector; records without a theory curve fall
/// back to the sample variance, and the result records which source was used.
inline RecordShrinkage shrink_record(const ExperimentRecord& record,
                                     const PipelineOptions& options = {},
                                     std::vector<std::string>* notes = nullptr) {
  const auto measurements = to_measurement_records(record, options.load, notes);
  if (measurements.size() < kMinShrinkageDimension) {
    throw DimensionError("record has " + std::to_string(measurements.size()) +
                         " measurements; shrinkage needs at least 3");
  }
  const EntropyVector y = entropy_vector(measurements, record.state_label, record.parameter_a);

  std::optional<double> theory;
  if (const auto state = detail::curve_for(record, options.theory)) {
    theory = theory_sum(*state, *record.parameter_a).bits();
  }

  ShrinkageConfig config = options.shrinkage;
  std::optional<EntropyVector> reference;
  if (std::holds_alternative<sigma2::FromReference>(config.sigma2_mode)) {
    if (theory) {
      reference =
          y.with_entries(std::vector<double>(y.size(), *theory / static_cast<double>(y.size())));
    } else {
      config.sigma2_mode = sigma2::SampleVariance{};
    }
  }
  std::vector<std::string> labels;
  for (const auto& m : measurements) labels.push_back(m.label);
  return {std::move(labels), james_stein(y, config, reference), theory};
}

/// Per record: entropies, James-Stein shrinkage, theory comparison. Records
/// that fail (fewer than three measurements, invalid data) are reported in
/// `errors` and skipped. Rows are sorted by (state_label, parameter_a).
inline PipelineResult run_pipeline(const ExperimentFile& file, const PipelineOptions& options = {}) {
  PipelineResult result;
  for (std::size_t i = 0; i < file.records.size(); ++i) {
    const auto& record = file.records[i];
    try {
      const RecordShrinkage s = shrink_record(record, options, &result.notes);
      ComparisonRow row{record.state_label,
                        record.parameter_a,
                        s.result.sum_raw,
                        s.result.sum_shrunk,
                        s.theory,
                        std::nullopt,
                        std::nullopt,
                        s.result.factor,
                        s.result.sigma2_used,
                        s.result.sigma2_source,
                        s.result.clamped};
      if (s.theory) {
        row.delta_raw = row.sum_experimental - *s.theory;
        row.delta_js = row.sum_js - *s.theory;
      }
      result.rows.push_back(std::move(row));
    } catch (const Error& e) {
      result.errors.push_back({i, record.state_label, e.what()});
    }
  }
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const ComparisonRow& a, const ComparisonRow& b) {
                     if (a.state_label != b.state_label) return a.state_label < b.state_label;
                     return a.parameter_a < b.parameter_a;
                   });
  return result;
}

struct CurvePoint {
  double a;
  double sum_theory;
};

inline std::vector<CurvePoint> emit_curves(TheoryState state, std::span<const double> a_grid) {
  std::vector<CurvePoint> points;
  points.reserve(a_grid.size());
  for (double a : a_grid) {
    if (!(a > 0.0 && a < 1.0)) {
      throw ParameterError("curve grid value " + std::to_string(a) + " outside (0, 1)");
    }
    points.push_back({a, theory_sum(state, a).bits()});
  }
  return points;
}

/// Uniform grid of `count` interior points a_i = i / (count + 1).
inline std::vector<double> interior_grid(int count) {
  if (count < 1) throw ParameterError("grid needs at least one point");
  std::vector<double> grid;
  for (int i = 1; i <= count; ++i) grid.push_back(static_cast<double>(i) / (count + 1));
  return grid;
}

/// Simulated spin-1 family: one record per `a`, using spin1_family_bases.
/// Record r samples with stream r of `seed`.
struct SimulationSpec {
  TheoryState state = TheoryState::Zero;
  std::vector<double> a_values;
  NoiseModel noise;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
};

inline ExperimentFile simulate_family(const SimulationSpec& spec) {
  if (spec.a_values.empty()) throw ParameterError("at least one value of a is required");
  ExperimentFile file;
  file.metadata["generator"] = "jsent simulate";
  file.metadata["state"] = to_string(spec.state);
  file.metadata["noise_model"] = "depolarizing";
  file.metadata["depolarizing_p"] = detail::exact_number(spec.noise.depolarizing_p);
  file.metadata["shots"] = spec.shots ? std::to_string(*spec.shots) : "exact";
  file.metadata["seed"] = std::to_string(spec.seed);
  file.metadata["bases"] = "spin-1 family preset";

  const StateVector psi = spin1_state(spec.state);
  for (std::size_t r = 0; r < spec.a_values.size(); ++r) {
    const double a = spec.a_values[r];
    const auto bases = spin1_family_bases(spec.state, a);
    const auto records = generate_experiment(psi, bases, spec.noise, spec.shots,
                                             seeded_engine(spec.seed, r)());
    ExperimentRecord record;
    record.state_label = to_string(spec.state);
    record.parameter_a = a;
    for (const auto& m : records) {
      const auto p = m.distribution.probs();
      record.measurements.push_back({m.label, std::vector<double>(p.begin(), p.end())});
    }
    file.records.push_back(std::move(record));
  }
  return file;
}

}  // namespace jsent
