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

// Discrete distributions, Shannon/Renyi entropy (base 2) and the closed-form
// entropy-sum curves for the two spin-1 preparations.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jsent/error.hpp"

namespace jsent {

/// Probabilities below this are treated as exact zeros inside entropy sums.
inline constexpr double kZeroProbability = 1e-15;

class ProbabilityDistribution {
 public:
  static constexpr double kStrictTolerance = 1e-9;
  static constexpr double kDefaultLenientTolerance = 1e-3;

  /// Analytic input: entries in [0,1] summing to 1 within 1e-9. Stored as given.
  static ProbabilityDistribution strict(std::vector<double> probs) {
    check_entries(probs);
    const double total = sum_of(probs);
    if (std::abs(total - 1.0) > kStrictTolerance) {
      throw ValidationError("probabilities sum to " + to_text(total) +
                            ", expected 1 within " + to_text(kStrictTolerance));
    }
    return ProbabilityDistribution(std::move(probs), std::nullopt);
  }

  /// Empirical input: sum may be off by `tolerance`; the result is renormalized
  /// and the correction is recorded in normalization_note().
  static ProbabilityDistribution lenient(std::vector<double> probs,
                                         double tolerance = kDefaultLenientTolerance) {
    if (!(tolerance >= 0.0)) {
      throw ParameterError("lenient tolerance must be nonnegative");
    }
    check_entries(probs, /*check_upper=*/false);
    const double total = sum_of(probs);
    if (std::abs(total - 1.0) > tolerance) {
      throw ValidationError("probabilities sum to " + to_text(total) +
                            ", expected 1 within " + to_text(tolerance));
    }
    std::optional<std::string> note;
    if (total != 1.0) {
      for (double& p : probs) p /= total;
      note = "renormalized from sum " + to_text(total);
    }
    return ProbabilityDistribution(std::move(probs), std::move(note));
  }

  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::optional<std::string>& normalization_note() const { return note_; }

  friend bool operator==(const ProbabilityDistribution&, const ProbabilityDistribution&) = default;

 private:
  ProbabilityDistribution(std::vector<double> probs, std::optional<std::string> note)
      : probs_(std::move(probs)), note_(std::move(note)) {}

  static void check_entries(const std::vector<double>& probs, bool check_upper = true) {
    if (probs.empty()) {
      throw ValidationError("distribution must have at least one outcome");
    }
    for (std::size_t i = 0; i < probs.size(); ++i) {
      const double p = probs[i];
      if (!std::isfinite(p) || p < 0.0 || (check_upper && p > 1.0)) {
        throw ValidationError("probability at index " + std::to_string(i) + " is " +
                              to_text(p) + ", outside [0, 1]");
      }
    }
  }

  static double sum_of(const std::vector<double>& probs) {
    double total = 0.0;
    for (double p : probs) total += p;
    return total;
  }

  static std::string to_text(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
  }

  std::vector<double> probs_;
  std::optional<std::string> note_;
};

/// Entropy in bits. Always finite and nonnegative.
class EntropyValue {
 public:
  constexpr EntropyValue() = default;
  explicit EntropyValue(double bits) : bits_(bits) {
    if (!std::isfinite(bits) || bits < 0.0) {
      throw ValidationError("entropy must be finite and nonnegative");
    }
  }
  constexpr double bits() const { return bits_; }
  friend constexpr auto operator<=>(EntropyValue, EntropyValue) = default;

 private:
  double bits_ = 0.0;
};

namespace detail {

// Clamp rounding overshoot into [0, log2 n].
inline EntropyValue bounded_entropy(double bits, std::size_t outcomes) {
  const double upper = std::log2(static_cast<double>(outcomes));
  return EntropyValue(std::clamp(bits, 0.0, upper));
}

}  // namespace detail

/// H = -sum p log2 p with 0 log 0 = 0.
inline EntropyValue shannon_entropy(const ProbabilityDistribution& dist) {
  double h = 0.0;
  for (double p : dist.probs()) {
    if (p > kZeroProbability) h -= p * std::log2(p);
  }
  return detail::bounded_entropy(h, dist.size());
}

/// H_alpha = log2(sum p^alpha) / (1 - alpha), alpha > 0 and alpha != 1.
inline EntropyValue renyi_entropy(const ProbabilityDistribution& dist, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("Renyi order must be positive and finite");
  }
  if (alpha == 1.0) {
    throw ParameterError("Renyi order 1 is the Shannon entropy; call shannon_entropy");
  }
  double power_sum = 0.0;
  for (double p : dist.probs()) {
    if (p > kZeroProbability) power_sum += std::pow(p, alpha);
  }
  return detail::bounded_entropy(std::log2(power_sum) / (1.0 - alpha), dist.size());
}

/// h(a) = -a log2 a - (1-a) log2 (1-a).
inline EntropyValue binary_entropy(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw ParameterError("binary entropy argument must lie in [0, 1]");
  }
  double h = 0.0;
  if (a > kZeroProbability) h -= a * std::log2(a);
  if (1.0 - a > kZeroProbability) h -= (1.0 - a) * std::log2(1.0 - a);
  return detail::bounded_entropy(h, 2);
}

/// Prepared spin-1 state whose three-measurement entropy sum has a closed form.
enum class TheoryState { MinusOne, Zero };

/// h(a) for |-1>, h(a) + 1 for |0>. Open interval only.
inline EntropyValue theory_sum(TheoryState state, double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ParameterError("theory curve parameter must lie strictly inside (0, 1)");
  }
  const double h = binary_entropy(a).bits();
  return EntropyValue(state == TheoryState::Zero ? h + 1.0 : h);
}

/// Accepts "zero", "0", "|0>" and "minus1", "-1", "|-1>".
inline std::optional<TheoryState> parse_theory_state(const std::string& label) {
  if (label == "zero" || label == "0" || label == "|0>") return TheoryState::Zero;
  if (label == "minus1" || label == "-1" || label == "|-1>") return TheoryState::MinusOne;
  return std::nullopt;
}

inline const char* to_string(TheoryState state) {
  return state == TheoryState::Zero ? "zero" : "minus1";
}

struct MeasurementRecord {
  std::string label;
  ProbabilityDistribution distribution;

  friend bool operator==(const MeasurementRecord&, const MeasurementRecord&) = default;
};

/// Ordered entropies H(M_1..M_n) of measurements on one prepared state.
class EntropyVector {
 public:
  explicit EntropyVector(std::vector<double> entries, std::string state_label = {},
                         std::optional<double> parameter_a = std::nullopt)
      : entries_(std::move(entries)),
        state_label_(std::move(state_label)),
        parameter_a_(parameter_a) {
    if (entries_.empty()) {
      throw ValidationError("entropy vector must have at least one entry");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (!std::isfinite(entries_[i]) || entries_[i] < 0.0) {
        throw ValidationError("entropy entry " + std::to_string(i) +
                              " must be finite and nonnegative");
      }
    }
    if (parameter_a_ && !(*parameter_a_ > 0.0 && *parameter_a_ < 1.0)) {
      throw ValidationError("parameter_a must lie strictly inside (0, 1)");
    }
  }

  std::span<const double> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const std::string& state_label() const { return state_label_; }
  const std::optional<double>& parameter_a() const { return parameter_a_; }

  /// Same labels, new entries.
  EntropyVector with_entries(std::vector<double> entries) const {
    return EntropyVector(std::move(entries), state_label_, parameter_a_);
  }

  friend bool operator==(const EntropyVector&, const EntropyVector&) = default;

 private:
  std::vector<double> entries_;
  std::string state_label_;
  std::optional<double> parameter_a_;
};

inline void check_record_labels(std::span<const MeasurementRecord> records) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].label.empty()) {
      throw ValidationError("measurement " + std::to_string(i) + " has an empty label");
    }
    if (!seen.insert(records[i].label).second) {
      throw ValidationError("duplicate measurement label '" + records[i].label + "'");
    }
  }
}

/// entries[k] = H(records[k]), order preserved.
inline EntropyVector entropy_vector(std::span<const MeasurementRecord> records,
                                    std::string state_label,
                                    std::optional<double> parameter_a = std::nullopt) {
  if (records.empty()) {
    throw ValidationError("at least one measurement record is required");
  }
  check_record_labels(records);
  std::vector<double> entries;
  entries.reserve(records.size());
  for (const auto& record : records) {
    entries.push_back(shannon_entropy(record.distribution).bits());
  }
  return EntropyVector(std::move(entries), std::move(state_label), parameter_a);
}

}  // namespace jsent
