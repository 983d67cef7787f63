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

// Least-squares and James-Stein estimation of entropy vectors.
//
// The James-Stein estimate multiplies the observation vector y by
//
//     c = 1 - (n - 2) sigma^2 / ||y||^2
//
// which shrinks it toward the origin. With positive-part clamping the factor
// never drops below zero. The noise variance sigma^2 is either supplied,
// estimated from deviations to a reference vector, or estimated from the
// sample spread of y itself; the variance estimate uses a 1/n divisor.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "jsent/entropy.hpp"
#include "jsent/error.hpp"

namespace jsent {

/// The estimator is only admissible-improving from three coordinates on.
inline constexpr std::size_t kMinShrinkageDimension = 3;

namespace sigma2 {
struct Provided {
  double value = 0.0;
};
struct FromReference {};
struct SampleVariance {};
}  // namespace sigma2

using Sigma2Mode = std::variant<sigma2::Provided, sigma2::FromReference, sigma2::SampleVariance>;

enum class Sigma2Source { Provided, FromReference, SampleVariance };

inline const char* to_string(Sigma2Source source) {
  switch (source) {
    case Sigma2Source::Provided: return "provided";
    case Sigma2Source::FromReference: return "reference";
    case Sigma2Source::SampleVariance: return "sample";
  }
  return "?";
}

struct ShrinkageConfig {
  Sigma2Mode sigma2_mode = sigma2::SampleVariance{};
  bool positive_part = true;
};

struct ShrinkageResult {
  EntropyVector raw;
  double factor;
  EntropyVector shrunk;
  double sum_raw;
  double sum_shrunk;
  double sigma2_used;
  Sigma2Source sigma2_source;
  bool clamped;
};

struct JsFactor {
  double factor;
  bool clamped;
};

/// Identity estimator.
inline EntropyVector least_squares(const EntropyVector& y) { return y; }

inline double sum_entropies(const EntropyVector& y) {
  double total = 0.0;
  for (double h : y.entries()) total += h;
  return total;
}

inline double squared_norm(std::span<const double> y) {
  double total = 0.0;
  for (double v : y) total += v * v;
  return total;
}

/// Shrinkage factor for an arbitrary real vector (entries may be negative).
inline JsFactor js_factor(std::span<const double> y, double sigma2, bool positive_part = true) {
  if (y.size() < kMinShrinkageDimension) {
    throw DimensionError("James-Stein shrinkage needs at least 3 coordinates, got " +
                         std::to_string(y.size()) +
                         "; below three the least-squares estimator is admissible");
  }
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) {
    throw ParameterError("sigma^2 must be finite and nonnegative");
  }
  const double norm2 = squared_norm(y);
  if (norm2 == 0.0) {
    throw DegenerateInputError("cannot shrink the zero vector (||y||^2 = 0)");
  }
  const double n = static_cast<double>(y.size());
  const double raw = (norm2 - (n - 2.0) * sigma2) / norm2;
  if (positive_part && raw < 0.0) return {0.0, true};
  return {raw, false};
}

inline JsFactor js_factor(const EntropyVector& y, double sigma2, bool positive_part = true) {
  return js_factor(y.entries(), sigma2, positive_part);
}

/// (1/n) sum (y_k - ref_k)^2. A variance, despite being used where a
/// standard deviation is sometimes written.
inline double estimate_sigma2(std::span<const double> y, std::span<const double> reference) {
  if (y.size() != reference.size()) {
    throw ValidationError("sigma^2 estimate needs equal lengths, got " +
                          std::to_string(y.size()) + " and " + std::to_string(reference.size()));
  }
  if (y.empty()) {
    throw ValidationError("sigma^2 estimate needs at least one entry");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    const double d = y[k] - reference[k];
    total += d * d;
  }
  return total / static_cast<double>(y.size());
}

inline double estimate_sigma2(const EntropyVector& y, const EntropyVector& reference) {
  return estimate_sigma2(y.entries(), reference.entries());
}

/// Deviation from the sample mean, same 1/n divisor.
inline double sample_variance(std::span<const double> y) {
  if (y.empty()) throw ValidationError("sample variance needs at least one entry");
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  const std::vector<double> centre(y.size(), mean);
  return estimate_sigma2(y, centre);
}

struct ResolvedSigma2 {
  double value;
  Sigma2Source source;
};

inline ResolvedSigma2 resolve_sigma2(const EntropyVector& y, const Sigma2Mode& mode,
                                     const EntropyVector* reference) {
  if (const auto* p = std::get_if<sigma2::Provided>(&mode)) {
    if (!(p->value >= 0.0) || !std::isfinite(p->value)) {
      throw ParameterError("provided sigma^2 must be finite and nonnegative");
    }
    return {p->value, Sigma2Source::Provided};
  }
  if (std::holds_alternative<sigma2::FromReference>(mode)) {
    if (reference == nullptr) {
      throw ValidationError("sigma^2 from reference requested but no reference vector given");
    }
    return {estimate_sigma2(y, *reference), Sigma2Source::FromReference};
  }
  return {sample_variance(y.entries()), Sigma2Source::SampleVariance};
}

inline ShrinkageResult james_stein(const EntropyVector& y, const ShrinkageConfig& config,
                                   const std::optional<EntropyVector>& reference = std::nullopt) {
  const auto resolved = resolve_sigma2(y, config.sigma2_mode, reference ? &*reference : nullptr);
  const auto [factor, clamped] = js_factor(y, resolved.value, config.positive_part);

  // Entropies cannot be negative, so a sign-flipping raw factor has no result.
  if (factor < 0.0) {
    throw DegenerateInputError("raw James-Stein factor " + std::to_string(factor) +
                               " is negative; enable positive-part clamping");
  }
  std::vector<double> shrunk;
  shrunk.reserve(y.size());
  for (double h : y.entries()) shrunk.push_back(factor * h);

  EntropyVector shrunk_vector = y.with_entries(std::move(shrunk));
  const double sum_raw = sum_entropies(y);
  const double sum_shrunk = sum_entropies(shrunk_vector);
  return ShrinkageResult{y,        factor,         std::move(shrunk_vector), sum_raw, sum_shrunk,
                         resolved.value, resolved.source, clamped};
}

}  // namespace jsent
