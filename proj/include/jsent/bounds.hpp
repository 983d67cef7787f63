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

// Multi-observable entropic uncertainty lower bound
//
//     sum_k H(M_k) >= -log2 b + (n - 1) S(rho)
//
// and its comparison against raw and James-Stein-shrunk entropy sums.
//
// The overlap constant b is the largest squared inner product between vectors
// taken from two distinct bases. For two bases this is the Maassen-Uffink
// constant. Callers holding a sharper constant pass it as an override.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "jsent/entropy.hpp"
#include "jsent/error.hpp"
#include "jsent/estimators.hpp"
#include "jsent/quantum.hpp"

namespace jsent {

/// Slack above this counts as satisfied.
inline constexpr double kBoundSlackTolerance = 1e-9;

struct BoundReport {
  double bound_value;
  double b_used;
  int n;
  double von_neumann;
  double sum_raw;
  double sum_js;
  bool satisfied_raw;
  bool satisfied_js;
  double slack_raw;
  double slack_js;
};

/// S(rho) = -sum lambda log2 lambda, bits.
inline double von_neumann_entropy(const DensityMatrix& rho) {
  double s = 0.0;
  for (double lambda : rho.spectrum()) {
    if (lambda > kZeroProbability) s -= lambda * std::log2(lambda);
  }
  return std::clamp(s, 0.0, std::log2(static_cast<double>(rho.dim())));
}

inline double max_overlap_b(std::span<const MeasurementBasis> bases) {
  if (bases.size() < 2) {
    throw ParameterError("overlap constant needs at least two bases, got " +
                         std::to_string(bases.size()));
  }
  const int dim = bases.front().dim();
  for (const auto& basis : bases) {
    if (basis.dim() != dim) {
      throw ValidationError("basis '" + basis.label() + "' has dimension " +
                            std::to_string(basis.dim()) + ", expected " + std::to_string(dim));
    }
  }
  double best = 0.0;
  for (std::size_t r = 0; r < bases.size(); ++r) {
    for (std::size_t s = r + 1; s < bases.size(); ++s) {
      const Eigen::MatrixXcd overlaps = bases[r].columns().adjoint() * bases[s].columns();
      best = std::max(best, overlaps.cwiseAbs2().maxCoeff());
    }
  }
  return std::min(best, 1.0);
}

/// -log2 b + (n - 1) S(rho).
inline double liu_bound(double b, int n, const DensityMatrix& rho) {
  if (!(b > 0.0 && b <= 1.0)) {
    throw ParameterError("overlap constant b must lie in (0, 1]");
  }
  if (n < 2) {
    throw ParameterError("bound needs at least two observables, got " + std::to_string(n));
  }
  return -std::log2(b) + static_cast<double>(n - 1) * von_neumann_entropy(rho);
}

enum class AdjustedSumMode {
  /// Positive-part factor applied to the whole vector, times the raw sum.
  VectorShrinkage,
  /// sum_k sum_r (1 - (n-2) sigma^2 / |H_r|) H_k, evaluated term by term.
  PerEntryDoubleSum,
};

inline double js_adjusted_sum(const EntropyVector& y, double sigma2,
                              AdjustedSumMode mode = AdjustedSumMode::VectorShrinkage) {
  if (y.size() < kMinShrinkageDimension) {
    throw DimensionError("shrinkage-adjusted sum needs at least 3 entropies, got " +
                         std::to_string(y.size()));
  }
  if (!(sigma2 >= 0.0) || !std::isfinite(sigma2)) {
    throw ParameterError("sigma^2 must be finite and nonnegative");
  }
  if (mode == AdjustedSumMode::VectorShrinkage) {
    return js_factor(y, sigma2, /*positive_part=*/true).factor * sum_entropies(y);
  }
  const double n = static_cast<double>(y.size());
  for (std::size_t r = 0; r < y.size(); ++r) {
    if (y[r] == 0.0) {
      throw DegenerateInputError("per-entry double sum divides by H(M_" + std::to_string(r) +
                                 ") = 0");
    }
  }
  double total = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    for (std::size_t r = 0; r < y.size(); ++r) {
      total += (1.0 - (n - 2.0) * sigma2 / std::abs(y[r])) * y[k];
    }
  }
  return total;
}

/// Compares raw and shrunk entropy sums against the bound. b comes from
/// `b_override` when given, else from max_overlap_b(bases). Below three
/// measurements, or for an all-zero vector, sum_js equals sum_raw.
inline BoundReport check_relation(const EntropyVector& y, std::span<const MeasurementBasis> bases,
                                  const DensityMatrix& rho, double sigma2,
                                  std::optional<double> b_override = std::nullopt) {
  const int n = static_cast<int>(y.size());
  if (!bases.empty()) {
    if (bases.size() != y.size()) {
      throw ValidationError("entropy vector has " + std::to_string(y.size()) + " entries but " +
                            std::to_string(bases.size()) + " bases were given");
    }
    for (const auto& basis : bases) {
      if (basis.dim() != rho.dim()) {
        throw ValidationError("basis '" + basis.label() + "' dimension does not match rho");
      }
    }
  }
  if (!b_override && bases.empty()) {
    throw ParameterError("either bases or an explicit b must be supplied");
  }
  const double b = b_override ? *b_override : max_overlap_b(bases);

  BoundReport report{};
  report.b_used = b;
  report.n = n;
  report.von_neumann = von_neumann_entropy(rho);
  report.bound_value = liu_bound(b, n, rho);
  report.sum_raw = sum_entropies(y);
  // The zero vector shrinks to itself.
  const bool shrinkable = y.size() >= kMinShrinkageDimension && report.sum_raw > 0.0;
  report.sum_js = shrinkable ? js_adjusted_sum(y, sigma2) : report.sum_raw;
  report.slack_raw = report.sum_raw - report.bound_value;
  report.slack_js = report.sum_js - report.bound_value;
  report.satisfied_raw = report.slack_raw >= -kBoundSlackTolerance;
  report.satisfied_js = report.slack_js >= -kBoundSlackTolerance;
  return report;
}

}  // namespace jsent
