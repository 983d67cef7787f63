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

// Monte-Carlo estimate of frequentist risk E||theta_hat - theta||^2 at a fixed
// theta under y = theta + N(0, sigma^2 I), for least squares and (positive-part)
// James-Stein. Trials run sequentially from one engine, so a report is a pure
// function of its config.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jsent/error.hpp"
#include "jsent/estimators.hpp"
#include "jsent/random.hpp"

namespace jsent {

enum class Estimator { LS, JS, JSPositivePart };

inline const char* to_string(Estimator e) {
  switch (e) {
    case Estimator::LS: return "LS";
    case Estimator::JS: return "JS";
    case Estimator::JSPositivePart: return "JS+";
  }
  return "?";
}

struct RiskTrialConfig {
  int n = 3;
  std::vector<double> theta;
  double sigma = 1.0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::vector<Estimator> estimators{Estimator::LS, Estimator::JS, Estimator::JSPositivePart};
  /// Replace the true sigma^2 by (1/n) sum (y_k - theta_k)^2 in every trial.
  bool estimate_sigma2 = false;

  void validate() const {
    if (n < 1) throw ParameterError("dimension n must be at least 1");
    if (theta.size() != static_cast<std::size_t>(n)) {
      throw ValidationError("theta has " + std::to_string(theta.size()) + " entries, expected " +
                            std::to_string(n));
    }
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw ParameterError("sigma must be positive");
    if (trials < 1) throw ParameterError("trials must be at least 1");
    const bool wants_js = std::any_of(estimators.begin(), estimators.end(),
                                      [](Estimator e) { return e != Estimator::LS; });
    if (wants_js && n < static_cast<int>(kMinShrinkageDimension)) {
      throw DimensionError("James-Stein risk needs n >= 3, got n = " + std::to_string(n));
    }
  }
};

struct RiskEntry {
  Estimator estimator;
  double risk;
  double std_error;
  double ratio_vs_ls;
  /// Mean and standard error of the paired per-trial loss difference LS - this.
  double gain_vs_ls;
  double gain_std_error;
};

struct RiskReport {
  int n;
  double theta_norm;
  double sigma;
  std::uint64_t trials;
  std::uint64_t seed;
  /// LS first, then the other requested estimators in request order.
  std::vector<RiskEntry> entries;

  const RiskEntry& entry(Estimator e) const {
    for (const auto& x : entries) {
      if (x.estimator == e) return x;
    }
    throw std::out_of_range(std::string("estimator not in report: ") + to_string(e));
  }
};

namespace detail {

// Welford running mean/variance.
struct RunningMoments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }
  double std_error() const {
    if (count < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(count - 1) / static_cast<double>(count));
  }
};

}  // namespace detail

inline RiskReport simulate_risk(const RiskTrialConfig& config) {
  config.validate();
  std::vector<Estimator> order{Estimator::LS};
  for (Estimator e : config.estimators) {
    if (std::find(order.begin(), order.end(), e) == order.end()) order.push_back(e);
  }

  const auto n = static_cast<std::size_t>(config.n);
  const double true_sigma2 = config.sigma * config.sigma;
  auto engine = seeded_engine(config.seed);
  std::normal_distribution<double> noise(0.0, config.sigma);

  std::vector<detail::RunningMoments> loss(order.size());
  std::vector<detail::RunningMoments> gain(order.size());
  std::vector<double> y(n);

  for (std::uint64_t t = 0; t < config.trials; ++t) {
    for (std::size_t k = 0; k < n; ++k) y[k] = config.theta[k] + noise(engine);
    const double sigma2 = config.estimate_sigma2 ? estimate_sigma2(y, config.theta) : true_sigma2;

    double ls_loss = 0.0;
    for (std::size_t k = 0; k < n; ++k) ls_loss += (y[k] - config.theta[k]) * (y[k] - config.theta[k]);

    for (std::size_t e = 0; e < order.size(); ++e) {
      double l = ls_loss;
      if (order[e] != Estimator::LS) {
        const double c = js_factor(y, sigma2, order[e] == Estimator::JSPositivePart).factor;
        l = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double d = c * y[k] - config.theta[k];
          l += d * d;
        }
      }
      loss[e].push(l);
      gain[e].push(ls_loss - l);
    }
  }

  RiskReport report;
  report.n = config.n;
  report.theta_norm = std::sqrt(squared_norm(config.theta));
  report.sigma = config.sigma;
  report.trials = config.trials;
  report.seed = config.seed;
  const double ls_risk = loss.front().mean;
  for (std::size_t e = 0; e < order.size(); ++e) {
    report.entries.push_back(RiskEntry{order[e], loss[e].mean, loss[e].std_error(),
                                       e == 0 ? 1.0 : loss[e].mean / ls_risk, gain[e].mean,
                                       gain[e].std_error()});
  }
  return report;
}

/// theta = scale * (1, ..., 1) / sqrt(n), so ||theta|| = scale.
inline std::vector<double> theta_with_norm(int n, double scale) {
  if (n < 1) throw ParameterError("dimension n must be at least 1");
  return std::vector<double>(static_cast<std::size_t>(n), scale / std::sqrt(static_cast<double>(n)));
}

/// One report per (n, scale) cell, row-major in n. Cell i uses stream i of
/// `seed`. Cells with n < 3 carry the LS row only.
inline std::vector<RiskReport> dominance_sweep(std::span<const int> n_values,
                                               std::span<const double> theta_scales, double sigma,
                                               std::uint64_t trials, std::uint64_t seed,
                                               bool estimate_sigma2 = false) {
  std::vector<RiskReport> table;
  std::uint64_t cell = 0;
  for (int n : n_values) {
    for (double scale : theta_scales) {
      RiskTrialConfig config;
      config.n = n;
      config.theta = theta_with_norm(n, scale);
      config.sigma = sigma;
      config.trials = trials;
      config.seed = seeded_engine(seed, cell++)();
      config.estimate_sigma2 = estimate_sigma2;
      if (n < static_cast<int>(kMinShrinkageDimension)) config.estimators = {Estimator::LS};
      table.push_back(simulate_risk(config));
    }
  }
  return table;
}

}  // namespace jsent
