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

// Exact and noisy measurement data: Born-rule probabilities, depolarizing
// noise, finite-shot multinomial sampling, and measurement presets.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jsent/entropy.hpp"
#include "jsent/error.hpp"
#include "jsent/quantum.hpp"
#include "jsent/random.hpp"

namespace jsent {

struct NoiseModel {
  double depolarizing_p = 0.0;

  void validate() const {
    if (!(depolarizing_p >= 0.0 && depolarizing_p <= 1.0)) {
      throw ParameterError("depolarizing probability must lie in [0, 1]");
    }
  }
};

struct ShotSample {
  std::vector<std::uint64_t> counts;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  ProbabilityDistribution frequencies() const {
    std::vector<double> freq;
    freq.reserve(counts.size());
    for (auto c : counts) freq.push_back(static_cast<double>(c) / static_cast<double>(shots));
    return ProbabilityDistribution::lenient(std::move(freq), 1e-12);
  }
};

/// p_i = <v_i| rho |v_i>.
inline ProbabilityDistribution born_probabilities(const DensityMatrix& rho,
                                                  const MeasurementBasis& basis) {
  if (rho.dim() != basis.dim()) {
    throw ValidationError("basis '" + basis.label() + "' has dimension " +
                          std::to_string(basis.dim()) + " but rho has " +
                          std::to_string(rho.dim()));
  }
  std::vector<double> probs;
  probs.reserve(static_cast<std::size_t>(basis.dim()));
  for (int i = 0; i < basis.dim(); ++i) {
    const Eigen::VectorXcd v = basis.vector(i);
    const Complex p = v.dot(rho.matrix() * v);  // dot conjugates the left operand
    if (std::abs(p.imag()) > kQuantumTolerance) {
      throw ValidationError("Born probability has imaginary part " + std::to_string(p.imag()));
    }
    probs.push_back(std::clamp(p.real(), 0.0, 1.0));
  }
  return ProbabilityDistribution::strict(std::move(probs));
}

/// (1 - p) rho + p I / dim.
inline DensityMatrix apply_depolarizing(const DensityMatrix& rho, double p) {
  NoiseModel{p}.validate();
  if (p == 0.0) return rho;
  const auto dim = rho.matrix().rows();
  const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
  return DensityMatrix((1.0 - p) * rho.matrix() + p * mixed);
}

/// Multinomial draw via sequential conditional binomials. Deterministic in
/// (dist, shots, seed) on a given build.
inline ShotSample sample_counts(const ProbabilityDistribution& dist, std::uint64_t shots,
                                std::uint64_t seed) {
  if (shots == 0) throw ParameterError("shots must be at least 1");
  auto engine = seeded_engine(seed);
  ShotSample sample;
  sample.shots = shots;
  sample.seed = seed;
  sample.counts.assign(dist.size(), 0);

  std::uint64_t remaining = shots;
  double mass_left = 1.0;
  for (std::size_t i = 0; i + 1 < dist.size() && remaining > 0; ++i) {
    const double p = mass_left > 0.0 ? std::clamp(dist[i] / mass_left, 0.0, 1.0) : 0.0;
    std::uint64_t drawn = 0;
    if (p >= 1.0) {
      drawn = remaining;
    } else if (p > 0.0) {
      std::binomial_distribution<std::uint64_t> binomial(remaining, p);
      drawn = binomial(engine);
    }
    sample.counts[i] = drawn;
    remaining -= drawn;
    mass_left -= dist[i];
  }
  sample.counts.back() += remaining;
  return sample;
}

// ---------------------------------------------------------------------------
// Measurement presets

inline MeasurementBasis computational_basis(int dim, std::string label = "Z") {
  std::vector<Eigen::VectorXcd> vectors;
  for (int i = 0; i < dim; ++i) vectors.push_back(Eigen::VectorXcd::Unit(dim, i));
  return MeasurementBasis(std::move(label), vectors);
}

inline MeasurementBasis pauli_x_basis() {
  const double s = std::numbers::sqrt2 / 2.0;
  Eigen::VectorXcd plus(2), minus(2);
  plus << s, s;
  minus << s, -s;
  return MeasurementBasis("X", {plus, minus});
}

inline MeasurementBasis pauli_y_basis() {
  const double s = std::numbers::sqrt2 / 2.0;
  Eigen::VectorXcd plus(2), minus(2);
  plus << s, Complex(0.0, s);
  minus << s, Complex(0.0, -s);
  return MeasurementBasis("Y", {plus, minus});
}

namespace detail {

inline bool is_odd_prime(int d) {
  if (d < 3 || d % 2 == 0) return false;
  for (int k = 3; k * k <= d; k += 2) {
    if (d % k == 0) return false;
  }
  return true;
}

// Vectors v_m[j] = w^(k j^2 + m j) / sqrt(d), w = exp(2 pi i / d).
inline MeasurementBasis quadratic_phase_basis(int dim, int k, std::string label) {
  std::vector<Eigen::VectorXcd> vectors;
  const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int m = 0; m < dim; ++m) {
    Eigen::VectorXcd v(dim);
    for (int j = 0; j < dim; ++j) {
      const int exponent = (k * j * j + m * j) % dim;
      v(j) = std::polar(norm, 2.0 * std::numbers::pi * exponent / dim);
    }
    vectors.push_back(std::move(v));
  }
  return MeasurementBasis(std::move(label), vectors);
}

}  // namespace detail

inline MeasurementBasis fourier_basis(int dim, std::string label = "F") {
  return detail::quadratic_phase_basis(dim, 0, std::move(label));
}

/// Up to `count` mutually unbiased bases in `dim` dimensions: Z, X, Y for a
/// qubit; the computational basis plus the quadratic-phase family for odd
/// prime dimensions; the computational and Fourier pair otherwise.
inline std::vector<MeasurementBasis> mub_preset(int dim, int count) {
  std::vector<MeasurementBasis> all;
  if (dim == 2) {
    all = {computational_basis(2), pauli_x_basis(), pauli_y_basis()};
  } else if (detail::is_odd_prime(dim)) {
    all.push_back(computational_basis(dim));
    for (int k = 0; k < dim; ++k) {
      all.push_back(detail::quadratic_phase_basis(dim, k, "F" + std::to_string(k)));
    }
  } else {
    all = {computational_basis(dim), fourier_basis(dim)};
  }
  if (count < 1 || count > static_cast<int>(all.size())) {
    throw ParameterError("dimension " + std::to_string(dim) + " has " +
                         std::to_string(all.size()) + " preset unbiased bases, requested " +
                         std::to_string(count));
  }
  all.erase(all.begin() + count, all.end());
  return all;
}

// ---------------------------------------------------------------------------
// Spin-1 presets. Ordering of the computational basis is a preset choice:
// |0> is index 0 and |-1> is index 2.

inline constexpr int kSpinOneDim = 3;
inline constexpr int kSpinZeroIndex = 0;
inline constexpr int kSpinMinusOneIndex = 2;

inline StateVector spin1_state(TheoryState state) {
  return StateVector::basis_state(
      kSpinOneDim, state == TheoryState::Zero ? kSpinZeroIndex : kSpinMinusOneIndex);
}

/// (sqrt(1/2), 0, sqrt(1/2)), (sqrt(1/2), 0, -sqrt(1/2)), (0, 1, 0).
inline MeasurementBasis spin1_table_basis() {
  const double s = std::numbers::sqrt2 / 2.0;
  Eigen::VectorXcd u(3), v(3), w(3);
  u << s, 0.0, s;
  v << s, 0.0, -s;
  w << 0.0, 1.0, 0.0;
  return MeasurementBasis("table", {u, v, w});
}

namespace detail {

// Real rotation mixing e_i and e_j so that |<e_i|first>|^2 = a.
inline MeasurementBasis plane_rotation_basis(int i, int j, double a, std::string label) {
  const double c = std::sqrt(a);
  const double s = std::sqrt(1.0 - a);
  const int other = 3 - i - j;
  Eigen::VectorXcd first = Eigen::VectorXcd::Zero(3);
  Eigen::VectorXcd second = Eigen::VectorXcd::Zero(3);
  first(i) = c;
  first(j) = s;
  second(i) = -s;
  second(j) = c;
  return MeasurementBasis(std::move(label), {first, second, Eigen::VectorXcd::Unit(3, other)});
}

}  // namespace detail

/// Three spin-1 measurements whose exact entropies on spin1_state(state) add
/// up to theory_sum(state, a):
///   Zero:     table basis (1 bit), rotation by a (h(a)), computational (0)
///   MinusOne: computational (0), rotation by a (h(a)), e0/e1 Hadamard (0)
/// These are presets, not a reconstruction of any particular apparatus.
inline std::vector<MeasurementBasis> spin1_family_bases(TheoryState state, double a) {
  if (!(a > 0.0 && a < 1.0)) {
    throw ParameterError("family parameter a must lie strictly inside (0, 1)");
  }
  if (state == TheoryState::Zero) {
    return {spin1_table_basis(), detail::plane_rotation_basis(0, 1, a, "rot_a"),
            computational_basis(3, "Z")};
  }
  return {computational_basis(3, "Z"), detail::plane_rotation_basis(2, 1, a, "rot_a"),
          detail::plane_rotation_basis(0, 1, 0.5, "H01")};
}

/// Per basis: depolarize, take Born probabilities, optionally replace them by
/// empirical frequencies from `shots` draws. Basis k samples on stream k of `seed`.
inline std::vector<MeasurementRecord> generate_experiment(const StateVector& state,
                                                          std::span<const MeasurementBasis> bases,
                                                          const NoiseModel& noise,
                                                          std::optional<std::uint64_t> shots,
                                                          std::uint64_t seed) {
  noise.validate();
  const DensityMatrix rho = apply_depolarizing(DensityMatrix::pure(state), noise.depolarizing_p);
  std::vector<MeasurementRecord> records;
  records.reserve(bases.size());
  for (std::size_t k = 0; k < bases.size(); ++k) {
    ProbabilityDistribution exact = born_probabilities(rho, bases[k]);
    if (shots) {
      const std::uint64_t sub_seed = seeded_engine(seed, k + 1)();
      records.push_back({bases[k].label(), sample_counts(exact, *shots, sub_seed).frequencies()});
    } else {
      records.push_back({bases[k].label(), std::move(exact)});
    }
  }
  check_record_labels(records);
  return records;
}

}  // namespace jsent
