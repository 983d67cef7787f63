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

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jsent/error.hpp"

namespace jsent {

using Complex = std::complex<double>;

/// Numerical tolerance for Hermiticity, trace, positivity and orthonormality.
inline constexpr double kQuantumTolerance = 1e-10;
inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 16;

namespace detail {

inline void check_dim(Eigen::Index dim, const char* what) {
  if (dim < kMinDim || dim > kMaxDim) {
    throw ValidationError(std::string(what) + " dimension " + std::to_string(dim) +
                          " outside supported range [2, 16]");
  }
}

}  // namespace detail

class StateVector {
 public:
  explicit StateVector(Eigen::VectorXcd amplitudes) : amplitudes_(std::move(amplitudes)) {
    detail::check_dim(amplitudes_.size(), "state vector");
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kQuantumTolerance) {
      throw ValidationError("state vector squared norm is " + std::to_string(norm2) +
                            ", expected 1");
    }
  }

  /// Normalizes an arbitrary nonzero vector.
  static StateVector normalized(Eigen::VectorXcd amplitudes) {
    const double norm = amplitudes.norm();
    if (norm == 0.0) throw ValidationError("cannot normalize the zero vector");
    return StateVector(amplitudes / norm);
  }

  static StateVector basis_state(int dim, int index) {
    if (index < 0 || index >= dim) {
      throw ParameterError("basis index " + std::to_string(index) + " out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(index) = 1.0;
    return StateVector(std::move(v));
  }

  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

 private:
  Eigen::VectorXcd amplitudes_;
};

/// Hermitian, unit-trace, positive-semidefinite operator. The spectrum is
/// computed once at construction; eigenvalues in [-1e-10, 0) are clamped to 0.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols()) {
      throw ValidationError("density matrix must be square, got " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
    }
    detail::check_dim(m.rows(), "density matrix");
    const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kQuantumTolerance) {
      throw ValidationError("density matrix is not Hermitian (max |rho - rho^H| = " +
                            std::to_string(asym) + ")");
    }
    const Complex trace = m.trace();
    if (std::abs(trace.real() - 1.0) > kQuantumTolerance ||
        std::abs(trace.imag()) > kQuantumTolerance) {
      throw ValidationError("density matrix trace is " + std::to_string(trace.real()) +
                            ", expected 1");
    }
    matrix_ = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw ValidationError("density matrix eigendecomposition failed");
    }
    const Eigen::VectorXd& evals = solver.eigenvalues();
    spectrum_.resize(static_cast<std::size_t>(evals.size()));
    for (Eigen::Index i = 0; i < evals.size(); ++i) {
      if (evals(i) < -kQuantumTolerance) {
        throw ValidationError("density matrix is not positive semidefinite (eigenvalue " +
                              std::to_string(evals(i)) + ")");
      }
      spectrum_[static_cast<std::size_t>(i)] = std::max(evals(i), 0.0);
    }
  }

  static DensityMatrix pure(const StateVector& psi) {
    return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
  }

  static DensityMatrix maximally_mixed(int dim) {
    detail::check_dim(dim, "density matrix");
    return DensityMatrix(Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim));
  }

  static DensityMatrix diagonal(std::span<const double> weights) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(weights.size()),
                                                static_cast<Eigen::Index>(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = weights[i];
    }
    return DensityMatrix(m);
  }

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  /// Ascending, clamped to >= 0.
  std::span<const double> spectrum() const { return spectrum_; }

 private:
  Eigen::MatrixXcd matrix_;
  std::vector<double> spectrum_;
};

/// Complete projective measurement: dim orthonormal vectors, stored as columns.
class MeasurementBasis {
 public:
  MeasurementBasis(std::string label, const std::vector<Eigen::VectorXcd>& vectors)
      : label_(std::move(label)) {
    if (vectors.empty()) throw ValidationError("basis '" + label_ + "' has no vectors");
    const auto dim = vectors.front().size();
    detail::check_dim(dim, "basis");
    if (static_cast<Eigen::Index>(vectors.size()) != dim) {
      throw ValidationError("basis '" + label_ + "' has " + std::to_string(vectors.size()) +
                            " vectors in dimension " + std::to_string(dim));
    }
    columns_.resize(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (vectors[static_cast<std::size_t>(k)].size() != dim) {
        throw ValidationError("basis '" + label_ + "' mixes vector dimensions");
      }
      columns_.col(k) = vectors[static_cast<std::size_t>(k)];
    }
    const Eigen::MatrixXcd gram = columns_.adjoint() * columns_;
    const double err = (gram - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (err > kQuantumTolerance) {
      throw ValidationError("basis '" + label_ + "' is not orthonormal (max Gram deviation " +
                            std::to_string(err) + ")");
    }
  }

  const std::string& label() const { return label_; }
  int dim() const { return static_cast<int>(columns_.rows()); }
  Eigen::VectorXcd vector(int k) const { return columns_.col(k); }
  const Eigen::MatrixXcd& columns() const { return columns_; }

 private:
  std::string label_;
  Eigen::MatrixXcd columns_;
};

}  // namespace jsent
