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

#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace jsent::testing {

inline std::string data_path(const std::string& name) {
  return std::string(JSENT_TEST_DATA_DIR) + "/" + name;
}

/// Random probability vector; roughly one draw in four has exact zeros.
inline std::vector<double> random_probs(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> expo(1.0);
  std::bernoulli_distribution sparse(0.25);
  std::vector<double> p(n);
  double total = 0.0;
  const bool with_zeros = sparse(rng) && n > 1;
  for (std::size_t i = 0; i < n; ++i) {
    p[i] = (with_zeros && i % 2 == 1) ? 0.0 : expo(rng);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

/// Haar-ish random state: normalized complex Gaussian vector.
inline Eigen::VectorXcd random_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = {g(rng), g(rng)};
  return v / v.norm();
}

/// Random density matrix G G^H / tr, full rank almost surely.
inline Eigen::MatrixXcd random_mixed(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = {g(rng), g(rng)};
  Eigen::MatrixXcd rho = m * m.adjoint();
  return rho / rho.trace().real();
}

inline Eigen::MatrixXcd random_unitary(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXcd m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = {g(rng), g(rng)};
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ();
}

/// Entropy in bits via natural logs; independent of the library's log2 path.
inline double entropy_oracle(const std::vector<double>& p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h / std::log(2.0);
}

struct CommandResult {
  int exit_code;
  std::string output;
};

/// Runs a shell command, capturing stdout.
inline CommandResult run_command(const std::string& command) {
  CommandResult result{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace jsent::testing
