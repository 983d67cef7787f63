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

// Simulates a noisy spin-1 measurement family, shrinks each record's entropy
// vector and prints the comparison against the closed-form curve.

#include <iostream>

#include "jsent/jsent.hpp"

int main() {
  jsent::SimulationSpec spec;
  spec.state = jsent::TheoryState::Zero;
  spec.a_values = {0.1, 0.3, 0.5, 0.7, 0.9};
  spec.noise.depolarizing_p = 0.05;
  spec.shots = 100000;
  spec.seed = 42;

  const auto file = jsent::simulate_family(spec);

  jsent::PipelineOptions options;
  options.shrinkage.sigma2_mode = jsent::sigma2::FromReference{};
  const auto result = jsent::run_pipeline(file, options);
  jsent::comparison_table(result.rows).write(std::cout);

  // Entropic lower bound for the same state, Pauli bases of a qubit.
  const auto rho = jsent::DensityMatrix::pure(jsent::StateVector::basis_state(2, 0));
  const auto bases = jsent::mub_preset(2, 3);
  std::cout << "\nqubit |0>, three Pauli bases: bound = " << jsent::liu_bound(jsent::max_overlap_b(bases), 3, rho)
            << " bits\n";
  return 0;
}
