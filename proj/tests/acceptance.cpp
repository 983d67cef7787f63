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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "jsent/jsent.hpp"
#include "test_support.hpp"

using namespace jsent;

namespace {

int failures = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", id, title, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

template <typename Fn>
void run(int id, const char* title, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    report(id, title, false, std::string("exception: ") + e.what());
  }
}

void table_reproduction() {
  const double h = shannon_entropy(ProbabilityDistribution::strict({0.5496, 0.446, 0.0044})).bits();
  report(1, "published table entropy", std::abs(h - 1.0286) <= 5e-4,
         fmt("H = %.6f bits, target 1.0286 +/- 5e-4", h));
}

void curve_anchors() {
  const double zero = theory_sum(TheoryState::Zero, 0.5).bits();
  const double minus = theory_sum(TheoryState::MinusOne, 0.5).bits();
  double worst = 0.0;
  for (double a : interior_grid(99)) {
    for (auto s : {TheoryState::Zero, TheoryState::MinusOne}) {
      worst = std::max(worst, std::abs(theory_sum(s, a).bits() - theory_sum(s, 1.0 - a).bits()));
    }
  }
  const bool pass = std::abs(zero - 2.0) <= 1e-12 && std::abs(minus - 1.0) <= 1e-12 && worst <= 1e-12;
  report(2, "theory curve anchors and symmetry", pass,
         fmt("zero(0.5) = %.15g, minus1(0.5) = %.15g, max asymmetry %.3g", zero, minus, worst));
}

void js_dominance() {
  const std::vector<int> ns{3, 5, 10};
  const std::vector<double> scales{0.0, 1.0, 10.0};
  const auto table = dominance_sweep(ns, scales, 1.0, 1000000, 20260101);
  bool pass = true;
  std::string detail;
  for (const auto& cell : table) {
    const auto& js = cell.entry(Estimator::JS);
    const double z = js.gain_vs_ls / js.gain_std_error;
    pass = pass && z >= 3.0;
    if (cell.theta_norm == 0.0) {
      const bool near = std::abs(js.ratio_vs_ls - 2.0 / cell.n) <= 0.02;
      pass = pass && near;
      detail += fmt("n=%.0f ratio %.4f (2/n %.4f); ", cell.n, js.ratio_vs_ls, 2.0 / cell.n);
    }
    detail += fmt("n=%.0f |theta|=%.0f gain %.1f SE; ", cell.n, cell.theta_norm, z);
  }
  detail.resize(detail.size() - 2);
  report(3, "James-Stein dominance", pass, detail);
}

void shrinkage_arithmetic() {
  const EntropyVector ones({1, 1, 1});
  const auto r = james_stein(ones, {sigma2::Provided{1.0}, true});
  const auto id = james_stein(ones, {sigma2::Provided{0.0}, true});
  const auto big = james_stein(ones, {sigma2::Provided{1e6}, true});
  const bool pass = r.factor == 2.0 / 3.0 && r.sum_shrunk == 2.0 && id.factor == 1.0 &&
                    id.shrunk == ones && big.factor == 0.0 && big.sum_shrunk == 0.0;
  report(4, "shrinkage arithmetic", pass,
         fmt("factor %.17g, sum %.17g, large-noise factor %g", r.factor, r.sum_shrunk, big.factor));
}

void bound_soundness() {
  std::mt19937_64 rng(5);
  const std::vector<MeasurementBasis> bases{computational_basis(2), pauli_x_basis(), pauli_y_basis()};
  double worst = INFINITY;
  int trials = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto rho = i % 2 ? DensityMatrix(testing::random_mixed(rng, 2))
                           : DensityMatrix::pure(StateVector(testing::random_state(rng, 2)));
    std::vector<double> h;
    for (const auto& b : bases) h.push_back(shannon_entropy(born_probabilities(rho, b)).bits());
    const double slack =
        std::accumulate(h.begin(), h.end(), 0.0) - (-std::log2(0.5) + 2.0 * von_neumann_entropy(rho));
    worst = std::min(worst, slack);
    ++trials;
  }
  report(5, "bound soundness on Pauli bases", worst >= -1e-9,
         fmt("%.0f states (half pure, half mixed), min slack %.3g", trials, worst));
}

void direction_check() {
  SimulationSpec spec;
  spec.state = TheoryState::Zero;
  spec.a_values = interior_grid(19);
  spec.noise = {0.05};
  spec.shots = 100000;
  spec.seed = 2026;
  PipelineOptions options;
  options.shrinkage.sigma2_mode = sigma2::FromReference{};
  const auto result = run_pipeline(simulate_family(spec), options);
  int checked = 0, held = 0;
  for (const auto& row : result.rows) {
    if (!(row.sum_experimental > *row.sum_theory)) continue;
    ++checked;
    if (std::abs(*row.delta_js) <= std::abs(*row.delta_raw)) ++held;
  }
  const bool pass = result.errors.empty() && checked > 0 && held == checked;
  report(6, "pipeline direction check", pass,
         fmt("%.0f of %.0f records above theory moved towards it (%.0f records total)", held, checked,
             static_cast<double>(result.rows.size())));
}

double brute_force_b(const std::vector<MeasurementBasis>& bases) {
  double best = 0.0;
  for (std::size_t r = 0; r < bases.size(); ++r) {
    for (std::size_t s = 0; s < bases.size(); ++s) {
      if (r == s) continue;
      for (int i = 0; i < bases[r].dim(); ++i) {
        for (int j = 0; j < bases[s].dim(); ++j) {
          best = std::max(best, std::norm(bases[r].vector(i).dot(bases[s].vector(j))));
        }
      }
    }
  }
  return best;
}

void oracle_equivalences() {
  const std::vector<double> w{0.75, 0.25};
  const double s = von_neumann_entropy(DensityMatrix::diagonal(w));
  const double h = binary_entropy(0.25).bits();
  const std::vector<MeasurementBasis> bases{computational_basis(2), pauli_x_basis(), pauli_y_basis()};
  const double b = max_overlap_b(bases);
  const double brute = brute_force_b(bases);
  const bool pass = std::abs(s - h) <= 1e-10 && std::abs(b - 0.5) <= 1e-12 && std::abs(brute - 0.5) <= 1e-12;
  report(7, "oracle equivalences", pass, fmt("S = %.12f vs h = %.12f; b = %.15g", s, h, b) +
                                             fmt(" (brute force %.15g)", brute));
}

void determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "jsent_acceptance";
  std::filesystem::create_directories(dir);
  const std::string exp = (dir / "family.exp").string();
  const std::string cli = JSENT_CLI_PATH;
  const auto sim = testing::run_command(
      cli + " simulate --state zero --a 0.2 --a 0.5 --a 0.8 --noise 0.05 --shots 100000 --seed 7 --out " + exp);
  const std::string report_cmd = cli + " report --full-precision " + exp + " 2>&1";
  const std::string risk_cmd = cli + " risk --n 3 --n 5 --theta-scale 0 --theta-scale 1 --trials 20000 --seed 11 --full-precision";
  const auto r1 = testing::run_command(report_cmd);
  const auto r2 = testing::run_command(report_cmd);
  const auto k1 = testing::run_command(risk_cmd);
  const auto k2 = testing::run_command(risk_cmd);
  std::filesystem::remove_all(dir);
  const bool ran = sim.exit_code == 0 && r1.exit_code == 0 && k1.exit_code == 0 && !r1.output.empty() &&
                   !k1.output.empty();
  const bool pass = ran && r1.output == r2.output && k1.output == k2.output;
  report(8, "determinism of report and risk", pass,
         fmt("report %.0f bytes, risk %.0f bytes, identical across runs: ",
             static_cast<double>(r1.output.size()), static_cast<double>(k1.output.size())) +
             (pass ? "yes" : "no"));
}

}  // namespace

int main() {
  run(1, "published table entropy", table_reproduction);
  run(2, "theory curve anchors and symmetry", curve_anchors);
  run(3, "James-Stein dominance", js_dominance);
  run(4, "shrinkage arithmetic", shrinkage_arithmetic);
  run(5, "bound soundness on Pauli bases", bound_soundness);
  run(6, "pipeline direction check", direction_check);
  run(7, "oracle equivalences", oracle_equivalences);
  run(8, "determinism of report and risk", determinism);
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
