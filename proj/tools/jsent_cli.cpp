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

// jsent command-line front end.
//
// Exit codes: 0 success, 1 invalid data or failed record, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jsent/jsent.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string file;
  bool full_precision = false;
  bool strict = false;
  double tolerance = jsent::ProbabilityDistribution::kDefaultLenientTolerance;

  jsent::TableFormat format() const { return {full_precision, ','}; }
  jsent::LoadOptions load() const { return {strict, tolerance}; }
};

struct ShrinkOptions {
  std::optional<double> sigma2;
  std::string sigma_mode = "reference";
  bool no_positive_part = false;
  std::string theory = "auto";

  jsent::PipelineOptions pipeline(const jsent::LoadOptions& load) const {
    jsent::PipelineOptions options;
    if (sigma2) {
      options.shrinkage.sigma2_mode = jsent::sigma2::Provided{*sigma2};
    } else if (sigma_mode == "sample") {
      options.shrinkage.sigma2_mode = jsent::sigma2::SampleVariance{};
    } else {
      options.shrinkage.sigma2_mode = jsent::sigma2::FromReference{};
    }
    options.shrinkage.positive_part = !no_positive_part;
    static const std::map<std::string, jsent::TheoryCurve> curves{
        {"auto", jsent::TheoryCurve::FromLabel},
        {"none", jsent::TheoryCurve::None},
        {"zero", jsent::TheoryCurve::Zero},
        {"minus1", jsent::TheoryCurve::MinusOne}};
    options.theory = curves.at(theory);
    options.load = load;
    return options;
  }
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("file", common.file, "Experiment file (block or flat CSV form)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_flag("--full-precision", common.full_precision, "Print 17 significant digits");
  cmd->add_flag("--strict", common.strict, "Require probabilities to sum to 1 within 1e-9");
  cmd->add_option("--tolerance", common.tolerance,
                  "Lenient sum-to-one tolerance (renormalizes within it)")
      ->check(CLI::NonNegativeNumber);
}

void add_shrink_options(CLI::App* cmd, ShrinkOptions& shrink) {
  auto* sigma2 = cmd->add_option("--sigma2", shrink.sigma2, "Noise variance to use as given")
                     ->check(CLI::NonNegativeNumber);
  auto* mode = cmd->add_option("--sigma-mode", shrink.sigma_mode,
                               "Estimate sigma^2 from the theory reference or the sample spread")
                   ->check(CLI::IsMember({"reference", "sample"}));
  sigma2->excludes(mode);
  cmd->add_flag("--no-positive-part", shrink.no_positive_part,
                "Keep the raw factor even when negative");
  cmd->add_option("--theory", shrink.theory, "Theory curve: auto (by state label), none, zero, minus1")
      ->check(CLI::IsMember({"auto", "none", "zero", "minus1"}));
}

void print_notes(const std::vector<std::string>& notes) {
  for (const auto& note : notes) std::cerr << "note: " << note << '\n';
}

int report_errors(const std::vector<jsent::RecordError>& errors) {
  for (const auto& e : errors) {
    std::cerr << "error: record " << e.record_index << " (" << e.state_label << "): " << e.message
              << '\n';
  }
  return errors.empty() ? 0 : kExitInvalid;
}

int run_entropy(const CommonOptions& common) {
  std::vector<std::string> notes;
  const auto file = jsent::load_experiment(common.file, common.load(), &notes);
  print_notes(notes);
  const auto f = common.format();
  jsent::Table table({"state_label", "parameter_a", "measurement_label", "entropy"});
  for (const auto& record : file.records) {
    const auto measurements = jsent::to_measurement_records(record, common.load());
    for (const auto& m : measurements) {
      table.add_row({record.state_label, jsent::format_number(record.parameter_a, f), m.label,
                     jsent::format_number(jsent::shannon_entropy(m.distribution).bits(), f)});
    }
  }
  table.write(std::cout);
  return 0;
}

int run_shrink(const CommonOptions& common, const ShrinkOptions& shrink) {
  std::vector<std::string> notes;
  const auto file = jsent::load_experiment(common.file, common.load(), &notes);
  const auto options = shrink.pipeline(common.load());
  const auto f = common.format();
  jsent::Table table({"state_label", "parameter_a", "measurement_label", "entropy_raw",
                      "entropy_shrunk", "factor", "sigma2", "sigma2_source", "clamped"});
  std::vector<jsent::RecordError> errors;
  for (std::size_t i = 0; i < file.records.size(); ++i) {
    const auto& record = file.records[i];
    try {
      const auto s = jsent::shrink_record(record, options);
      for (std::size_t k = 0; k < s.labels.size(); ++k) {
        table.add_row({record.state_label, jsent::format_number(record.parameter_a, f),
                       s.labels[k], jsent::format_number(s.result.raw[k], f),
                       jsent::format_number(s.result.shrunk[k], f),
                       jsent::format_number(s.result.factor, f),
                       jsent::format_number(s.result.sigma2_used, f),
                       jsent::to_string(s.result.sigma2_source),
                       jsent::format_bool(s.result.clamped)});
      }
    } catch (const jsent::Error& e) {
      errors.push_back({i, record.state_label, e.what()});
    }
  }
  print_notes(notes);
  table.write(std::cout);
  return report_errors(errors);
}

struct BoundOptions {
  std::optional<double> b;
  std::string rho_path;
};

int run_bound(const CommonOptions& common, const ShrinkOptions& shrink, const BoundOptions& bound) {
  std::vector<std::string> notes;
  const auto file = jsent::load_experiment(common.file, common.load(), &notes);
  print_notes(notes);
  const auto options = shrink.pipeline(common.load());
  std::optional<jsent::DensityMatrix> rho_file;
  if (!bound.rho_path.empty()) rho_file = jsent::load_density_matrix(bound.rho_path);

  std::vector<jsent::LabeledBoundReport> reports;
  std::vector<jsent::RecordError> errors;
  for (std::size_t i = 0; i < file.records.size(); ++i) {
    const auto& record = file.records[i];
    try {
      const auto measurements = jsent::to_measurement_records(record, options.load);
      const auto y = jsent::entropy_vector(measurements, record.state_label, record.parameter_a);
      const int dim = static_cast<int>(measurements.front().distribution.size());
      const auto rho = rho_file ? *rho_file
                                : jsent::DensityMatrix::pure(jsent::StateVector::basis_state(dim, 0));
      if (rho.dim() != dim) {
        throw jsent::ValidationError("rho has dimension " + std::to_string(rho.dim()) +
                                     " but measurements have " + std::to_string(dim) + " outcomes");
      }
      double sigma2 = 0.0;
      if (y.size() >= jsent::kMinShrinkageDimension && jsent::sum_entropies(y) > 0.0) {
        sigma2 = jsent::shrink_record(record, options).result.sigma2_used;
      }
      std::optional<double> b = bound.b;
      if (!b) {
        b = jsent::max_overlap_b(jsent::mub_preset(dim, static_cast<int>(y.size())));
      }
      reports.push_back({record.state_label, record.parameter_a,
                         jsent::check_relation(y, {}, rho, sigma2, b)});
    } catch (const jsent::Error& e) {
      errors.push_back({i, record.state_label, e.what()});
    }
  }
  jsent::bound_table(reports, common.format()).write(std::cout);
  return report_errors(errors);
}

struct SimulateOptions {
  std::string state;
  std::vector<double> a_values;
  double noise = 0.0;
  std::optional<std::uint64_t> shots;
  std::uint64_t seed = 0;
  std::string out;
};

int run_simulate(const SimulateOptions& sim) {
  jsent::SimulationSpec spec;
  spec.state = *jsent::parse_theory_state(sim.state);
  spec.a_values = sim.a_values;
  spec.noise.depolarizing_p = sim.noise;
  spec.shots = sim.shots;
  spec.seed = sim.seed;
  const auto file = jsent::simulate_family(spec);
  if (sim.out.empty()) {
    jsent::write_experiment(std::cout, file);
  } else {
    std::ofstream out(sim.out);
    if (!out) throw jsent::ValidationError("cannot write '" + sim.out + "'");
    jsent::write_experiment(out, file);
  }
  return 0;
}

struct RiskOptions {
  std::vector<int> n_values;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> theta_scales{0.0};
  double sigma = 1.0;
  bool estimate_sigma2 = false;
  bool full_precision = false;
};

int run_risk(const RiskOptions& risk) {
  const auto table = jsent::dominance_sweep(risk.n_values, risk.theta_scales, risk.sigma,
                                            risk.trials, risk.seed, risk.estimate_sigma2);
  jsent::risk_table(table, {risk.full_precision, ','}).write(std::cout);
  return 0;
}

int run_report(const CommonOptions& common, const ShrinkOptions& shrink) {
  std::vector<std::string> notes;
  const auto file = jsent::load_experiment(common.file, common.load(), &notes);
  const auto result = jsent::run_pipeline(file, shrink.pipeline(common.load()));
  print_notes(result.notes);
  jsent::comparison_table(result.rows, common.format()).write(std::cout);
  return report_errors(result.errors);
}

struct CurveOptions {
  std::string state;
  std::vector<double> a_values;
  int points = 99;
  bool full_precision = false;
};

int run_curves(const CurveOptions& curves) {
  const auto state = *jsent::parse_theory_state(curves.state);
  const auto grid = curves.a_values.empty() ? jsent::interior_grid(curves.points) : curves.a_values;
  jsent::curve_table(jsent::emit_curves(state, grid), {curves.full_precision, ','})
      .write(std::cout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"James-Stein shrinkage of measurement entropies and entropic uncertainty bounds"};
  app.require_subcommand(1);

  CommonOptions common;
  ShrinkOptions shrink;

  auto* entropy = app.add_subcommand("entropy", "Shannon entropy of every measurement");
  add_common(entropy, common);

  auto* shrink_cmd = app.add_subcommand("shrink", "James-Stein shrinkage of each record");
  add_common(shrink_cmd, common);
  add_shrink_options(shrink_cmd, shrink);

  BoundOptions bound;
  auto* bound_cmd = app.add_subcommand("bound", "Check the multi-observable entropic lower bound");
  add_common(bound_cmd, common);
  add_shrink_options(bound_cmd, shrink);
  bound_cmd->add_option("--b", bound.b, "Overlap constant b in (0, 1] (default: unbiased preset)")
      ->check(CLI::Range(0.0, 1.0));
  bound_cmd->add_option("--rho", bound.rho_path, "Density matrix file (default: pure |0>)")
      ->check(CLI::ExistingFile);

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Generate a spin-1 experiment file");
  simulate->add_option("--state", sim.state, "Prepared state")
      ->required()
      ->check(CLI::IsMember({"zero", "minus1"}));
  simulate->add_option("--a", sim.a_values, "Family parameter in (0, 1); repeat for several records")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--noise", sim.noise, "Depolarizing probability in [0, 1]")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--shots", sim.shots, "Finite-shot sampling (default: exact probabilities)")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "Sampling seed")->required();
  simulate->add_option("--out", sim.out, "Write to this path instead of stdout");

  RiskOptions risk;
  auto* risk_cmd = app.add_subcommand("risk", "Monte-Carlo risk of LS and James-Stein estimators");
  risk_cmd->add_option("--n", risk.n_values, "Dimension; repeat for a sweep")
      ->required()
      ->check(CLI::PositiveNumber);
  risk_cmd->add_option("--trials", risk.trials, "Trials per cell")
      ->required()
      ->check(CLI::PositiveNumber);
  risk_cmd->add_option("--seed", risk.seed, "Seed")->required();
  risk_cmd->add_option("--theta-scale", risk.theta_scales, "||theta||; repeat for a sweep")
      ->check(CLI::NonNegativeNumber);
  risk_cmd->add_option("--sigma", risk.sigma, "Noise standard deviation")
      ->check(CLI::PositiveNumber);
  risk_cmd->add_flag("--estimate-sigma2", risk.estimate_sigma2,
                     "Estimate sigma^2 per trial instead of using the true value");
  risk_cmd->add_flag("--full-precision", risk.full_precision, "Print 17 significant digits");

  auto* report = app.add_subcommand("report", "Experiment vs shrunk vs theory comparison table");
  add_common(report, common);
  add_shrink_options(report, shrink);

  CurveOptions curves;
  auto* curves_cmd = app.add_subcommand("curves", "Theory entropy-sum curve over a grid of a");
  curves_cmd->add_option("--state", curves.state, "Prepared state")
      ->required()
      ->check(CLI::IsMember({"zero", "minus1"}));
  curves_cmd->add_option("--a", curves.a_values, "Explicit grid values; repeatable");
  curves_cmd->add_option("--points", curves.points, "Uniform interior grid size")
      ->check(CLI::PositiveNumber);
  curves_cmd->add_flag("--full-precision", curves.full_precision, "Print 17 significant digits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*entropy) return run_entropy(common);
    if (*shrink_cmd) return run_shrink(common, shrink);
    if (*bound_cmd) return run_bound(common, shrink, bound);
    if (*simulate) return run_simulate(sim);
    if (*risk_cmd) return run_risk(risk);
    if (*report) return run_report(common, shrink);
    if (*curves_cmd) return run_curves(curves);
  } catch (const jsent::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitUsage;
}
