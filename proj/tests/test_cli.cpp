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

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "jsent/experiment_io.hpp"
#include "test_support.hpp"

using jsent::testing::data_path;
using jsent::testing::run_command;

namespace {

jsent::testing::CommandResult cli(const std::string& args) {
  return run_command(std::string(JSENT_CLI_PATH) + " " + args + " 2>/dev/null");
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, EntropyOfPublishedTable) {
  const auto r = cli("entropy " + data_path("table_record.exp"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output,
            "state_label,parameter_a,measurement_label,entropy\n"
            "zero,NA,table,1.02859\n");
  const auto full = cli("entropy --full-precision " + data_path("table_record.csv"));
  EXPECT_NE(full.output.find("zero,NA,table,1.0285878024087"), std::string::npos) << full.output;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli("--help").exit_code, 0);
  EXPECT_EQ(cli("").exit_code, 2);
  EXPECT_EQ(cli("entropy").exit_code, 2);
  EXPECT_EQ(cli("frobnicate").exit_code, 2);
  EXPECT_EQ(cli("shrink --sigma2 1 --sigma-mode sample " + data_path("qubit_pauli_zero.exp")).exit_code, 2);
  EXPECT_EQ(cli("entropy " + data_path("bad_sum.exp")).exit_code, 1);
  EXPECT_EQ(cli("entropy --tolerance 0.05 " + data_path("bad_sum.exp")).exit_code, 0);
  EXPECT_EQ(cli("entropy --strict --tolerance 0.05 " + data_path("bad_sum.exp")).exit_code, 1);
  // One record with a single measurement cannot be shrunk.
  EXPECT_EQ(cli("shrink " + data_path("table_record.exp")).exit_code, 1);
}

TEST(Cli, BoundWithExplicitB) {
  const auto r = cli("bound --b 0.5 " + data_path("qubit_pauli_zero.exp"));
  ASSERT_EQ(r.exit_code, 0) << r.output;
  const auto rows = lines(r.output);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].rfind("state_label,parameter_a,n,b_used,von_neumann,bound_value,", 0), 0u);
  EXPECT_EQ(rows[1].rfind("qubit0,NA,3,0.5,0,1,2,", 0), 0u) << rows[1];
  EXPECT_NE(rows[1].find(",true,"), std::string::npos);
}

TEST(Cli, BoundWithMixedState) {
  const auto r = cli("bound --rho " + data_path("mixed_qubit.rho") + " " + data_path("qubit_pauli_zero.exp"));
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = lines(r.output);
  ASSERT_EQ(rows.size(), 2u);
  // The bound for I/2 is 1 + 2 = 3, above the |0> statistics' sum of 2.
  EXPECT_EQ(rows[1].rfind("qubit0,NA,3,0.5,1,3,2,", 0), 0u) << rows[1];
  EXPECT_NE(rows[1].find("false"), std::string::npos);
}

TEST(Cli, RiskAtOrigin) {
  const auto r = cli("risk --n 5 --trials 100000 --seed 1");
  ASSERT_EQ(r.exit_code, 0);
  const auto rows = lines(r.output);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "n,theta_norm,sigma,trials,estimator,risk,std_error,ratio_vs_ls,gain_vs_ls,gain_std_error");
  std::vector<std::string> fields;
  std::istringstream js(rows[2]);
  for (std::string f; std::getline(js, f, ',');) fields.push_back(f);
  ASSERT_EQ(fields.size(), 10u);
  EXPECT_EQ(fields[4], "JS");
  EXPECT_NEAR(std::stod(fields[7]), 0.4, 0.02);
  EXPECT_EQ(cli("risk --n 2 --n 3 --trials 10 --seed 1").exit_code, 0);
  EXPECT_EQ(cli("risk --n 5 --trials 10").exit_code, 2);
}

TEST(Cli, SimulateThenReportIsDeterministic) {
  const auto dir = std::filesystem::temp_directory_path() / "jsent_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "sim.exp").string();
  ASSERT_EQ(cli("simulate --state zero --a 0.2 --a 0.6 --noise 0.05 --shots 10000 --seed 3 --out " + path)
                .exit_code,
            0);
  const auto file = jsent::load_experiment(path);
  EXPECT_EQ(file.records.size(), 2u);
  const auto first = cli("report " + path);
  const auto second = cli("report " + path);
  EXPECT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.output, second.output);
  EXPECT_EQ(lines(first.output).size(), 3u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, Curves) {
  const auto r = cli("curves --state minus1 --a 0.5 --a 0.25");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "a,sum_theory\n0.5,1\n0.25,0.811278\n");
  EXPECT_EQ(lines(cli("curves --state zero").output).size(), 100u);
  EXPECT_EQ(cli("curves --state plus").exit_code, 2);
}
