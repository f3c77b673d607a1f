// Copyright 2026 The ggsa Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <exception>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ggsa/error.hpp"
#include "ggsa_cli/commands.hpp"
#include "ggsa_cli/version.hpp"

namespace {

using namespace ggsa::cli;

std::vector<int> to_ints(const std::vector<std::uint64_t>& v) {
  std::vector<int> out;
  for (std::uint64_t x : v) {
    if (x > 64) throw UsageError("qubit count " + std::to_string(x) + " is out of range");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

struct InitFlags {
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> theta;

  void attach(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "Local gate phase alpha (selects the product ansatz)");
    cmd->add_option("--beta", beta, "Local gate phase beta");
    cmd->add_option("--theta", theta, "Local gate angle theta in [0, pi/2]");
  }

  std::optional<ggsa::LocalGateParams> resolve() const {
    if (!alpha && !beta && !theta) return std::nullopt;
    return ggsa::LocalGateParams{alpha.value_or(0.0), beta.value_or(0.0),
                                 theta.value_or(std::numbers::pi / 4)};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Grover search: verification, figure data and minimum finding"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kVersion);
  app.require_subcommand(1);

  std::string format_text;
  std::string out_text;
  std::function<int()> run;

  // verify-theorem1
  VerifyTheorem1Options vt;
  std::string vt_n = "1-5";
  std::string vt_r = "1-3";
  auto* vt_cmd = app.add_subcommand("verify-theorem1",
                                    "Compare set-averaged simulation with the closed form");
  vt_cmd->add_option("--n", vt_n, "Qubit counts, e.g. 1-5 or 2,4")->capture_default_str();
  vt_cmd->add_option("--r", vt_r, "Marked-set sizes, e.g. 1-3")->capture_default_str();
  vt_cmd->add_option("--tau", vt.max_tau, "Largest iteration count")->capture_default_str();
  vt_cmd->add_option("--random-states", vt.random_states, "Random states per cell")
      ->capture_default_str();
  vt_cmd->add_option("--seed", vt.seed, "Seed for random states")->capture_default_str();
  vt_cmd->add_option("--max-sets", vt.max_sets, "Enumeration cap per cell")->capture_default_str();
  vt_cmd->add_option("--tolerance", vt.tolerance, "Pass threshold")->capture_default_str();
  vt_cmd->add_option("--out", out_text, "Output file (stdout if omitted)");
  vt_cmd->add_option("--format", format_text, "csv or json");
  vt_cmd->callback([&] {
    run = [&] {
      vt.qubits = to_ints(parse_index_list(vt_n));
      vt.marked_counts = parse_index_list(vt_r);
      vt.out = out_text;
      if (!format_text.empty()) vt.format = parse_format(format_text);
      return cmd_verify_theorem1(vt);
    };
  });

  // fig4
  Fig4Options f4;
  std::string f4_r = "1,2,3,4,10";
  auto* f4_cmd = app.add_subcommand("fig4", "Optimal average success versus coherence fraction");
  f4_cmd->add_option("--n", f4.qubits, "Qubit count")->capture_default_str();
  f4_cmd->add_option("--r", f4_r, "Marked-set sizes")->capture_default_str();
  f4_cmd->add_option("--fc-grid", f4.fc_points, "Number of evenly spaced f_c points in [0, 1]")
      ->capture_default_str();
  f4_cmd->add_option("--out", out_text, "Output file (stdout if omitted)");
  f4_cmd->add_option("--format", format_text, "csv or json");
  f4_cmd->callback([&] {
    run = [&] {
      f4.marked_counts = parse_index_list(f4_r);
      f4.out = out_text;
      if (!format_text.empty()) f4.format = parse_format(format_text);
      return cmd_fig4(f4);
    };
  });

  // fig5
  Fig5Options f5;
  std::string f5_lines = "2-4";
  auto* f5_cmd = app.add_subcommand("fig5", "Success probability for the product ansatz examples");
  f5_cmd->add_option("--n", f5.qubits_a, "Qubit count for the (alpha, beta) heat map")
      ->capture_default_str();
  f5_cmd->add_option("--n-lines", f5_lines, "Qubit counts for the theta curves")
      ->capture_default_str();
  f5_cmd->add_option("--resolution", f5.resolution, "Grid points per axis")->capture_default_str();
  f5_cmd->add_option("--out", out_text, "Output file; CSV writes <stem>_a and <stem>_b");
  f5_cmd->add_option("--format", format_text, "csv or json");
  f5_cmd->callback([&] {
    run = [&] {
      f5.qubits_b = to_ints(parse_index_list(f5_lines));
      f5.out = out_text;
      if (!format_text.empty()) f5.format = parse_format(format_text);
      return cmd_fig5(f5);
    };
  });

  // ggsa-run
  GgsaRunOptions gr;
  std::string gr_marked;
  InitFlags gr_init;
  auto* gr_cmd = app.add_subcommand("ggsa-run", "Run one search and report per-iteration success");
  gr_cmd->add_option("--n", gr.qubits, "Qubit count")->required();
  gr_cmd->add_option("--marked", gr_marked, "Marked indices, e.g. 2 or 0-3,9")->required();
  gr_cmd->add_option("--tau", gr.tau, "Iteration count")->required();
  gr_init.attach(gr_cmd);
  gr_cmd->add_option("--out", out_text, "Output file (stdout if omitted)");
  gr_cmd->add_option("--format", format_text, "json or csv");
  gr_cmd->callback([&] {
    run = [&] {
      gr.marked = parse_index_list(gr_marked);
      gr.init = gr_init.resolve();
      gr.out = out_text;
      if (!format_text.empty()) gr.format = parse_format(format_text);
      return cmd_ggsa_run(gr);
    };
  });

  // qmin
  QminOptions qm;
  std::string qm_objective;
  std::string qm_seeds = "0";
  std::string qm_budget;
  std::optional<double> qm_budget_factor;
  std::optional<double> qm_min_rate;
  InitFlags qm_init;
  auto* qm_cmd = app.add_subcommand("qmin", "Quantum minimum finding over an objective table");
  qm_cmd->add_option("--objective", qm_objective, "CSV file with header index,value");
  qm_cmd->add_option("--generator", qm.generator, "permutation, uniform or constant")
      ->capture_default_str();
  qm_cmd->add_option("--n", qm.qubits, "Qubit count for generated objectives")
      ->capture_default_str();
  qm_cmd->add_option("--generator-seed", qm.generator_seed, "Seed for generated objectives")
      ->capture_default_str();
  qm_cmd->add_option("--constant-value", qm.constant_value, "Value for the constant generator");
  qm_cmd->add_option("--seeds", qm_seeds, "Run seeds, e.g. 0-99")->capture_default_str();
  qm_cmd->add_option("--budget", qm_budget, "Oracle-call budget per run, or 'unlimited'");
  qm_cmd->add_option("--budget-factor", qm_budget_factor, "Budget as a multiple of sqrt(N)");
  qm_cmd->add_option("--growth", qm.schedule.growth, "Exponential search growth factor")
      ->capture_default_str();
  qm_cmd->add_option("--stall-rounds", qm.schedule.stall_rounds,
                     "Rounds without improvement before stopping")
      ->capture_default_str();
  qm_cmd->add_option("--round-attempts", qm.schedule.round_attempts,
                     "Measurement attempts per round")
      ->capture_default_str();
  qm_init.attach(qm_cmd);
  qm_cmd->add_option("--min-success-rate", qm_min_rate, "Exit 1 if the success rate is lower");
  qm_cmd->add_option("--out", out_text, "JSON report (stdout if omitted); adds <stem>_summary.csv");
  qm_cmd->add_option("--format", format_text, "json");
  qm_cmd->callback([&] {
    run = [&] {
      if (!format_text.empty() && parse_format(format_text) != Format::Json) {
        throw UsageError("qmin writes JSON reports only");
      }
      if (!qm_objective.empty()) qm.objective_file = qm_objective;
      qm.seeds = parse_index_list(qm_seeds);
      if (!qm_budget.empty() && qm_budget != "unlimited") {
        const auto values = parse_index_list(qm_budget);
        if (values.size() != 1) throw UsageError("--budget takes a single value");
        qm.schedule.max_oracle_calls = values.front();
      }
      if (!qm_budget.empty() && qm_budget_factor) {
        throw UsageError("--budget and --budget-factor are mutually exclusive");
      }
      qm.budget_factor = qm_budget_factor;
      qm.min_success_rate = qm_min_rate;
      qm.init = qm_init.resolve();
      qm.out = out_text;
      return cmd_qmin(qm);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ggsa::ResourceLimitError& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << kToolName << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << kToolName << ": error: " << e.what() << "\n";
    return kExitUsage;
  }
}
