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

#include "ggsa_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ggsa/analytics.hpp"
#include "ggsa/combinations.hpp"
#include "ggsa/grover.hpp"
#include "ggsa/rng.hpp"
#include "ggsa_cli/serialize.hpp"

namespace ggsa::cli {

using nlohmann::ordered_json;

namespace {

void require_qubits(int n, const char* what) {
  if (n < 1 || n > kMaxQubits) {
    throw UsageError(std::string(what) + " must lie in [1, " + std::to_string(kMaxQubits) +
                     "], got " + std::to_string(n));
  }
}

void require_init(const std::optional<LocalGateParams>& init) {
  if (init && !(init->theta >= 0.0 && init->theta <= std::numbers::pi / 2)) {
    throw UsageError("--theta must lie in [0, pi/2]");
  }
}

ordered_json init_json(const std::optional<LocalGateParams>& init) {
  if (!init) return {{"kind", "uniform"}};
  return {{"kind", "product"}, {"alpha", init->alpha}, {"beta", init->beta}, {"theta", init->theta}};
}

PureState minus_state(int n) {
  std::vector<Complex> amps(std::size_t{1} << n);
  const double a = 1.0 / std::sqrt(static_cast<double>(amps.size()));
  for (std::size_t x = 0; x < amps.size(); ++x) amps[x] = (std::popcount(x) % 2 == 0) ? a : -a;
  return PureState::from_amplitudes(std::move(amps));
}

PureState random_state(int n, Rng& rng) {
  std::vector<Complex> amps(std::size_t{1} << n);
  for (Complex& a : amps) a = Complex(rng.normal(), rng.normal());
  return PureState::normalized(std::move(amps));
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void write_csv_with_metadata(const std::filesystem::path& out, const CsvWriter& csv,
                             const ordered_json& meta) {
  write_output(out, csv.str());
  if (!out.empty()) write_output(with_suffix(out, ".meta", ".json"), dump(meta));
}

}  // namespace

std::vector<std::uint64_t> parse_index_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  auto parse = [&](std::string_view s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("cannot parse '" + std::string(s) + "' as a non-negative integer");
    }
    return v;
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(parse(item));
      continue;
    }
    const std::uint64_t lo = parse(std::string_view(item).substr(0, dash));
    const std::uint64_t hi = parse(std::string_view(item).substr(dash + 1));
    if (hi < lo) throw UsageError("empty range '" + item + "'");
    if (hi - lo > 10'000'000) throw UsageError("range '" + item + "' is too large");
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

int cmd_verify_theorem1(const VerifyTheorem1Options& opts) {
  for (int n : opts.qubits) require_qubits(n, "--n");
  if (opts.qubits.empty() || opts.marked_counts.empty()) {
    throw UsageError("--n and --r need at least one value");
  }
  for (std::uint64_t r : opts.marked_counts) {
    if (r == 0) throw UsageError("--r must be >= 1 (no marked state leaves success undefined)");
  }
  if (!(opts.tolerance > 0.0)) throw UsageError("--tolerance must be positive");
  for (int n : opts.qubits) {
    const std::uint64_t N = std::uint64_t{1} << n;
    for (std::uint64_t r : opts.marked_counts) {
      if (r <= N && binomial(N, r) > opts.max_sets) {
        throw UsageError("C(" + std::to_string(N) + ", " + std::to_string(r) + ") = " +
                         std::to_string(binomial(N, r)) + " exceeds the enumeration cap " +
                         std::to_string(opts.max_sets));
      }
    }
  }

  struct Row {
    int n;
    std::uint64_t r;
    std::uint64_t tau;
    std::string state;
    double fc;
    double brute;
    double closed;
  };
  std::vector<Row> rows;
  for (int n : opts.qubits) {
    const std::uint64_t N = std::uint64_t{1} << n;
    std::vector<std::pair<std::string, PureState>> states;
    states.emplace_back("zero", basis_state(n));
    states.emplace_back("equal", equal_superposition(n));
    states.emplace_back("minus", minus_state(n));
    Rng rng(opts.seed + static_cast<std::uint64_t>(n));
    for (unsigned k = 0; k < opts.random_states; ++k) {
      states.emplace_back("random_" + std::to_string(k), random_state(n, rng));
    }
    for (std::uint64_t r : opts.marked_counts) {
      if (r > N) continue;
      for (const auto& [label, state] : states) {
        const double fc = coherence_fraction(state);
        const auto trace =
            average_trace_over_all_sets(state, r, opts.max_tau, {.max_sets = opts.max_sets});
        for (std::uint64_t tau = 0; tau <= opts.max_tau; ++tau) {
          rows.push_back({n, r, tau, label, fc, trace[tau], closed_form_average({N, r, tau, fc})});
        }
      }
    }
  }

  // Per (n, r, tau) cell maxima, in row order of first appearance.
  ordered_json cells = ordered_json::array();
  double global_max = 0.0;
  std::vector<std::tuple<int, std::uint64_t, std::uint64_t, double>> cell_max;
  for (const Row& row : rows) {
    const double dev = std::abs(row.brute - row.closed);
    global_max = std::max(global_max, dev);
    auto it = std::find_if(cell_max.begin(), cell_max.end(), [&](const auto& c) {
      return std::get<0>(c) == row.n && std::get<1>(c) == row.r && std::get<2>(c) == row.tau;
    });
    if (it == cell_max.end()) {
      cell_max.emplace_back(row.n, row.r, row.tau, dev);
    } else {
      std::get<3>(*it) = std::max(std::get<3>(*it), dev);
    }
  }
  for (const auto& [n, r, tau, dev] : cell_max) {
    cells.push_back({{"n", n}, {"r", r}, {"tau", tau}, {"max_abs_dev", dev}});
  }
  const bool passed = global_max <= opts.tolerance;

  ordered_json params;
  params["n"] = opts.qubits;
  params["r"] = opts.marked_counts;
  params["tau_max"] = opts.max_tau;
  params["random_states"] = opts.random_states;
  params["seed"] = opts.seed;
  params["max_sets"] = opts.max_sets;
  params["tolerance"] = opts.tolerance;
  params["format"] = opts.format == Format::Csv ? "csv" : "json";
  ordered_json meta = metadata("verify-theorem1", params);

  if (opts.format == Format::Csv) {
    CsvWriter csv({"n", "N", "r", "tau", "state", "fc", "brute", "closed", "abs_dev"});
    for (const Row& row : rows) {
      csv.field(row.n).field(std::uint64_t{1} << row.n).field(row.r).field(row.tau);
      csv.field(std::string_view(row.state)).field(row.fc).field(row.brute).field(row.closed);
      csv.field(std::abs(row.brute - row.closed)).end_row();
    }
    meta["max_abs_deviation"] = global_max;
    meta["passed"] = passed;
    meta["cells"] = std::move(cells);
    write_csv_with_metadata(opts.out, csv, meta);
  } else {
    ordered_json doc;
    doc["metadata"] = std::move(meta);
    ordered_json jrows = ordered_json::array();
    for (const Row& row : rows) {
      jrows.push_back({{"n", row.n}, {"r", row.r}, {"tau", row.tau}, {"state", row.state},
                       {"fc", row.fc}, {"brute", row.brute}, {"closed", row.closed},
                       {"abs_dev", std::abs(row.brute - row.closed)}});
    }
    doc["rows"] = std::move(jrows);
    doc["cells"] = std::move(cells);
    doc["max_abs_deviation"] = global_max;
    doc["passed"] = passed;
    write_output(opts.out, dump(doc));
  }
  std::cerr << "verify-theorem1: max |brute - closed| = " << format_double(global_max)
            << " over " << cell_max.size() << " cells (tolerance "
            << format_double(opts.tolerance) << "): " << (passed ? "PASS" : "FAIL") << "\n";
  return passed ? kExitOk : kExitThreshold;
}

int cmd_fig4(const Fig4Options& opts) {
  require_qubits(opts.qubits, "--n");
  const std::uint64_t N = std::uint64_t{1} << opts.qubits;
  if (N < 2) throw UsageError("fig4 needs N >= 2");
  if (opts.marked_counts.empty()) throw UsageError("--r needs at least one value");
  for (std::uint64_t r : opts.marked_counts) {
    if (r < 1 || r > N) throw UsageError("--r values must lie in [1, N]");
  }
  if (opts.fc_points < 2) throw UsageError("--fc-grid needs at least 2 points");

  ordered_json params;
  params["n"] = opts.qubits;
  params["N"] = N;
  params["r"] = opts.marked_counts;
  params["fc_points"] = opts.fc_points;
  params["format"] = opts.format == Format::Csv ? "csv" : "json";
  ordered_json meta = metadata("fig4", params);

  CsvWriter csv({"r", "fc", "p_opt"});
  ordered_json curves = ordered_json::array();
  for (std::uint64_t r : opts.marked_counts) {
    ordered_json points = ordered_json::array();
    for (unsigned i = 0; i < opts.fc_points; ++i) {
      const double fc = static_cast<double>(i) / static_cast<double>(opts.fc_points - 1);
      const double p = optimal_average(N, r, fc);
      csv.field(r).field(fc).field(p).end_row();
      points.push_back({fc, p});
    }
    curves.push_back({{"r", r},
                      {"slope", static_cast<double>(N - r) / static_cast<double>(N - 1)},
                      {"intercept", static_cast<double>(r - 1) / static_cast<double>(N - 1)},
                      {"points", std::move(points)}});
  }
  if (opts.format == Format::Csv) {
    write_csv_with_metadata(opts.out, csv, meta);
  } else {
    write_output(opts.out, dump({{"metadata", std::move(meta)}, {"curves", std::move(curves)}}));
  }
  return kExitOk;
}

int cmd_fig5(const Fig5Options& opts) {
  require_qubits(opts.qubits_a, "--n");
  if (opts.qubits_b.empty()) throw UsageError("--n-lines needs at least one value");
  for (int n : opts.qubits_b) require_qubits(n, "--n-lines");
  if (opts.resolution < 2) throw UsageError("--resolution must be >= 2");

  const double two_pi = 2.0 * std::numbers::pi;
  const double half_pi = std::numbers::pi / 2.0;
  const unsigned res = opts.resolution;

  CsvWriter a({"alpha", "beta", "p"});
  ordered_json ja = ordered_json::array();
  for (unsigned i = 0; i < res; ++i) {
    const double alpha = two_pi * i / res;
    for (unsigned k = 0; k < res; ++k) {
      const double beta = two_pi * k / res;
      const double p = example_a(opts.qubits_a, alpha, beta);
      a.field(alpha).field(beta).field(p).end_row();
      ja.push_back({alpha, beta, p});
    }
  }
  CsvWriter b({"n", "theta", "p"});
  ordered_json jb = ordered_json::array();
  for (int n : opts.qubits_b) {
    for (unsigned i = 0; i < res; ++i) {
      const double theta = half_pi * i / (res - 1);
      const double p = example_b(n, theta);
      b.field(n).field(theta).field(p).end_row();
      jb.push_back({n, theta, p});
    }
  }

  ordered_json params;
  params["n_a"] = opts.qubits_a;
  params["n_lines"] = opts.qubits_b;
  params["resolution"] = res;
  params["format"] = opts.format == Format::Csv ? "csv" : "json";
  ordered_json meta = metadata("fig5", params);

  if (opts.format == Format::Json) {
    write_output(opts.out, dump({{"metadata", std::move(meta)},
                                 {"example_a", {{"columns", {"alpha", "beta", "p"}}, {"rows", ja}}},
                                 {"example_b", {{"columns", {"n", "theta", "p"}}, {"rows", jb}}}}));
    return kExitOk;
  }
  if (opts.out.empty()) {
    write_output({}, a.str() + "\n" + b.str());
    return kExitOk;
  }
  write_output(with_suffix(opts.out, "_a"), a.str());
  write_output(with_suffix(opts.out, "_b"), b.str());
  write_output(with_suffix(opts.out, ".meta", ".json"), dump(meta));
  return kExitOk;
}

int cmd_ggsa_run(const GgsaRunOptions& opts) {
  require_qubits(opts.qubits, "--n");
  require_init(opts.init);
  const std::uint64_t N = std::uint64_t{1} << opts.qubits;
  if (opts.marked.empty()) throw UsageError("--marked needs at least one index");
  std::optional<MarkedSet> marked;
  try {
    marked.emplace(opts.marked, N);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--marked: ") + e.what());
  }

  const PureState initial =
      opts.init ? prepare_ansatz_state(opts.qubits, *opts.init) : equal_superposition(opts.qubits);
  const RunReport report = run_search(initial, *marked, opts.tau);

  ordered_json params;
  params["n"] = opts.qubits;
  params["marked"] = opts.marked;
  params["tau"] = opts.tau;
  params["init"] = init_json(opts.init);
  params["format"] = opts.format == Format::Csv ? "csv" : "json";
  ordered_json meta = metadata("ggsa-run", params);

  if (opts.format == Format::Csv) {
    CsvWriter csv({"tau", "success"});
    for (std::size_t t = 0; t < report.per_iteration_success.size(); ++t) {
      csv.field(static_cast<std::uint64_t>(t)).field(report.per_iteration_success[t]).end_row();
    }
    meta["final_success"] = report.final_success;
    write_csv_with_metadata(opts.out, csv, meta);
  } else {
    ordered_json doc;
    doc["metadata"] = std::move(meta);
    doc["coherence_fraction"] = coherence_fraction(initial);
    doc["report"] = to_json(report);
    write_output(opts.out, dump(doc));
  }
  return kExitOk;
}

int cmd_qmin(const QminOptions& opts) {
  require_init(opts.init);
  if (opts.seeds.empty()) throw UsageError("--seeds needs at least one seed");
  if (opts.budget_factor && !(*opts.budget_factor > 0.0)) {
    throw UsageError("--budget-factor must be positive");
  }
  if (opts.min_success_rate && !(*opts.min_success_rate >= 0.0 && *opts.min_success_rate <= 1.0)) {
    throw UsageError("--min-success-rate must lie in [0, 1]");
  }

  ordered_json objective;
  std::optional<ObjectiveTable> table;
  try {
    if (opts.objective_file) {
      table.emplace(ObjectiveTable::load_csv(*opts.objective_file));
      objective["source"] = "file";
      objective["path"] = opts.objective_file->string();
    } else {
      require_qubits(opts.qubits, "--n");
      objective["source"] = "generator";
      objective["generator"] = opts.generator;
      objective["n"] = opts.qubits;
      if (opts.generator == "permutation") {
        table.emplace(ObjectiveTable::random_permutation(opts.qubits, opts.generator_seed));
        objective["seed"] = opts.generator_seed;
      } else if (opts.generator == "uniform") {
        table.emplace(ObjectiveTable::random_uniform(opts.qubits, opts.generator_seed));
        objective["seed"] = opts.generator_seed;
      } else if (opts.generator == "constant") {
        table.emplace(ObjectiveTable::constant(opts.qubits, opts.constant_value));
        objective["value"] = opts.constant_value;
      } else {
        throw UsageError("unknown generator '" + opts.generator +
                         "' (expected permutation, uniform or constant)");
      }
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("objective: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const UsageError*>(&e)) throw;
    throw UsageError(std::string("objective: ") + e.what());
  }

  SearchSchedule schedule = opts.schedule;
  if (opts.budget_factor) {
    const double calls = *opts.budget_factor * std::sqrt(static_cast<double>(table->size()));
    schedule.max_oracle_calls = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(calls));
  }
  try {
    schedule.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto argmin = table->argmin_set();
  objective["N"] = table->size();
  objective["min_value"] = (*table)[argmin.front()];
  objective["argmin"] = argmin;

  ordered_json runs = ordered_json::array();
  CsvWriter summary({"seed", "result_index", "result_value", "found_minimum", "oracle_calls_used",
                     "rounds", "converged", "termination"});
  std::uint64_t successes = 0;
  double total_calls = 0.0;
  for (std::uint64_t seed : opts.seeds) {
    const MinimizationReport report = run_gqma(*table, opts.init, schedule, seed);
    const bool found =
        std::find(argmin.begin(), argmin.end(), report.result_index) != argmin.end();
    successes += found;
    total_calls += static_cast<double>(report.oracle_calls_used);
    ordered_json j = to_json(report);
    j["found_minimum"] = found;
    runs.push_back(std::move(j));
    summary.field(seed).field(report.result_index).field(report.result_value).field(found);
    summary.field(report.oracle_calls_used).field(report.rounds).field(report.converged);
    summary.field(std::string_view(to_string(report.termination))).end_row();
  }
  const double runs_d = static_cast<double>(opts.seeds.size());
  const double rate = static_cast<double>(successes) / runs_d;
  const double mean_calls = total_calls / runs_d;
  summary.field(std::string_view("all")).field(std::string_view("")).field(std::string_view(""));
  summary.field(rate).field(mean_calls).field(std::string_view("")).field(std::string_view(""));
  summary.field(std::string_view("")).end_row();

  ordered_json params;
  params["objective"] = objective;
  params["seeds"] = opts.seeds;
  params["schedule"] = to_json(schedule);
  if (opts.budget_factor) params["budget_factor"] = *opts.budget_factor;
  params["init"] = init_json(opts.init);
  if (opts.min_success_rate) params["min_success_rate"] = *opts.min_success_rate;

  ordered_json doc;
  doc["metadata"] = metadata("qmin", params);
  doc["runs"] = std::move(runs);
  doc["aggregate"] = {{"runs", opts.seeds.size()},
                      {"successes", successes},
                      {"success_rate", rate},
                      {"mean_oracle_calls", mean_calls}};
  write_output(opts.out, dump(doc));
  if (!opts.out.empty()) write_output(with_suffix(opts.out, "_summary", ".csv"), summary.str());

  std::cerr << "qmin: success rate " << successes << "/" << opts.seeds.size() << " ("
            << format_double(rate) << "), mean oracle calls " << format_double(mean_calls) << "\n";
  if (opts.min_success_rate && rate < *opts.min_success_rate) return kExitThreshold;
  return kExitOk;
}

}  // namespace ggsa::cli
