// Copyright 2026 The Authors.
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

#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bench.hpp"
#include "generator.hpp"
#include "instance_json.hpp"
#include "matroidx/brute_force.hpp"
#include "matroidx/comm.hpp"
#include "matroidx/pipeline.hpp"
#include "matroidx/streaming.hpp"
#include "suites.hpp"

namespace {

using matroidx::Rational;
using nlohmann::json;

json elements_json(const matroidx::ElementSet& set) {
  json out = json::array();
  set.for_each([&out](matroidx::ElementId id) { out.push_back(id); });
  return out;
}

json static_report_json(const matroidx::PipelineReport& report) {
  json out;
  out["model"] = "static";
  out["epsilon"] = matroidx::to_fraction_string(report.epsilon);
  out["alpha"] = matroidx::to_fraction_string(report.alpha);
  out["bound_factor"] = matroidx::to_fraction_string(report.bound_factor);
  out["chosen_spread_index"] = report.chosen_spread_index;
  out["output"] = {{"elements", elements_json(report.output)},
                   {"weight", matroidx::to_fraction_string(report.output_weight)}};
  json classes = json::array();
  for (const auto& ref : report.classes) {
    const auto& solved = report.solved[ref.solved_index];
    classes.push_back(
        {{"spread_index", ref.spread_index},
         {"level", ref.level},
         {"interval",
          {matroidx::to_fraction_string(ref.lower),
           matroidx::to_fraction_string(ref.upper)}},
         {"members", elements_json(solved.members)},
         {"copies", solved.copies},
         {"w_int_max", solved.w_int_max},
         {"rounding", solved.rounding == matroidx::RoundingMode::kExact
                          ? "exact"
                          : "bucketed"},
         {"chosen", elements_json(solved.chosen)},
         {"chosen_weight", matroidx::to_fraction_string(solved.chosen_weight)},
         {"solver_unfolded_independence",
          solved.solver_unfolded.independence_calls},
         {"solver_original_independence",
          solved.solver_original.independence_calls}});
  }
  out["classes"] = classes;
  out["ledger"] = {
      {"independence_calls", report.total_original.independence_calls},
      {"rank_calls", report.total_original.rank_calls}};
  return out;
}

json run_report_json(const matroidx::RunReport& report, const char* model) {
  json out;
  out["model"] = model;
  out["output"] = {{"elements", elements_json(report.output)},
                   {"weight", matroidx::to_fraction_string(report.output_weight)}};
  out["passes"] = report.passes;
  out["stored_peak"] = report.stored_peak;
  out["message_elements"] = report.message_elements;
  out["common_independent"] = report.common_independent;
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    matroidx::write_text_file(out_path, text);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"weighted matroid intersection via unweighted solvers"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a random instance file");
  matroidx::GeneratorSpec gen_spec;
  std::string gen_weights = "uniform:4";
  std::string gen_out;
  gen->add_option("--family1", gen_spec.family1,
                  "uniform|partition|graphic|linear_gf2|random");
  gen->add_option("--family2", gen_spec.family2, "second matroid family");
  gen->add_option("--n", gen_spec.n, "ground set size")->required();
  gen->add_option("--seed", gen_spec.seed, "generator seed");
  gen->add_option("--weights", gen_weights, "uniform:<W> | loguniform:<R>");
  gen->add_option("--out", gen_out, "output path (stdout when omitted)");

  auto* solve = app.add_subcommand("solve", "run a model on an instance file");
  std::string solve_in, solve_eps = "0.1", solve_solver = "exact";
  std::string solve_model = "static", solve_order = "natural";
  std::string solve_partition = "random:0:1/2", solve_out;
  solve->add_option("instance", solve_in, "instance JSON path")->required();
  solve->add_option("--epsilon", solve_eps, "precision parameter");
  solve->add_option("--solver", solve_solver, "exact | greedy");
  solve->add_option("--model", solve_model, "static | stream | comm");
  solve->add_option("--order", solve_order, "natural | reverse | random:<seed>");
  solve->add_option("--partition", solve_partition,
                    "ids:<list> | random:<seed>:<fraction>");
  solve->add_option("--out", solve_out, "report path (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string verify_suite;
  uint64_t verify_count = 50, verify_seed = 1;
  bool verify_corrupt = false;
  verify->add_option("--suite", verify_suite, "suite name")->required();
  verify->add_option("--count", verify_count, "cases per suite");
  verify->add_option("--seed", verify_seed, "suite seed");
  verify->add_flag("--corrupt", verify_corrupt,
                   "run against the corrupted fixture (negative control)");

  auto* bench = app.add_subcommand("bench", "benchmark matrix to CSV");
  matroidx::BenchSpec bench_spec;
  std::string bench_w = "1,2,4,8", bench_eps = "0.1", bench_solvers = "exact";
  std::string bench_out;
  bench->add_option("--family1", bench_spec.family1, "first matroid family");
  bench->add_option("--family2", bench_spec.family2, "second matroid family");
  bench->add_option("--n", bench_spec.n, "ground set size");
  bench->add_option("--W", bench_w, "comma-separated weight bounds");
  bench->add_option("--epsilon", bench_eps, "comma-separated epsilons");
  bench->add_option("--solvers", bench_solvers, "comma-separated solvers");
  bench->add_option("--count", bench_spec.count, "instances per cell");
  bench->add_option("--seed", bench_spec.seed, "base seed");
  bench->add_option("--out", bench_out, "CSV path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  auto split = [](const std::string& text) {
    std::vector<std::string> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
      size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      parts.push_back(text.substr(pos, comma - pos));
      pos = comma + 1;
    }
    return parts;
  };

  if (gen->parsed()) {
    gen_spec.weights = matroidx::parse_weight_distribution(gen_weights);
    matroidx::InstanceSpec spec = matroidx::generate_instance(gen_spec);
    emit(matroidx::serialize_instance(spec), gen_out);
    return 0;
  }

  if (solve->parsed()) {
    matroidx::InstanceSpec spec = matroidx::load_instance_file(solve_in);
    matroidx::WeightedInstance inst = spec.build();
    Rational eps = matroidx::parse_rational(solve_eps);
    bool exact = solve_solver == "exact";
    if (!exact && solve_solver != "greedy") {
      throw matroidx::InputError("unknown solver: " + solve_solver);
    }

    json report;
    if (solve_model == "static") {
      matroidx::ExactSolver exact_solver;
      matroidx::GreedySolver greedy_solver;
      const matroidx::UnweightedSolver& solver =
          exact ? static_cast<const matroidx::UnweightedSolver&>(exact_solver)
                : static_cast<const matroidx::UnweightedSolver&>(greedy_solver);
      report = static_report_json(matroidx::weighted_mi_reduce(inst, eps, solver));
    } else if (solve_model == "stream") {
      matroidx::StreamOrder order = matroidx::parse_stream_order(solve_order);
      matroidx::RunReport rr;
      if (exact) {
        matroidx::StreamingWeightedWrapper alg(
            inst, eps, matroidx::store_all_exact_factory());
        rr = matroidx::run_stream(alg, inst, order, alg.passes_needed());
        report = run_report_json(rr, "stream");
        report["bound_factor"] =
            matroidx::to_fraction_string(alg.bound_factor(1));
      } else {
        matroidx::OnePassGreedyWeighted alg(inst, eps);
        rr = matroidx::run_stream(alg, inst, order, 1);
        report = run_report_json(rr, "stream");
      }
      report["order"] = solve_order;
    } else if (solve_model == "comm") {
      matroidx::PartitionSpec pspec = matroidx::parse_partition(solve_partition);
      matroidx::ElementSet alice = matroidx::resolve_partition(pspec, inst);
      matroidx::GreedyBaselineProtocol baseline;
      matroidx::CommWeightedWrapper wrapper(baseline, eps, exact);
      matroidx::RunReport rr = matroidx::run_protocol(wrapper, inst, alice);
      report = run_report_json(rr, "comm");
      report["partition"] = solve_partition;
      report["alice"] = elements_json(alice);
      report["bound_factor"] =
          matroidx::to_fraction_string(wrapper.bound_factor(inst));
    } else {
      throw matroidx::InputError("unknown model: " + solve_model);
    }
    emit(report.dump(2) + "\n", solve_out);
    return 0;
  }

  if (verify->parsed()) {
    matroidx::SuiteResult result = matroidx::run_suite(
        verify_suite, verify_count, verify_seed, verify_corrupt);
    std::cout << result.to_string() << "\n";
    return result.passed ? 0 : 4;
  }

  if (bench->parsed()) {
    bench_spec.max_weights.clear();
    for (const std::string& w : split(bench_w)) {
      bench_spec.max_weights.push_back(std::strtoll(w.c_str(), nullptr, 10));
    }
    bench_spec.epsilons.clear();
    for (const std::string& e : split(bench_eps)) {
      bench_spec.epsilons.push_back(matroidx::parse_rational(e));
    }
    bench_spec.solvers = split(bench_solvers);
    matroidx::BenchOutput out = matroidx::run_bench(bench_spec);
    emit(out.csv, bench_out);
    std::cerr << out.summary;
    return 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const matroidx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const matroidx::ContractError& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 3;
  } catch (const matroidx::ProtocolError& e) {
    std::cerr << "protocol violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
