/*
 * Copyright 2026 The impbench Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "impbench/mutation.hpp"
#include "impbench/sos.hpp"
#include "impbench/token.hpp"
#include "json.hpp"
#include "worker_pool.hpp"

namespace {

using namespace impbench::tools;

void report(bool json, int code, const std::string& kind, const std::string& message) {
  if (json) {
    std::cerr << nlohmann::json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}}
                     .dump()
              << "\n";
  } else {
    std::cerr << "impbench: " << message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"IMP interpreters, program fuzzer and benchmark task tooling"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  bool json_errors = false;
  std::string format = "text";
  app.add_flag("--json", json_errors, "Report errors as JSON on stderr");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-j,--jobs", common.jobs, "Worker threads for batch commands")
      ->default_val(default_jobs());
  app.add_option("--step-limit", common.step_limit, "Maximum engine steps")
      ->default_val(common.step_limit);
  app.add_option("--lexicon", common.lexicon, "Surface syntax of input programs")
      ->check(CLI::IsMember({"std", "obf"}))
      ->default_val(common.lexicon);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Execute a program");
  run_cmd->add_option("file", run.file, "Program file")->required();
  run_cmd->add_option("--style", run.style, "sos or k")->default_val(run.style);
  run_cmd->add_option("--mutation", run.mutation, "std, swap or obf")->default_val(run.mutation);
  run_cmd->add_option("--trace", run.trace, "none, xml or debug")->default_val(run.trace);

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Generate a terminating program corpus");
  fuzz_cmd->add_option("--count", fuzz.count, "Number of programs")->required();
  fuzz_cmd->add_option("--seed", fuzz.seed, "Base seed")->default_val(0);
  fuzz_cmd->add_option("--out", fuzz.out, "Output directory");
  fuzz_cmd->add_option("--min-stmts", fuzz.config.min_stmts)->default_val(fuzz.config.min_stmts);
  fuzz_cmd->add_option("--max-stmts", fuzz.config.max_stmts)->default_val(fuzz.config.max_stmts);
  fuzz_cmd->add_option("--min-depth", fuzz.config.min_depth)->default_val(fuzz.config.min_depth);
  fuzz_cmd->add_option("--max-depth", fuzz.config.max_depth)->default_val(fuzz.config.max_depth);
  fuzz_cmd->add_option("--min-vars", fuzz.config.min_vars)->default_val(fuzz.config.min_vars);
  fuzz_cmd->add_option("--max-vars", fuzz.config.max_vars)->default_val(fuzz.config.max_vars);
  fuzz_cmd->add_option("--max-arith-terms", fuzz.config.max_arith_terms)
      ->default_val(fuzz.config.max_arith_terms);
  fuzz_cmd->add_option("--max-var-terms", fuzz.config.max_var_terms)
      ->default_val(fuzz.config.max_var_terms);
  fuzz_cmd->add_option("--max-bool-terms", fuzz.config.max_bool_terms)
      ->default_val(fuzz.config.max_bool_terms);
  fuzz_cmd->add_option("--probabilities", fuzz.probabilities,
                       "assign while if break continue halt")
      ->delimiter(',');
  fuzz_cmd->add_option("--max-attempts", fuzz.max_attempts, "Resamples per program")
      ->default_val(fuzz.max_attempts);

  MetricsArgs metrics;
  auto* metrics_cmd = app.add_subcommand("metrics", "Complexity profile of programs");
  metrics_cmd->add_option("path", metrics.path, "Program file or directory")->required();
  metrics_cmd->add_option("--granularity", metrics.granularity, "stmt or micro")
      ->default_val(metrics.granularity);

  MutateArgs mutate;
  auto* mutate_cmd = app.add_subcommand("mutate", "Print a mutated program or document");
  mutate_cmd->add_option("file", mutate.file, "Program file");
  mutate_cmd->add_option("--kind", mutate.kind, "std, swap or obf")->default_val(mutate.kind);
  mutate_cmd->add_option("--emit", mutate.emit, "program, semantics-sos, semantics-k or syntax")
      ->default_val(mutate.emit);

  GenTasksArgs gen;
  auto* gen_cmd = app.add_subcommand("gen-tasks", "Build task prompts and gold answers");
  gen_cmd->add_option("path", gen.path, "Program file or directory")->required();
  gen_cmd->add_option("--task", gen.task, "state, rule or trace")->default_val(gen.task);
  gen_cmd->add_option("--style", gen.style, "sos, k or all")->default_val(gen.style);
  gen_cmd->add_option("--mutation", gen.mutation, "std, swap, obf or all")
      ->default_val(gen.mutation);
  gen_cmd->add_flag("--no-semantics", gen.no_semantics, "Omit syntax and semantics");
  gen_cmd->add_option("--seed", gen.seed, "Question sampling seed")->default_val(0);
  gen_cmd->add_option("--max-questions", gen.max_questions)->default_val(gen.max_questions);
  gen_cmd->add_option("--out", gen.out, "Output directory");

  ScoreArgs score;
  auto* score_cmd = app.add_subcommand("score", "Score model responses against gold");
  score_cmd->add_option("--task", score.task, "state, rule or trace")->required();
  score_cmd->add_option("--gold", score.gold, "Task JSONL from gen-tasks")->required();
  score_cmd->add_option("--responses", score.responses, "Response JSONL")->required();
  score_cmd->add_option("--csv", score.csv, "Write first-mismatch rates as CSV");

  DocArgs sem;
  auto* sem_cmd = app.add_subcommand("semantics", "Print a semantics document");
  sem_cmd->add_option("--style", sem.style)->default_val(sem.style);
  sem_cmd->add_option("--mutation", sem.mutation)->default_val(sem.mutation);
  DocArgs syn;
  auto* syn_cmd = app.add_subcommand("syntax", "Print the grammar");
  syn_cmd->add_option("--mutation", syn.mutation)->default_val(syn.mutation);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report(json_errors, kUsage, "usage", e.what());
    return kUsage;
  }
  common.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;

  try {
    if (*run_cmd) return cmd_run(common, run, std::cout);
    if (*fuzz_cmd) return cmd_fuzz(common, fuzz, std::cout);
    if (*metrics_cmd) return cmd_metrics(common, metrics, std::cout);
    if (*mutate_cmd) {
      if (mutate.emit == "program" && mutate.file.empty()) {
        throw UsageError("mutate needs a program file");
      }
      return cmd_mutate(common, mutate, std::cout);
    }
    if (*gen_cmd) return cmd_gen_tasks(common, gen, std::cout);
    if (*score_cmd) return cmd_score(common, score, std::cout);
    if (*sem_cmd) return cmd_semantics(sem, std::cout);
    if (*syn_cmd) return cmd_syntax(syn, std::cout);
  } catch (const UsageError& e) {
    report(json_errors, kUsage, "usage", e.what());
    return kUsage;
  } catch (const InputError& e) {
    report(json_errors, kInput, "input", e.what());
    return kInput;
  } catch (const impbench::SyntaxError& e) {
    report(json_errors, kInput, "input", e.what());
    return kInput;
  } catch (const ExecutionError& e) {
    report(json_errors, kExecution, "execution", e.what());
    return kExecution;
  } catch (const std::exception& e) {
    report(json_errors, kExecution, "execution", e.what());
    return kExecution;
  }
  return kUsage;
}
