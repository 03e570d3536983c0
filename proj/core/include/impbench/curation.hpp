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

#ifndef IMPBENCH_CURATION_HPP_
#define IMPBENCH_CURATION_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "impbench/ast.hpp"
#include "impbench/mutation.hpp"
#include "impbench/sos.hpp"
#include "impbench/trace.hpp"
#include "impbench/value.hpp"

namespace impbench {

enum class TaskKind { State, Rule, Trace };
std::string_view task_name(TaskKind t);
TaskKind parse_task(std::string_view s);

class NoEnclosingLoop : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct StateGold {
  enum class Kind { Values, Timeout, Error };
  Kind kind = Kind::Values;
  Store values;
  // Declared variables assigned somewhere in the program.
  std::vector<std::string> scored;
};

StateGold gold_final_state(const Program& p, Style style, MutationKind k,
                           std::size_t step_limit = 1'000'000);

// Variables that are the target of at least one assignment, in order of first
// appearance.
std::vector<std::string> assigned_variables(const Program& p);

// Program point at which an executed statement was about to run.
struct StatementContext {
  StmtPtr stmt;
  Store sigma;
  ControlStack chi;
  // Store when the innermost enclosing loop last entered its body.
  Store iteration_sigma;
};

struct ProcessedStatement {
  StmtKind kind = StmtKind::Assign;
  Program snippet;
  Store sigma;
  ControlStack chi;
  std::vector<int> rules;
};

// Rewrites the statement into a standalone snippet. Gold rules are left
// empty; see gold_rules.
ProcessedStatement process_statement(const StatementContext& ctx);

// Runs the snippet from its recorded pre-state on the chosen engine.
std::vector<int> gold_rules(const ProcessedStatement& ps, Style style,
                            MutationKind k = MutationKind::Standard,
                            std::size_t step_limit = 100'000);

// Calls f for every statement instance executed by the SOS run of p.
void for_each_executed_statement(
    const Program& p, std::size_t step_limit,
    const std::function<void(const StatementContext&)>& f);

// Groups executed statements by gold rule sequence, keeps one uniformly drawn
// member per group and caps the result at max_questions groups.
std::vector<ProcessedStatement> sample_pred_rule(
    const Program& p, Style style, MutationKind k, std::uint64_t seed,
    std::size_t max_questions = 10, std::size_t step_limit = 1'000'000);

// Throws RequiresTermination when the run does not end Normal or Halted.
Trace gold_trace(const Program& p, Style style, MutationKind k,
                 std::size_t step_limit = 1'000'000);
std::string gold_trace_xml(const Program& p, Style style, MutationKind k,
                           std::size_t step_limit = 1'000'000);

struct TaskInstance {
  std::string id;
  std::string program_id;
  TaskKind task = TaskKind::State;
  Style style = Style::Sos;
  MutationKind mutation = MutationKind::Standard;
  bool with_semantics = true;
  // Source as shown to the model.
  std::string source;
  StateGold state;
  std::vector<ProcessedStatement> questions;
  std::vector<int> trace_rules;
  // Gold answer in the response format the prompt asks for.
  std::string gold_answer;
};

struct CurationOptions {
  TaskKind task = TaskKind::State;
  Style style = Style::Sos;
  MutationKind mutation = MutationKind::Standard;
  bool with_semantics = true;
  std::uint64_t seed = 0;
  std::size_t step_limit = 1'000'000;
  std::size_t max_questions = 10;
};

TaskInstance make_instance(const std::string& program_id, const Program& p,
                           const CurationOptions& opts);

// Python-style dict rendering used in questions: {'n': 100, 'sum': 0}.
std::string store_to_dict(const Store& s);
// "while (i < 2) :: ε", innermost loop first.
std::string control_to_text(const ControlStack& chi, MutationKind k);
// Question block listing each processed statement.
std::string questions_text(const std::vector<ProcessedStatement>& qs,
                           MutationKind k);
// <ans> block with one <answer id="N"> per rule sequence.
std::string rule_answer_xml(const std::vector<std::vector<int>>& seqs);
std::string state_answer_xml(const StateGold& g);

std::string render_prompt(const TaskInstance& inst, bool cot);

// One JSON object per instance, with both prompt variants.
std::string instance_to_json(const TaskInstance& inst);

}  // namespace impbench

#endif  // IMPBENCH_CURATION_HPP_
