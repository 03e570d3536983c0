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

#ifndef IMPBENCH_SCORING_HPP_
#define IMPBENCH_SCORING_HPP_

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "impbench/curation.hpp"
#include "impbench/trace.hpp"
#include "impbench/value.hpp"

namespace impbench {

using VarValues = std::vector<std::pair<std::string, Value>>;

struct ParsedAnswer {
  enum class Kind { State, Timeout, Error, Rules, Trace, Malformed };

  struct Step {
    int rule = 0;
    VarValues state;
  };

  Kind kind = Kind::Malformed;
  VarValues values;
  // Keyed by answer id.
  std::map<int, std::vector<int>> rules;
  std::vector<Step> steps;
  std::string reason;
};

// Each parser extracts the last top-level <answer> (or <ans>) block.
ParsedAnswer parse_state_answer(std::string_view text);
ParsedAnswer parse_rule_answer(std::string_view text);
ParsedAnswer parse_trace_answer(std::string_view text);

struct StateScore {
  bool exact = false;
  double var_fraction = 0;
};

// gold must be State, Timeout or Error. scored lists the variables counted by
// var_fraction.
StateScore score_pred_state(const ParsedAnswer& ans, const ParsedAnswer& gold,
                            const std::vector<std::string>& scored);

std::vector<bool> score_pred_rule(const ParsedAnswer& ans,
                                  const std::vector<std::vector<int>>& gold);

bool score_pred_trace(const ParsedAnswer& ans, const ParsedAnswer& gold);

// Index of the first divergence, or nullopt when the sequences are equal.
// When one sequence is a prefix of the other the index is the shorter length.
std::optional<std::size_t> first_mismatch(const std::vector<int>& gold,
                                          const std::vector<int>& predicted);

struct RulePair {
  Style style = Style::Sos;
  std::vector<int> gold;
  std::vector<int> predicted;
};

struct MismatchRates {
  Style style = Style::Sos;
  std::map<int, std::size_t> occurrences;
  std::map<int, std::size_t> first;
  std::map<int, double> rule_rate;
  // Max rule rate per category. Categories with no gold occurrences are
  // absent.
  std::map<RuleCategory, double> category_rate;
};

// One entry per style present in pairs.
std::vector<MismatchRates> first_mismatch_stats(const std::vector<RulePair>& pairs);

struct InstanceScore {
  std::string id;
  TaskKind task = TaskKind::State;
  Style style = Style::Sos;
  bool exact = false;
  double var_fraction = 0;
  std::vector<bool> questions;
};

struct ScoreReport {
  TaskKind task = TaskKind::State;
  std::vector<InstanceScore> instances;
  double accuracy = 0;
  double mean_var_fraction = 0;
  std::size_t missing_responses = 0;
  std::vector<MismatchRates> mismatch;
};

// gold: JSONL written by gen-tasks. responses: JSONL of
// {"instance_id", "response_text"}. Instances of other tasks are skipped.
// Missing responses score as wrong.
ScoreReport score_jsonl(TaskKind task, std::istream& gold, std::istream& responses);

std::string report_to_json(const ScoreReport& r);
// style,category,rate rows.
std::string mismatch_csv(const ScoreReport& r);

}  // namespace impbench

#endif  // IMPBENCH_SCORING_HPP_
