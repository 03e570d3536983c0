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

#ifndef IMPBENCH_TRACE_HPP_
#define IMPBENCH_TRACE_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "impbench/ast.hpp"
#include "impbench/value.hpp"

namespace impbench {

enum class Style { Sos, K };

std::string_view style_name(Style s);
Style parse_style(std::string_view s);

enum class Outcome { Normal, Halted, Error, StepLimit };

std::string_view outcome_name(Outcome o);

enum class RuleCategory {
  Id,
  Arithmetic,
  Relational,
  Logical,
  Assignment,
  Conditional,
  Loop,
  Halt,
  BreakContinue,
  Declaration,
  Error,
};

inline constexpr std::size_t kNumRuleCategories = 11;

std::string_view category_name(RuleCategory c);

struct RuleInfo {
  int id;
  std::string_view name;
  RuleCategory category;
};

// Maps each binary operator token to the operation it performs. The standard
// binding is the identity.
class OperatorSemantics {
 public:
  static const OperatorSemantics& standard();
  static OperatorSemantics from_table(
      const std::array<BinaryOp, kNumBinaryOps>& meaning);

  BinaryOp meaning(BinaryOp written) const {
    return meaning_[static_cast<std::size_t>(written)];
  }
  bool is_identity() const;

 private:
  std::array<BinaryOp, kNumBinaryOps> meaning_{};
};

struct TraceStep {
  int rule = 0;
  // Post-step state, null unless recorded. Consecutive steps that leave the
  // store unchanged share one snapshot.
  std::shared_ptr<const Store> state;
};

struct Trace {
  Style style = Style::Sos;
  std::vector<TraceStep> steps;
  std::size_t step_count = 0;
  Outcome outcome = Outcome::Normal;
  Store final_store;
  std::string error;

  bool terminated() const { return outcome != Outcome::StepLimit; }
  std::vector<int> rules() const;
};

enum class Recording { None, Rules, Full };

struct RunOptions {
  std::size_t step_limit = 1'000'000;
  Recording recording = Recording::Full;
  const OperatorSemantics* semantics = nullptr;
};

// <answer> block with one <step> per trace entry, four-space indentation.
std::string trace_to_xml(const Trace& t);
// <answer> block listing final values, or ##timeout## / ##error##.
std::string final_state_to_xml(const Trace& t);
std::string store_to_xml(const Store& s, int indent);

}  // namespace impbench

#endif  // IMPBENCH_TRACE_HPP_
