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

#include "impbench/trace.hpp"

#include <stdexcept>

namespace impbench {

std::string_view style_name(Style s) { return s == Style::Sos ? "sos" : "k"; }

Style parse_style(std::string_view s) {
  if (s == "sos" || s == "SOS") return Style::Sos;
  if (s == "k" || s == "K") return Style::K;
  throw std::invalid_argument("unknown semantics style: " + std::string(s));
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Normal:
      return "normal";
    case Outcome::Halted:
      return "halted";
    case Outcome::Error:
      return "error";
    case Outcome::StepLimit:
      return "step_limit";
  }
  return "?";
}

std::string_view category_name(RuleCategory c) {
  switch (c) {
    case RuleCategory::Id:
      return "Id";
    case RuleCategory::Arithmetic:
      return "Arithmetic";
    case RuleCategory::Relational:
      return "Relational";
    case RuleCategory::Logical:
      return "Logical";
    case RuleCategory::Assignment:
      return "Assignment";
    case RuleCategory::Conditional:
      return "Conditional";
    case RuleCategory::Loop:
      return "Loop";
    case RuleCategory::Halt:
      return "Halt";
    case RuleCategory::BreakContinue:
      return "Break & Continue";
    case RuleCategory::Declaration:
      return "Declaration";
    case RuleCategory::Error:
      return "Error";
  }
  return "?";
}

const OperatorSemantics& OperatorSemantics::standard() {
  static const OperatorSemantics s = [] {
    std::array<BinaryOp, kNumBinaryOps> id{};
    for (std::size_t i = 0; i < kNumBinaryOps; ++i) {
      id[i] = static_cast<BinaryOp>(i);
    }
    return from_table(id);
  }();
  return s;
}

OperatorSemantics OperatorSemantics::from_table(
    const std::array<BinaryOp, kNumBinaryOps>& meaning) {
  OperatorSemantics s;
  s.meaning_ = meaning;
  return s;
}

bool OperatorSemantics::is_identity() const {
  for (std::size_t i = 0; i < kNumBinaryOps; ++i) {
    if (meaning_[i] != static_cast<BinaryOp>(i)) return false;
  }
  return true;
}

std::vector<int> Trace::rules() const {
  std::vector<int> out;
  out.reserve(steps.size());
  for (const TraceStep& s : steps) out.push_back(s.rule);
  return out;
}

std::string store_to_xml(const Store& s, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 4, ' ');
  std::string out;
  for (const auto& [name, value] : s) {
    out += pad + "<" + name + ">" + value.to_string() + "</" + name + ">\n";
  }
  return out;
}

std::string trace_to_xml(const Trace& t) {
  if (t.steps.empty()) return "<answer></answer>";
  std::string out = "<answer>\n";
  for (const TraceStep& s : t.steps) {
    if (!s.state) throw std::invalid_argument("trace was recorded without states");
    out += "    <step>\n";
    out += "        <rule>" + std::to_string(s.rule) + "</rule>\n";
    out += "        <program_state>\n";
    out += store_to_xml(*s.state, 3);
    out += "        </program_state>\n";
    out += "    </step>\n";
  }
  out += "</answer>";
  return out;
}

std::string final_state_to_xml(const Trace& t) {
  if (t.outcome == Outcome::StepLimit) return "<answer>##timeout##</answer>";
  if (t.outcome == Outcome::Error) return "<answer>##error##</answer>";
  return "<answer>\n" + store_to_xml(t.final_store, 1) + "</answer>";
}

}  // namespace impbench
