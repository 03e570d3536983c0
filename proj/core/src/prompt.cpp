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

#include "json.hpp"

#include "assets.hpp"
#include "impbench/curation.hpp"
#include "impbench/syntax.hpp"

namespace impbench {

namespace {

std::string_view preamble(const TaskInstance& inst) {
  if (!inst.with_semantics) return assets::preamble_nosem_txt;
  return inst.style == Style::Sos ? assets::preamble_sos_txt : assets::preamble_k_txt;
}

std::string_view task_block(const TaskInstance& inst) {
  const bool sos = inst.style == Style::Sos;
  switch (inst.task) {
    case TaskKind::State:
      return assets::task_state_txt;
    case TaskKind::Rule:
      return sos ? assets::task_rule_sos_txt : assets::task_rule_k_txt;
    case TaskKind::Trace:
      return sos ? assets::task_trace_sos_txt : assets::task_trace_k_txt;
  }
  return {};
}

std::string_view suffix(TaskKind t, bool cot) {
  switch (t) {
    case TaskKind::State:
      return cot ? assets::suffix_state_cot_txt : assets::suffix_state_txt;
    case TaskKind::Rule:
      return cot ? assets::suffix_rule_cot_txt : assets::suffix_rule_txt;
    case TaskKind::Trace:
      return cot ? assets::suffix_trace_cot_txt : assets::suffix_trace_txt;
  }
  return {};
}

}  // namespace

std::string store_to_dict(const Store& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [name, value] : s) {
    if (!first) out += ", ";
    first = false;
    out += "'" + name + "': " + value.to_string();
  }
  return out + "}";
}

std::string control_to_text(const ControlStack& chi, MutationKind k) {
  std::string out;
  const auto& items = chi.items();
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    const Program one = transform_program(Program{{*it}}, k);
    out += render_header(*one.statements.front(), profile_for(k)) + " :: ";
  }
  return out + "ε";
}

std::string questions_text(const std::vector<ProcessedStatement>& qs,
                           MutationKind k) {
  std::string out;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (i > 0) out += "\n";
    out += "Question " + std::to_string(i + 1) + ":\n";
    out += "** Program:**\n" + mutated_source(qs[i].snippet, k) + "\n";
    out += "**Program state(σ) before execution:**\n" + store_to_dict(qs[i].sigma) +
           "\n\n";
    out += "**Control stack(χ) before execution:**\n " + control_to_text(qs[i].chi, k) +
           "\n";
  }
  return out;
}

std::string rule_answer_xml(const std::vector<std::vector<int>>& seqs) {
  std::string out = "<ans>\n";
  for (std::size_t i = 0; i < seqs.size(); ++i) {
    out += "    <answer id=\"" + std::to_string(i + 1) + "\">\n";
    for (int r : seqs[i]) out += "        <rule>" + std::to_string(r) + "</rule>\n";
    out += "    </answer>\n";
  }
  return out + "</ans>";
}

std::string state_answer_xml(const StateGold& g) {
  switch (g.kind) {
    case StateGold::Kind::Timeout:
      return "<answer>##timeout##</answer>";
    case StateGold::Kind::Error:
      return "<answer>##error##</answer>";
    case StateGold::Kind::Values:
      break;
  }
  return "<answer>\n" + store_to_xml(g.values, 1) + "</answer>";
}

std::string render_prompt(const TaskInstance& inst, bool cot) {
  auto values = placeholder_values(inst.mutation);
  values["program"] = inst.source;
  values["syntax"] = mutate_syntax(inst.mutation);
  values["semantics"] = mutate_semantics(inst.style, inst.mutation);
  if (inst.task == TaskKind::Rule) {
    values["questions"] = questions_text(inst.questions, inst.mutation);
  }
  return fill_template(preamble(inst), values) + "\n" +
         fill_template(task_block(inst), values) + "\n" +
         fill_template(suffix(inst.task, cot), values);
}

std::string instance_to_json(const TaskInstance& inst) {
  using nlohmann::ordered_json;
  ordered_json gold;
  gold["answer"] = inst.gold_answer;
  switch (inst.task) {
    case TaskKind::State: {
      static constexpr const char* kKinds[] = {"values", "timeout", "error"};
      gold["kind"] = kKinds[static_cast<int>(inst.state.kind)];
      ordered_json values = ordered_json::object();
      for (const auto& [name, v] : inst.state.values) values[name] = v.to_string();
      gold["values"] = values;
      gold["scored_variables"] = inst.state.scored;
      break;
    }
    case TaskKind::Rule: {
      ordered_json qs = ordered_json::array();
      for (const ProcessedStatement& q : inst.questions) {
        qs.push_back({{"kind", stmt_kind_name(q.kind)},
                      {"snippet", mutated_source(q.snippet, inst.mutation)},
                      {"sigma", store_to_dict(q.sigma)},
                      {"chi", control_to_text(q.chi, inst.mutation)},
                      {"rules", q.rules}});
      }
      gold["questions"] = qs;
      break;
    }
    case TaskKind::Trace:
      gold["rules"] = inst.trace_rules;
      break;
  }
  ordered_json j;
  j["id"] = inst.id;
  j["program_id"] = inst.program_id;
  j["task"] = task_name(inst.task);
  j["style"] = style_name(inst.style);
  j["mutation"] = mutation_name(inst.mutation);
  j["semantics"] = inst.with_semantics;
  j["source"] = inst.source;
  j["prompt"] = render_prompt(inst, false);
  j["prompt_cot"] = render_prompt(inst, true);
  j["gold"] = gold;
  return j.dump();
}

}  // namespace impbench
