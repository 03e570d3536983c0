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

#include "impbench/scoring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "impbench/k.hpp"
#include "impbench/sos.hpp"
#include "json.hpp"

namespace impbench {

namespace {

struct Element {
  std::string_view name;
  std::string_view attrs;
  std::string_view inner;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' ||
         c == '.' || static_cast<unsigned char>(c) >= 0x80;
}

// Position just past "<name" if an opening tag for name starts at pos.
bool opens_at(std::string_view text, std::size_t pos, std::string_view name) {
  if (text.compare(pos, 1 + name.size(), "<" + std::string(name)) != 0) return false;
  const std::size_t after = pos + 1 + name.size();
  return after < text.size() && (text[after] == '>' || is_space(text[after]));
}

bool closes_at(std::string_view text, std::size_t pos, std::string_view name) {
  return text.compare(pos, 3 + name.size(), "</" + std::string(name) + ">") == 0;
}

// Last element named name that is not nested in another element of the same
// name. Surrounding text is ignored.
std::optional<Element> last_block(std::string_view text, std::string_view name) {
  std::optional<Element> found;
  int depth = 0;
  std::size_t inner_start = 0;
  std::size_t attr_start = 0;
  std::string_view attrs;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '<') continue;
    if (opens_at(text, i, name)) {
      const std::size_t gt = text.find('>', i);
      if (gt == std::string_view::npos) break;
      if (depth == 0) {
        attr_start = i + 1 + name.size();
        attrs = text.substr(attr_start, gt - attr_start);
        inner_start = gt + 1;
      }
      ++depth;
      i = gt;
    } else if (depth > 0 && closes_at(text, i, name)) {
      if (--depth == 0) {
        found = Element{name, trim(attrs), text.substr(inner_start, i - inner_start)};
      }
      i += 2 + name.size();
    }
  }
  return found;
}

// Flat list of child elements. Fails if non-space text sits between them.
std::optional<std::vector<Element>> children(std::string_view body) {
  std::vector<Element> out;
  std::size_t i = 0;
  while (true) {
    while (i < body.size() && is_space(body[i])) ++i;
    if (i >= body.size()) return out;
    if (body[i] != '<') return std::nullopt;
    std::size_t j = i + 1;
    while (j < body.size() && name_char(body[j])) ++j;
    const std::string_view name = body.substr(i + 1, j - i - 1);
    const std::size_t gt = body.find('>', j);
    if (name.empty() || gt == std::string_view::npos) return std::nullopt;
    const std::string_view attrs = trim(body.substr(j, gt - j));
    int depth = 1;
    std::size_t k = gt + 1;
    std::size_t close = std::string_view::npos;
    while (k < body.size()) {
      if (body[k] == '<') {
        if (opens_at(body, k, name)) {
          ++depth;
        } else if (closes_at(body, k, name) && --depth == 0) {
          close = k;
          break;
        }
      }
      ++k;
    }
    if (close == std::string_view::npos) return std::nullopt;
    out.push_back(Element{name, attrs, body.substr(gt + 1, close - gt - 1)});
    i = close + 3 + name.size();
  }
}

std::optional<VarValues> parse_vars(std::string_view body) {
  const auto elems = children(body);
  if (!elems) return std::nullopt;
  VarValues out;
  for (const Element& e : *elems) {
    Value v;
    if (!e.attrs.empty() || !parse_value(e.inner, v)) return std::nullopt;
    const std::string name(e.name);
    if (std::any_of(out.begin(), out.end(),
                    [&name](const auto& p) { return p.first == name; })) {
      return std::nullopt;
    }
    out.emplace_back(name, std::move(v));
  }
  return out;
}

std::optional<int> parse_rule_id(std::string_view text) {
  Value v;
  if (!parse_value(text, v) || !v.is_int()) return std::nullopt;
  if (v.as_int() < 0 || v.as_int() > 100000) return std::nullopt;
  return static_cast<int>(v.as_int());
}

ParsedAnswer malformed(std::string reason) {
  ParsedAnswer a;
  a.kind = ParsedAnswer::Kind::Malformed;
  a.reason = std::move(reason);
  return a;
}

bool same_values(const VarValues& a, const VarValues& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [name, v] : a) {
    const auto it = std::find_if(b.begin(), b.end(),
                                 [&name](const auto& p) { return p.first == name; });
    if (it == b.end() || !(it->second == v)) return false;
  }
  return true;
}

const Value* lookup(const VarValues& vs, const std::string& name) {
  for (const auto& [n, v] : vs) {
    if (n == name) return &v;
  }
  return nullptr;
}

const RuleInfo& info_for(Style style, int rule) {
  return style == Style::Sos ? sos::rule_info(rule) : k::rule_info(rule);
}

}  // namespace

ParsedAnswer parse_state_answer(std::string_view text) {
  const auto block = last_block(text, "answer");
  if (!block) return malformed("no <answer> block");
  const std::string_view inner = trim(block->inner);
  ParsedAnswer a;
  if (inner == "##timeout##") {
    a.kind = ParsedAnswer::Kind::Timeout;
    return a;
  }
  if (inner == "##error##") {
    a.kind = ParsedAnswer::Kind::Error;
    return a;
  }
  auto vars = parse_vars(inner);
  if (!vars) return malformed("unreadable variable list");
  a.kind = ParsedAnswer::Kind::State;
  a.values = std::move(*vars);
  return a;
}

ParsedAnswer parse_rule_answer(std::string_view text) {
  const auto block = last_block(text, "ans");
  if (!block) return malformed("no <ans> block");
  const auto answers = children(block->inner);
  if (!answers) return malformed("unreadable <ans> block");
  ParsedAnswer a;
  a.kind = ParsedAnswer::Kind::Rules;
  for (const Element& e : *answers) {
    if (e.name != "answer") return malformed("unexpected <" + std::string(e.name) + ">");
    const std::size_t q1 = e.attrs.find('"');
    const std::size_t q2 = q1 == std::string_view::npos ? q1 : e.attrs.find('"', q1 + 1);
    if (e.attrs.substr(0, 2) != "id" || q2 == std::string_view::npos) {
      return malformed("answer without id");
    }
    const auto id = parse_rule_id(e.attrs.substr(q1 + 1, q2 - q1 - 1));
    const auto rules = children(e.inner);
    if (!id || !rules || a.rules.count(*id) != 0) return malformed("bad answer block");
    std::vector<int> seq;
    for (const Element& r : *rules) {
      const auto rid = r.name == "rule" ? parse_rule_id(r.inner) : std::nullopt;
      if (!rid) return malformed("bad <rule> entry");
      seq.push_back(*rid);
    }
    a.rules[*id] = std::move(seq);
  }
  return a;
}

ParsedAnswer parse_trace_answer(std::string_view text) {
  const auto block = last_block(text, "answer");
  if (!block) return malformed("no <answer> block");
  const auto steps = children(block->inner);
  if (!steps) return malformed("unreadable <answer> block");
  ParsedAnswer a;
  a.kind = ParsedAnswer::Kind::Trace;
  for (const Element& s : *steps) {
    if (s.name != "step") return malformed("unexpected <" + std::string(s.name) + ">");
    const auto parts = children(s.inner);
    if (!parts || parts->size() != 2 || (*parts)[0].name != "rule" ||
        (*parts)[1].name != "program_state") {
      return malformed("step needs <rule> then <program_state>");
    }
    const auto rule = parse_rule_id((*parts)[0].inner);
    auto vars = parse_vars((*parts)[1].inner);
    if (!rule || !vars) return malformed("bad step contents");
    a.steps.push_back(ParsedAnswer::Step{*rule, std::move(*vars)});
  }
  return a;
}

StateScore score_pred_state(const ParsedAnswer& ans, const ParsedAnswer& gold,
                            const std::vector<std::string>& scored) {
  StateScore s;
  if (gold.kind != ParsedAnswer::Kind::State) {
    s.exact = ans.kind == gold.kind;
    s.var_fraction = s.exact ? 1.0 : 0.0;
    return s;
  }
  if (ans.kind != ParsedAnswer::Kind::State) return s;
  s.exact = same_values(ans.values, gold.values);
  if (scored.empty()) {
    s.var_fraction = s.exact ? 1.0 : 0.0;
    return s;
  }
  std::size_t correct = 0;
  for (const std::string& name : scored) {
    const Value* g = lookup(gold.values, name);
    const Value* p = lookup(ans.values, name);
    if (g && p && *g == *p) ++correct;
  }
  s.var_fraction = static_cast<double>(correct) / static_cast<double>(scored.size());
  return s;
}

std::vector<bool> score_pred_rule(const ParsedAnswer& ans,
                                  const std::vector<std::vector<int>>& gold) {
  std::vector<bool> out(gold.size(), false);
  if (ans.kind != ParsedAnswer::Kind::Rules) return out;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto it = ans.rules.find(static_cast<int>(i + 1));
    out[i] = it != ans.rules.end() && it->second == gold[i];
  }
  return out;
}

bool score_pred_trace(const ParsedAnswer& ans, const ParsedAnswer& gold) {
  if (ans.kind != ParsedAnswer::Kind::Trace || gold.kind != ParsedAnswer::Kind::Trace) {
    return false;
  }
  if (ans.steps.size() != gold.steps.size()) return false;
  for (std::size_t i = 0; i < ans.steps.size(); ++i) {
    if (ans.steps[i].rule != gold.steps[i].rule ||
        !same_values(ans.steps[i].state, gold.steps[i].state)) {
      return false;
    }
  }
  return true;
}

std::optional<std::size_t> first_mismatch(const std::vector<int>& gold,
                                          const std::vector<int>& predicted) {
  const std::size_t n = std::min(gold.size(), predicted.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (gold[i] != predicted[i]) return i;
  }
  if (gold.size() == predicted.size()) return std::nullopt;
  return n;
}

std::vector<MismatchRates> first_mismatch_stats(const std::vector<RulePair>& pairs) {
  std::vector<MismatchRates> out;
  for (const Style style : {Style::Sos, Style::K}) {
    MismatchRates m;
    m.style = style;
    bool any = false;
    for (const RulePair& p : pairs) {
      if (p.style != style) continue;
      any = true;
      for (int r : p.gold) ++m.occurrences[r];
      const auto pos = first_mismatch(p.gold, p.predicted);
      // A longer prediction diverges past the end of gold and has no gold
      // rule to blame.
      if (pos && *pos < p.gold.size()) ++m.first[p.gold[*pos]];
    }
    if (!any) continue;
    for (const auto& [rule, occ] : m.occurrences) {
      const auto it = m.first.find(rule);
      const double rate = it == m.first.end()
                              ? 0.0
                              : static_cast<double>(it->second) / static_cast<double>(occ);
      m.rule_rate[rule] = rate;
      const RuleCategory c = info_for(style, rule).category;
      auto [slot, inserted] = m.category_rate.emplace(c, rate);
      if (!inserted) slot->second = std::max(slot->second, rate);
    }
    out.push_back(std::move(m));
  }
  return out;
}

ScoreReport score_jsonl(TaskKind task, std::istream& gold, std::istream& responses) {
  using nlohmann::json;
  std::map<std::string, std::string> answers;
  std::string line;
  while (std::getline(responses, line)) {
    if (trim(line).empty()) continue;
    const json j = json::parse(line);
    answers[j.at("instance_id").get<std::string>()] =
        j.at("response_text").get<std::string>();
  }

  ScoreReport report;
  report.task = task;
  std::vector<RulePair> pairs;
  std::size_t questions = 0;
  std::size_t questions_right = 0;
  double fraction_sum = 0;
  while (std::getline(gold, line)) {
    if (trim(line).empty()) continue;
    const json j = json::parse(line);
    if (parse_task(j.at("task").get<std::string>()) != task) continue;
    InstanceScore s;
    s.id = j.at("id").get<std::string>();
    s.task = task;
    const std::string style = j.at("style").get<std::string>();
    s.style = style == "nosem" ? Style::Sos : parse_style(style);
    const json& g = j.at("gold");
    const auto it = answers.find(s.id);
    if (it == answers.end()) ++report.missing_responses;
    const std::string response = it == answers.end() ? std::string() : it->second;
    switch (task) {
      case TaskKind::State: {
        const ParsedAnswer gold_ans = parse_state_answer(g.at("answer").get<std::string>());
        const StateScore sc =
            score_pred_state(parse_state_answer(response), gold_ans,
                             g.at("scored_variables").get<std::vector<std::string>>());
        s.exact = sc.exact;
        s.var_fraction = sc.var_fraction;
        break;
      }
      case TaskKind::Rule: {
        std::vector<std::vector<int>> seqs;
        for (const json& q : g.at("questions")) {
          seqs.push_back(q.at("rules").get<std::vector<int>>());
        }
        const ParsedAnswer ans = parse_rule_answer(response);
        s.questions = score_pred_rule(ans, seqs);
        s.exact = std::all_of(s.questions.begin(), s.questions.end(),
                              [](bool b) { return b; });
        for (std::size_t i = 0; i < seqs.size(); ++i) {
          std::vector<int> predicted;
          if (ans.kind == ParsedAnswer::Kind::Rules) {
            const auto found = ans.rules.find(static_cast<int>(i + 1));
            if (found != ans.rules.end()) predicted = found->second;
          }
          pairs.push_back(RulePair{s.style, seqs[i], std::move(predicted)});
        }
        questions += seqs.size();
        questions_right += static_cast<std::size_t>(
            std::count(s.questions.begin(), s.questions.end(), true));
        break;
      }
      case TaskKind::Trace: {
        const ParsedAnswer gold_ans = parse_trace_answer(g.at("answer").get<std::string>());
        s.exact = score_pred_trace(parse_trace_answer(response), gold_ans);
        break;
      }
    }
    fraction_sum += s.var_fraction;
    report.instances.push_back(std::move(s));
  }

  const std::size_t n = report.instances.size();
  if (task == TaskKind::Rule) {
    report.accuracy = questions == 0 ? 0.0
                                     : static_cast<double>(questions_right) /
                                           static_cast<double>(questions);
    report.mismatch = first_mismatch_stats(pairs);
  } else if (n > 0) {
    const auto exact = std::count_if(report.instances.begin(), report.instances.end(),
                                     [](const InstanceScore& s) { return s.exact; });
    report.accuracy = static_cast<double>(exact) / static_cast<double>(n);
  }
  if (task == TaskKind::State && n > 0) {
    report.mean_var_fraction = fraction_sum / static_cast<double>(n);
  }
  return report;
}

std::string report_to_json(const ScoreReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["task"] = task_name(r.task);
  j["instances"] = r.instances.size();
  j["accuracy"] = r.accuracy;
  if (r.task == TaskKind::State) j["mean_var_fraction"] = r.mean_var_fraction;
  j["missing_responses"] = r.missing_responses;
  ordered_json per = ordered_json::array();
  for (const InstanceScore& s : r.instances) {
    ordered_json e{{"id", s.id}, {"exact", s.exact}};
    if (r.task == TaskKind::State) e["var_fraction"] = s.var_fraction;
    if (r.task == TaskKind::Rule) e["questions"] = s.questions;
    per.push_back(std::move(e));
  }
  j["per_instance"] = std::move(per);
  ordered_json mm = ordered_json::array();
  for (const MismatchRates& m : r.mismatch) {
    ordered_json cats = ordered_json::object();
    for (const auto& [c, rate] : m.category_rate) cats[std::string(category_name(c))] = rate;
    ordered_json rules = ordered_json::object();
    for (const auto& [rule, rate] : m.rule_rate) rules[std::to_string(rule)] = rate;
    mm.push_back({{"style", style_name(m.style)}, {"categories", cats}, {"rules", rules}});
  }
  j["first_mismatch"] = std::move(mm);
  return j.dump(2);
}

std::string mismatch_csv(const ScoreReport& r) {
  std::ostringstream out;
  out << "style,category,rate\n";
  for (const MismatchRates& m : r.mismatch) {
    for (const auto& [c, rate] : m.category_rate) {
      out << style_name(m.style) << ",\"" << category_name(c) << "\"," << rate << "\n";
    }
  }
  return out.str();
}

}  // namespace impbench
