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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "impbench/curation.hpp"
#include "impbench/fuzzer.hpp"
#include "impbench/k.hpp"
#include "impbench/metrics.hpp"
#include "impbench/mutation.hpp"
#include "impbench/sos.hpp"
#include "impbench/syntax.hpp"
#include "json.hpp"

namespace impbench {
namespace {

using V = std::vector<int>;

Program P(const std::string& src) { return parse(src, LexemeProfile::standard()); }

std::string Render(const Program& p) { return render(p, LexemeProfile::standard()); }

std::string Squash(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  return s;
}

Store MakeStore(std::initializer_list<std::pair<const char*, int>> xs) {
  Store s;
  for (const auto& [k, v] : xs) s.declare(k, Value(v));
  return s;
}

TEST(ProcessStatement, WhileBodyBecomesHalt) {
  Program src = P("while (n <= 0) { sum = sum + n; n = n - 1; };");
  StatementContext ctx{src.statements[0], MakeStore({{"n", 100}, {"sum", 0}}), {}, {}};
  ProcessedStatement ps = process_statement(ctx);
  EXPECT_EQ(ps.kind, StmtKind::While);
  EXPECT_TRUE(ps.snippet == P("while (n <= 0) { halt; };"));
  EXPECT_EQ(gold_rules(ps, Style::Sos), (V{67, 68, 32, 1, 35, 69}));
  EXPECT_EQ(gold_rules(ps, Style::K), (V{24, 25, 1, 13, 23, 27}));
}

TEST(ProcessStatement, IdentityRows) {
  Program src = P("a = 1; int b; halt;");
  Store s = MakeStore({{"a", 0}});
  for (const StmtPtr& st : src.statements) {
    ProcessedStatement ps = process_statement({st, s, {}, {}});
    EXPECT_TRUE(ps.snippet == Program{{st}});
    EXPECT_TRUE(ps.sigma == s);
  }
  ProcessedStatement assign = process_statement({src.statements[0], s, {}, {}});
  EXPECT_EQ(gold_rules(assign, Style::Sos), (V{5}));
  EXPECT_EQ(gold_rules(assign, Style::K), (V{21}));
}

TEST(ProcessStatement, IfBranchesBecomeHalt) {
  Program src = P("if (a < 1) { a = 2; } else { a = 3; a = 4; };");
  ProcessedStatement ps =
      process_statement({src.statements[0], MakeStore({{"a", 0}}), {}, {}});
  EXPECT_TRUE(ps.snippet == P("if (a < 1) { halt; } else { halt; };"));
  EXPECT_EQ(gold_rules(ps, Style::Sos), (V{64, 28, 1, 30, 65, 78}));
}

TEST(ProcessStatement, BreakKeepsLoopSuffix) {
  Program src = P("while (i < 3) { i = i + 1; break; i = 7; };");
  const StmtPtr loop = src.statements[0];
  const StmtPtr brk = std::get<While>(loop->node).body[1];
  ControlStack chi;
  chi.push(loop);
  StatementContext ctx{brk, MakeStore({{"i", 1}}), chi, MakeStore({{"i", 0}})};
  ProcessedStatement ps = process_statement(ctx);
  EXPECT_TRUE(ps.snippet == P("while (i < 3) { break; i = 7; };")) << Render(ps.snippet);
  EXPECT_TRUE(ps.sigma == MakeStore({{"i", 0}}));
  EXPECT_TRUE(ps.chi.empty());
  EXPECT_EQ(gold_rules(ps, Style::Sos), (V{67, 68, 28, 1, 30, 70, 71, 72}));
}

TEST(ProcessStatement, ContinueRunsOneIteration) {
  Program src = P("while (i < 3) { i = i + 1; continue; i = 7; };");
  const StmtPtr loop = src.statements[0];
  const StmtPtr cont = std::get<While>(loop->node).body[1];
  ControlStack chi;
  chi.push(loop);
  Store iter = MakeStore({{"i", 0}, {"ble", 5}});
  ProcessedStatement ps = process_statement({cont, iter, chi, iter});
  EXPECT_TRUE(ps.chi.empty());
  const auto& w = std::get<While>(ps.snippet.statements.at(0)->node);
  ASSERT_EQ(w.body.size(), 3u);
  const std::string counter = std::get<Assign>(w.body[0]->node).target;
  EXPECT_EQ(counter.rfind("ble", 0), 0u);
  EXPECT_NE(counter, "ble");
  EXPECT_EQ(*ps.sigma.find(counter), Value(0));
  EXPECT_EQ(*ps.sigma.find("ble"), Value(5));
  EXPECT_EQ(w.body[1]->kind(), StmtKind::Continue);
  const std::string expect = "while ((i < 3) && (" + counter + " != 1)) { " +
                             counter + " = " + counter + " + 1; continue; i = 7; };";
  EXPECT_TRUE(ps.snippet == P(expect)) << Render(ps.snippet);
  for (Style st : {Style::Sos, Style::K}) {
    V rules = gold_rules(ps, st);
    const int enter = st == Style::Sos ? int{sos::kLoopTrue} : int{k::kIfTrue};
    EXPECT_EQ(std::count(rules.begin(), rules.end(), enter), 1);
  }
}

TEST(ProcessStatement, JumpOutsideLoopThrows) {
  Program src = P("break;");
  EXPECT_THROW(process_statement({src.statements[0], {}, {}, {}}), NoEnclosingLoop);
}

TEST(ExecutedStatements, Mbpp962Instances) {
  std::size_t n = 0;
  std::size_t loops_seen = 0;
  for_each_executed_statement(testing::mbpp_962(), 1000000,
                              [&](const StatementContext& ctx) {
                                ++n;
                                if (!ctx.chi.empty()) ++loops_seen;
                              });
  // 4 declarations, 4 initial assignments, the loop, then per iteration the
  // if and the increment, plus 3 additions.
  EXPECT_EQ(n, 4u + 4u + 1u + 12u + 3u);
  EXPECT_EQ(loops_seen, 15u);
}

TEST(ExecutedStatements, PreStateBeforeFirstStep) {
  Program p = P("int a; a = 5; a = a + 1;");
  std::vector<Store> pre;
  for_each_executed_statement(p, 1000, [&](const StatementContext& c) { pre.push_back(c.sigma); });
  ASSERT_EQ(pre.size(), 3u);
  EXPECT_TRUE(pre[0].empty());
  EXPECT_EQ(*pre[2].find("a"), Value(5));
}

TEST(SamplePredRule, GroupsByRuleSequence) {
  auto qs = sample_pred_rule(P("int a; a = 1; a = a + 1;"), Style::Sos,
                             MutationKind::Standard, 0);
  EXPECT_EQ(qs.size(), 3u);
  auto same = sample_pred_rule(P("int a; int b; a = 1; b = 2;"), Style::Sos,
                               MutationKind::Standard, 0);
  EXPECT_EQ(same.size(), 2u);
}

TEST(SamplePredRule, CapsAtTen) {
  Program p = P(
      "int a; a = 1; a = a + 1; a = a - 1; a = a * 2; a = a / 1; a = a % 5;"
      " a = 1 + a; a = 1 - a; a = 2 * a; a = 4 / a; a = 9 % a;"
      " a = a + a; a = a + 1 + 1; a = (a + 1) * 2;");
  auto all = sample_pred_rule(p, Style::Sos, MutationKind::Standard, 1, 100);
  EXPECT_EQ(all.size(), 15u);
  auto capped = sample_pred_rule(p, Style::Sos, MutationKind::Standard, 1);
  EXPECT_EQ(capped.size(), 10u);
  std::set<V> seen;
  for (const auto& q : capped) EXPECT_TRUE(seen.insert(q.rules).second);
}

TEST(SamplePredRule, GoldReproducibleAndDeterministic) {
  for (Style st : {Style::Sos, Style::K}) {
    for (MutationKind k : {MutationKind::Standard, MutationKind::KeywordSwap}) {
      auto a = sample_pred_rule(testing::mbpp_962(), st, k, 7);
      auto b = sample_pred_rule(testing::mbpp_962(), st, k, 7);
      ASSERT_EQ(a.size(), b.size());
      ASSERT_LE(a.size(), 10u);
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].rules, b[i].rules);
        EXPECT_TRUE(a[i].sigma == b[i].sigma);
        EXPECT_EQ(gold_rules(a[i], st, k), a[i].rules);
      }
    }
  }
}

TEST(GoldState, Outcomes) {
  StateGold g = gold_final_state(testing::mbpp_962(), Style::Sos, MutationKind::Standard);
  EXPECT_EQ(g.kind, StateGold::Kind::Values);
  EXPECT_EQ(*g.values.find("sum"), Value(18));
  EXPECT_EQ(g.scored, (std::vector<std::string>{"l", "r", "sum", "i"}));
  EXPECT_EQ(gold_final_state(P("while (true) { };"), Style::K, MutationKind::Standard, 100).kind,
            StateGold::Kind::Timeout);
  EXPECT_EQ(gold_final_state(P("int x; x = 1 / 0;"), Style::Sos, MutationKind::Standard).kind,
            StateGold::Kind::Error);
  EXPECT_EQ(Squash(state_answer_xml(
                gold_final_state(P("int x; x = 1 / 0;"), Style::Sos, MutationKind::Standard))),
            "<answer>##error##</answer>");
}

TEST(GoldState, EqualsFinalTraceState) {
  for (Style st : {Style::Sos, Style::K}) {
    for (MutationKind k : {MutationKind::Standard, MutationKind::KeywordSwap,
                           MutationKind::KeywordObf}) {
      StateGold g = gold_final_state(testing::mbpp_962(), st, k);
      Trace t = gold_trace(testing::mbpp_962(), st, k);
      EXPECT_TRUE(*t.steps.back().state == g.values);
    }
  }
}

TEST(GoldTrace, EmptyProgram) {
  EXPECT_EQ(Squash(gold_trace_xml(Program{}, Style::Sos, MutationKind::Standard)),
            "<answer></answer>");
}

TEST(GoldTrace, Anchors) {
  Program p = testing::load_program("loop_halt.imp");
  EXPECT_EQ(gold_trace_xml(p, Style::Sos, MutationKind::Standard) + "\n",
            testing::test_data("loop_halt_sos.xml"));
  EXPECT_EQ(gold_trace_xml(p, Style::K, MutationKind::Standard) + "\n",
            testing::test_data("loop_halt_k.xml"));
  EXPECT_THROW(gold_trace(P("while (true) { };"), Style::Sos, MutationKind::Standard, 50),
               RequiresTermination);
}

TEST(Rendering, DictAndControl) {
  EXPECT_EQ(store_to_dict(MakeStore({{"n", 100}, {"sum", 0}})), "{'n': 100, 'sum': 0}");
  Program p = P("while (i < 2) { while (true) { }; };");
  ControlStack chi;
  chi.push(p.statements[0]);
  chi.push(std::get<While>(p.statements[0]->node).body[0]);
  EXPECT_EQ(control_to_text(chi, MutationKind::Standard),
            "while (true) :: while (i < 2) :: ε");
  EXPECT_EQ(Squash(rule_answer_xml({{67, 69}, {5}})),
            "<ans><answerid=\"1\"><rule>67</rule><rule>69</rule></answer>"
            "<answerid=\"2\"><rule>5</rule></answer></ans>");
}

CurationOptions Opts(TaskKind t, Style s, MutationKind k, bool sem = true) {
  CurationOptions o;
  o.task = t;
  o.style = s;
  o.mutation = k;
  o.with_semantics = sem;
  return o;
}

TEST(Prompt, SosStateMentionsTerminalConfigurations) {
  TaskInstance inst = make_instance("mbpp_962", testing::mbpp_962(),
                                    Opts(TaskKind::State, Style::Sos, MutationKind::Standard));
  const std::string prompt = render_prompt(inst, false);
  EXPECT_NE(prompt.find("⟨ε,σ,χ⟩"), std::string::npos);
  EXPECT_NE(prompt.find("sum = sum + i;"), std::string::npos);
  EXPECT_NE(prompt.find("<answer>"), std::string::npos);
  EXPECT_EQ(prompt.find("{program}"), std::string::npos);
  EXPECT_EQ(inst.id, "mbpp_962/state/sos/std");
}

TEST(Prompt, NoSemanticsOmitsDocuments) {
  TaskInstance inst = make_instance(
      "p", testing::mbpp_962(),
      Opts(TaskKind::State, Style::Sos, MutationKind::Standard, false));
  const std::string prompt = render_prompt(inst, false);
  const std::string syntax = mutate_syntax(MutationKind::Standard);
  const std::string semantics = mutate_semantics(Style::Sos, MutationKind::Standard);
  EXPECT_EQ(prompt.find(syntax.substr(0, 60)), std::string::npos);
  EXPECT_EQ(prompt.find(semantics.substr(0, 60)), std::string::npos);
  EXPECT_THROW(make_instance("p", testing::mbpp_962(),
                             Opts(TaskKind::Rule, Style::Sos, MutationKind::Standard, false)),
               std::invalid_argument);
}

TEST(Prompt, ObfuscatedOperators) {
  TaskInstance inst = make_instance("p", testing::mbpp_962(),
                                    Opts(TaskKind::Trace, Style::K, MutationKind::KeywordObf));
  const std::string prompt = render_prompt(inst, true);
  EXPECT_NE(prompt.find("\xF0\x90\x95\x90"), std::string::npos);
  EXPECT_EQ(inst.source.find("while"), std::string::npos);
}

TEST(Prompt, RuleQuestions) {
  TaskInstance inst = make_instance("p", testing::mbpp_962(),
                                    Opts(TaskKind::Rule, Style::Sos, MutationKind::Standard));
  ASSERT_FALSE(inst.questions.empty());
  const std::string prompt = render_prompt(inst, false);
  EXPECT_NE(prompt.find("Question 1:"), std::string::npos);
  EXPECT_NE(prompt.find("Question " + std::to_string(inst.questions.size()) + ":"),
            std::string::npos);
  EXPECT_NE(render_prompt(inst, true), prompt);
}

TEST(Instance, JsonIsDeterministic) {
  for (TaskKind t : {TaskKind::State, TaskKind::Rule, TaskKind::Trace}) {
    CurationOptions o = Opts(t, Style::K, MutationKind::KeywordSwap);
    o.seed = 11;
    const std::string a = instance_to_json(make_instance("m", testing::mbpp_962(), o));
    const std::string b = instance_to_json(make_instance("m", testing::mbpp_962(), o));
    EXPECT_EQ(a, b);
    auto j = nlohmann::json::parse(a);
    EXPECT_EQ(j["task"], std::string(task_name(t)));
    EXPECT_TRUE(j["gold"].contains("answer"));
  }
}

}  // namespace
}  // namespace impbench
