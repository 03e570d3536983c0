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

#include "impbench/curation.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "impbench/k.hpp"
#include "impbench/metrics.hpp"

namespace impbench {

namespace {

Trace run_style(const Program& p, Style style, const RunOptions& opts) {
  return style == Style::Sos ? sos::run(p, opts) : k::run(p, opts);
}

// Statements of the block containing target, starting at target.
bool find_suffix(const StmtList& list, const Stmt* target, StmtList& out) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].get() == target) {
      out.assign(list.begin() + static_cast<std::ptrdiff_t>(i), list.end());
      return true;
    }
    if (const auto* c = std::get_if<IfElse>(&list[i]->node)) {
      if (find_suffix(c->then_body, target, out) ||
          find_suffix(c->else_body, target, out)) {
        return true;
      }
    }
  }
  return false;
}

std::string fresh_name(const Store& s, std::string base) {
  while (s.contains(base)) base += '_';
  return base;
}

}  // namespace

std::string_view task_name(TaskKind t) {
  switch (t) {
    case TaskKind::State:
      return "state";
    case TaskKind::Rule:
      return "rule";
    case TaskKind::Trace:
      return "trace";
  }
  return "?";
}

TaskKind parse_task(std::string_view s) {
  if (s == "state" || s == "PredState") return TaskKind::State;
  if (s == "rule" || s == "PredRule") return TaskKind::Rule;
  if (s == "trace" || s == "PredTrace") return TaskKind::Trace;
  throw std::invalid_argument("unknown task: " + std::string(s));
}

std::vector<std::string> assigned_variables(const Program& p) {
  std::vector<std::string> out;
  for_each_stmt(p.statements, [&out](const Stmt& s) {
    if (const auto* a = std::get_if<Assign>(&s.node)) {
      if (std::find(out.begin(), out.end(), a->target) == out.end()) {
        out.push_back(a->target);
      }
    }
  });
  return out;
}

StateGold gold_final_state(const Program& p, Style style, MutationKind k,
                           std::size_t step_limit) {
  RunOptions opts;
  opts.step_limit = step_limit;
  opts.recording = Recording::None;
  opts.semantics = &semantics_for(k);
  const Trace t = run_style(transform_program(p, k), style, opts);
  StateGold g;
  g.scored = assigned_variables(p);
  switch (t.outcome) {
    case Outcome::StepLimit:
      g.kind = StateGold::Kind::Timeout;
      break;
    case Outcome::Error:
      g.kind = StateGold::Kind::Error;
      break;
    default:
      g.kind = StateGold::Kind::Values;
      g.values = t.final_store;
  }
  return g;
}

ProcessedStatement process_statement(const StatementContext& ctx) {
  ProcessedStatement ps;
  ps.kind = ctx.stmt->kind();
  ps.sigma = ctx.sigma;
  ps.chi = ctx.chi;
  switch (ps.kind) {
    case StmtKind::Decl:
    case StmtKind::Assign:
    case StmtKind::Halt:
      ps.snippet.statements = {ctx.stmt};
      return ps;
    case StmtKind::While: {
      const auto& w = std::get<While>(ctx.stmt->node);
      ps.snippet.statements = {make_while(w.guard, {make_halt()})};
      return ps;
    }
    case StmtKind::IfElse: {
      const auto& c = std::get<IfElse>(ctx.stmt->node);
      ps.snippet.statements = {make_if(c.guard, {make_halt()}, {make_halt()})};
      return ps;
    }
    case StmtKind::Break:
    case StmtKind::Continue:
      break;
  }
  if (ctx.chi.empty()) {
    throw NoEnclosingLoop(std::string(stmt_kind_name(ps.kind)) +
                          " outside a loop");
  }
  const auto& loop = std::get<While>(ctx.chi.top()->node);
  StmtList body;
  if (!find_suffix(loop.body, ctx.stmt.get(), body)) {
    throw NoEnclosingLoop("statement not found in the innermost loop body");
  }
  ps.chi = stack_pop(ctx.chi);
  ps.sigma = ctx.iteration_sigma;
  if (ps.kind == StmtKind::Break) {
    ps.snippet.statements = {make_while(loop.guard, std::move(body))};
    return ps;
  }
  const std::string ble = fresh_name(ps.sigma, "ble");
  ExprPtr guard = make_binary(
      BinaryOp::And, with_parens(loop.guard, 1),
      with_parens(make_binary(BinaryOp::Ne, make_var(ble), make_int(Integer(1))), 1));
  body.insert(body.begin(),
              make_assign(ble, make_binary(BinaryOp::Add, make_var(ble),
                                           make_int(Integer(1)))));
  ps.snippet.statements = {make_while(std::move(guard), std::move(body))};
  ps.sigma.declare(ble, Value(0));
  return ps;
}

std::vector<int> gold_rules(const ProcessedStatement& ps, Style style,
                            MutationKind k, std::size_t step_limit) {
  RunOptions opts;
  opts.step_limit = step_limit;
  opts.recording = Recording::Rules;
  opts.semantics = &semantics_for(k);
  const Program q = transform_program(ps.snippet, k);
  const Trace t =
      style == Style::Sos
          ? sos::run_from(sos::Configuration::initial(q, ps.sigma, ps.chi), opts)
          : k::run_from(k::Configuration::initial(q, ps.sigma), opts);
  return t.rules();
}

void for_each_executed_statement(
    const Program& p, std::size_t step_limit,
    const std::function<void(const StatementContext&)>& f) {
  RunOptions opts;
  opts.step_limit = step_limit;
  opts.recording = Recording::None;
  std::map<const Stmt*, Store> iteration;
  const Stmt* current = nullptr;
  auto observer = [&](int rule, const sos::Configuration& before,
                      const sos::Configuration& after) {
    const std::optional<sos::Item> head = before.head();
    if (head && head->kind == sos::Item::Kind::Stmt) {
      if (head->stmt.get() != current) {
        current = head->stmt.get();
        StatementContext ctx{head->stmt, before.store(), before.control(), {}};
        if (!before.control().empty()) {
          const auto it = iteration.find(before.control().top().get());
          if (it != iteration.end()) ctx.iteration_sigma = it->second;
        }
        f(ctx);
      }
    } else {
      current = nullptr;
    }
    if (rule == sos::kLoopTrue) iteration[after.control().top().get()] = after.store();
  };
  sos::run_from(sos::Configuration::initial(p), opts, observer);
}

std::vector<ProcessedStatement> sample_pred_rule(const Program& p, Style style,
                                                 MutationKind k,
                                                 std::uint64_t seed,
                                                 std::size_t max_questions,
                                                 std::size_t step_limit) {
  struct Group {
    ProcessedStatement rep;
    std::size_t count = 0;
  };
  std::mt19937_64 rng(seed);
  std::vector<Group> groups;
  std::map<std::vector<int>, std::size_t> index;
  for_each_executed_statement(p, step_limit, [&](const StatementContext& ctx) {
    ProcessedStatement ps = process_statement(ctx);
    ps.rules = gold_rules(ps, style, k);
    auto [it, inserted] = index.emplace(ps.rules, groups.size());
    if (inserted) groups.push_back(Group{});
    Group& g = groups[it->second];
    ++g.count;
    // Reservoir of size one keeps a uniform member.
    if (g.count == 1 ||
        std::uniform_int_distribution<std::size_t>(0, g.count - 1)(rng) == 0) {
      g.rep = std::move(ps);
    }
  });
  std::vector<std::size_t> chosen(groups.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) chosen[i] = i;
  if (chosen.size() > max_questions) {
    std::vector<std::size_t> kept;
    std::sample(chosen.begin(), chosen.end(), std::back_inserter(kept),
                max_questions, rng);
    chosen = std::move(kept);
  }
  std::vector<ProcessedStatement> out;
  out.reserve(chosen.size());
  for (std::size_t i : chosen) out.push_back(std::move(groups[i].rep));
  return out;
}

Trace gold_trace(const Program& p, Style style, MutationKind k,
                 std::size_t step_limit) {
  RunOptions opts;
  opts.step_limit = step_limit;
  opts.recording = Recording::Full;
  opts.semantics = &semantics_for(k);
  Trace t = run_style(transform_program(p, k), style, opts);
  if (t.outcome != Outcome::Normal && t.outcome != Outcome::Halted) {
    throw RequiresTermination("trace gold needs a terminating run, got " +
                              std::string(outcome_name(t.outcome)));
  }
  return t;
}

std::string gold_trace_xml(const Program& p, Style style, MutationKind k,
                           std::size_t step_limit) {
  return trace_to_xml(gold_trace(p, style, k, step_limit));
}

TaskInstance make_instance(const std::string& program_id, const Program& p,
                           const CurationOptions& opts) {
  if (!opts.with_semantics && opts.task != TaskKind::State) {
    throw std::invalid_argument("the no-semantics variant exists only for state");
  }
  TaskInstance inst;
  inst.program_id = program_id;
  inst.task = opts.task;
  inst.style = opts.style;
  inst.mutation = opts.mutation;
  inst.with_semantics = opts.with_semantics;
  inst.id = program_id + "/" + std::string(task_name(opts.task)) + "/" +
            (opts.with_semantics ? std::string(style_name(opts.style)) : "nosem") +
            "/" + std::string(mutation_name(opts.mutation));
  inst.source = mutated_source(p, opts.mutation);
  switch (opts.task) {
    case TaskKind::State:
      inst.state = gold_final_state(p, opts.style, opts.mutation, opts.step_limit);
      inst.gold_answer = state_answer_xml(inst.state);
      break;
    case TaskKind::Rule: {
      inst.questions = sample_pred_rule(p, opts.style, opts.mutation, opts.seed,
                                        opts.max_questions, opts.step_limit);
      std::vector<std::vector<int>> seqs;
      for (const ProcessedStatement& q : inst.questions) seqs.push_back(q.rules);
      inst.gold_answer = rule_answer_xml(seqs);
      break;
    }
    case TaskKind::Trace: {
      const Trace t = gold_trace(p, opts.style, opts.mutation, opts.step_limit);
      inst.trace_rules = t.rules();
      inst.gold_answer = trace_to_xml(t);
      break;
    }
  }
  return inst;
}

}  // namespace impbench
