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

#include "impbench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "impbench/sos.hpp"
#include "impbench/syntax.hpp"

namespace impbench {

namespace {

std::size_t nesting(const StmtList& list, StmtKind kind) {
  std::size_t best = 0;
  for (const StmtPtr& s : list) {
    std::size_t here = 0;
    if (const auto* w = std::get_if<While>(&s->node)) {
      here = nesting(w->body, kind) + (kind == StmtKind::While ? 1 : 0);
    } else if (const auto* c = std::get_if<IfElse>(&s->node)) {
      here = std::max(nesting(c->then_body, kind), nesting(c->else_body, kind)) +
             (kind == StmtKind::IfElse ? 1 : 0);
    }
    best = std::max(best, here);
  }
  return best;
}

// Statement-level control-flow graph for reaching definitions.
class FlowGraph {
 public:
  explicit FlowGraph(const Program& p) {
    build(p.statements, kExit, kExit, kExit);
  }

  std::size_t dep_degree() const {
    const std::size_t n = nodes_.size();
    std::vector<std::set<int>> in(n), out(n);
    std::vector<std::vector<int>> preds(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (int s : nodes_[i].succ) {
        if (s != kExit) preds[static_cast<std::size_t>(s)].push_back(static_cast<int>(i));
      }
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        std::set<int> next_in;
        for (int pr : preds[i]) {
          const auto& o = out[static_cast<std::size_t>(pr)];
          next_in.insert(o.begin(), o.end());
        }
        std::set<int> next_out;
        for (int d : next_in) {
          if (nodes_[i].def.empty() || nodes_[static_cast<std::size_t>(d)].def != nodes_[i].def) {
            next_out.insert(d);
          }
        }
        if (!nodes_[i].def.empty()) next_out.insert(static_cast<int>(i));
        if (next_in != in[i] || next_out != out[i]) {
          in[i] = std::move(next_in);
          out[i] = std::move(next_out);
          changed = true;
        }
      }
    }
    std::size_t edges = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (const std::string& v : nodes_[i].uses) {
        for (int d : in[i]) {
          if (nodes_[static_cast<std::size_t>(d)].def == v) ++edges;
        }
      }
    }
    return edges;
  }

 private:
  static constexpr int kExit = -1;

  struct Node {
    std::string def;
    std::set<std::string> uses;
    std::vector<int> succ;
  };

  int add(Node n) {
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  static std::set<std::string> vars_of(const Expr& e) {
    std::set<std::string> out;
    for_each_expr(e, [&](const Expr& x) {
      if (const auto* v = std::get_if<VarRef>(&x.node)) out.insert(v->name);
    });
    return out;
  }

  // Returns the entry node of list, or next when the list is empty.
  int build(const StmtList& list, int next, int loop_head, int loop_exit) {
    int cur = next;
    for (auto it = list.rbegin(); it != list.rend(); ++it) {
      cur = build_stmt(**it, cur, loop_head, loop_exit);
    }
    return cur;
  }

  int build_stmt(const Stmt& s, int next, int loop_head, int loop_exit) {
    if (const auto* d = std::get_if<Decl>(&s.node)) {
      return add(Node{d->name, {}, {next}});
    }
    if (const auto* a = std::get_if<Assign>(&s.node)) {
      return add(Node{a->target, vars_of(*a->value), {next}});
    }
    if (const auto* w = std::get_if<While>(&s.node)) {
      const int guard = add(Node{"", vars_of(*w->guard), {}});
      const int body = build(w->body, guard, guard, next);
      nodes_[static_cast<std::size_t>(guard)].succ = {body, next};
      return guard;
    }
    if (const auto* c = std::get_if<IfElse>(&s.node)) {
      const int then_entry = build(c->then_body, next, loop_head, loop_exit);
      const int else_entry = build(c->else_body, next, loop_head, loop_exit);
      return add(Node{"", vars_of(*c->guard), {then_entry, else_entry}});
    }
    if (std::holds_alternative<BreakStmt>(s.node)) return add(Node{"", {}, {loop_exit}});
    if (std::holds_alternative<ContinueStmt>(s.node)) {
      return add(Node{"", {}, {loop_head}});
    }
    return add(Node{"", {}, {}});
  }

  std::vector<Node> nodes_;
};

}  // namespace

std::string_view granularity_name(Granularity g) {
  return g == Granularity::Micro ? "micro" : "stmt";
}

Granularity parse_granularity(std::string_view s) {
  if (s == "micro") return Granularity::Micro;
  if (s == "stmt" || s == "statement") return Granularity::Statement;
  throw std::invalid_argument("unknown granularity: " + std::string(s));
}

double HalsteadCounts::volume() const {
  const std::size_t n = vocabulary();
  if (n == 0) return 0;
  return static_cast<double>(length()) * std::log2(static_cast<double>(n));
}

HalsteadCounts halstead(const Program& p) {
  const LexemeProfile& std_profile = LexemeProfile::standard();
  const std::vector<Token> tokens = tokenize(render(p, std_profile), std_profile);
  std::set<std::string> operators, operands;
  HalsteadCounts h;
  for (const Token& t : tokens) {
    if (t.kind == Tok::End) continue;
    const bool operand = t.kind == Tok::Identifier || t.kind == Tok::IntLiteral ||
                         t.kind == Tok::True || t.kind == Tok::False;
    if (operand) {
      operands.insert(t.text);
      ++h.total_operands;
    } else {
      operators.insert(t.text);
      ++h.total_operators;
    }
  }
  h.distinct_operators = operators.size();
  h.distinct_operands = operands.size();
  return h;
}

std::size_t cyclomatic_complexity(const Program& p) {
  std::size_t cc = 1;
  auto count_logical = [&cc](const Expr& e) {
    for_each_expr(e, [&cc](const Expr& x) {
      if (const auto* b = std::get_if<Binary>(&x.node)) {
        if (b->op == BinaryOp::And || b->op == BinaryOp::Or) ++cc;
      }
    });
  };
  for_each_stmt(p.statements, [&](const Stmt& s) {
    if (s.kind() == StmtKind::While || s.kind() == StmtKind::IfElse) ++cc;
    if (const Expr* e = stmt_expr(s)) count_logical(*e);
  });
  return cc;
}

std::size_t max_nested_if(const Program& p) {
  return nesting(p.statements, StmtKind::IfElse);
}

std::size_t max_nested_loop(const Program& p) {
  return nesting(p.statements, StmtKind::While);
}

std::size_t lines_of_code(const Program& p) {
  const std::string text = render(p, LexemeProfile::standard());
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

std::size_t dep_degree(const Program& p) { return FlowGraph(p).dep_degree(); }

bool is_statement_rule(int r) {
  switch (r) {
    case sos::kDecl:
    case sos::kAssignInt:
    case sos::kAssignBool:
    case sos::kIfTrue:
    case sos::kIfFalse:
    case sos::kLoopFalse:
    case sos::kLoopTrue:
    case sos::kBreakExit:
    case sos::kBreakOrphan:
    case sos::kContinueNext:
    case sos::kContinueOrphan:
    case sos::kHalt:
      return true;
    default:
      return false;
  }
}

MetricProfile static_metrics(const Program& p) {
  MetricProfile m;
  m.cc = cyclomatic_complexity(p);
  m.max_nested_if = max_nested_if(p);
  m.max_nested_loop = max_nested_loop(p);
  m.dep_degree = dep_degree(p);
  m.loc = lines_of_code(p);
  const HalsteadCounts h = halstead(p);
  m.halstead_vocabulary = h.vocabulary();
  m.halstead_length = h.length();
  m.halstead_volume = h.volume();
  return m;
}

void dynamic_metrics(const Program& p, const Trace& trace, Granularity g,
                     MetricProfile& out) {
  if (trace.outcome != Outcome::Normal && trace.outcome != Outcome::Halted) {
    throw RequiresTermination("dynamic metrics need a terminating run, got " +
                              std::string(outcome_name(trace.outcome)));
  }
  const std::vector<int> rules = trace.rules();
  out.executed_assignments = static_cast<std::size_t>(
      std::count_if(rules.begin(), rules.end(), [](int r) {
        return r == sos::kAssignInt || r == sos::kAssignBool;
      }));
  out.trace_length = g == Granularity::Micro
                         ? rules.size()
                         : static_cast<std::size_t>(std::count_if(
                               rules.begin(), rules.end(), is_statement_rule));
  const sos::DynamicDepths d = sos::taken_depths(p, trace.step_count + 1);
  out.taken_if_depth = static_cast<std::size_t>(d.if_depth);
  out.taken_loop_depth = static_cast<std::size_t>(d.loop_depth);
}

MetricProfile profile(const Program& p, Granularity g, std::size_t step_limit) {
  MetricProfile m = static_metrics(p);
  RunOptions opts;
  opts.step_limit = step_limit;
  opts.recording = Recording::Rules;
  dynamic_metrics(p, sos::run(p, opts), g, m);
  return m;
}

}  // namespace impbench
