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

#include "impbench/k.hpp"

#include <array>

namespace impbench::k {

namespace {

using C = RuleCategory;

constexpr std::array<RuleInfo, kNumRules> kCatalog = {{
    {1, "lookup_int", C::Id},
    {2, "lookup_bool", C::Id},
    {3, "add", C::Arithmetic},
    {4, "sub", C::Arithmetic},
    {5, "mul", C::Arithmetic},
    {6, "div", C::Arithmetic},
    {7, "div_trunc", C::Arithmetic},
    {8, "div_zero", C::Arithmetic},
    {9, "mod", C::Arithmetic},
    {10, "mod_trunc", C::Arithmetic},
    {11, "mod_zero", C::Arithmetic},
    {12, "lt", C::Relational},
    {13, "le", C::Relational},
    {14, "gt", C::Relational},
    {15, "ge", C::Relational},
    {16, "eq", C::Relational},
    {17, "ne", C::Relational},
    {18, "not", C::Logical},
    {19, "and", C::Logical},
    {20, "or", C::Logical},
    {21, "assign", C::Assignment},
    {22, "if_true", C::Conditional},
    {23, "if_false", C::Conditional},
    {24, "while", C::Loop},
    {25, "while1", C::Loop},
    {26, "halt", C::Halt},
    {27, "break_marker", C::BreakContinue},
    {28, "break_skip", C::BreakContinue},
    {29, "break_skip_loop", C::BreakContinue},
    {30, "break_exit", C::BreakContinue},
    {31, "continue_skip", C::BreakContinue},
    {32, "continue_next", C::BreakContinue},
    {33, "break_orphan", C::BreakContinue},
    {34, "continue_orphan", C::BreakContinue},
    {35, "continue_marker", C::BreakContinue},
    {36, "decl", C::Declaration},
}};

constexpr std::array<int, kNumBinaryOps> kOpRule = {
    kAdd, kSub, kMul, kDiv, kMod, kLt, kLe, kGt, kGe, kEq, kNe, kAnd, kOr,
};

// Leftmost-innermost reducible node, or -1 if the subterm is a value.
int find_redex(const Term& t, int idx) {
  const TermNode& n = t[static_cast<std::size_t>(idx)];
  switch (n.kind) {
    case TermNode::Kind::Value:
      return -1;
    case TermNode::Kind::Var:
      return idx;
    case TermNode::Kind::Not: {
      const int inner = find_redex(t, n.lhs);
      return inner >= 0 ? inner : idx;
    }
    case TermNode::Kind::Binary: {
      int inner = find_redex(t, n.lhs);
      if (inner >= 0) return inner;
      inner = find_redex(t, n.rhs);
      return inner >= 0 ? inner : idx;
    }
  }
  return -1;
}

}  // namespace

std::span<const RuleInfo> catalog() { return kCatalog; }

const RuleInfo& rule_info(int id) {
  if (id < 1 || id > kNumRules) {
    throw std::out_of_range("no K rule " + std::to_string(id));
  }
  return kCatalog[static_cast<std::size_t>(id - 1)];
}

int operation_rule(BinaryOp op) { return kOpRule[static_cast<std::size_t>(op)]; }

std::optional<Item> Configuration::item_at(std::size_t skip) const {
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    if (!it->list) {
      if (skip == 0) return it->single;
      --skip;
      continue;
    }
    const std::size_t remaining = it->list->size() - it->index;
    if (skip < remaining) {
      return Item{Item::Kind::Stmt, (*it->list)[it->index + skip]};
    }
    skip -= remaining;
  }
  return std::nullopt;
}

std::optional<Item> Configuration::head() const {
  if (focus_) return focus_;
  return item_at(0);
}

std::optional<Item> Configuration::second() const {
  return item_at(focus_ ? 0 : 1);
}

class Machine {
 public:
  Machine(Configuration& c, const OperatorSemantics& sem, bool apply)
      : c_(c), sem_(sem), apply_(apply) {}

  static void settle(Configuration& c) {
    if (c.status_ == Configuration::Status::Running && !c.focus_ &&
        c.frames_.empty()) {
      c.status_ = Configuration::Status::Done;
    }
  }

  static void push_block(Configuration& c, std::shared_ptr<const StmtList> list) {
    if (list->empty()) return;
    Configuration::Frame f;
    f.list = std::move(list);
    c.frames_.push_back(std::move(f));
  }

  static void push_single(Configuration& c, Item item) {
    Configuration::Frame f;
    f.single = std::move(item);
    c.frames_.push_back(std::move(f));
  }

  // Returns the named rule of the next step, or 0 for terminal configurations
  // and stuck transitions.
  int advance() {
    if (c_.terminal()) return 0;
    if (!c_.focus_) {
      if (c_.frames_.empty()) {
        c_.status_ = Configuration::Status::Done;
        return 0;
      }
      c_.focus_ = take();
      load_term();
    }
    const int rule = decide();
    if (apply_) settle(c_);
    return rule;
  }

 private:
  Item take() {
    Configuration::Frame& f = c_.frames_.back();
    Item out;
    if (!f.list) {
      out = std::move(f.single);
      c_.frames_.pop_back();
      return out;
    }
    out = Item{Item::Kind::Stmt, (*f.list)[f.index]};
    if (++f.index == f.list->size()) c_.frames_.pop_back();
    return out;
  }

  void drop_next() {
    Configuration::Frame& f = c_.frames_.back();
    if (!f.list || ++f.index == f.list->size()) c_.frames_.pop_back();
  }

  void load_term() {
    c_.term_.clear();
    const Item& it = *c_.focus_;
    if (it.kind == Item::Kind::Stmt) {
      if (it.stmt->kind() == StmtKind::Assign ||
          it.stmt->kind() == StmtKind::IfElse) {
        c_.term_ = flatten(*stmt_expr(*it.stmt));
      }
    } else if (it.kind == Item::Kind::Unfolded) {
      c_.term_ = flatten(*std::get<While>(it.stmt->node).guard);
    }
  }

  void finish() {
    c_.focus_.reset();
    c_.term_.clear();
  }

  int stuck(std::string msg) {
    if (apply_) {
      c_.status_ = Configuration::Status::Error;
      c_.error_ = std::move(msg);
      finish();
    }
    return 0;
  }

  int error_rule(int rule, std::string msg) {
    if (apply_) {
      c_.status_ = Configuration::Status::Error;
      c_.error_ = std::move(msg);
      finish();
    }
    return rule;
  }

  int decide() {
    const Item it = *c_.focus_;
    switch (it.kind) {
      case Item::Kind::While1:
        if (apply_) {
          c_.focus_ = Item{Item::Kind::Unfolded, it.stmt};
          load_term();
        }
        return kWhile1;
      case Item::Kind::Unfolded:
        return branch(it, nullptr);
      case Item::Kind::BreakMarker:
        if (apply_) finish();
        return kBreakMarker;
      case Item::Kind::Stmt:
        break;
    }
    const Stmt& s = *it.stmt;
    switch (s.kind()) {
      case StmtKind::Decl: {
        const auto& d = std::get<Decl>(s.node);
        if (c_.store_.contains(d.name)) return stuck("redeclaration of " + d.name);
        if (apply_) {
          c_.store_.declare(d.name, Value::default_for(d.type));
          finish();
        }
        return kDecl;
      }
      case StmtKind::Assign: {
        if (!c_.term_[0].is_value()) return reduce();
        const auto& a = std::get<Assign>(s.node);
        Value* slot = c_.store_.find(a.target);
        if (slot == nullptr) return stuck("assignment to undeclared " + a.target);
        if (slot->type() != c_.term_[0].value.type()) {
          return stuck("type mismatch in assignment to " + a.target);
        }
        if (apply_) {
          *slot = c_.term_[0].value;
          finish();
        }
        return kAssign;
      }
      case StmtKind::IfElse:
        return branch(it, &std::get<IfElse>(s.node));
      case StmtKind::While:
        if (apply_) {
          finish();
          push_single(c_, Item{Item::Kind::BreakMarker, it.stmt});
          push_single(c_, Item{Item::Kind::While1, it.stmt});
        }
        return kWhile;
      case StmtKind::Break:
        return break_step();
      case StmtKind::Continue:
        return continue_step();
      case StmtKind::Halt:
        if (apply_) {
          c_.status_ = Configuration::Status::Halted;
          finish();
        }
        return kHalt;
    }
    return stuck("unknown statement");
  }

  // if_true / if_false for an ordinary conditional, or for the conditional
  // produced by unfolding while1 when s is null.
  int branch(const Item& it, const IfElse* s) {
    if (!c_.term_[0].is_value()) return reduce();
    const Value& g = c_.term_[0].value;
    if (!g.is_bool()) return stuck("non-boolean guard");
    const bool taken = g.as_bool();
    if (apply_) {
      finish();
      if (s != nullptr) {
        const StmtList& b = taken ? s->then_body : s->else_body;
        push_block(c_, std::shared_ptr<const StmtList>(it.stmt, &b));
      } else if (taken) {
        push_single(c_, Item{Item::Kind::While1, it.stmt});
        push_block(c_, std::shared_ptr<const StmtList>(
                           it.stmt, &std::get<While>(it.stmt->node).body));
      }
    }
    return taken ? kIfTrue : kIfFalse;
  }

  int break_step() {
    const std::optional<Item> next = c_.item_at(0);
    if (!next) return error_rule(kBreakOrphan, "break outside a loop");
    switch (next->kind) {
      case Item::Kind::BreakMarker:
        if (apply_) {
          drop_next();
          finish();
        }
        return kBreakExit;
      case Item::Kind::While1:
        if (apply_) drop_next();
        return kBreakSkipLoop;
      default:
        if (apply_) drop_next();
        return kBreakSkip;
    }
  }

  int continue_step() {
    const std::optional<Item> next = c_.item_at(0);
    if (!next) return error_rule(kContinueOrphan, "continue outside a loop");
    switch (next->kind) {
      case Item::Kind::While1:
        if (apply_) finish();
        return kContinueNext;
      case Item::Kind::BreakMarker:
        return error_rule(kContinueMarker, "continue reached a loop exit");
      default:
        if (apply_) drop_next();
        return kContinueSkip;
    }
  }

  void set_value(int idx, Value v) {
    TermNode& n = c_.term_[static_cast<std::size_t>(idx)];
    n.kind = TermNode::Kind::Value;
    n.value = std::move(v);
  }

  int reduce() {
    const int idx = find_redex(c_.term_, 0);
    const TermNode& n = c_.term_[static_cast<std::size_t>(idx)];
    if (n.kind == TermNode::Kind::Var) {
      const Value* v = c_.store_.find(*n.name);
      if (v == nullptr) return stuck("undeclared variable " + *n.name);
      const int rule = v->is_int() ? kLookupInt : kLookupBool;
      if (apply_) set_value(idx, *v);
      return rule;
    }
    if (n.kind == TermNode::Kind::Not) {
      const Value& x = c_.term_[static_cast<std::size_t>(n.lhs)].value;
      if (!x.is_bool()) return stuck("negation of an integer");
      if (apply_) set_value(idx, Value(!x.as_bool()));
      return kNot;
    }
    const BinaryOp op = sem_.meaning(n.op);
    const Value& a = c_.term_[static_cast<std::size_t>(n.lhs)].value;
    const Value& b = c_.term_[static_cast<std::size_t>(n.rhs)].value;
    OpResult res = apply_binary(op, a, b);
    if (res.status == OpResult::Status::TypeError) {
      return stuck("operand type mismatch");
    }
    int rule = operation_rule(op);
    if (op == BinaryOp::Div || op == BinaryOp::Mod) {
      if (res.status == OpResult::Status::DivZero) {
        return error_rule(rule + 2, "division by zero");
      }
      const bool exact = op == BinaryOp::Div
                             ? (a.as_int().sign() * b.as_int().sign() >= 0)
                             : (a.as_int().sign() >= 0);
      if (!exact) ++rule;
    }
    if (apply_) set_value(idx, std::move(res.value));
    return rule;
  }

  Configuration& c_;
  const OperatorSemantics& sem_;
  bool apply_;
};

Configuration Configuration::initial(const Program& p, Store sigma) {
  Configuration c;
  c.store_ = std::move(sigma);
  Machine::push_block(c, std::make_shared<const StmtList>(p.statements));
  Machine::settle(c);
  return c;
}

std::optional<int> applicable_rule(const Configuration& c,
                                   const OperatorSemantics& sem) {
  if (c.terminal()) return std::nullopt;
  Configuration scratch = c;
  const int rule = Machine(scratch, sem, false).advance();
  if (rule == 0) return std::nullopt;
  return rule;
}

StepResult step(const Configuration& c, const OperatorSemantics& sem) {
  StepResult r{0, c};
  r.rule = Machine(r.next, sem, true).advance();
  return r;
}

Trace run_from(Configuration c, const RunOptions& opts,
               const StepObserver& observer) {
  const OperatorSemantics& sem =
      opts.semantics ? *opts.semantics : OperatorSemantics::standard();
  Trace t;
  t.style = Style::K;
  std::shared_ptr<const Store> snapshot;
  if (opts.recording == Recording::Full) {
    snapshot = std::make_shared<const Store>(c.store());
  }
  while (!c.terminal()) {
    if (t.step_count >= opts.step_limit) {
      t.outcome = Outcome::StepLimit;
      t.final_store = c.store();
      return t;
    }
    std::optional<Configuration> before;
    if (observer) before = c;
    const int rule = Machine(c, sem, true).advance();
    if (rule == 0) break;
    ++t.step_count;
    if (opts.recording != Recording::None) {
      if (opts.recording == Recording::Full &&
          (rule == kDecl || rule == kAssign)) {
        snapshot = std::make_shared<const Store>(c.store());
      }
      t.steps.push_back(TraceStep{rule, snapshot});
    }
    if (observer) observer(rule, *before, c);
  }
  switch (c.status()) {
    case Configuration::Status::Halted:
      t.outcome = Outcome::Halted;
      break;
    case Configuration::Status::Error:
      t.outcome = Outcome::Error;
      t.error = c.error();
      break;
    default:
      t.outcome = Outcome::Normal;
  }
  t.final_store = c.store();
  return t;
}

Trace run(const Program& p, const RunOptions& opts) {
  return run_from(Configuration::initial(p), opts);
}

}  // namespace impbench::k
