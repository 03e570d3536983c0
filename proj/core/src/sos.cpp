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

#include "impbench/sos.hpp"

#include <array>
#include <cassert>

#include "impbench/syntax.hpp"

namespace impbench {

void ControlStack::pop() {
  if (items_.empty()) throw ControlStackEmpty();
  items_.pop_back();
}

const StmtPtr& ControlStack::top() const {
  if (items_.empty()) throw ControlStackEmpty();
  return items_.back();
}

bool operator==(const ControlStack& a, const ControlStack& b) {
  return a.items_ == b.items_;
}

ControlStack stack_push(const StmtPtr& s, ControlStack chi) {
  chi.push(s);
  return chi;
}

ControlStack stack_pop(ControlStack chi) {
  chi.pop();
  return chi;
}

namespace sos {

namespace {

using C = RuleCategory;

constexpr std::array<RuleInfo, kNumRules> kCatalog = {{
    {1, "var_int", C::Id},
    {2, "var_bool", C::Id},
    {3, "decl", C::Declaration},
    {4, "assign_red", C::Assignment},
    {5, "assign_int", C::Assignment},
    {6, "assign_bool", C::Assignment},
    {7, "add_lred", C::Arithmetic},
    {8, "add_rred", C::Arithmetic},
    {9, "add", C::Arithmetic},
    {10, "sub_lred", C::Arithmetic},
    {11, "sub_rred", C::Arithmetic},
    {12, "sub", C::Arithmetic},
    {13, "mul_lred", C::Arithmetic},
    {14, "mul_rred", C::Arithmetic},
    {15, "mul", C::Arithmetic},
    {16, "div_lred", C::Arithmetic},
    {17, "div_rred", C::Arithmetic},
    {18, "div", C::Arithmetic},
    {19, "div_trunc", C::Arithmetic},
    {20, "div_zero", C::Arithmetic},
    {21, "mod_lred", C::Arithmetic},
    {22, "mod_rred", C::Arithmetic},
    {23, "mod", C::Arithmetic},
    {24, "mod_trunc", C::Arithmetic},
    {25, "mod_zero", C::Arithmetic},
    {26, "arith_bool_left", C::Arithmetic},
    {27, "arith_bool_right", C::Arithmetic},
    {28, "lt_lred", C::Relational},
    {29, "lt_rred", C::Relational},
    {30, "lt_true", C::Relational},
    {31, "lt_false", C::Relational},
    {32, "le_lred", C::Relational},
    {33, "le_rred", C::Relational},
    {34, "le_true", C::Relational},
    {35, "le_false", C::Relational},
    {36, "gt_lred", C::Relational},
    {37, "gt_rred", C::Relational},
    {38, "gt_true", C::Relational},
    {39, "gt_false", C::Relational},
    {40, "ge_lred", C::Relational},
    {41, "ge_rred", C::Relational},
    {42, "ge_true", C::Relational},
    {43, "ge_false", C::Relational},
    {44, "eq_lred", C::Relational},
    {45, "eq_rred", C::Relational},
    {46, "eq_true", C::Relational},
    {47, "eq_false", C::Relational},
    {48, "ne_lred", C::Relational},
    {49, "ne_rred", C::Relational},
    {50, "ne_true", C::Relational},
    {51, "ne_false", C::Relational},
    {52, "not_red", C::Logical},
    {53, "not_true", C::Logical},
    {54, "not_false", C::Logical},
    {55, "and_lred", C::Logical},
    {56, "and_rred", C::Logical},
    {57, "and_true", C::Logical},
    {58, "and_false", C::Logical},
    {59, "or_lred", C::Logical},
    {60, "or_rred", C::Logical},
    {61, "or_true", C::Logical},
    {62, "or_false", C::Logical},
    {63, "ill_formed", C::Error},
    {64, "if_red", C::Conditional},
    {65, "if_true", C::Conditional},
    {66, "if_false", C::Conditional},
    {67, "while", C::Loop},
    {68, "loop_red", C::Loop},
    {69, "loop_false", C::Loop},
    {70, "loop_true", C::Loop},
    {71, "break_skip", C::BreakContinue},
    {72, "break_exit", C::BreakContinue},
    {73, "break_orphan", C::BreakContinue},
    {74, "continue_skip", C::BreakContinue},
    {75, "continue_next", C::BreakContinue},
    {76, "continue_orphan", C::BreakContinue},
    {77, "loop_next", C::Loop},
    {78, "halt", C::Halt},
}};

// First rule id of each operation's block. Arithmetic blocks hold lred, rred
// then value rules; relational blocks hold lred, rred, true, false.
constexpr std::array<int, kNumBinaryOps> kOpBase = {
    kAddLred, kSubLred, kMulLred, kDivLred, kModLred, 28, 32,
    36,       40,       44,       48,       kAndLred, kOrLred,
};

}  // namespace

std::span<const RuleInfo> catalog() { return kCatalog; }

const RuleInfo& rule_info(int id) {
  if (id < 1 || id > kNumRules) {
    throw std::out_of_range("no SOS rule " + std::to_string(id));
  }
  return kCatalog[static_cast<std::size_t>(id - 1)];
}

int lred_rule(BinaryOp op) { return kOpBase[static_cast<std::size_t>(op)]; }
int rred_rule(BinaryOp op) { return lred_rule(op) + 1; }

int relational_rule(BinaryOp op, bool result) {
  return lred_rule(op) + (result ? 2 : 3);
}

std::optional<Item> Configuration::item_at(std::size_t skip) const {
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    if (!it->list) {
      if (skip == 0) return it->single;
      --skip;
      continue;
    }
    const std::size_t remaining = it->list->size() - it->index;
    if (skip < remaining) {
      return Item{Item::Kind::Stmt, (*it->list)[it->index + skip], it->if_depth};
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

std::string Configuration::control_to_string() const {
  std::string out;
  const auto& items = chi_.items();
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    out += render_header(**it, LexemeProfile::standard());
    out += " :: ";
  }
  out += "ε";
  return out;
}

std::string Configuration::list_to_string() const {
  std::string out;
  auto describe = [&](const Item& it) {
    switch (it.kind) {
      case Item::Kind::Stmt: {
        std::string s = render(StmtList{it.stmt}, LexemeProfile::standard());
        if (!s.empty() && s.back() == '\n') s.pop_back();
        return s;
      }
      case Item::Kind::Loop:
        return "loop(" +
               render(*std::get<While>(it.stmt->node).guard,
                      LexemeProfile::standard()) +
               ")";
      case Item::Kind::EndLoop:
        return std::string("endloop");
    }
    return std::string();
  };
  if (focus_) out += describe(*focus_) + " :: ";
  for (auto it = frames_.rbegin(); it != frames_.rend(); ++it) {
    if (!it->list) {
      out += describe(it->single) + " :: ";
      continue;
    }
    for (std::size_t i = it->index; i < it->list->size(); ++i) {
      out += describe(Item{Item::Kind::Stmt, (*it->list)[i], 0}) + " :: ";
    }
  }
  out += "ε";
  return out;
}

class Machine {
 public:
  Machine(Configuration& c, const OperatorSemantics& sem, bool apply,
          DynamicDepths* depths = nullptr)
      : c_(c), sem_(sem), apply_(apply), depths_(depths) {}

  static void settle(Configuration& c) {
    if (c.status_ == Configuration::Status::Running && !c.focus_ &&
        c.frames_.empty()) {
      c.status_ = Configuration::Status::Done;
    }
  }

  static void push_block(Configuration& c, std::shared_ptr<const StmtList> list,
                         int if_depth) {
    if (list->empty()) return;
    Configuration::Frame f;
    f.list = std::move(list);
    f.if_depth = if_depth;
    c.frames_.push_back(std::move(f));
  }

  static void push_single(Configuration& c, Item item) {
    Configuration::Frame f;
    f.single = std::move(item);
    c.frames_.push_back(std::move(f));
  }

  // Returns the rule for the next step, applying it when apply_ is set.
  // Returns 0 for terminal configurations.
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
    out = Item{Item::Kind::Stmt, (*f.list)[f.index], f.if_depth};
    if (++f.index == f.list->size()) c_.frames_.pop_back();
    return out;
  }

  void drop_next() {
    Configuration::Frame& f = c_.frames_.back();
    if (!f.list || ++f.index == f.list->size()) c_.frames_.pop_back();
  }

  std::optional<Item> next_item() const { return c_.item_at(0); }

  void load_term() {
    c_.term_.clear();
    c_.path_.clear();
    const Item& it = *c_.focus_;
    if (it.kind == Item::Kind::Stmt) {
      if (const Expr* e = stmt_expr(*it.stmt)) {
        if (it.stmt->kind() != StmtKind::While) c_.term_ = flatten(*e);
      }
    } else if (it.kind == Item::Kind::Loop) {
      c_.term_ = flatten(*std::get<While>(it.stmt->node).guard);
    }
  }

  void finish() {
    c_.focus_.reset();
    c_.term_.clear();
    c_.path_.clear();
  }

  int fail(int rule, std::string msg) {
    if (apply_) {
      c_.status_ = Configuration::Status::Error;
      c_.error_ = std::move(msg);
      finish();
    }
    return rule;
  }

  int decide() {
    Item& it = *c_.focus_;
    switch (it.kind) {
      case Item::Kind::Loop:
        return loop_step(it);
      case Item::Kind::EndLoop:
        if (apply_) {
          c_.focus_ = Item{Item::Kind::Loop, it.stmt, it.if_depth};
          load_term();
        }
        return kLoopNext;
      case Item::Kind::Stmt:
        break;
    }
    const Stmt& s = *it.stmt;
    switch (s.kind()) {
      case StmtKind::Decl: {
        const auto& d = std::get<Decl>(s.node);
        if (c_.store_.contains(d.name)) {
          return fail(kIllFormed, "redeclaration of " + d.name);
        }
        if (apply_) {
          c_.store_.declare(d.name, Value::default_for(d.type));
          finish();
        }
        return kDecl;
      }
      case StmtKind::Assign:
        return assign_step(std::get<Assign>(s.node));
      case StmtKind::IfElse:
        return if_step(it, std::get<IfElse>(s.node));
      case StmtKind::While:
        if (apply_) {
          c_.chi_.push(it.stmt);
          c_.focus_ = Item{Item::Kind::Loop, it.stmt, it.if_depth};
          load_term();
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
    throw Stuck("unknown statement");
  }

  const Value& root() const { return c_.term_[0].value; }
  bool root_is_value() const { return c_.term_[0].is_value(); }

  int open(int rule) {
    if (apply_) c_.path_.push_back(0);
    return rule;
  }

  int assign_step(const Assign& a) {
    if (!c_.path_.empty()) return reduce();
    if (!root_is_value()) return open(kAssignRed);
    Value* slot = c_.store_.find(a.target);
    if (slot == nullptr) {
      return fail(kIllFormed, "assignment to undeclared " + a.target);
    }
    if (slot->type() != root().type()) {
      return fail(kIllFormed, "type mismatch in assignment to " + a.target);
    }
    const int rule = root().is_int() ? kAssignInt : kAssignBool;
    if (apply_) {
      *slot = root();
      finish();
    }
    return rule;
  }

  int if_step(const Item& it, const IfElse& s) {
    if (!c_.path_.empty()) return reduce();
    if (!root_is_value()) return open(kIfRed);
    if (!root().is_bool()) return fail(kIllFormed, "non-boolean if guard");
    const bool taken = root().as_bool();
    if (apply_) {
      const int depth = it.if_depth + 1;
      if (depths_) depths_->if_depth = std::max(depths_->if_depth, depth);
      const StmtList& branch = taken ? s.then_body : s.else_body;
      std::shared_ptr<const StmtList> alias(it.stmt, &branch);
      finish();
      push_block(c_, std::move(alias), depth);
    }
    return taken ? kIfTrue : kIfFalse;
  }

  int loop_step(const Item& it) {
    if (!c_.path_.empty()) return reduce();
    if (!root_is_value()) return open(kLoopRed);
    if (!root().is_bool()) return fail(kIllFormed, "non-boolean loop guard");
    if (!root().as_bool()) {
      if (apply_) {
        c_.chi_.pop();
        finish();
      }
      return kLoopFalse;
    }
    if (apply_) {
      if (depths_) {
        depths_->loop_depth = std::max(depths_->loop_depth,
                                       static_cast<int>(c_.chi_.size()));
      }
      const Item loop = it;
      finish();
      push_single(c_, Item{Item::Kind::EndLoop, loop.stmt, loop.if_depth});
      std::shared_ptr<const StmtList> body(loop.stmt,
                                           &std::get<While>(loop.stmt->node).body);
      push_block(c_, std::move(body), loop.if_depth);
    }
    return kLoopTrue;
  }

  int break_step() {
    if (c_.chi_.empty()) return fail(kBreakOrphan, "break outside a loop");
    const std::optional<Item> next = next_item();
    if (!next) return fail(kIllFormed, "break without an enclosing body");
    if (next->kind == Item::Kind::EndLoop) {
      if (apply_) {
        drop_next();
        c_.chi_.pop();
        finish();
      }
      return kBreakExit;
    }
    if (apply_) drop_next();
    return kBreakSkip;
  }

  int continue_step() {
    if (c_.chi_.empty()) return fail(kContinueOrphan, "continue outside a loop");
    const std::optional<Item> next = next_item();
    if (!next) {
      return fail(kIllFormed, "continue without an enclosing body");
    }
    if (next->kind == Item::Kind::EndLoop) {
      if (apply_) {
        const Item end = *next;
        drop_next();
        c_.focus_ = Item{Item::Kind::Loop, end.stmt, end.if_depth};
        load_term();
      }
      return kContinueNext;
    }
    if (apply_) drop_next();
    return kContinueSkip;
  }

  void set_value(int idx, Value v) {
    TermNode& n = c_.term_[static_cast<std::size_t>(idx)];
    n.kind = TermNode::Kind::Value;
    n.value = std::move(v);
    c_.path_.pop_back();
  }

  int reduce() {
    const int idx = c_.path_.back();
    const TermNode& n = c_.term_[static_cast<std::size_t>(idx)];
    switch (n.kind) {
      case TermNode::Kind::Var: {
        const Value* v = c_.store_.find(*n.name);
        if (v == nullptr) return fail(kIllFormed, "undeclared variable " + *n.name);
        const int rule = v->is_int() ? kVarInt : kVarBool;
        if (apply_) set_value(idx, *v);
        return rule;
      }
      case TermNode::Kind::Not: {
        const TermNode& x = c_.term_[static_cast<std::size_t>(n.lhs)];
        if (!x.is_value()) {
          if (apply_) c_.path_.push_back(n.lhs);
          return kNotRed;
        }
        if (!x.value.is_bool()) return fail(kIllFormed, "negation of an integer");
        const bool b = x.value.as_bool();
        if (apply_) set_value(idx, Value(!b));
        return b ? kNotTrue : kNotFalse;
      }
      case TermNode::Kind::Binary:
        return binary(idx, n);
      case TermNode::Kind::Value:
        break;
    }
    throw Stuck("focus on a value");
  }

  int binary(int idx, const TermNode& n) {
    const BinaryOp op = sem_.meaning(n.op);
    const TermNode& l = c_.term_[static_cast<std::size_t>(n.lhs)];
    const TermNode& r = c_.term_[static_cast<std::size_t>(n.rhs)];
    if (!l.is_value()) {
      if (apply_) c_.path_.push_back(n.lhs);
      return lred_rule(op);
    }
    if (!r.is_value()) {
      if (apply_) c_.path_.push_back(n.rhs);
      return rred_rule(op);
    }
    const Value& a = l.value;
    const Value& b = r.value;
    if (is_arithmetic(op)) {
      if (!a.is_int()) return fail(kArithBoolLeft, "boolean arithmetic operand");
      if (!b.is_int()) return fail(kArithBoolRight, "boolean arithmetic operand");
      int rule = lred_rule(op) + 2;
      if (op == BinaryOp::Div || op == BinaryOp::Mod) {
        if (b.as_int() == 0) return fail(rule + 2, "division by zero");
        const bool exact = op == BinaryOp::Div
                               ? (a.as_int().sign() * b.as_int().sign() >= 0)
                               : (a.as_int().sign() >= 0);
        if (!exact) ++rule;
      }
      if (apply_) set_value(idx, apply_binary(op, a, b).value);
      return rule;
    }
    OpResult res = apply_binary(op, a, b);
    if (res.status != OpResult::Status::Ok) {
      return fail(kIllFormed, "operand type mismatch");
    }
    const bool v = res.value.as_bool();
    int rule = 0;
    if (is_relational(op)) {
      rule = relational_rule(op, v);
    } else if (op == BinaryOp::And) {
      rule = v ? kAndTrue : kAndFalse;
    } else {
      rule = v ? kOrTrue : kOrFalse;
    }
    if (apply_) set_value(idx, std::move(res.value));
    return rule;
  }

  Configuration& c_;
  const OperatorSemantics& sem_;
  bool apply_;
  DynamicDepths* depths_;
};

Configuration Configuration::initial(const Program& p, Store sigma,
                                     ControlStack chi) {
  Configuration c;
  c.store_ = std::move(sigma);
  c.chi_ = std::move(chi);
  Machine::push_block(c, std::make_shared<const StmtList>(p.statements), 0);
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
  if (c.terminal()) throw Stuck("step on a terminal configuration");
  StepResult r{0, c};
  r.rule = Machine(r.next, sem, true).advance();
  if (r.rule == 0) throw Stuck("step on a terminal configuration");
  return r;
}

namespace {

Trace run_impl(Configuration c, const RunOptions& opts,
               const StepObserver& observer, DynamicDepths* depths) {
  const OperatorSemantics& sem =
      opts.semantics ? *opts.semantics : OperatorSemantics::standard();
  Trace t;
  t.style = Style::Sos;
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
    const int rule = Machine(c, sem, true, depths).advance();
    if (rule == 0) break;
    ++t.step_count;
    if (opts.recording != Recording::None) {
      if (opts.recording == Recording::Full &&
          (rule == kDecl || rule == kAssignInt || rule == kAssignBool)) {
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

}  // namespace

Trace run(const Program& p, const RunOptions& opts) {
  return run_impl(Configuration::initial(p), opts, {}, nullptr);
}

Trace run_from(Configuration c, const RunOptions& opts,
               const StepObserver& observer) {
  return run_impl(std::move(c), opts, observer, nullptr);
}

DynamicDepths taken_depths(const Program& p, std::size_t step_limit) {
  DynamicDepths d;
  RunOptions opts;
  opts.step_limit = step_limit;
  opts.recording = Recording::None;
  run_impl(Configuration::initial(p), opts, {}, &d);
  return d;
}

std::string debug_line(std::size_t index, int rule, const Configuration& after) {
  std::string chi = "[";
  const auto& items = after.control().items();
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    if (it != items.rbegin()) chi += ", ";
    chi += render_header(**it, LexemeProfile::standard());
  }
  chi += "]";
  return "step " + std::to_string(index) + ": rule " + std::to_string(rule) +
         "; σ = " + after.store().to_string() + "; χ = " + chi;
}

}  // namespace sos
}  // namespace impbench
