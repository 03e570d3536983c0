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

#include "premise_matcher.hpp"

#include <functional>
#include <string>

namespace impbench::testing {

namespace {

using sos::Item;
using Premise = std::function<bool()>;

struct Rule {
  int id;
  Premise holds;
};

const Expr* guard_of(const Stmt& s) {
  if (const auto* a = std::get_if<Assign>(&s.node)) return a->value.get();
  if (const auto* w = std::get_if<While>(&s.node)) return w->guard.get();
  if (const auto* i = std::get_if<IfElse>(&s.node)) return i->guard.get();
  return nullptr;
}

int sign(const Integer& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

}  // namespace

std::vector<int> matching_sos_rules(const sos::Configuration& c,
                                    const OperatorSemantics& sem) {
  std::vector<int> out;
  if (c.terminal()) return out;
  const std::optional<Item> head = c.head();
  if (!head) return out;
  const std::optional<Item> next = c.second();
  const Store& sigma = c.store();

  Term term = c.term();
  if (term.empty()) {
    const Expr* e = guard_of(*head->stmt);
    const bool fresh_while = head->kind == Item::Kind::Stmt &&
                             head->stmt->kind() == StmtKind::While;
    if (e != nullptr && !fresh_while) term = flatten(*e);
  }
  const std::vector<int>& path = c.focus_path();
  const bool in_expr = !path.empty();
  const TermNode* focus =
      in_expr ? &term[static_cast<std::size_t>(path.back())] : nullptr;
  const TermNode* root = term.empty() ? nullptr : &term[0];

  auto stmt_is = [&](StmtKind k) {
    return !in_expr && head->kind == Item::Kind::Stmt && head->stmt->kind() == k;
  };
  auto loop_item = [&] { return !in_expr && head->kind == Item::Kind::Loop; };
  auto root_value = [&] { return root != nullptr && root->is_value(); };
  auto child = [&](int i) -> const TermNode& {
    return term[static_cast<std::size_t>(i)];
  };
  auto var_bound = [&](Type t) {
    if (!in_expr || focus->kind != TermNode::Kind::Var) return false;
    const Value* v = sigma.find(*focus->name);
    return v != nullptr && v->type() == t;
  };
  auto binop = [&](BinaryOp op) {
    return in_expr && focus->kind == TermNode::Kind::Binary &&
           sem.meaning(focus->op) == op;
  };
  auto lred = [&](BinaryOp op) { return binop(op) && !child(focus->lhs).is_value(); };
  auto rred = [&](BinaryOp op) {
    return binop(op) && child(focus->lhs).is_value() &&
           !child(focus->rhs).is_value();
  };
  auto both = [&](BinaryOp op, Type ta, Type tb) {
    if (!binop(op)) return false;
    const TermNode& l = child(focus->lhs);
    const TermNode& r = child(focus->rhs);
    return l.is_value() && r.is_value() && l.value.type() == ta &&
           r.value.type() == tb;
  };
  auto ints = [&](BinaryOp op) { return both(op, Type::Int, Type::Int); };
  auto lv = [&]() -> const Integer& { return child(focus->lhs).value.as_int(); };
  auto rv = [&]() -> const Integer& { return child(focus->rhs).value.as_int(); };
  auto relation = [&](BinaryOp op, bool expect) {
    if (!ints(op)) return false;
    const Integer& a = lv();
    const Integer& b = rv();
    bool r = false;
    switch (op) {
      case BinaryOp::Lt: r = a < b; break;
      case BinaryOp::Le: r = a <= b; break;
      case BinaryOp::Gt: r = a > b; break;
      case BinaryOp::Ge: r = a >= b; break;
      case BinaryOp::Eq: r = a == b; break;
      default: r = a != b;
    }
    return r == expect;
  };
  auto logical = [&](BinaryOp op, bool expect) {
    if (!both(op, Type::Bool, Type::Bool)) return false;
    const bool a = child(focus->lhs).value.as_bool();
    const bool b = child(focus->rhs).value.as_bool();
    return (op == BinaryOp::And ? (a && b) : (a || b)) == expect;
  };
  auto arith = [&](BinaryOp op) {
    return op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul ||
           op == BinaryOp::Div || op == BinaryOp::Mod;
  };
  auto any_arith_values = [&](Type ta, Type tb) {
    for (BinaryOp op : {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul,
                        BinaryOp::Div, BinaryOp::Mod}) {
      if (both(op, ta, tb)) return true;
    }
    return false;
  };
  auto not_node = [&] { return in_expr && focus->kind == TermNode::Kind::Not; };
  auto not_value = [&](bool b) {
    if (!not_node()) return false;
    const TermNode& x = child(focus->lhs);
    return x.is_value() && x.value.is_bool() && x.value.as_bool() == b;
  };
  auto assign_target = [&]() -> const Value* {
    return sigma.find(std::get<Assign>(head->stmt->node).target);
  };
  auto assign_ok = [&](Type t) {
    if (!stmt_is(StmtKind::Assign) || !root_value()) return false;
    const Value* slot = assign_target();
    return slot != nullptr && slot->type() == t && root->value.type() == t;
  };
  auto guard_is = [&](bool b) {
    return root_value() && root->value.is_bool() && root->value.as_bool() == b;
  };
  auto next_is_end = [&] {
    return next && next->kind == Item::Kind::EndLoop;
  };
  auto jump = [&](StmtKind k, int which) {
    if (!stmt_is(k)) return false;
    if (c.control().empty()) return which == 2;
    if (!next) return false;
    return which == (next_is_end() ? 1 : 0);
  };

  // Premises of the error rule, listed separately so that overlaps with the
  // regular rules are detected.
  auto ill_formed = [&] {
    if (in_expr) {
      if (focus->kind == TermNode::Kind::Var) return !sigma.contains(*focus->name);
      if (focus->kind == TermNode::Kind::Not) {
        const TermNode& x = child(focus->lhs);
        return x.is_value() && x.value.is_int();
      }
      if (focus->kind == TermNode::Kind::Binary) {
        const BinaryOp op = sem.meaning(focus->op);
        const TermNode& l = child(focus->lhs);
        const TermNode& r = child(focus->rhs);
        if (!l.is_value() || !r.is_value() || arith(op)) return false;
        const Type want = is_logical(op) ? Type::Bool : Type::Int;
        return l.value.type() != want || r.value.type() != want;
      }
      return false;
    }
    if (stmt_is(StmtKind::Decl)) {
      return sigma.contains(std::get<Decl>(head->stmt->node).name);
    }
    if (stmt_is(StmtKind::Assign) && root_value()) {
      const Value* slot = assign_target();
      return slot == nullptr || slot->type() != root->value.type();
    }
    if ((stmt_is(StmtKind::IfElse) || loop_item()) && root_value()) {
      return root->value.is_int();
    }
    if (stmt_is(StmtKind::Break) || stmt_is(StmtKind::Continue)) {
      return !c.control().empty() && !next;
    }
    return false;
  };

  using B = BinaryOp;
  const std::vector<Rule> rules = {
      {1, [&] { return var_bound(Type::Int); }},
      {2, [&] { return var_bound(Type::Bool); }},
      {3, [&] {
         return stmt_is(StmtKind::Decl) &&
                !sigma.contains(std::get<Decl>(head->stmt->node).name);
       }},
      {4, [&] { return stmt_is(StmtKind::Assign) && !root_value(); }},
      {5, [&] { return assign_ok(Type::Int); }},
      {6, [&] { return assign_ok(Type::Bool); }},
      {7, [&] { return lred(B::Add); }},
      {8, [&] { return rred(B::Add); }},
      {9, [&] { return ints(B::Add); }},
      {10, [&] { return lred(B::Sub); }},
      {11, [&] { return rred(B::Sub); }},
      {12, [&] { return ints(B::Sub); }},
      {13, [&] { return lred(B::Mul); }},
      {14, [&] { return rred(B::Mul); }},
      {15, [&] { return ints(B::Mul); }},
      {16, [&] { return lred(B::Div); }},
      {17, [&] { return rred(B::Div); }},
      {18, [&] { return ints(B::Div) && rv() != 0 && sign(lv()) * sign(rv()) >= 0; }},
      {19, [&] { return ints(B::Div) && rv() != 0 && sign(lv()) * sign(rv()) < 0; }},
      {20, [&] { return ints(B::Div) && rv() == 0; }},
      {21, [&] { return lred(B::Mod); }},
      {22, [&] { return rred(B::Mod); }},
      {23, [&] { return ints(B::Mod) && rv() != 0 && lv() >= 0; }},
      {24, [&] { return ints(B::Mod) && rv() != 0 && lv() < 0; }},
      {25, [&] { return ints(B::Mod) && rv() == 0; }},
      {26, [&] {
         return any_arith_values(Type::Bool, Type::Int) ||
                any_arith_values(Type::Bool, Type::Bool);
       }},
      {27, [&] { return any_arith_values(Type::Int, Type::Bool); }},
      {28, [&] { return lred(B::Lt); }},
      {29, [&] { return rred(B::Lt); }},
      {30, [&] { return relation(B::Lt, true); }},
      {31, [&] { return relation(B::Lt, false); }},
      {32, [&] { return lred(B::Le); }},
      {33, [&] { return rred(B::Le); }},
      {34, [&] { return relation(B::Le, true); }},
      {35, [&] { return relation(B::Le, false); }},
      {36, [&] { return lred(B::Gt); }},
      {37, [&] { return rred(B::Gt); }},
      {38, [&] { return relation(B::Gt, true); }},
      {39, [&] { return relation(B::Gt, false); }},
      {40, [&] { return lred(B::Ge); }},
      {41, [&] { return rred(B::Ge); }},
      {42, [&] { return relation(B::Ge, true); }},
      {43, [&] { return relation(B::Ge, false); }},
      {44, [&] { return lred(B::Eq); }},
      {45, [&] { return rred(B::Eq); }},
      {46, [&] { return relation(B::Eq, true); }},
      {47, [&] { return relation(B::Eq, false); }},
      {48, [&] { return lred(B::Ne); }},
      {49, [&] { return rred(B::Ne); }},
      {50, [&] { return relation(B::Ne, true); }},
      {51, [&] { return relation(B::Ne, false); }},
      {52, [&] { return not_node() && !child(focus->lhs).is_value(); }},
      {53, [&] { return not_value(true); }},
      {54, [&] { return not_value(false); }},
      {55, [&] { return lred(B::And); }},
      {56, [&] { return rred(B::And); }},
      {57, [&] { return logical(B::And, true); }},
      {58, [&] { return logical(B::And, false); }},
      {59, [&] { return lred(B::Or); }},
      {60, [&] { return rred(B::Or); }},
      {61, [&] { return logical(B::Or, true); }},
      {62, [&] { return logical(B::Or, false); }},
      {63, ill_formed},
      {64, [&] { return stmt_is(StmtKind::IfElse) && !root_value(); }},
      {65, [&] { return stmt_is(StmtKind::IfElse) && guard_is(true); }},
      {66, [&] { return stmt_is(StmtKind::IfElse) && guard_is(false); }},
      {67, [&] { return stmt_is(StmtKind::While); }},
      {68, [&] { return loop_item() && !root_value(); }},
      {69, [&] { return loop_item() && guard_is(false); }},
      {70, [&] { return loop_item() && guard_is(true); }},
      {71, [&] { return jump(StmtKind::Break, 0); }},
      {72, [&] { return jump(StmtKind::Break, 1); }},
      {73, [&] { return jump(StmtKind::Break, 2); }},
      {74, [&] { return jump(StmtKind::Continue, 0); }},
      {75, [&] { return jump(StmtKind::Continue, 1); }},
      {76, [&] { return jump(StmtKind::Continue, 2); }},
      {77, [&] { return !in_expr && head->kind == Item::Kind::EndLoop; }},
      {78, [&] { return stmt_is(StmtKind::Halt); }},
  };
  for (const Rule& r : rules) {
    if (r.holds()) out.push_back(r.id);
  }
  return out;
}

}  // namespace impbench::testing
