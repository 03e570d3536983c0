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

#include "impbench/ast.hpp"

#include <stdexcept>

namespace impbench {

namespace {

constexpr std::array<Tok, kNumBinaryOps> kOpTokens = {
    Tok::Add, Tok::Sub, Tok::Mul, Tok::Div, Tok::Mod, Tok::Lt, Tok::Le,
    Tok::Gt,  Tok::Ge,  Tok::Eq,  Tok::Ne,  Tok::And, Tok::Or,
};

}  // namespace

Tok token_of(BinaryOp op) { return kOpTokens[static_cast<std::size_t>(op)]; }

BinaryOp binary_op_of(Tok t) {
  for (std::size_t i = 0; i < kOpTokens.size(); ++i) {
    if (kOpTokens[i] == t) return static_cast<BinaryOp>(i);
  }
  throw std::invalid_argument("not a binary operator token: " +
                              std::string(tok_name(t)));
}

bool is_arithmetic(BinaryOp op) { return op <= BinaryOp::Mod; }

bool is_relational(BinaryOp op) {
  return op >= BinaryOp::Lt && op <= BinaryOp::Ne;
}

bool is_logical(BinaryOp op) {
  return op == BinaryOp::And || op == BinaryOp::Or;
}

int precedence(BinaryOp op) {
  switch (op) {
    case BinaryOp::Or:
      return 1;
    case BinaryOp::And:
      return 2;
    case BinaryOp::Lt:
    case BinaryOp::Le:
    case BinaryOp::Gt:
    case BinaryOp::Ge:
    case BinaryOp::Eq:
    case BinaryOp::Ne:
      return 3;
    case BinaryOp::Add:
    case BinaryOp::Sub:
      return 4;
    case BinaryOp::Mul:
    case BinaryOp::Div:
    case BinaryOp::Mod:
      return 5;
  }
  return 0;
}

ExprPtr make_int(Integer v, int parens) {
  return std::make_shared<Expr>(Expr{IntLit{std::move(v)}, {}, parens});
}

ExprPtr make_bool(bool v) {
  return std::make_shared<Expr>(Expr{BoolLit{v}, {}, 0});
}

ExprPtr make_var(std::string name) {
  return std::make_shared<Expr>(Expr{VarRef{std::move(name)}, {}, 0});
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, int parens) {
  return std::make_shared<Expr>(
      Expr{Binary{op, std::move(lhs), std::move(rhs)}, {}, parens});
}

ExprPtr make_not(ExprPtr operand) {
  return std::make_shared<Expr>(Expr{Negation{std::move(operand)}, {}, 0});
}

ExprPtr with_parens(const ExprPtr& e, int parens) {
  auto copy = std::make_shared<Expr>(*e);
  copy->parens = parens;
  return copy;
}

std::string_view stmt_kind_name(StmtKind k) {
  switch (k) {
    case StmtKind::Decl:
      return "declaration";
    case StmtKind::Assign:
      return "assignment";
    case StmtKind::While:
      return "while";
    case StmtKind::IfElse:
      return "if";
    case StmtKind::Break:
      return "break";
    case StmtKind::Continue:
      return "continue";
    case StmtKind::Halt:
      return "halt";
  }
  return "?";
}

StmtPtr make_decl(Type t, std::string name) {
  return std::make_shared<Stmt>(Stmt{Decl{t, std::move(name)}, {}});
}

StmtPtr make_assign(std::string target, ExprPtr value) {
  return std::make_shared<Stmt>(
      Stmt{Assign{std::move(target), std::move(value)}, {}});
}

StmtPtr make_while(ExprPtr guard, StmtList body) {
  return std::make_shared<Stmt>(
      Stmt{While{std::move(guard), std::move(body)}, {}});
}

StmtPtr make_if(ExprPtr guard, StmtList then_body, StmtList else_body) {
  return std::make_shared<Stmt>(Stmt{
      IfElse{std::move(guard), std::move(then_body), std::move(else_body)},
      {}});
}

StmtPtr make_break() { return std::make_shared<Stmt>(Stmt{BreakStmt{}, {}}); }

StmtPtr make_continue() {
  return std::make_shared<Stmt>(Stmt{ContinueStmt{}, {}});
}

StmtPtr make_halt() { return std::make_shared<Stmt>(Stmt{HaltStmt{}, {}}); }

bool equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<IntLit>(&a.node)) {
    return x->value == std::get<IntLit>(b.node).value;
  }
  if (const auto* x = std::get_if<BoolLit>(&a.node)) {
    return x->value == std::get<BoolLit>(b.node).value;
  }
  if (const auto* x = std::get_if<VarRef>(&a.node)) {
    return x->name == std::get<VarRef>(b.node).name;
  }
  if (const auto* x = std::get_if<Binary>(&a.node)) {
    const auto& y = std::get<Binary>(b.node);
    return x->op == y.op && equal(*x->lhs, *y.lhs) && equal(*x->rhs, *y.rhs);
  }
  return equal(*std::get<Negation>(a.node).operand,
               *std::get<Negation>(b.node).operand);
}

bool equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  switch (a.kind()) {
    case StmtKind::Decl: {
      const auto& x = std::get<Decl>(a.node);
      const auto& y = std::get<Decl>(b.node);
      return x.type == y.type && x.name == y.name;
    }
    case StmtKind::Assign: {
      const auto& x = std::get<Assign>(a.node);
      const auto& y = std::get<Assign>(b.node);
      return x.target == y.target && equal(*x.value, *y.value);
    }
    case StmtKind::While: {
      const auto& x = std::get<While>(a.node);
      const auto& y = std::get<While>(b.node);
      return equal(*x.guard, *y.guard) && equal(x.body, y.body);
    }
    case StmtKind::IfElse: {
      const auto& x = std::get<IfElse>(a.node);
      const auto& y = std::get<IfElse>(b.node);
      return equal(*x.guard, *y.guard) && equal(x.then_body, y.then_body) &&
             equal(x.else_body, y.else_body);
    }
    default:
      return true;
  }
}

bool equal(const StmtList& a, const StmtList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(*a[i], *b[i])) return false;
  }
  return true;
}

const Expr* stmt_expr(const Stmt& s) {
  switch (s.kind()) {
    case StmtKind::Assign:
      return std::get<Assign>(s.node).value.get();
    case StmtKind::While:
      return std::get<While>(s.node).guard.get();
    case StmtKind::IfElse:
      return std::get<IfElse>(s.node).guard.get();
    default:
      return nullptr;
  }
}

}  // namespace impbench
