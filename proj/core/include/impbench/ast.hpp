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

#ifndef IMPBENCH_AST_HPP_
#define IMPBENCH_AST_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "impbench/token.hpp"
#include "impbench/value.hpp"

namespace impbench {

enum class BinaryOp {
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  Lt,
  Le,
  Gt,
  Ge,
  Eq,
  Ne,
  And,
  Or,
};

inline constexpr std::size_t kNumBinaryOps = 13;

Tok token_of(BinaryOp op);
BinaryOp binary_op_of(Tok t);
bool is_arithmetic(BinaryOp op);
bool is_relational(BinaryOp op);
bool is_logical(BinaryOp op);
// Larger binds tighter. Unary negation sits above all binary levels.
int precedence(BinaryOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
  Integer value;
};
struct BoolLit {
  bool value = false;
};
struct VarRef {
  std::string name;
};
struct Binary {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Negation {
  ExprPtr operand;
};

struct Expr {
  std::variant<IntLit, BoolLit, VarRef, Binary, Negation> node;
  SourcePos pos;
  // Number of source parenthesis pairs wrapped directly around this node.
  int parens = 0;
};

ExprPtr make_int(Integer v, int parens = 0);
ExprPtr make_bool(bool v);
ExprPtr make_var(std::string name);
ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, int parens = 0);
ExprPtr make_not(ExprPtr operand);
ExprPtr with_parens(const ExprPtr& e, int parens);

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;
using StmtList = std::vector<StmtPtr>;

struct Decl {
  Type type;
  std::string name;
};
struct Assign {
  std::string target;
  ExprPtr value;
};
struct While {
  ExprPtr guard;
  StmtList body;
};
struct IfElse {
  ExprPtr guard;
  StmtList then_body;
  StmtList else_body;
};
struct BreakStmt {};
struct ContinueStmt {};
struct HaltStmt {};

enum class StmtKind { Decl, Assign, While, IfElse, Break, Continue, Halt };

struct Stmt {
  std::variant<Decl, Assign, While, IfElse, BreakStmt, ContinueStmt, HaltStmt>
      node;
  SourcePos pos;

  StmtKind kind() const { return static_cast<StmtKind>(node.index()); }
};

std::string_view stmt_kind_name(StmtKind k);

StmtPtr make_decl(Type t, std::string name);
StmtPtr make_assign(std::string target, ExprPtr value);
StmtPtr make_while(ExprPtr guard, StmtList body);
StmtPtr make_if(ExprPtr guard, StmtList then_body, StmtList else_body);
StmtPtr make_break();
StmtPtr make_continue();
StmtPtr make_halt();

struct Program {
  StmtList statements;
};

// Structural equality. Source positions and parenthesis counts are ignored.
bool equal(const Expr& a, const Expr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const StmtList& a, const StmtList& b);
inline bool operator==(const Program& a, const Program& b) {
  return equal(a.statements, b.statements);
}

// Calls f on every statement in pre-order.
template <typename F>
void for_each_stmt(const StmtList& list, F&& f) {
  for (const StmtPtr& s : list) {
    f(*s);
    if (const auto* w = std::get_if<While>(&s->node)) {
      for_each_stmt(w->body, f);
    } else if (const auto* c = std::get_if<IfElse>(&s->node)) {
      for_each_stmt(c->then_body, f);
      for_each_stmt(c->else_body, f);
    }
  }
}

// Calls f on every expression node in pre-order.
template <typename F>
void for_each_expr(const Expr& e, F&& f) {
  f(e);
  if (const auto* b = std::get_if<Binary>(&e.node)) {
    for_each_expr(*b->lhs, f);
    for_each_expr(*b->rhs, f);
  } else if (const auto* n = std::get_if<Negation>(&e.node)) {
    for_each_expr(*n->operand, f);
  }
}

// Guard or right-hand side expression of a statement, or null.
const Expr* stmt_expr(const Stmt& s);

}  // namespace impbench

#endif  // IMPBENCH_AST_HPP_
