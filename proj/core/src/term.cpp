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

#include "impbench/term.hpp"

namespace impbench {

namespace {

int flatten_into(const Expr& e, Term& out) {
  const int idx = static_cast<int>(out.size());
  out.emplace_back();
  if (const auto* i = std::get_if<IntLit>(&e.node)) {
    out[idx].value = Value(i->value);
  } else if (const auto* b = std::get_if<BoolLit>(&e.node)) {
    out[idx].value = Value(b->value);
  } else if (const auto* v = std::get_if<VarRef>(&e.node)) {
    out[idx].kind = TermNode::Kind::Var;
    out[idx].name = &v->name;
  } else if (const auto* bin = std::get_if<Binary>(&e.node)) {
    const int l = flatten_into(*bin->lhs, out);
    const int r = flatten_into(*bin->rhs, out);
    out[idx].kind = TermNode::Kind::Binary;
    out[idx].op = bin->op;
    out[idx].lhs = l;
    out[idx].rhs = r;
  } else {
    const int l = flatten_into(*std::get<Negation>(e.node).operand, out);
    out[idx].kind = TermNode::Kind::Not;
    out[idx].lhs = l;
  }
  return idx;
}

}  // namespace

Term flatten(const Expr& e) {
  Term t;
  flatten_into(e, t);
  return t;
}

OpResult apply_binary(BinaryOp op, const Value& a, const Value& b) {
  using S = OpResult::Status;
  if (is_logical(op)) {
    if (!a.is_bool() || !b.is_bool()) return {S::TypeError, {}};
    const bool r = op == BinaryOp::And ? (a.as_bool() && b.as_bool())
                                       : (a.as_bool() || b.as_bool());
    return {S::Ok, Value(r)};
  }
  if (!a.is_int() || !b.is_int()) return {S::TypeError, {}};
  const Integer& x = a.as_int();
  const Integer& y = b.as_int();
  switch (op) {
    case BinaryOp::Add:
      return {S::Ok, Value(Integer(x + y))};
    case BinaryOp::Sub:
      return {S::Ok, Value(Integer(x - y))};
    case BinaryOp::Mul:
      return {S::Ok, Value(Integer(x * y))};
    case BinaryOp::Div:
      if (y == 0) return {S::DivZero, {}};
      return {S::Ok, Value(Integer(x / y))};
    case BinaryOp::Mod:
      if (y == 0) return {S::DivZero, {}};
      return {S::Ok, Value(Integer(x % y))};
    case BinaryOp::Lt:
      return {S::Ok, Value(x < y)};
    case BinaryOp::Le:
      return {S::Ok, Value(x <= y)};
    case BinaryOp::Gt:
      return {S::Ok, Value(x > y)};
    case BinaryOp::Ge:
      return {S::Ok, Value(x >= y)};
    case BinaryOp::Eq:
      return {S::Ok, Value(x == y)};
    case BinaryOp::Ne:
      return {S::Ok, Value(x != y)};
    default:
      return {S::TypeError, {}};
  }
}

}  // namespace impbench
