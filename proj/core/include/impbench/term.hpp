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

#ifndef IMPBENCH_TERM_HPP_
#define IMPBENCH_TERM_HPP_

#include <string>
#include <vector>

#include "impbench/ast.hpp"
#include "impbench/value.hpp"

namespace impbench {

// Flattened expression under reduction. Node 0 is the root.
struct TermNode {
  enum class Kind { Value, Var, Binary, Not };

  Kind kind = Kind::Value;
  Value value;
  const std::string* name = nullptr;
  BinaryOp op = BinaryOp::Add;
  int lhs = -1;
  int rhs = -1;

  bool is_value() const { return kind == Kind::Value; }
};

using Term = std::vector<TermNode>;

Term flatten(const Expr& e);

// Result of applying an arithmetic, relational or logical operation to two
// values.
struct OpResult {
  enum class Status { Ok, DivZero, TypeError };

  Status status = Status::Ok;
  Value value;
};

OpResult apply_binary(BinaryOp op, const Value& a, const Value& b);

}  // namespace impbench

#endif  // IMPBENCH_TERM_HPP_
