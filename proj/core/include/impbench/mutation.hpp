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

#ifndef IMPBENCH_MUTATION_HPP_
#define IMPBENCH_MUTATION_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "impbench/ast.hpp"
#include "impbench/token.hpp"
#include "impbench/trace.hpp"

namespace impbench {

enum class MutationKind { Standard, KeywordSwap, KeywordObf };

std::string_view mutation_name(MutationKind k);
// Accepts "std", "standard", "swap", "obf" and the enum spellings.
MutationKind parse_mutation(std::string_view s);

class NonTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Token-to-token swap table. Tokens outside the table are fixed points.
class OperatorMap {
 public:
  static OperatorMap identity();
  static const OperatorMap& keyword_swap();

  Tok apply(Tok t) const;
  BinaryOp apply(BinaryOp op) const;
  // Binding under which each written operator performs the mapped operation.
  OperatorSemantics semantics() const;

 private:
  std::array<Tok, static_cast<std::size_t>(Tok::End) + 1> map_{};
};

const OperatorSemantics& semantics_for(MutationKind k);

// Surface profile a program is rendered with under the mutation.
const LexemeProfile& profile_for(MutationKind k);

// p′ for the mutation. KeywordSwap rewrites every swappable operator node;
// Standard and KeywordObf leave the tree unchanged.
Program transform_program(const Program& p, MutationKind k);

// Source text a model sees under the mutation.
std::string mutated_source(const Program& p, MutationKind k);

// Placeholder bindings ({ADD_OP}, {WHILE}, ...) for documents and prompts.
// Each operator placeholder names the surface symbol that performs that
// operation under the mutation.
std::map<std::string, std::string> placeholder_values(MutationKind k);

// Expands {KEY} for known keys, collapses {{ and }} to single braces and
// leaves any other text untouched.
std::string fill_template(std::string_view text,
                          const std::map<std::string, std::string>& values);

std::string mutate_semantics(Style style, MutationKind k);
std::string mutate_syntax(MutationKind k);

// Runs (standard, p) and (s′, p′) on both engines and compares final stores
// and outcome classes.
bool check_equivalence(const Program& p, MutationKind k,
                       std::size_t step_limit = 1'000'000);

}  // namespace impbench

#endif  // IMPBENCH_MUTATION_HPP_
