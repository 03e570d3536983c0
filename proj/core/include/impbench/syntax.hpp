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

#ifndef IMPBENCH_SYNTAX_HPP_
#define IMPBENCH_SYNTAX_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "impbench/ast.hpp"
#include "impbench/token.hpp"

namespace impbench {

class ParseError : public SyntaxError {
 public:
  ParseError(const std::string& what, SourcePos pos,
             std::vector<std::string> expected);
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::vector<std::string> expected_;
};

// Longest-match lexing over code points. Profile lexemes win ties against
// identifiers. The returned sequence ends with a Tok::End token.
std::vector<Token> tokenize(std::string_view source,
                            const LexemeProfile& profile);

Program parse_program(const std::vector<Token>& tokens);
Program parse(std::string_view source, const LexemeProfile& profile);
ExprPtr parse_expression(std::string_view source, const LexemeProfile& profile);

// Canonical layout: one statement per line, braces on their own lines,
// four-space indentation, spaces around binary operators.
std::string render(const Program& p, const LexemeProfile& profile);
std::string render(const StmtList& list, const LexemeProfile& profile);
std::string render(const Expr& e, const LexemeProfile& profile);
// Single-line rendering of a loop header, e.g. "while (i < 2)".
std::string render_header(const Stmt& s, const LexemeProfile& profile);

}  // namespace impbench

#endif  // IMPBENCH_SYNTAX_HPP_
