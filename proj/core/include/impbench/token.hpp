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

#ifndef IMPBENCH_TOKEN_HPP_
#define IMPBENCH_TOKEN_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace impbench {

// Abstract tokens. Every kind before Identifier is spelled by a LexemeProfile.
enum class Tok : std::uint8_t {
  Add,
  Sub,
  Mul,
  Div,
  Mod,
  Assign,
  Lt,
  Le,
  Gt,
  Ge,
  Eq,
  Ne,
  Not,
  And,
  Or,
  While,
  If,
  Else,
  Break,
  Continue,
  Halt,
  Int,
  Bool,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Semi,
  Identifier,
  IntLiteral,
  True,
  False,
  End,
};

inline constexpr std::size_t kNumProfileTokens =
    static_cast<std::size_t>(Tok::Identifier);

std::string_view tok_name(Tok t);

struct SourcePos {
  int line = 1;
  int column = 1;
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourcePos pos;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, SourcePos pos);
  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class UnknownLexeme : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class InvalidProfile : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A total, injective assignment of surface strings to the profile-bound tokens.
class LexemeProfile {
 public:
  using Table = std::array<std::string, kNumProfileTokens>;

  static LexemeProfile make(std::string name, Table lexemes);
  static const LexemeProfile& standard();
  static const LexemeProfile& obfuscated();

  const std::string& name() const { return name_; }
  const std::string& lexeme(Tok t) const;
  std::optional<Tok> token_for(std::string_view lexeme) const;

 private:
  LexemeProfile() = default;

  std::string name_;
  Table lexemes_;
};

}  // namespace impbench

#endif  // IMPBENCH_TOKEN_HPP_
