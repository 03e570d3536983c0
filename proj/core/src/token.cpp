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

#include "impbench/token.hpp"

#include <set>
#include <utility>

#include "utf8.hpp"

namespace impbench {

namespace {

constexpr std::array<std::string_view, static_cast<std::size_t>(Tok::End) + 1>
    kTokNames = {
        "ADD",   "SUB",    "MUL",      "DIV",   "MOD",    "ASSIGN", "LT",
        "LE",    "GT",     "GE",       "EQ",    "NE",     "NOT",    "AND",
        "OR",    "WHILE",  "IF",       "ELSE",  "BREAK",  "CONTINUE",
        "HALT",  "INT",    "BOOL",     "LPAREN", "RPAREN", "LBRACE",
        "RBRACE", "SEMI",  "IDENTIFIER", "INT_LITERAL", "TRUE", "FALSE",
        "END",
};

LexemeProfile::Table standard_table() {
  return {"+",  "-",  "*",     "/",  "%",    "=",     "<",        "<=",
          ">",  ">=", "==",    "!=", "!",    "&&",    "||",       "while",
          "if", "else", "break", "continue", "halt", "int", "bool", "(",
          ")",  "{",  "}",     ";"};
}

LexemeProfile::Table obfuscated_table() {
  auto cp = [](char32_t c) { return utf8::encode(c); };
  return {cp(0x10550), cp(0x10559), cp(0x1054A), cp(0x1054F), cp(0x10556),
          cp(0x1053D), cp(0x10533), cp(0x10537), cp(0x10543), cp(0x1055B),
          cp(0x1055F), cp(0x10540), cp(0x10530), cp(0x1055C), cp(0x1053B),
          cp(0x10555), cp(0x10531), cp(0x10532), cp(0x10545), cp(0x10538),
          cp(0x1054C), "int",       "bool",      "(",         ")",
          "{",         "}",         ";"};
}

}  // namespace

std::string_view tok_name(Tok t) {
  return kTokNames[static_cast<std::size_t>(t)];
}

SyntaxError::SyntaxError(const std::string& what, SourcePos pos)
    : std::runtime_error(std::to_string(pos.line) + ":" +
                         std::to_string(pos.column) + ": " + what),
      pos_(pos) {}

LexemeProfile LexemeProfile::make(std::string name, Table lexemes) {
  std::set<std::string_view> seen;
  for (std::size_t i = 0; i < lexemes.size(); ++i) {
    const std::string& lx = lexemes[i];
    if (lx.empty()) {
      throw InvalidProfile("empty lexeme for " +
                           std::string(tok_name(static_cast<Tok>(i))));
    }
    if (!utf8::valid(lx)) {
      throw InvalidProfile("lexeme for " +
                           std::string(tok_name(static_cast<Tok>(i))) +
                           " is not valid UTF-8");
    }
    if (!seen.insert(lx).second) {
      throw InvalidProfile("lexeme '" + lx + "' is bound to two tokens");
    }
    if (lx == "true" || lx == "false") {
      throw InvalidProfile("boolean literals cannot be rebound");
    }
  }
  LexemeProfile p;
  p.name_ = std::move(name);
  p.lexemes_ = std::move(lexemes);
  return p;
}

const LexemeProfile& LexemeProfile::standard() {
  static const LexemeProfile p = make("standard", standard_table());
  return p;
}

const LexemeProfile& LexemeProfile::obfuscated() {
  static const LexemeProfile p = make("obfuscated", obfuscated_table());
  return p;
}

const std::string& LexemeProfile::lexeme(Tok t) const {
  const auto i = static_cast<std::size_t>(t);
  if (i >= kNumProfileTokens) {
    throw std::out_of_range("token has no profile lexeme: " +
                            std::string(tok_name(t)));
  }
  return lexemes_[i];
}

std::optional<Tok> LexemeProfile::token_for(std::string_view lexeme) const {
  for (std::size_t i = 0; i < lexemes_.size(); ++i) {
    if (lexemes_[i] == lexeme) return static_cast<Tok>(i);
  }
  return std::nullopt;
}

}  // namespace impbench
