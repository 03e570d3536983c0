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

#include <gtest/gtest.h>

#include <string>

#include "impbench/syntax.hpp"

namespace impbench {
namespace {

const LexemeProfile& Std() { return LexemeProfile::standard(); }
const LexemeProfile& Obf() { return LexemeProfile::obfuscated(); }

TEST(Tokenize, EndsWithEnd) {
  auto toks = tokenize("", Std());
  ASSERT_EQ(toks.size(), 1u);
  EXPECT_EQ(toks[0].kind, Tok::End);
}

TEST(Tokenize, LongestMatch) {
  auto toks = tokenize("a<=b", Std());
  ASSERT_EQ(toks.size(), 4u);
  EXPECT_EQ(toks[1].kind, Tok::Le);
  EXPECT_EQ(toks[1].text, "<=");
}

TEST(Tokenize, KeywordPrefixIsIdentifier) {
  auto toks = tokenize("whilex", Std());
  ASSERT_EQ(toks.size(), 2u);
  EXPECT_EQ(toks[0].kind, Tok::Identifier);
  EXPECT_EQ(toks[0].text, "whilex");
}

TEST(Tokenize, Positions) {
  auto toks = tokenize("int a;\n  a = 1;", Std());
  EXPECT_EQ(toks[3].pos.line, 2);
  EXPECT_EQ(toks[3].pos.column, 3);
}

TEST(Tokenize, UnknownLexemeThrows) {
  EXPECT_THROW(tokenize("a = 1 @ 2;", Std()), UnknownLexeme);
  try {
    tokenize("a = 1 @ 2;", Std());
  } catch (const UnknownLexeme& e) {
    EXPECT_EQ(e.pos().column, 7);
  }
}

TEST(Tokenize, ObfuscatedOperatorIsUnknownUnderStandard) {
  const std::string src = "a " + Obf().lexeme(Tok::Assign) + " 1 " +
                          Obf().lexeme(Tok::Add) + " 2;";
  EXPECT_THROW(tokenize(src, Std()), UnknownLexeme);
  auto toks = tokenize(src, Obf());
  EXPECT_EQ(toks[1].kind, Tok::Assign);
  EXPECT_EQ(toks[3].kind, Tok::Add);
  EXPECT_THROW(tokenize("a = 1;", Obf()), UnknownLexeme);
}

TEST(Tokenize, ObfuscatedKeywordsAreSingleCodePoints) {
  EXPECT_EQ(Obf().lexeme(Tok::Add), "\xF0\x90\x95\x90");  // U+10550
  EXPECT_EQ(Obf().lexeme(Tok::Int), "int");
  EXPECT_EQ(Obf().lexeme(Tok::LBrace), "{");
}

TEST(Profile, RejectsDuplicates) {
  LexemeProfile::Table t;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = "k" + std::to_string(i);
  t[1] = t[0];
  EXPECT_THROW(LexemeProfile::make("dup", t), InvalidProfile);
}

TEST(Profile, RejectsEmptyAndBooleanLexemes) {
  LexemeProfile::Table t;
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = "k" + std::to_string(i);
  auto empty = t;
  empty[3] = "";
  EXPECT_THROW(LexemeProfile::make("e", empty), InvalidProfile);
  auto boolean = t;
  boolean[3] = "true";
  EXPECT_THROW(LexemeProfile::make("b", boolean), InvalidProfile);
}

TEST(Profile, TokenForRoundTrips) {
  for (std::size_t i = 0; i < kNumProfileTokens; ++i) {
    const Tok t = static_cast<Tok>(i);
    EXPECT_EQ(Std().token_for(Std().lexeme(t)), t);
    EXPECT_EQ(Obf().token_for(Obf().lexeme(t)), t);
  }
}

TEST(Parse, CanonicalSpacing) {
  EXPECT_EQ(render(parse("a=1;", Std()), Std()), "a = 1;\n");
}

TEST(Parse, Precedence) {
  auto e = parse_expression("1 + 2 * 3", Std());
  const auto& b = std::get<Binary>(e->node);
  EXPECT_EQ(b.op, BinaryOp::Add);
  EXPECT_EQ(std::get<Binary>(b.rhs->node).op, BinaryOp::Mul);
}

TEST(Parse, LeftAssociative) {
  auto e = parse_expression("8 - 4 - 2", Std());
  const auto& b = std::get<Binary>(e->node);
  EXPECT_EQ(b.op, BinaryOp::Sub);
  EXPECT_EQ(std::get<Binary>(b.lhs->node).op, BinaryOp::Sub);
}

TEST(Parse, LogicalBelowRelational) {
  auto e = parse_expression("a < b && !c || d == e", Std());
  const auto& top = std::get<Binary>(e->node);
  EXPECT_EQ(top.op, BinaryOp::Or);
  EXPECT_EQ(std::get<Binary>(top.lhs->node).op, BinaryOp::And);
  EXPECT_EQ(std::get<Binary>(top.rhs->node).op, BinaryOp::Eq);
}

TEST(Parse, ParenthesesKept) {
  const std::string src = "x = (a + b) * c;\n";
  EXPECT_EQ(render(parse(src, Std()), Std()), src);
}

TEST(Parse, ErrorListsExpected) {
  try {
    parse("int ;", Std());
    FAIL() << "no error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.pos().column, 5);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Parse, MissingSemicolon) {
  EXPECT_THROW(parse("a = 1", Std()), ParseError);
  EXPECT_THROW(parse("while (a) { halt; }", Std()), ParseError);
}

TEST(Parse, EmptyProgram) {
  EXPECT_TRUE(parse("", Std()).statements.empty());
  EXPECT_EQ(render(Program{}, Std()), "");
}

TEST(Render, CanonicalBlocks) {
  const std::string src =
      "int i;\n"
      "while (i < 2)\n"
      "{\n"
      "    if (i == 0)\n"
      "    {\n"
      "        i = i + 1;\n"
      "    }\n"
      "    else\n"
      "    {\n"
      "        break;\n"
      "    };\n"
      "};\n";
  EXPECT_EQ(render(parse(src, Std()), Std()), src);
}

TEST(Render, HeaderIsSingleLine) {
  auto p = parse("while (i < 2) { halt; };", Std());
  EXPECT_EQ(render_header(*p.statements[0], Std()), "while (i < 2)");
}

TEST(Render, NegativeLiteralAsSubtraction) {
  Program p{{make_assign("x", make_int(Integer(-5)))}};
  EXPECT_EQ(render(p, Std()), "x = 0 - 5;\n");
  Program q{{make_assign(
      "x", make_binary(BinaryOp::Mul, make_int(Integer(3)), make_int(Integer(-5))))}};
  const std::string text = render(q, Std());
  EXPECT_EQ(text, "x = 3 * (0 - 5);\n");
  EXPECT_EQ(render(parse(text, Std()), Std()), text);
}

TEST(RoundTrip, ObfuscatedProfile) {
  const std::string src =
      "int a;\nbool f;\na = 7 % 3 - 1;\nf = !(a >= 2) || a != 0;\n"
      "while (a < 10) { a = a * 2; if (f) { continue; } else { break; }; };\n"
      "halt;\n";
  Program p = parse(src, Std());
  const std::string obf = render(p, Obf());
  Program back = parse(obf, Obf());
  EXPECT_TRUE(p == back);
  EXPECT_EQ(render(back, Std()), render(p, Std()));
  EXPECT_EQ(obf.find("while"), std::string::npos);
}

TEST(RoundTrip, RenderIsFixedPoint) {
  const std::string src =
      "int x;int y;x=((1));y=x/2%3;while(x<=y&&true){x=x+1;break;};";
  Program p = parse(src, Std());
  const std::string once = render(p, Std());
  EXPECT_EQ(render(parse(once, Std()), Std()), once);
}

}  // namespace
}  // namespace impbench
