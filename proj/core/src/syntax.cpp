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

#include "impbench/syntax.hpp"

#include <algorithm>
#include <utility>

#include "utf8.hpp"

namespace impbench {

ParseError::ParseError(const std::string& what, SourcePos pos,
                       std::vector<std::string> expected)
    : SyntaxError(what, pos), expected_(std::move(expected)) {}

namespace {

bool is_ident_start(char32_t c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char32_t c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(char32_t c) { return c >= '0' && c <= '9'; }

bool is_space(char32_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

std::vector<Token> tokenize(std::string_view source,
                            const LexemeProfile& profile) {
  std::size_t bad = 0;
  auto decoded = utf8::decode(source, &bad);
  if (!decoded) {
    throw UnknownLexeme("invalid UTF-8 at byte " + std::to_string(bad),
                        SourcePos{});
  }
  const std::u32string& src = *decoded;

  std::vector<std::pair<std::u32string, Tok>> lexemes;
  lexemes.reserve(kNumProfileTokens);
  for (std::size_t i = 0; i < kNumProfileTokens; ++i) {
    const auto t = static_cast<Tok>(i);
    lexemes.emplace_back(*utf8::decode(profile.lexeme(t)), t);
  }

  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };

  while (i < src.size()) {
    if (is_space(src[i])) {
      advance(1);
      continue;
    }
    std::size_t ident_len = 0;
    if (is_ident_start(src[i])) {
      ident_len = 1;
      while (i + ident_len < src.size() && is_ident_char(src[i + ident_len]))
        ++ident_len;
    }
    std::size_t digit_len = 0;
    while (i + digit_len < src.size() && is_digit(src[i + digit_len]))
      ++digit_len;

    std::size_t lex_len = 0;
    Tok lex_tok = Tok::End;
    for (const auto& [lx, t] : lexemes) {
      if (lx.size() > lex_len && src.compare(i, lx.size(), lx) == 0) {
        lex_len = lx.size();
        lex_tok = t;
      }
    }

    const std::size_t best = std::max({ident_len, digit_len, lex_len});
    if (best == 0) {
      throw UnknownLexeme(
          "unknown lexeme '" + utf8::encode(std::u32string(1, src[i])) + "'",
          pos);
    }
    Token tok;
    tok.pos = pos;
    tok.text = utf8::encode(std::u32string_view(src).substr(i, best));
    if (lex_len == best) {
      tok.kind = lex_tok;
    } else if (ident_len == best) {
      if (tok.text == "true") {
        tok.kind = Tok::True;
      } else if (tok.text == "false") {
        tok.kind = Tok::False;
      } else {
        tok.kind = Tok::Identifier;
      }
    } else {
      tok.kind = Tok::IntLiteral;
    }
    out.push_back(std::move(tok));
    advance(best);
  }
  Token end;
  end.kind = Tok::End;
  end.pos = pos;
  out.push_back(std::move(end));
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {
    if (toks_.empty() || toks_.back().kind != Tok::End) {
      throw std::invalid_argument("token sequence must end with END");
    }
  }

  Program program() {
    Program p;
    while (peek().kind != Tok::End) p.statements.push_back(statement());
    return p;
  }

  ExprPtr lone_expression() {
    ExprPtr e = expression();
    expect(Tok::End);
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& take() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  bool accept(Tok t) {
    if (peek().kind != t) return false;
    take();
    return true;
  }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    std::vector<std::string> names;
    std::string msg = "expected ";
    for (std::size_t k = 0; k < expected.size(); ++k) {
      names.emplace_back(tok_name(expected[k]));
      if (k > 0) msg += k + 1 == expected.size() ? " or " : ", ";
      msg += names.back();
    }
    const Token& t = peek();
    msg += t.kind == Tok::End ? " but reached end of input"
                              : " but found '" + t.text + "'";
    throw ParseError(msg, t.pos, std::move(names));
  }

  const Token& expect(Tok t) {
    if (peek().kind != t) fail({t});
    return take();
  }

  StmtList block() {
    expect(Tok::LBrace);
    StmtList body;
    while (peek().kind != Tok::RBrace) {
      if (peek().kind == Tok::End) fail({Tok::RBrace});
      body.push_back(statement());
    }
    take();
    return body;
  }

  StmtPtr statement() {
    const SourcePos pos = peek().pos;
    auto s = std::make_shared<Stmt>();
    s->pos = pos;
    switch (peek().kind) {
      case Tok::Int:
      case Tok::Bool: {
        const Type t = take().kind == Tok::Int ? Type::Int : Type::Bool;
        s->node = Decl{t, expect(Tok::Identifier).text};
        break;
      }
      case Tok::Identifier: {
        std::string target = take().text;
        expect(Tok::Assign);
        s->node = Assign{std::move(target), expression()};
        break;
      }
      case Tok::While: {
        take();
        expect(Tok::LParen);
        ExprPtr g = expression();
        expect(Tok::RParen);
        s->node = While{std::move(g), block()};
        break;
      }
      case Tok::If: {
        take();
        expect(Tok::LParen);
        ExprPtr g = expression();
        expect(Tok::RParen);
        StmtList then_body = block();
        StmtList else_body;
        if (accept(Tok::Else)) else_body = block();
        s->node = IfElse{std::move(g), std::move(then_body), std::move(else_body)};
        break;
      }
      case Tok::Break:
        take();
        s->node = BreakStmt{};
        break;
      case Tok::Continue:
        take();
        s->node = ContinueStmt{};
        break;
      case Tok::Halt:
        take();
        s->node = HaltStmt{};
        break;
      default:
        fail({Tok::Int, Tok::Bool, Tok::Identifier, Tok::While, Tok::If,
              Tok::Break, Tok::Continue, Tok::Halt});
    }
    expect(Tok::Semi);
    return s;
  }

  ExprPtr expression() { return binary(1); }

  static std::optional<BinaryOp> as_binary(Tok t) {
    if (t >= Tok::Add && t <= Tok::Mod) return binary_op_of(t);
    if (t >= Tok::Lt && t <= Tok::Ne) return binary_op_of(t);
    if (t == Tok::And || t == Tok::Or) return binary_op_of(t);
    return std::nullopt;
  }

  ExprPtr binary(int min_prec) {
    if (min_prec > 5) return unary();
    ExprPtr lhs = binary(min_prec + 1);
    while (true) {
      auto op = as_binary(peek().kind);
      if (!op || precedence(*op) != min_prec) return lhs;
      const SourcePos pos = peek().pos;
      take();
      ExprPtr rhs = binary(min_prec + 1);
      auto e = std::make_shared<Expr>(Expr{Binary{*op, lhs, rhs}, pos, 0});
      lhs = e;
    }
  }

  ExprPtr unary() {
    if (peek().kind == Tok::Not) {
      const SourcePos pos = take().pos;
      return std::make_shared<Expr>(Expr{Negation{unary()}, pos, 0});
    }
    return primary();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::IntLiteral:
        take();
        return std::make_shared<Expr>(Expr{IntLit{Integer(t.text)}, t.pos, 0});
      case Tok::True:
      case Tok::False:
        take();
        return std::make_shared<Expr>(
            Expr{BoolLit{t.kind == Tok::True}, t.pos, 0});
      case Tok::Identifier:
        take();
        return std::make_shared<Expr>(Expr{VarRef{t.text}, t.pos, 0});
      case Tok::LParen: {
        take();
        ExprPtr inner = expression();
        expect(Tok::RParen);
        auto e = std::make_shared<Expr>(*inner);
        ++e->parens;
        return e;
      }
      default:
        fail({Tok::IntLiteral, Tok::True, Tok::False, Tok::Identifier,
              Tok::LParen, Tok::Not});
    }
  }

  const std::vector<Token>& toks_;
  std::size_t i_ = 0;
};

class Printer {
 public:
  explicit Printer(const LexemeProfile& profile) : lp_(profile) {}

  void list(const StmtList& stmts, int indent, std::string& out) const {
    for (const StmtPtr& s : stmts) stmt(*s, indent, out);
  }

  void stmt(const Stmt& s, int indent, std::string& out) const {
    const std::string pad(static_cast<std::size_t>(indent) * 4, ' ');
    const std::string& semi = lp_.lexeme(Tok::Semi);
    switch (s.kind()) {
      case StmtKind::Decl: {
        const auto& d = std::get<Decl>(s.node);
        out += pad + lp_.lexeme(d.type == Type::Int ? Tok::Int : Tok::Bool) +
               " " + d.name + semi + "\n";
        break;
      }
      case StmtKind::Assign: {
        const auto& a = std::get<Assign>(s.node);
        out += pad + a.target + " " + lp_.lexeme(Tok::Assign) + " ";
        expr(*a.value, out);
        out += semi + "\n";
        break;
      }
      case StmtKind::While: {
        const auto& w = std::get<While>(s.node);
        out += pad + header(s) + "\n";
        block(w.body, indent, out);
        out += semi + "\n";
        break;
      }
      case StmtKind::IfElse: {
        const auto& c = std::get<IfElse>(s.node);
        out += pad + header(s) + "\n";
        block(c.then_body, indent, out);
        out += "\n" + pad + lp_.lexeme(Tok::Else) + "\n";
        block(c.else_body, indent, out);
        out += semi + "\n";
        break;
      }
      case StmtKind::Break:
        out += pad + lp_.lexeme(Tok::Break) + semi + "\n";
        break;
      case StmtKind::Continue:
        out += pad + lp_.lexeme(Tok::Continue) + semi + "\n";
        break;
      case StmtKind::Halt:
        out += pad + lp_.lexeme(Tok::Halt) + semi + "\n";
        break;
    }
  }

  std::string header(const Stmt& s) const {
    std::string out;
    const Expr* g = stmt_expr(s);
    out += lp_.lexeme(s.kind() == StmtKind::While ? Tok::While : Tok::If);
    out += " " + lp_.lexeme(Tok::LParen);
    expr(*g, out);
    out += lp_.lexeme(Tok::RParen);
    return out;
  }

  void expr(const Expr& e, std::string& out, bool force_parens = false) const {
    const int n = std::max(e.parens, force_parens ? 1 : 0);
    for (int k = 0; k < n; ++k) out += lp_.lexeme(Tok::LParen);
    if (const auto* i = std::get_if<IntLit>(&e.node)) {
      if (i->value < 0) {
        out += "0 " + lp_.lexeme(Tok::Sub) + " " + Integer(-i->value).str();
      } else {
        out += i->value.str();
      }
    } else if (const auto* b = std::get_if<BoolLit>(&e.node)) {
      out += b->value ? "true" : "false";
    } else if (const auto* v = std::get_if<VarRef>(&e.node)) {
      out += v->name;
    } else if (const auto* bin = std::get_if<Binary>(&e.node)) {
      const int p = precedence(bin->op);
      expr(*bin->lhs, out, needs_parens(*bin->lhs, p, false));
      out += " " + lp_.lexeme(token_of(bin->op)) + " ";
      expr(*bin->rhs, out, needs_parens(*bin->rhs, p, true));
    } else {
      const auto& neg = std::get<Negation>(e.node);
      out += lp_.lexeme(Tok::Not);
      expr(*neg.operand, out, needs_parens(*neg.operand, 6, false));
    }
    for (int k = 0; k < n; ++k) out += lp_.lexeme(Tok::RParen);
  }

 private:
  static bool needs_parens(const Expr& child, int parent_prec, bool right) {
    int p = 0;
    if (const auto* bin = std::get_if<Binary>(&child.node)) {
      p = precedence(bin->op);
    } else if (const auto* i = std::get_if<IntLit>(&child.node); i && i->value < 0) {
      p = precedence(BinaryOp::Sub);
    } else {
      return false;
    }
    return p < parent_prec || (right && p == parent_prec);
  }

  void block(const StmtList& body, int indent, std::string& out) const {
    const std::string pad(static_cast<std::size_t>(indent) * 4, ' ');
    out += pad + lp_.lexeme(Tok::LBrace) + "\n";
    list(body, indent + 1, out);
    out += pad + lp_.lexeme(Tok::RBrace);
  }

  const LexemeProfile& lp_;
};

}  // namespace

Program parse_program(const std::vector<Token>& tokens) {
  return Parser(tokens).program();
}

Program parse(std::string_view source, const LexemeProfile& profile) {
  const std::vector<Token> toks = tokenize(source, profile);
  return Parser(toks).program();
}

ExprPtr parse_expression(std::string_view source,
                         const LexemeProfile& profile) {
  const std::vector<Token> toks = tokenize(source, profile);
  return Parser(toks).lone_expression();
}

std::string render(const Program& p, const LexemeProfile& profile) {
  return render(p.statements, profile);
}

std::string render(const StmtList& list, const LexemeProfile& profile) {
  std::string out;
  Printer(profile).list(list, 0, out);
  return out;
}

std::string render(const Expr& e, const LexemeProfile& profile) {
  std::string out;
  Printer(profile).expr(e, out);
  return out;
}

std::string render_header(const Stmt& s, const LexemeProfile& profile) {
  if (s.kind() != StmtKind::While && s.kind() != StmtKind::IfElse) {
    throw std::invalid_argument("render_header expects a while or if");
  }
  return Printer(profile).header(s);
}

}  // namespace impbench
