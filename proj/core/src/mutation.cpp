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

#include "impbench/mutation.hpp"

#include <utility>

#include "assets.hpp"
#include "impbench/k.hpp"
#include "impbench/sos.hpp"
#include "impbench/syntax.hpp"

namespace impbench {

namespace {

constexpr std::pair<Tok, Tok> kSwapPairs[] = {
    {Tok::Add, Tok::Sub}, {Tok::Mul, Tok::Div}, {Tok::Lt, Tok::Gt},
    {Tok::Le, Tok::Ge},   {Tok::Eq, Tok::Ne},   {Tok::And, Tok::Or},
};

struct Placeholder {
  std::string_view key;
  Tok token;
};

constexpr Placeholder kPlaceholders[] = {
    {"ASSIGN_OP", Tok::Assign}, {"ADD_OP", Tok::Add},   {"SUB_OP", Tok::Sub},
    {"MUL_OP", Tok::Mul},       {"DIV_OP", Tok::Div},   {"MOD_OP", Tok::Mod},
    {"LT_OP", Tok::Lt},         {"LTEQ_OP", Tok::Le},   {"GT_OP", Tok::Gt},
    {"GTEQ_OP", Tok::Ge},       {"EQ_OP", Tok::Eq},     {"NEQ_OP", Tok::Ne},
    {"NOT_OP", Tok::Not},       {"AND_OP", Tok::And},   {"OR_OP", Tok::Or},
    {"WHILE", Tok::While},      {"IF", Tok::If},        {"ELSE", Tok::Else},
    {"BREAK", Tok::Break},      {"CONTINUE", Tok::Continue},
    {"HALT", Tok::Halt},        {"INT", Tok::Int},      {"BOOL", Tok::Bool},
    {"SEMI", Tok::Semi},        {"LBRACE", Tok::LBrace}, {"RBRACE", Tok::RBrace},
};

ExprPtr swap_expr(const ExprPtr& e, const OperatorMap& m) {
  if (const auto* b = std::get_if<Binary>(&e->node)) {
    auto out = std::make_shared<Expr>(*e);
    out->node = Binary{m.apply(b->op), swap_expr(b->lhs, m), swap_expr(b->rhs, m)};
    return out;
  }
  if (const auto* n = std::get_if<Negation>(&e->node)) {
    auto out = std::make_shared<Expr>(*e);
    out->node = Negation{swap_expr(n->operand, m)};
    return out;
  }
  return e;
}

StmtList swap_list(const StmtList& list, const OperatorMap& m) {
  StmtList out;
  out.reserve(list.size());
  for (const StmtPtr& s : list) {
    auto copy = std::make_shared<Stmt>(*s);
    if (auto* a = std::get_if<Assign>(&copy->node)) {
      a->value = swap_expr(a->value, m);
    } else if (auto* w = std::get_if<While>(&copy->node)) {
      w->guard = swap_expr(w->guard, m);
      w->body = swap_list(w->body, m);
    } else if (auto* c = std::get_if<IfElse>(&copy->node)) {
      c->guard = swap_expr(c->guard, m);
      c->then_body = swap_list(c->then_body, m);
      c->else_body = swap_list(c->else_body, m);
    }
    out.push_back(std::move(copy));
  }
  return out;
}

}  // namespace

std::string_view mutation_name(MutationKind k) {
  switch (k) {
    case MutationKind::Standard:
      return "std";
    case MutationKind::KeywordSwap:
      return "swap";
    case MutationKind::KeywordObf:
      return "obf";
  }
  return "?";
}

MutationKind parse_mutation(std::string_view s) {
  if (s == "std" || s == "standard" || s == "Standard") {
    return MutationKind::Standard;
  }
  if (s == "swap" || s == "KeywordSwap") return MutationKind::KeywordSwap;
  if (s == "obf" || s == "KeywordObf") return MutationKind::KeywordObf;
  throw std::invalid_argument("unknown mutation: " + std::string(s));
}

OperatorMap OperatorMap::identity() {
  OperatorMap m;
  for (std::size_t i = 0; i < m.map_.size(); ++i) m.map_[i] = static_cast<Tok>(i);
  return m;
}

const OperatorMap& OperatorMap::keyword_swap() {
  static const OperatorMap m = [] {
    OperatorMap out = identity();
    for (const auto& [a, b] : kSwapPairs) {
      out.map_[static_cast<std::size_t>(a)] = b;
      out.map_[static_cast<std::size_t>(b)] = a;
    }
    return out;
  }();
  return m;
}

Tok OperatorMap::apply(Tok t) const { return map_[static_cast<std::size_t>(t)]; }

BinaryOp OperatorMap::apply(BinaryOp op) const {
  return binary_op_of(apply(token_of(op)));
}

OperatorSemantics OperatorMap::semantics() const {
  std::array<BinaryOp, kNumBinaryOps> meaning{};
  for (std::size_t i = 0; i < kNumBinaryOps; ++i) {
    meaning[i] = apply(static_cast<BinaryOp>(i));
  }
  return OperatorSemantics::from_table(meaning);
}

const OperatorSemantics& semantics_for(MutationKind k) {
  static const OperatorSemantics swap = OperatorMap::keyword_swap().semantics();
  return k == MutationKind::KeywordSwap ? swap : OperatorSemantics::standard();
}

const LexemeProfile& profile_for(MutationKind k) {
  return k == MutationKind::KeywordObf ? LexemeProfile::obfuscated()
                                       : LexemeProfile::standard();
}

Program transform_program(const Program& p, MutationKind k) {
  if (k != MutationKind::KeywordSwap) return p;
  return Program{swap_list(p.statements, OperatorMap::keyword_swap())};
}

std::string mutated_source(const Program& p, MutationKind k) {
  return render(transform_program(p, k), profile_for(k));
}

std::map<std::string, std::string> placeholder_values(MutationKind k) {
  const LexemeProfile& lp = profile_for(k);
  const OperatorMap& swap = OperatorMap::keyword_swap();
  std::map<std::string, std::string> out;
  for (const Placeholder& ph : kPlaceholders) {
    // The symbol that performs this token's operation is its swap image.
    const Tok written = k == MutationKind::KeywordSwap ? swap.apply(ph.token)
                                                       : ph.token;
    out.emplace(ph.key, lp.lexeme(written));
  }
  out.emplace("LOOP", "loop");
  out.emplace("ERROR", "ERROR");
  out.emplace("language", "IMP");
  return out;
}

std::string fill_template(std::string_view text,
                          const std::map<std::string, std::string>& values) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if ((c == '{' || c == '}') && i + 1 < text.size() && text[i + 1] == c) {
      out += c;
      i += 2;
      continue;
    }
    if (c == '{') {
      const std::size_t close = text.find('}', i + 1);
      if (close != std::string_view::npos) {
        const auto it = values.find(std::string(text.substr(i + 1, close - i - 1)));
        if (it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out += c;
    ++i;
  }
  return out;
}

std::string mutate_semantics(Style style, MutationKind k) {
  const std::string_view base =
      style == Style::Sos ? assets::sos_semantics_txt : assets::k_semantics_txt;
  return fill_template(base, placeholder_values(k));
}

std::string mutate_syntax(MutationKind k) {
  return fill_template(assets::imp_ebnf, placeholder_values(k));
}

bool check_equivalence(const Program& p, MutationKind k, std::size_t step_limit) {
  const Program mutated =
      k == MutationKind::KeywordObf
          ? parse(render(p, LexemeProfile::obfuscated()), LexemeProfile::obfuscated())
          : transform_program(p, k);
  RunOptions base;
  base.step_limit = step_limit;
  base.recording = Recording::None;
  RunOptions mut = base;
  mut.semantics = &semantics_for(k);

  for (const Style style : {Style::Sos, Style::K}) {
    const Trace a = style == Style::Sos ? sos::run(p, base) : k::run(p, base);
    const Trace b =
        style == Style::Sos ? sos::run(mutated, mut) : k::run(mutated, mut);
    if (!a.terminated() || !b.terminated()) {
      throw NonTermination("step limit reached while checking equivalence");
    }
    if (a.outcome != b.outcome || !(a.final_store == b.final_store)) return false;
  }
  return true;
}

}  // namespace impbench
