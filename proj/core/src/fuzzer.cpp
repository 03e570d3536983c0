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

#include "impbench/fuzzer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "impbench/sos.hpp"

namespace impbench {

namespace {

constexpr std::size_t idx(StmtChoice c) { return static_cast<std::size_t>(c); }

constexpr BinaryOp kArithOps[] = {BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul,
                                  BinaryOp::Div, BinaryOp::Mod};
constexpr BinaryOp kRelOps[] = {BinaryOp::Lt, BinaryOp::Le, BinaryOp::Gt,
                                BinaryOp::Ge, BinaryOp::Eq, BinaryOp::Ne};

ExprPtr int_expr(int v) {
  if (v >= 0) return make_int(Integer(v));
  return make_binary(BinaryOp::Sub, make_int(Integer(0)), make_int(Integer(-v)));
}

class Generator {
 public:
  Generator(const FuzzConfig& cfg, std::uint64_t seed, const SlotObserver& obs)
      : cfg_(cfg), rng_(seed), observer_(obs) {}

  Program run() {
    const int nvars = uniform(cfg_.min_vars, cfg_.max_vars);
    std::string letters;
    for (char c = 'a'; c <= 'z'; ++c) letters += c;
    for (char c = 'A'; c <= 'Z'; ++c) letters += c;
    std::shuffle(letters.begin(), letters.end(), rng_);
    for (int i = 0; i < nvars; ++i) vars_.emplace_back(1, letters[i]);

    StmtList out;
    for (const std::string& v : vars_) out.push_back(make_decl(Type::Int, v));
    for (const std::string& v : vars_) {
      out.push_back(make_assign(v, arith()));
    }
    StmtList body = block(GenContext{});
    for (const InstrumentedLoop& l : loops_) out.push_back(l.declaration);
    for (const InstrumentedLoop& l : loops_) out.push_back(l.initialization);
    out.insert(out.end(), body.begin(), body.end());
    return Program{std::move(out)};
  }

 private:
  int uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  const std::string& pick_var() {
    return vars_[static_cast<std::size_t>(uniform(0, static_cast<int>(vars_.size()) - 1))];
  }

  ExprPtr arith_tree(int terms, int& var_budget) {
    if (terms == 1) {
      if (var_budget > 0 && coin(0.5)) {
        --var_budget;
        return make_var(pick_var());
      }
      return make_int(Integer(uniform(0, 9)));
    }
    const BinaryOp op = kArithOps[uniform(0, 4)];
    if (op == BinaryOp::Div || op == BinaryOp::Mod) {
      ExprPtr lhs = arith_tree(terms - 1, var_budget);
      return make_binary(op, std::move(lhs), make_int(Integer(uniform(1, 9))));
    }
    const int left = uniform(1, terms - 1);
    ExprPtr lhs = arith_tree(left, var_budget);
    ExprPtr rhs = arith_tree(terms - left, var_budget);
    return make_binary(op, std::move(lhs), std::move(rhs));
  }

  ExprPtr arith() {
    int budget = cfg_.max_var_terms;
    return arith_tree(uniform(1, cfg_.max_arith_terms), budget);
  }

  ExprPtr atom() {
    int budget = cfg_.max_var_terms;
    ExprPtr lhs = arith_tree(uniform(1, 2), budget);
    ExprPtr rhs = arith_tree(uniform(1, 2), budget);
    ExprPtr cmp = make_binary(kRelOps[uniform(0, 5)], std::move(lhs), std::move(rhs));
    return coin(0.1) ? make_not(with_parens(cmp, 1)) : cmp;
  }

  ExprPtr boolean(int terms) {
    if (terms == 1) return atom();
    const int left = uniform(1, terms - 1);
    ExprPtr lhs = boolean(left);
    ExprPtr rhs = boolean(terms - left);
    return make_binary(coin(0.5) ? BinaryOp::And : BinaryOp::Or, std::move(lhs),
                       std::move(rhs));
  }

  StmtChoice draw(const GenContext& ctx) {
    const ProbTable masked = apply_mask(cfg_.base, legality_mask(ctx, cfg_));
    const ProbTable p =
        taper_probabilities(masked, ctx.depth, cfg_.min_depth, cfg_.max_depth);
    std::discrete_distribution<std::size_t> dist(p.begin(), p.end());
    const auto c = static_cast<StmtChoice>(dist(rng_));
    if (observer_) observer_(SlotRecord{ctx, c});
    return c;
  }

  StmtList block(const GenContext& ctx) {
    StmtList out;
    const int n = uniform(cfg_.min_stmts, cfg_.max_stmts);
    for (int i = 0; i < n; ++i) out.push_back(statement(ctx));
    return out;
  }

  StmtPtr statement(const GenContext& ctx) {
    switch (draw(ctx)) {
      case StmtChoice::Assign: {
        const std::string& target = pick_var();
        return make_assign(target, arith());
      }
      case StmtChoice::While: {
        ExprPtr guard = boolean(uniform(1, cfg_.max_bool_terms));
        const std::string name = "ble" + std::to_string(loops_.size());
        const LoopBreakerPlan plan = draw_breaker(rng_, name);
        // Reserve the slot so nested loops get later names.
        loops_.emplace_back();
        const std::size_t slot = loops_.size() - 1;
        StmtList body = block(GenContext{ctx.depth + 1, ctx.loop_depth + 1});
        loops_[slot] = instrument_loop(std::move(guard), std::move(body), plan);
        return loops_[slot].loop;
      }
      case StmtChoice::If: {
        ExprPtr guard = boolean(uniform(1, cfg_.max_bool_terms));
        const GenContext inner{ctx.depth + 1, ctx.loop_depth};
        StmtList then_body = block(inner);
        StmtList else_body = block(inner);
        return make_if(std::move(guard), std::move(then_body), std::move(else_body));
      }
      case StmtChoice::Break:
        return make_break();
      case StmtChoice::Continue:
        return make_continue();
      case StmtChoice::Halt:
        return make_halt();
    }
    throw std::logic_error("unreachable statement choice");
  }

  const FuzzConfig& cfg_;
  std::mt19937_64 rng_;
  const SlotObserver& observer_;
  std::vector<std::string> vars_;
  std::vector<InstrumentedLoop> loops_;
};

struct ValueLimit {};

}  // namespace

std::string_view choice_name(StmtChoice c) {
  switch (c) {
    case StmtChoice::Assign:
      return "assign";
    case StmtChoice::While:
      return "while";
    case StmtChoice::If:
      return "if";
    case StmtChoice::Break:
      return "break";
    case StmtChoice::Continue:
      return "continue";
    case StmtChoice::Halt:
      return "halt";
  }
  return "?";
}

void FuzzConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(std::string("fuzz config: ") + what);
  };
  require(min_stmts >= 1 && min_stmts <= max_stmts, "statements per block");
  require(min_depth >= 0 && min_depth < max_depth, "block depth bounds");
  require(min_vars >= 1 && min_vars <= max_vars && max_vars <= 52,
          "variable count");
  require(max_arith_terms >= 1 && max_var_terms >= 0 && max_bool_terms >= 1,
          "expression term limits");
  double sum = 0;
  for (double p : base) {
    require(p >= 0, "negative probability");
    sum += p;
  }
  require(std::abs(sum - 1.0) < 1e-9, "probabilities must sum to 1");
  require(base[idx(StmtChoice::Assign)] > 0, "assignment probability");
}

double cosine_taper(int depth, int min_depth, int max_depth) {
  if (depth <= min_depth) return 1.0;
  if (depth >= max_depth) return 0.0;
  const double x = static_cast<double>(depth - min_depth) / (max_depth - min_depth);
  return 0.5 * (1.0 + std::cos(std::numbers::pi * x));
}

ProbTable taper_probabilities(const ProbTable& base, int depth, int min_depth,
                              int max_depth) {
  if (depth <= min_depth) return base;
  const double f = cosine_taper(depth, min_depth, max_depth);
  ProbTable out = base;
  double removed = 0;
  for (StmtChoice c : {StmtChoice::While, StmtChoice::If}) {
    removed += out[idx(c)] * (1.0 - f);
    out[idx(c)] = depth >= max_depth ? 0.0 : out[idx(c)] * f;
  }
  double rest = 0;
  for (std::size_t i = 0; i < kNumStmtChoices; ++i) {
    if (i != idx(StmtChoice::While) && i != idx(StmtChoice::If)) rest += out[i];
  }
  if (rest <= 0) return out;
  for (std::size_t i = 0; i < kNumStmtChoices; ++i) {
    if (i != idx(StmtChoice::While) && i != idx(StmtChoice::If)) {
      out[i] += removed * out[i] / rest;
    }
  }
  return out;
}

Legality legality_mask(const GenContext& ctx, const FuzzConfig& cfg) {
  Legality ok;
  ok.fill(true);
  if (ctx.loop_depth == 0) {
    ok[idx(StmtChoice::Break)] = false;
    ok[idx(StmtChoice::Continue)] = false;
  }
  if (ctx.depth >= cfg.max_depth) {
    ok[idx(StmtChoice::While)] = false;
    ok[idx(StmtChoice::If)] = false;
  }
  return ok;
}

ProbTable apply_mask(const ProbTable& p, const Legality& allowed) {
  ProbTable out{};
  double sum = 0;
  for (std::size_t i = 0; i < kNumStmtChoices; ++i) {
    if (allowed[i]) {
      out[i] = p[i];
      sum += p[i];
    }
  }
  if (sum <= 0) throw std::invalid_argument("no legal statement kinds");
  for (double& x : out) x /= sum;
  return out;
}

LoopBreakerPlan draw_breaker(std::mt19937_64& rng, std::string name) {
  std::uniform_int_distribution<int> range(-20, 20);
  LoopBreakerPlan plan;
  plan.name = std::move(name);
  plan.increment = std::bernoulli_distribution(0.5)(rng);
  const int a = range(rng);
  const int b = range(rng);
  plan.initial = plan.increment ? std::min(a, b) : std::max(a, b);
  plan.bound = plan.increment ? std::max(a, b) : std::min(a, b);
  const int hi = std::max(1, std::abs(plan.bound) / 3);
  plan.step = std::uniform_int_distribution<int>(1, hi)(rng);
  return plan;
}

InstrumentedLoop instrument_loop(ExprPtr guard, StmtList body,
                                 const LoopBreakerPlan& plan) {
  ExprPtr check = make_binary(plan.increment ? BinaryOp::Lt : BinaryOp::Gt,
                              make_var(plan.name), int_expr(plan.bound));
  ExprPtr update =
      make_binary(plan.increment ? BinaryOp::Add : BinaryOp::Sub,
                  make_var(plan.name), make_int(Integer(plan.step)));
  body.push_back(make_assign(plan.name, std::move(update)));
  ExprPtr full = make_binary(BinaryOp::And, with_parens(guard, 1),
                             with_parens(check, 1));
  return InstrumentedLoop{make_while(std::move(full), std::move(body)),
                          make_decl(Type::Int, plan.name),
                          make_assign(plan.name, int_expr(plan.initial))};
}

Program sample_program(const FuzzConfig& cfg, std::uint64_t seed,
                       const SlotObserver& observer) {
  cfg.validate();
  return Generator(cfg, seed, observer).run();
}

TerminationCheck validate_termination(const Program& p, std::size_t step_limit,
                                      std::size_t max_value_bits) {
  RunOptions opts;
  opts.step_limit = step_limit;
  opts.recording = Recording::None;
  auto guard = [max_value_bits](int rule, const sos::Configuration&,
                                const sos::Configuration& after) {
    if (rule != sos::kAssignInt) return;
    for (const auto& [name, v] : after.store()) {
      if (v.is_int() && !v.as_int().is_zero() &&
          boost::multiprecision::msb(abs(v.as_int())) >= max_value_bits) {
        throw ValueLimit{};
      }
    }
  };
  TerminationCheck out;
  try {
    const Trace t = sos::run_from(sos::Configuration::initial(p), opts, guard);
    out.outcome = t.outcome;
    out.steps = t.step_count;
    out.accepted = t.outcome == Outcome::Normal || t.outcome == Outcome::Halted;
  } catch (const ValueLimit&) {
    out.value_limit = true;
    out.outcome = Outcome::StepLimit;
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) {
  if (attempt == 0) return seed;
  // splitmix64 finalizer
  std::uint64_t z = seed + attempt * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

FuzzSample generate_accepted(const FuzzConfig& cfg, std::uint64_t seed,
                             std::size_t step_limit, int max_attempts) {
  FuzzSample out;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    out.seed = s;
    out.program = sample_program(cfg, s);
    out.check = validate_termination(out.program, step_limit);
    if (out.check.accepted) return out;
    out.rejected_seeds.push_back(s);
  }
  return out;
}

}  // namespace impbench
