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

#ifndef IMPBENCH_FUZZER_HPP_
#define IMPBENCH_FUZZER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "impbench/ast.hpp"
#include "impbench/trace.hpp"

namespace impbench {

enum class StmtChoice { Assign, While, If, Break, Continue, Halt };
inline constexpr std::size_t kNumStmtChoices = 6;
std::string_view choice_name(StmtChoice c);

using ProbTable = std::array<double, kNumStmtChoices>;

struct FuzzConfig {
  int min_stmts = 1;
  int max_stmts = 3;
  int min_depth = 5;
  int max_depth = 10;
  int min_vars = 5;
  int max_vars = 10;
  ProbTable base{0.4, 0.3, 0.2, 0.09, 0.005, 0.005};
  int max_arith_terms = 6;
  int max_var_terms = 3;
  int max_bool_terms = 4;

  // Throws std::invalid_argument.
  void validate() const;
};

double cosine_taper(int depth, int min_depth, int max_depth);

// While and if mass is scaled by the cosine taper for the depth and the
// removed mass goes to the other statements with nonzero weight, in
// proportion to their weights.
ProbTable taper_probabilities(const ProbTable& base, int depth, int min_depth,
                              int max_depth);

struct GenContext {
  int depth = 0;
  int loop_depth = 0;
};

using Legality = std::array<bool, kNumStmtChoices>;
Legality legality_mask(const GenContext& ctx, const FuzzConfig& cfg);
// Zeroes illegal entries and renormalizes to 1.
ProbTable apply_mask(const ProbTable& p, const Legality& allowed);

struct LoopBreakerPlan {
  std::string name;
  bool increment = true;
  int initial = 0;
  int bound = 0;
  int step = 1;
};

LoopBreakerPlan draw_breaker(std::mt19937_64& rng, std::string name);

struct InstrumentedLoop {
  StmtPtr loop;
  StmtPtr declaration;
  StmtPtr initialization;
};

// Conjoins the breaker bound with the guard and appends the update to the
// body.
InstrumentedLoop instrument_loop(ExprPtr guard, StmtList body,
                                 const LoopBreakerPlan& plan);

// One statement-kind draw made while filling a block.
struct SlotRecord {
  GenContext ctx;
  StmtChoice choice;
};
using SlotObserver = std::function<void(const SlotRecord&)>;

Program sample_program(const FuzzConfig& cfg, std::uint64_t seed,
                       const SlotObserver& observer = {});

struct TerminationCheck {
  bool accepted = false;
  Outcome outcome = Outcome::Normal;
  std::size_t steps = 0;
  // Set when a value outgrew max_value_bits and the run was abandoned.
  bool value_limit = false;
};

inline constexpr std::size_t kDefaultValueBits = 1 << 16;

// Accepts iff the SOS run ends Normal or Halted within step_limit.
TerminationCheck validate_termination(const Program& p, std::size_t step_limit,
                                      std::size_t max_value_bits =
                                          kDefaultValueBits);

struct FuzzSample {
  std::uint64_t seed = 0;
  Program program;
  TerminationCheck check;
  std::vector<std::uint64_t> rejected_seeds;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt);

// Samples until a program is accepted. Rejected attempts are reseeded with
// derive_seed and recorded. The last attempt is returned unaccepted when
// max_attempts runs out.
FuzzSample generate_accepted(const FuzzConfig& cfg, std::uint64_t seed,
                             std::size_t step_limit, int max_attempts = 64);

}  // namespace impbench

#endif  // IMPBENCH_FUZZER_HPP_
