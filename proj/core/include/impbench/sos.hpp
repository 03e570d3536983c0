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

#ifndef IMPBENCH_SOS_HPP_
#define IMPBENCH_SOS_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "impbench/ast.hpp"
#include "impbench/term.hpp"
#include "impbench/trace.hpp"
#include "impbench/value.hpp"

namespace impbench {

class ControlStackEmpty : public std::logic_error {
 public:
  ControlStackEmpty() : std::logic_error("pop on empty control stack") {}
};

// Stack of active loop headers. Top is the innermost loop.
class ControlStack {
 public:
  void push(StmtPtr loop) { items_.push_back(std::move(loop)); }
  void pop();
  const StmtPtr& top() const;
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  // Bottom to top.
  const std::vector<StmtPtr>& items() const { return items_; }

  friend bool operator==(const ControlStack& a, const ControlStack& b);

 private:
  std::vector<StmtPtr> items_;
};

ControlStack stack_push(const StmtPtr& s, ControlStack chi);
ControlStack stack_pop(ControlStack chi);

// Raised when no catalog rule matches a non-terminal configuration.
class Stuck : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace sos {

enum Rule : int {
  kVarInt = 1,
  kVarBool = 2,
  kDecl = 3,
  kAssignRed = 4,
  kAssignInt = 5,
  kAssignBool = 6,
  kAddLred = 7,
  kAddRred = 8,
  kAdd = 9,
  kSubLred = 10,
  kSubRred = 11,
  kSub = 12,
  kMulLred = 13,
  kMulRred = 14,
  kMul = 15,
  kDivLred = 16,
  kDivRred = 17,
  kDiv = 18,
  kDivTrunc = 19,
  kDivZero = 20,
  kModLred = 21,
  kModRred = 22,
  kMod = 23,
  kModTrunc = 24,
  kModZero = 25,
  kArithBoolLeft = 26,
  kArithBoolRight = 27,
  kLtLred = 28,  // Relational operators use four consecutive ids each:
                 // lred, rred, true, false. Order: < <= > >= == !=.
  kNotRed = 52,
  kNotTrue = 53,
  kNotFalse = 54,
  kAndLred = 55,
  kAndRred = 56,
  kAndTrue = 57,
  kAndFalse = 58,
  kOrLred = 59,
  kOrRred = 60,
  kOrTrue = 61,
  kOrFalse = 62,
  kIllFormed = 63,
  kIfRed = 64,
  kIfTrue = 65,
  kIfFalse = 66,
  kWhile = 67,
  kLoopRed = 68,
  kLoopFalse = 69,
  kLoopTrue = 70,
  kBreakSkip = 71,
  kBreakExit = 72,
  kBreakOrphan = 73,
  kContinueSkip = 74,
  kContinueNext = 75,
  kContinueOrphan = 76,
  kLoopNext = 77,
  kHalt = 78,
};

inline constexpr int kNumRules = 78;

std::span<const RuleInfo> catalog();
const RuleInfo& rule_info(int id);

// Rule id for the lred/rred/value-true/value-false of an operation.
int lred_rule(BinaryOp op);
int rred_rule(BinaryOp op);
int relational_rule(BinaryOp op, bool result);

// One element of the statement list.
struct Item {
  enum class Kind { Stmt, Loop, EndLoop };

  Kind kind = Kind::Stmt;
  // The statement, or the originating while for Loop and EndLoop.
  StmtPtr stmt;
  int if_depth = 0;
};

class Configuration {
 public:
  enum class Status { Running, Done, Halted, Error };

  static Configuration initial(const Program& p, Store sigma = {},
                               ControlStack chi = {});

  Status status() const { return status_; }
  bool terminal() const { return status_ != Status::Running; }
  const Store& store() const { return store_; }
  const ControlStack& control() const { return chi_; }
  const std::string& error() const { return error_; }

  // First item of the statement list, if any.
  std::optional<Item> head() const;
  // Item after the head, if any.
  std::optional<Item> second() const;
  // Reduction state of the head's expression, if any.
  const Term& term() const { return term_; }
  const std::vector<int>& focus_path() const { return path_; }
  bool has_term() const { return !term_.empty(); }

  // "while (i < 2) :: ε" style rendering of χ.
  std::string control_to_string() const;
  std::string list_to_string() const;

 private:
  friend class Machine;

  struct Frame {
    std::shared_ptr<const StmtList> list;  // null for single items
    std::size_t index = 0;
    Item single;
    int if_depth = 0;
  };

  std::optional<Item> item_at(std::size_t skip) const;

  std::optional<Item> focus_;
  Term term_;
  std::vector<int> path_;
  std::vector<Frame> frames_;
  Store store_;
  ControlStack chi_;
  Status status_ = Status::Running;
  std::string error_;
};

struct StepResult {
  int rule;
  Configuration next;
};

// Rule that applies to c, or nullopt if c is terminal.
std::optional<int> applicable_rule(
    const Configuration& c,
    const OperatorSemantics& sem = OperatorSemantics::standard());
StepResult step(const Configuration& c,
                const OperatorSemantics& sem = OperatorSemantics::standard());

// Called after every step with the rule applied, the configuration before the
// step and the configuration after it.
using StepObserver = std::function<void(int rule, const Configuration& before,
                                        const Configuration& after)>;

Trace run(const Program& p, const RunOptions& opts = {});
Trace run_from(Configuration c, const RunOptions& opts = {},
               const StepObserver& observer = {});

struct DynamicDepths {
  int if_depth = 0;
  int loop_depth = 0;
};

// Deepest nesting of if-branches and loop bodies actually entered.
DynamicDepths taken_depths(const Program& p, std::size_t step_limit = 1'000'000);

std::string debug_line(std::size_t index, int rule, const Configuration& after);

}  // namespace sos
}  // namespace impbench

#endif  // IMPBENCH_SOS_HPP_
