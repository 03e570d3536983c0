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

#ifndef IMPBENCH_K_HPP_
#define IMPBENCH_K_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "impbench/ast.hpp"
#include "impbench/term.hpp"
#include "impbench/trace.hpp"
#include "impbench/value.hpp"

namespace impbench::k {

enum Rule : int {
  kLookupInt = 1,
  kLookupBool = 2,
  kAdd = 3,
  kSub = 4,
  kMul = 5,
  kDiv = 6,
  kDivTrunc = 7,
  kDivZero = 8,
  kMod = 9,
  kModTrunc = 10,
  kModZero = 11,
  kLt = 12,
  kLe = 13,
  kGt = 14,
  kGe = 15,
  kEq = 16,
  kNe = 17,
  kNot = 18,
  kAnd = 19,
  kOr = 20,
  kAssign = 21,
  kIfTrue = 22,
  kIfFalse = 23,
  kWhile = 24,
  kWhile1 = 25,
  kHalt = 26,
  kBreakMarker = 27,
  kBreakSkip = 28,
  kBreakSkipLoop = 29,
  kBreakExit = 30,
  kContinueSkip = 31,
  kContinueNext = 32,
  kBreakOrphan = 33,
  kContinueOrphan = 34,
  kContinueMarker = 35,
  kDecl = 36,
};

inline constexpr int kNumRules = 36;

std::span<const RuleInfo> catalog();
const RuleInfo& rule_info(int id);
int operation_rule(BinaryOp op);

// One element of the <k> cell.
struct Item {
  enum class Kind { Stmt, While1, Unfolded, BreakMarker };

  Kind kind = Kind::Stmt;
  // The statement, or the originating while for the loop forms.
  StmtPtr stmt;
};

class Configuration {
 public:
  enum class Status { Running, Done, Halted, Error };

  static Configuration initial(const Program& p, Store sigma = {});

  Status status() const { return status_; }
  bool terminal() const { return status_ != Status::Running; }
  const Store& store() const { return store_; }
  const std::string& error() const { return error_; }

  std::optional<Item> head() const;
  std::optional<Item> second() const;
  const Term& term() const { return term_; }

 private:
  friend class Machine;

  struct Frame {
    std::shared_ptr<const StmtList> list;  // null for single items
    std::size_t index = 0;
    Item single;
  };

  std::optional<Item> item_at(std::size_t skip) const;

  std::optional<Item> focus_;
  Term term_;
  std::vector<Frame> frames_;
  Store store_;
  Status status_ = Status::Running;
  std::string error_;
};

struct StepResult {
  int rule;
  Configuration next;
};

// Named rule for the next step, or nullopt when c is terminal or the next
// transition would get stuck.
std::optional<int> applicable_rule(
    const Configuration& c,
    const OperatorSemantics& sem = OperatorSemantics::standard());
StepResult step(const Configuration& c,
                const OperatorSemantics& sem = OperatorSemantics::standard());

using StepObserver = std::function<void(int rule, const Configuration& before,
                                        const Configuration& after)>;

Trace run(const Program& p, const RunOptions& opts = {});
Trace run_from(Configuration c, const RunOptions& opts = {},
               const StepObserver& observer = {});

}  // namespace impbench::k

#endif  // IMPBENCH_K_HPP_
