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

#ifndef IMPBENCH_METRICS_HPP_
#define IMPBENCH_METRICS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "impbench/ast.hpp"
#include "impbench/trace.hpp"

namespace impbench {

class RequiresTermination : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Granularity { Micro, Statement };
std::string_view granularity_name(Granularity g);
Granularity parse_granularity(std::string_view s);

struct MetricProfile {
  // Static.
  std::size_t cc = 1;
  std::size_t max_nested_if = 0;
  std::size_t max_nested_loop = 0;
  std::size_t dep_degree = 0;
  std::size_t loc = 0;
  double halstead_volume = 0;
  std::size_t halstead_vocabulary = 0;
  std::size_t halstead_length = 0;
  // Dynamic.
  std::size_t taken_if_depth = 0;
  std::size_t taken_loop_depth = 0;
  std::size_t executed_assignments = 0;
  std::size_t trace_length = 0;
};

struct HalsteadCounts {
  std::size_t distinct_operators = 0;
  std::size_t distinct_operands = 0;
  std::size_t total_operators = 0;
  std::size_t total_operands = 0;

  std::size_t vocabulary() const { return distinct_operators + distinct_operands; }
  std::size_t length() const { return total_operators + total_operands; }
  double volume() const;
};

// Over the tokens of the canonical standard rendering. Identifiers and
// literals are operands, every other token is an operator.
HalsteadCounts halstead(const Program& p);

std::size_t cyclomatic_complexity(const Program& p);
std::size_t max_nested_if(const Program& p);
std::size_t max_nested_loop(const Program& p);
std::size_t lines_of_code(const Program& p);

// Def-use pairs over the statement-level control-flow graph: each variable
// read counts one edge per reaching definition. Declarations define.
std::size_t dep_degree(const Program& p);

// SOS rules that advance a statement rather than an expression.
bool is_statement_rule(int sos_rule);

MetricProfile static_metrics(const Program& p);

// trace must be a full SOS run of p. Throws RequiresTermination unless it
// ended Normal or Halted.
void dynamic_metrics(const Program& p, const Trace& trace, Granularity g,
                     MetricProfile& out);

MetricProfile profile(const Program& p, Granularity g = Granularity::Statement,
                      std::size_t step_limit = 1'000'000);

}  // namespace impbench

#endif  // IMPBENCH_METRICS_HPP_
