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

#ifndef IMPBENCH_BENCHMARKS_BENCH_UTIL_HPP_
#define IMPBENCH_BENCHMARKS_BENCH_UTIL_HPP_

#include <fstream>
#include <sstream>
#include <string>

#include "impbench/syntax.hpp"

namespace impbench::bench {

inline std::string ProgramSource(const std::string& name) {
  std::ifstream in(std::string(IMPBENCH_PROGRAMS_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Program Mbpp() {
  return parse(ProgramSource("mbpp_962.imp"), LexemeProfile::standard());
}

}  // namespace impbench::bench

#endif  // IMPBENCH_BENCHMARKS_BENCH_UTIL_HPP_
