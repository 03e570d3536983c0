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

#ifndef IMPBENCH_TESTS_CORPUS_HPP_
#define IMPBENCH_TESTS_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>

#include "impbench/ast.hpp"

namespace impbench::testing {

// Parses a program shipped under data/programs.
Program load_program(const std::string& name);

std::string read_file(const std::string& path);
std::string test_data(const std::string& name);

// The mbpp_962 exemplar.
Program mbpp_962();

}  // namespace impbench::testing

#endif  // IMPBENCH_TESTS_CORPUS_HPP_
