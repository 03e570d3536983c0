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

#ifndef IMPBENCH_TOOLS_COMMANDS_HPP_
#define IMPBENCH_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "impbench/fuzzer.hpp"

namespace impbench::tools {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInput = 2;
inline constexpr int kExecution = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ExecutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

struct Common {
  Format format = Format::Text;
  unsigned jobs = 1;
  std::size_t step_limit = 1'000'000;
  std::string lexicon = "std";
};

struct RunArgs {
  std::string file;
  std::string style = "sos";
  std::string mutation = "std";
  std::string trace = "none";
};

struct FuzzArgs {
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string out;
  FuzzConfig config;
  std::vector<double> probabilities;
  int max_attempts = 64;
};

struct MetricsArgs {
  std::string path;
  std::string granularity = "stmt";
};

struct MutateArgs {
  std::string file;
  std::string kind = "swap";
  std::string emit = "program";
};

struct GenTasksArgs {
  std::string path;
  std::string task = "state";
  std::string style = "all";
  std::string mutation = "all";
  bool no_semantics = false;
  std::uint64_t seed = 0;
  std::size_t max_questions = 10;
  std::string out;
};

struct ScoreArgs {
  std::string task;
  std::string gold;
  std::string responses;
  std::string csv;
};

struct DocArgs {
  std::string style = "sos";
  std::string mutation = "std";
};

int cmd_run(const Common& c, const RunArgs& a, std::ostream& out);
int cmd_fuzz(const Common& c, FuzzArgs a, std::ostream& out);
int cmd_metrics(const Common& c, const MetricsArgs& a, std::ostream& out);
int cmd_mutate(const Common& c, const MutateArgs& a, std::ostream& out);
int cmd_gen_tasks(const Common& c, GenTasksArgs a, std::ostream& out);
int cmd_score(const Common& c, const ScoreArgs& a, std::ostream& out);
int cmd_semantics(const DocArgs& a, std::ostream& out);
int cmd_syntax(const DocArgs& a, std::ostream& out);

// --out if given, else $IMPBENCH_OUTPUT_DIR, else fallback.
std::filesystem::path output_dir(const std::string& flag, const std::string& fallback);

// A single .imp file or every .imp file directly inside a directory, sorted.
std::vector<std::filesystem::path> program_files(const std::string& path);

}  // namespace impbench::tools

#endif  // IMPBENCH_TOOLS_COMMANDS_HPP_
