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

#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <sstream>

#include "impbench/curation.hpp"
#include "impbench/k.hpp"
#include "impbench/metrics.hpp"
#include "impbench/mutation.hpp"
#include "impbench/scoring.hpp"
#include "impbench/sos.hpp"
#include "impbench/syntax.hpp"
#include "json.hpp"
#include "worker_pool.hpp"

namespace impbench::tools {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write " + p.string());
  out << text;
}

const LexemeProfile& lexicon(const std::string& name) {
  if (name == "std") return LexemeProfile::standard();
  if (name == "obf") return LexemeProfile::obfuscated();
  throw UsageError("unknown lexicon: " + name);
}

Program load_program(const fs::path& p, const Common& c) {
  const std::string text = read_file(p);
  try {
    return parse(text, lexicon(c.lexicon));
  } catch (const SyntaxError& e) {
    throw InputError(p.string() + ":" + e.what());
  }
}

template <typename T, typename F>
T parse_flag(const std::string& value, F&& f) {
  try {
    return f(value);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::vector<Style> styles_of(const std::string& s) {
  if (s == "all") return {Style::Sos, Style::K};
  return {parse_flag<Style>(s, parse_style)};
}

std::vector<MutationKind> mutations_of(const std::string& s) {
  if (s == "all") {
    return {MutationKind::Standard, MutationKind::KeywordSwap, MutationKind::KeywordObf};
  }
  return {parse_flag<MutationKind>(s, parse_mutation)};
}

ordered_json store_json(const Store& s) {
  ordered_json j = ordered_json::object();
  for (const auto& [name, v] : s) {
    if (v.is_bool()) {
      j[name] = v.as_bool();
    } else if (v.as_int() >= INT64_MIN && v.as_int() <= INT64_MAX) {
      j[name] = static_cast<std::int64_t>(v.as_int());
    } else {
      j[name] = v.to_string();
    }
  }
  return j;
}

ordered_json config_json(const FuzzConfig& c) {
  ordered_json probs;
  for (std::size_t i = 0; i < kNumStmtChoices; ++i) {
    probs[std::string(choice_name(static_cast<StmtChoice>(i)))] = c.base[i];
  }
  return {{"min_stmts", c.min_stmts},       {"max_stmts", c.max_stmts},
          {"min_depth", c.min_depth},       {"max_depth", c.max_depth},
          {"min_vars", c.min_vars},         {"max_vars", c.max_vars},
          {"probabilities", probs},         {"max_arith_terms", c.max_arith_terms},
          {"max_var_terms", c.max_var_terms}, {"max_bool_terms", c.max_bool_terms}};
}

ordered_json profile_json(const std::string& id, const MetricProfile& m) {
  return {{"program_id", id},
          {"cc", m.cc},
          {"max_nested_if", m.max_nested_if},
          {"max_nested_loop", m.max_nested_loop},
          {"taken_if_depth", m.taken_if_depth},
          {"taken_loop_depth", m.taken_loop_depth},
          {"dep_degree", m.dep_degree},
          {"executed_assignments", m.executed_assignments},
          {"loc", m.loc},
          {"halstead_volume", m.halstead_volume},
          {"halstead_vocabulary", m.halstead_vocabulary},
          {"trace_length", m.trace_length}};
}

}  // namespace

fs::path output_dir(const std::string& flag, const std::string& fallback) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("IMPBENCH_OUTPUT_DIR"); env && *env) return env;
  return fallback;
}

std::vector<fs::path> program_files(const std::string& path) {
  std::error_code ec;
  if (fs::is_regular_file(path, ec)) return {path};
  if (!fs::is_directory(path, ec)) throw InputError("no such file or directory: " + path);
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(path)) {
    if (e.is_regular_file() && e.path().extension() == ".imp") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int cmd_run(const Common& c, const RunArgs& a, std::ostream& out) {
  const Style style = parse_flag<Style>(a.style, parse_style);
  const MutationKind kind = parse_flag<MutationKind>(a.mutation, parse_mutation);
  if (a.trace != "none" && a.trace != "xml" && a.trace != "debug") {
    throw UsageError("--trace must be none, xml or debug");
  }
  const Program p = transform_program(load_program(a.file, c), kind);
  RunOptions opts;
  opts.step_limit = c.step_limit;
  opts.semantics = &semantics_for(kind);
  opts.recording = a.trace == "xml" ? Recording::Full : Recording::None;

  std::size_t index = 0;
  Trace t;
  if (style == Style::Sos) {
    sos::StepObserver debug;
    if (a.trace == "debug") {
      debug = [&](int rule, const sos::Configuration&, const sos::Configuration& after) {
        out << sos::debug_line(++index, rule, after) << "\n";
      };
    }
    t = sos::run_from(sos::Configuration::initial(p), opts, debug);
  } else {
    k::StepObserver debug;
    if (a.trace == "debug") {
      debug = [&](int rule, const k::Configuration&, const k::Configuration& after) {
        out << "step " << ++index << ": rule " << rule << "; σ = "
            << after.store().to_string() << "\n";
      };
    }
    t = k::run_from(k::Configuration::initial(p), opts, debug);
  }

  if (a.trace == "xml") {
    out << trace_to_xml(t) << "\n";
  } else if (c.format == Format::Json) {
    ordered_json j{{"outcome", outcome_name(t.outcome)},
                   {"steps", t.step_count},
                   {"final_store", store_json(t.final_store)}};
    if (!t.error.empty()) j["error"] = t.error;
    out << j.dump(2) << "\n";
  } else {
    out << "outcome: " << outcome_name(t.outcome) << "\n"
        << "steps: " << t.step_count << "\n";
    for (const auto& [name, v] : t.final_store) out << name << " = " << v.to_string() << "\n";
  }
  if (t.outcome == Outcome::Error) throw ExecutionError("program error: " + t.error);
  if (t.outcome == Outcome::StepLimit) {
    throw ExecutionError("step limit of " + std::to_string(c.step_limit) + " reached");
  }
  return kOk;
}

int cmd_fuzz(const Common& c, FuzzArgs a, std::ostream& out) {
  if (!a.probabilities.empty()) {
    if (a.probabilities.size() != kNumStmtChoices) {
      throw UsageError("--probabilities needs six values");
    }
    std::copy(a.probabilities.begin(), a.probabilities.end(), a.config.base.begin());
  }
  try {
    a.config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const fs::path dir = output_dir(a.out, "fuzz_corpus");
  fs::create_directories(dir);

  std::vector<FuzzSample> samples(a.count);
  parallel_for(a.count, c.jobs, [&](std::size_t i) {
    samples[i] = generate_accepted(a.config, a.seed + i, c.step_limit, a.max_attempts);
  });

  ordered_json programs = ordered_json::array();
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const FuzzSample& s = samples[i];
    const std::string name = "fuzz_" + std::to_string(i);
    if (s.check.accepted) {
      ++accepted;
      write_file(dir / (name + ".imp"), render(s.program, LexemeProfile::standard()));
    }
    rejected += s.rejected_seeds.size();
    programs.push_back({{"id", name},
                        {"seed", s.seed},
                        {"accepted", s.check.accepted},
                        {"steps", s.check.steps},
                        {"rejected_seeds", s.rejected_seeds}});
  }
  const std::size_t attempts = accepted + rejected;
  ordered_json manifest{
      {"seed", a.seed},
      {"config", config_json(a.config)},
      {"step_limit", c.step_limit},
      {"count", a.count},
      {"accepted", accepted},
      {"rejected_samples", rejected},
      {"rejection_rate",
       attempts == 0 ? 0.0 : static_cast<double>(rejected) / static_cast<double>(attempts)},
      {"programs", programs}};
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  if (c.format == Format::Json) {
    out << ordered_json{{"dir", dir.string()}, {"accepted", accepted}, {"rejected_samples", rejected}}
               .dump()
        << "\n";
  } else {
    out << "wrote " << accepted << " programs to " << dir.string() << " (" << rejected
        << " rejected samples)\n";
  }
  return accepted == a.count ? kOk : kExecution;
}

int cmd_metrics(const Common& c, const MetricsArgs& a, std::ostream& out) {
  const Granularity g = parse_flag<Granularity>(a.granularity, parse_granularity);
  const std::vector<fs::path> files = program_files(a.path);
  std::vector<MetricProfile> profiles(files.size());
  std::vector<std::string> errors(files.size());
  parallel_for(files.size(), c.jobs, [&](std::size_t i) {
    const Program p = load_program(files[i], c);
    try {
      profiles[i] = profile(p, g, c.step_limit);
    } catch (const RequiresTermination& e) {
      profiles[i] = static_metrics(p);
      errors[i] = e.what();
    }
  });

  bool failed = false;
  if (c.format == Format::Csv) {
    out << "program_id,cc,max_nested_if,max_nested_loop,taken_if_depth,taken_loop_depth,"
           "dep_degree,executed_assignments,loc,halstead_volume,halstead_vocabulary,"
           "trace_length\n";
  }
  ordered_json all = ordered_json::array();
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string id = files[i].stem().string();
    const MetricProfile& m = profiles[i];
    failed = failed || !errors[i].empty();
    switch (c.format) {
      case Format::Json: {
        ordered_json j = profile_json(id, m);
        if (!errors[i].empty()) j["error"] = errors[i];
        all.push_back(std::move(j));
        break;
      }
      case Format::Csv:
        out << id << "," << m.cc << "," << m.max_nested_if << "," << m.max_nested_loop << ","
            << m.taken_if_depth << "," << m.taken_loop_depth << "," << m.dep_degree << ","
            << m.executed_assignments << "," << m.loc << "," << std::fixed
            << std::setprecision(2) << m.halstead_volume << std::defaultfloat << ","
            << m.halstead_vocabulary << "," << m.trace_length << "\n";
        break;
      case Format::Text:
        out << id << "\n"
            << "  control flow  cc " << m.cc << "  if " << m.max_nested_if << "  loop "
            << m.max_nested_loop << "  taken if " << m.taken_if_depth << "  taken loop "
            << m.taken_loop_depth << "\n"
            << "  data flow     dd " << m.dep_degree << "  assignments "
            << m.executed_assignments << "\n"
            << "  size          loc " << m.loc << "  volume " << std::fixed
            << std::setprecision(2) << m.halstead_volume << std::defaultfloat
            << "  vocabulary " << m.halstead_vocabulary << "  trace " << m.trace_length
            << " (" << granularity_name(g) << ")\n";
        if (!errors[i].empty()) out << "  dynamic metrics unavailable: " << errors[i] << "\n";
        break;
    }
  }
  if (c.format == Format::Json) out << all.dump(2) << "\n";
  return failed ? kExecution : kOk;
}

int cmd_mutate(const Common& c, const MutateArgs& a, std::ostream& out) {
  const MutationKind kind = parse_flag<MutationKind>(a.kind, parse_mutation);
  if (a.emit == "program") {
    out << mutated_source(load_program(a.file, c), kind);
  } else if (a.emit == "semantics-sos") {
    out << mutate_semantics(Style::Sos, kind);
  } else if (a.emit == "semantics-k") {
    out << mutate_semantics(Style::K, kind);
  } else if (a.emit == "syntax") {
    out << mutate_syntax(kind);
  } else {
    throw UsageError("--emit must be program, semantics-sos, semantics-k or syntax");
  }
  return kOk;
}

int cmd_gen_tasks(const Common& c, GenTasksArgs a, std::ostream& out) {
  const TaskKind task = parse_flag<TaskKind>(a.task, parse_task);
  if (a.no_semantics && task != TaskKind::State) {
    throw UsageError("--no-semantics applies to the state task only");
  }
  const std::vector<Style> styles = a.no_semantics ? std::vector<Style>{Style::Sos}
                                                   : styles_of(a.style);
  const std::vector<MutationKind> kinds = mutations_of(a.mutation);
  const std::vector<fs::path> files = program_files(a.path);
  const fs::path dir = output_dir(a.out, "tasks");
  const fs::path gold_dir = dir / "gold";
  fs::create_directories(gold_dir);

  std::vector<Program> programs(files.size());
  for (std::size_t i = 0; i < files.size(); ++i) programs[i] = load_program(files[i], c);

  struct Job {
    std::size_t program;
    Style style;
    MutationKind kind;
  };
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < files.size(); ++i) {
    for (Style s : styles) {
      for (MutationKind k : kinds) jobs.push_back(Job{i, s, k});
    }
  }

  struct Result {
    std::string json;
    std::string id;
    std::string gold;
    std::string skipped;
  };
  std::vector<Result> results(jobs.size());
  parallel_for(jobs.size(), c.jobs, [&](std::size_t j) {
    const Job& job = jobs[j];
    CurationOptions opts;
    opts.task = task;
    opts.style = job.style;
    opts.mutation = job.kind;
    opts.with_semantics = !a.no_semantics;
    opts.seed = a.seed;
    opts.step_limit = c.step_limit;
    opts.max_questions = a.max_questions;
    const std::string id = files[job.program].stem().string();
    try {
      const TaskInstance inst = make_instance(id, programs[job.program], opts);
      results[j] = Result{instance_to_json(inst), inst.id, inst.gold_answer, {}};
    } catch (const RequiresTermination& e) {
      results[j].skipped = id + ": " + e.what();
    }
  });

  const std::string tname(task_name(task));
  std::ofstream tasks(dir / (tname + ".jsonl"), std::ios::binary);
  std::ofstream responses(dir / ("gold_responses_" + tname + ".jsonl"), std::ios::binary);
  if (!tasks || !responses) throw InputError("cannot write to " + dir.string());
  std::size_t written = 0;
  std::size_t skipped = 0;
  for (const Result& r : results) {
    if (!r.skipped.empty()) {
      ++skipped;
      std::cerr << "skipped " << r.skipped << "\n";
      continue;
    }
    tasks << r.json << "\n";
    responses << ordered_json{{"instance_id", r.id}, {"response_text", r.gold}}.dump() << "\n";
    if (task == TaskKind::Trace) {
      std::string file = r.id;
      std::replace(file.begin(), file.end(), '/', '_');
      write_file(gold_dir / (file + ".xml"), r.gold + "\n");
    }
    ++written;
  }
  if (c.format == Format::Json) {
    out << ordered_json{{"dir", dir.string()}, {"instances", written}, {"skipped", skipped}}.dump()
        << "\n";
  } else {
    out << "wrote " << written << " " << tname << " instances to " << dir.string();
    if (skipped > 0) out << " (" << skipped << " skipped)";
    out << "\n";
  }
  return kOk;
}

int cmd_score(const Common& c, const ScoreArgs& a, std::ostream& out) {
  const TaskKind task = parse_flag<TaskKind>(a.task, parse_task);
  std::ifstream gold(a.gold, std::ios::binary);
  std::ifstream responses(a.responses, std::ios::binary);
  if (!gold) throw InputError("cannot read " + a.gold);
  if (!responses) throw InputError("cannot read " + a.responses);
  ScoreReport r;
  try {
    r = score_jsonl(task, gold, responses);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSONL: ") + e.what());
  }
  if (!a.csv.empty()) write_file(a.csv, mismatch_csv(r));
  if (c.format == Format::Json) {
    out << report_to_json(r) << "\n";
    return kOk;
  }
  out << "task        " << task_name(task) << "\n"
      << "instances   " << r.instances.size() << "\n"
      << "accuracy    " << std::fixed << std::setprecision(4) << r.accuracy << "\n";
  if (task == TaskKind::State) out << "var frac    " << r.mean_var_fraction << "\n";
  if (r.missing_responses > 0) out << "missing     " << r.missing_responses << "\n";
  for (const MismatchRates& m : r.mismatch) {
    out << "first mismatch rates (" << style_name(m.style) << ")\n";
    for (const auto& [cat, rate] : m.category_rate) {
      out << "  " << std::left << std::setw(18) << category_name(cat) << rate << "\n";
    }
  }
  out << std::defaultfloat;
  return kOk;
}

int cmd_semantics(const DocArgs& a, std::ostream& out) {
  out << mutate_semantics(parse_flag<Style>(a.style, parse_style),
                          parse_flag<MutationKind>(a.mutation, parse_mutation));
  return kOk;
}

int cmd_syntax(const DocArgs& a, std::ostream& out) {
  out << mutate_syntax(parse_flag<MutationKind>(a.mutation, parse_mutation));
  return kOk;
}

}  // namespace impbench::tools
