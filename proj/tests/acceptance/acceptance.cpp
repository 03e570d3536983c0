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

// Acceptance report. Prints one PASS/FAIL/SKIP line per criterion.
//
//   impbench_acceptance [--corpus N] [--seed S] [--strict] [--log FILE]
//
// Exits 0 in report mode. With --strict any FAIL exits 1.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "json.hpp"
#include "impbench/curation.hpp"
#include "impbench/fuzzer.hpp"
#include "impbench/k.hpp"
#include "impbench/metrics.hpp"
#include "impbench/mutation.hpp"
#include "impbench/scoring.hpp"
#include "impbench/sos.hpp"
#include "impbench/syntax.hpp"
#include "premise_matcher.hpp"

namespace impbench {
namespace {

// Pinned tolerances and sizes.
constexpr double kVolumeTolerance = 0.05;
constexpr double kVolumeTarget = 294.0;
constexpr double kTerminationRate = 0.99;
constexpr double kFrequencyTolerance = 0.03;
constexpr std::size_t kCalibrationSlots = 10000;
constexpr std::size_t kStepLimit = 1'000'000;
constexpr std::size_t kStateRuleSubset = 100;
constexpr std::size_t kTraceSubset = 20;

enum class Verdict { Pass, Fail, Skip };

struct Line {
  int id;
  std::string title;
  Verdict verdict;
  std::string detail;
  double seconds;
};

struct Options {
  std::size_t corpus = 1000;
  std::uint64_t seed = 0;
  bool strict = false;
  std::string log = "acceptance_rejections.log";
};

struct Corpus {
  std::vector<Program> programs;
  // Raw first-attempt samples that failed validation.
  std::vector<std::pair<std::uint64_t, TerminationCheck>> rejected;
  std::size_t raw = 0;
};

std::string Fmt(double v, int digits = 4) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << v;
  return ss.str();
}

Corpus BuildCorpus(const Options& o, std::ostream& log) {
  Corpus c;
  FuzzConfig cfg;
  for (std::size_t i = 0; i < o.corpus; ++i) {
    const std::uint64_t seed = o.seed + i;
    FuzzSample s = generate_accepted(cfg, seed, kStepLimit);
    ++c.raw;
    if (!s.rejected_seeds.empty()) {
      c.rejected.emplace_back(
          seed, validate_termination(sample_program(cfg, seed), kStepLimit));
      for (std::uint64_t r : s.rejected_seeds) {
        log << "rejected seed " << r << " (corpus slot " << i << ")\n";
      }
    }
    if (!s.check.accepted) {
      throw std::runtime_error("no terminating sample for slot " + std::to_string(i));
    }
    c.programs.push_back(std::move(s.program));
  }
  return c;
}

Line C1() {
  const Program p = testing::mbpp_962();
  std::string bad;
  for (Style st : {Style::Sos, Style::K}) {
    for (MutationKind k : {MutationKind::Standard, MutationKind::KeywordSwap,
                           MutationKind::KeywordObf}) {
      const Program q = transform_program(p, k);
      RunOptions opts;
      opts.semantics = &semantics_for(k);
      const Trace t = st == Style::Sos ? sos::run(q, opts) : k::run(q, opts);
      const Value* sum = t.final_store.find("sum");
      if (t.outcome != Outcome::Normal || sum == nullptr || !(*sum == Value(18))) {
        bad += std::string(style_name(st)) + "/" + std::string(mutation_name(k)) + " ";
      }
    }
  }
  return {1, "mbpp_962 terminates with sum = 18 (2 styles x 3 mutations)",
          bad.empty() ? Verdict::Pass : Verdict::Fail,
          bad.empty() ? "6/6 configurations" : "wrong: " + bad, 0};
}

Line C2() {
  const MetricProfile m = profile(testing::mbpp_962());
  struct Row {
    const char* name;
    std::size_t got;
    std::size_t want;
  };
  const Row rows[] = {
      {"cc", m.cc, 3},
      {"if", m.max_nested_if, 1},
      {"loop", m.max_nested_loop, 1},
      {"taken_if", m.taken_if_depth, 1},
      {"taken_loop", m.taken_loop_depth, 1},
      {"dd", m.dep_degree, 12},
      {"assign", m.executed_assignments, 12},
      {"loc", m.loc, 19},
      {"voc", m.halstead_vocabulary, 23},
      {"trace", m.trace_length, 29},
  };
  std::string detail;
  bool ok = true;
  for (const Row& r : rows) {
    if (r.got != r.want) {
      ok = false;
      detail += std::string(r.name) + " " + std::to_string(r.got) + " != " +
                std::to_string(r.want) + "; ";
    }
  }
  const double rel = std::abs(m.halstead_volume - kVolumeTarget) / kVolumeTarget;
  if (rel > kVolumeTolerance) {
    ok = false;
  }
  if (ok) detail = "all 10 counts exact; ";
  detail += "vol " + Fmt(m.halstead_volume, 2) + " vs " + Fmt(kVolumeTarget, 0) + " +/- " +
            Fmt(kVolumeTolerance * 100, 0) + "%";
  return {2, "mbpp_962 metric profile", ok ? Verdict::Pass : Verdict::Fail, detail, 0};
}

Line C3() {
  return {3, "fuzz_100 metric profile", Verdict::Skip,
          "program text not available in machine-readable form", 0};
}

Line C4() {
  const Program p = testing::load_program("loop_halt.imp");
  const Trace s = sos::run(p);
  const Trace kt = k::run(p);
  const bool seq = s.rules() == std::vector<int>{3, 3, 5, 67, 68, 28, 1, 30, 70, 78} &&
                   kt.rules() == std::vector<int>{36, 36, 21, 24, 25, 1, 12, 22, 26};
  const bool xml = trace_to_xml(s) + "\n" == testing::test_data("loop_halt_sos.xml") &&
                   trace_to_xml(kt) + "\n" == testing::test_data("loop_halt_k.xml");
  const bool ok = seq && xml;
  return {4, "loop/halt anchor traces, byte-exact XML", ok ? Verdict::Pass : Verdict::Fail,
          std::string("sequences ") + (seq ? "match" : "differ") + ", XML " +
              (xml ? "matches" : "differs"),
          0};
}

Line C5() {
  const Program src = parse("while (n <= 0) { sum = sum + n; n = n - 1; };", LexemeProfile::standard());
  Store sigma;
  sigma.declare("n", Value(100));
  sigma.declare("sum", Value(0));
  const ProcessedStatement ps = process_statement({src.statements[0], sigma, {}, {}});
  const auto s = gold_rules(ps, Style::Sos);
  const auto kr = gold_rules(ps, Style::K);
  const bool ok = s == std::vector<int>{67, 68, 32, 1, 35, 69} &&
                  kr == std::vector<int>{24, 25, 1, 13, 23, 27};
  return {5, "PredRule anchor gold sequences", ok ? Verdict::Pass : Verdict::Fail,
          ok ? "SOS and K sequences match" : "sequence mismatch", 0};
}

Line C6(const Corpus& c) {
  std::size_t configs = 0, ambiguous = 0, unmatched = 0, disagree = 0, stuck = 0;
  for (const Program& p : c.programs) {
    RunOptions opts;
    opts.step_limit = kStepLimit;
    opts.recording = Recording::None;
    try {
      sos::run_from(sos::Configuration::initial(p), opts,
                    [&](int rule, const sos::Configuration& before, const sos::Configuration&) {
                      ++configs;
                      const std::vector<int> m = testing::matching_sos_rules(before);
                      if (m.empty()) {
                        ++unmatched;
                      } else if (m.size() > 1) {
                        ++ambiguous;
                      } else if (m.front() != rule) {
                        ++disagree;
                      }
                    });
    } catch (const Stuck&) {
      ++stuck;
    }
  }
  const bool ok = ambiguous == 0 && unmatched == 0 && disagree == 0 && stuck == 0;
  return {6, "every non-terminal SOS configuration matches exactly one rule",
          ok ? Verdict::Pass : Verdict::Fail,
          std::to_string(configs) + " configurations; ambiguous " + std::to_string(ambiguous) +
              ", unmatched " + std::to_string(unmatched) + ", engine disagrees " +
              std::to_string(disagree) + ", stuck " + std::to_string(stuck),
          0};
}

int OutcomeClass(Outcome o) {
  return o == Outcome::Normal || o == Outcome::Halted ? 0 : (o == Outcome::Error ? 1 : 2);
}

Line C7(const Corpus& c) {
  std::size_t agree = 0, total = 0;
  RunOptions opts;
  opts.step_limit = kStepLimit;
  opts.recording = Recording::None;
  for (const Program& p : c.programs) {
    const Trace s = sos::run(p, opts);
    if (!s.terminated()) continue;
    ++total;
    const Trace kt = k::run(p, opts);
    if (s.outcome == kt.outcome && s.final_store == kt.final_store) ++agree;
  }
  return {7, "SOS and K agree on final store and outcome",
          agree == total ? Verdict::Pass : Verdict::Fail,
          std::to_string(agree) + "/" + std::to_string(total) + " terminating programs", 0};
}

Line C8(const Corpus& c) {
  std::size_t swap_ok = 0, obf_ok = 0;
  for (const Program& p : c.programs) {
    if (check_equivalence(p, MutationKind::KeywordSwap, kStepLimit)) ++swap_ok;
    if (check_equivalence(p, MutationKind::KeywordObf, kStepLimit)) ++obf_ok;
  }
  const std::size_t n = c.programs.size();
  const bool ok = swap_ok == n && obf_ok == n;
  return {8, "mutation equivalence for KeywordSwap and KeywordObf, both styles",
          ok ? Verdict::Pass : Verdict::Fail,
          "swap " + std::to_string(swap_ok) + "/" + std::to_string(n) + ", obf " +
              std::to_string(obf_ok) + "/" + std::to_string(n),
          0};
}

Line C9(const Corpus& c, const Options& o) {
  const double rate = 1.0 - static_cast<double>(c.rejected.size()) / static_cast<double>(c.raw);
  std::size_t by_steps = 0, by_value = 0, by_error = 0;
  for (const auto& [seed, check] : c.rejected) {
    if (check.value_limit) {
      ++by_value;
    } else if (check.outcome == Outcome::Error) {
      ++by_error;
    } else {
      ++by_steps;
    }
  }
  return {9, "raw fuzzer samples terminate within 10^6 steps",
          rate >= kTerminationRate ? Verdict::Pass : Verdict::Fail,
          Fmt(rate * 100, 2) + "% of " + std::to_string(c.raw) + " (need >= " +
              Fmt(kTerminationRate * 100, 0) + "%); rejected: step limit " +
              std::to_string(by_steps) + ", value growth " + std::to_string(by_value) +
              ", error " + std::to_string(by_error) + "; seeds logged to " + o.log,
          0};
}

// Slots inside a loop see the full table. Slots outside any loop have break
// and continue masked off, so they are reported separately.
Line C10(const Options& o) {
  FuzzConfig cfg;
  std::array<std::size_t, kNumStmtChoices> counts{};
  std::array<std::size_t, kNumStmtChoices> all_counts{};
  std::size_t slots = 0, all_slots = 0;
  for (std::uint64_t seed = o.seed; slots < kCalibrationSlots; ++seed) {
    sample_program(cfg, seed, [&](const SlotRecord& r) {
      if (slots >= kCalibrationSlots || r.ctx.depth > cfg.min_depth) return;
      ++all_counts[static_cast<std::size_t>(r.choice)];
      ++all_slots;
      if (r.ctx.loop_depth == 0) return;
      ++counts[static_cast<std::size_t>(r.choice)];
      ++slots;
    });
  }
  auto deviation = [&](const auto& c, std::size_t n) {
    double worst = 0;
    for (std::size_t i = 0; i < kNumStmtChoices; ++i) {
      const double f = static_cast<double>(c[i]) / static_cast<double>(n);
      worst = std::max(worst, std::abs(f - cfg.base[i]));
    }
    return worst;
  };
  std::string detail;
  for (std::size_t i = 0; i < kNumStmtChoices; ++i) {
    const double f = static_cast<double>(counts[i]) / static_cast<double>(slots);
    detail += std::string(choice_name(static_cast<StmtChoice>(i))) + " " + Fmt(f, 3) + " ";
  }
  const double worst = deviation(counts, slots);
  detail += "(max deviation " + Fmt(worst, 4) + " over " + std::to_string(slots) +
            " in-loop slots; " + Fmt(deviation(all_counts, all_slots), 4) + " over all " +
            std::to_string(all_slots) + " slots incl. masked)";
  return {10, "statement-kind frequencies at depth <= min_depth",
          worst <= kFrequencyTolerance ? Verdict::Pass : Verdict::Fail, detail, 0};
}

struct SelfScore {
  std::size_t instances = 0;
  std::size_t imperfect = 0;
  std::size_t nonzero_rates = 0;
};

void ScoreBatch(TaskKind task, const std::string& gold, const std::string& responses,
                SelfScore& out) {
  std::istringstream g(gold), r(responses);
  const ScoreReport rep = score_jsonl(task, g, r);
  out.instances += rep.instances.size();
  if (rep.accuracy != 1.0 || rep.missing_responses != 0) ++out.imperfect;
  for (const MismatchRates& m : rep.mismatch) {
    for (const auto& [cat, rate] : m.category_rate) {
      if (rate != 0.0) ++out.nonzero_rates;
    }
  }
}

Line C11(const Corpus& c) {
  SelfScore total;
  const MutationKind kinds[] = {MutationKind::Standard, MutationKind::KeywordSwap,
                                MutationKind::KeywordObf};
  for (TaskKind task : {TaskKind::State, TaskKind::Rule, TaskKind::Trace}) {
    const std::size_t n =
        std::min(c.programs.size(), task == TaskKind::Trace ? kTraceSubset : kStateRuleSubset);
    for (std::size_t i = 0; i < n; ++i) {
      std::string gold, responses;
      auto add = [&](const CurationOptions& opts) {
        const TaskInstance inst = make_instance("fuzz_" + std::to_string(i), c.programs[i], opts);
        gold += instance_to_json(inst) + "\n";
        responses += nlohmann::json{{"instance_id", inst.id}, {"response_text", inst.gold_answer}}
                         .dump() +
                     "\n";
      };
      for (Style st : {Style::Sos, Style::K}) {
        for (MutationKind k : kinds) {
          CurationOptions opts;
          opts.task = task;
          opts.style = st;
          opts.mutation = k;
          opts.seed = i;
          add(opts);
        }
      }
      if (task == TaskKind::State) {
        CurationOptions opts;
        opts.with_semantics = false;
        add(opts);
      }
      ScoreBatch(task, gold, responses, total);
    }
  }
  const bool ok = total.imperfect == 0 && total.nonzero_rates == 0;
  return {11, "gold responses score 1.0 on all three tasks, zero mismatch rates",
          ok ? Verdict::Pass : Verdict::Fail,
          std::to_string(total.instances) + " instances; imperfect batches " +
              std::to_string(total.imperfect) + ", nonzero mismatch rates " +
              std::to_string(total.nonzero_rates),
          0};
}

Line C12(const Corpus& c) {
  std::size_t violations = 0;
  for (const Program& p : c.programs) {
    const sos::DynamicDepths d = sos::taken_depths(p, kStepLimit);
    if (static_cast<std::size_t>(d.if_depth) > max_nested_if(p) ||
        static_cast<std::size_t>(d.loop_depth) > max_nested_loop(p)) {
      ++violations;
    }
  }
  return {12, "taken nesting depths never exceed static depths",
          violations == 0 ? Verdict::Pass : Verdict::Fail,
          std::to_string(violations) + " violations over " +
              std::to_string(c.programs.size()) + " programs",
          0};
}

const char* Name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "PASS";
    case Verdict::Fail:
      return "FAIL";
    case Verdict::Skip:
      return "SKIP";
  }
  return "?";
}

template <typename F>
Line Timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Line l = f();
  l.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "[" << Name(l.verdict) << "] C" << l.id << " " << l.title << ": " << l.detail
            << " (" << Fmt(l.seconds, 1) << "s)" << std::endl;
  return l;
}

}  // namespace
}  // namespace impbench

int main(int argc, char** argv) {
  using namespace impbench;
  Options o;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    auto next = [&]() -> std::string {
      if (i + 1 >= argc) throw std::invalid_argument(a + " needs a value");
      return argv[++i];
    };
    if (a == "--corpus") {
      o.corpus = std::stoul(next());
    } else if (a == "--seed") {
      o.seed = std::stoull(next());
    } else if (a == "--strict") {
      o.strict = true;
    } else if (a == "--log") {
      o.log = next();
    } else {
      std::cerr << "unknown argument " << a << "\n";
      return 2;
    }
  }

  std::vector<Line> lines;
  lines.push_back(Timed(C1));
  lines.push_back(Timed(C2));
  lines.push_back(Timed(C3));
  lines.push_back(Timed(C4));
  lines.push_back(Timed(C5));

  std::ofstream log(o.log);
  const auto t0 = std::chrono::steady_clock::now();
  const Corpus corpus = BuildCorpus(o, log);
  std::cout << "corpus: " << corpus.programs.size() << " programs from seed " << o.seed
            << " (" << Fmt(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                               .count(),
                           1)
            << "s)" << std::endl;

  lines.push_back(Timed([&] { return C6(corpus); }));
  lines.push_back(Timed([&] { return C7(corpus); }));
  lines.push_back(Timed([&] { return C8(corpus); }));
  lines.push_back(Timed([&] { return C9(corpus, o); }));
  lines.push_back(Timed([&] { return C10(o); }));
  lines.push_back(Timed([&] { return C11(corpus); }));
  lines.push_back(Timed([&] { return C12(corpus); }));

  std::map<Verdict, int> tally;
  for (const Line& l : lines) ++tally[l.verdict];
  std::cout << "summary: " << tally[Verdict::Pass] << " pass, " << tally[Verdict::Fail]
            << " fail, " << tally[Verdict::Skip] << " skip" << std::endl;
  return o.strict && tally[Verdict::Fail] > 0 ? 1 : 0;
}
