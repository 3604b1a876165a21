// Copyright 2026 The Stickyword Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <pthread.h>
#include <signal.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "sticky/corpus_model.h"
#include "sticky/errors.h"
#include "sticky/experiment_stats.h"
#include "sticky/json_io.h"
#include "sticky/resources.h"
#include "sticky/review_server.h"
#include "sticky/review_store.h"
#include "sticky/stickiness_scorer.h"
#include "sticky/substitution_engine.h"

namespace sticky::cli {

namespace {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kResourceMissing:
    case ErrorCode::kIo:
      return kResourceError;
    case ErrorCode::kEmptyCorpus:
      return kEmptyCorpus;
    default:
      return kMalformedData;
  }
}

std::string Fixed(double v, int precision) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(precision) << v;
  return s.str();
}

// Flags shared by every subcommand that scores words.
struct ScoringFlags {
  std::string model_path;
  std::string lexicon_path;
  std::string thesaurus_path;
  std::string stopword_path;
  std::string config_path;
  std::optional<double> theta_f;
  std::optional<double> theta_n;
  std::optional<double> neutral_band;
  std::optional<std::size_t> min_len;
  std::optional<bool> require_emotive;

  void AddTo(CLI::App* cmd, bool want_thesaurus) {
    cmd->add_option("--model", model_path, "Compiled model file")
        ->envname("STICKY_MODEL")
        ->required();
    cmd->add_option("--lexicon", lexicon_path, "Sentiment lexicon (word<TAB>valence)")
        ->envname("STICKY_LEXICON")
        ->required();
    if (want_thesaurus) {
      cmd->add_option("--thesaurus", thesaurus_path,
                      "Thesaurus (word<TAB>syn1,syn2,...)")
          ->envname("STICKY_THESAURUS")
          ->required();
    }
    AddConfigFlags(cmd);
  }

  void AddConfigFlags(CLI::App* cmd) {
    cmd->add_option("--stopwords", stopword_path, "Stopword file")
        ->envname("STICKY_STOPWORDS");
    cmd->add_option("--config", config_path, "Score config (JSON)")
        ->envname("STICKY_CONFIG");
    cmd->add_option("--theta-f", theta_f, "Familiarity threshold");
    cmd->add_option("--theta-n", theta_n, "Novelty threshold");
    cmd->add_option("--neutral-band", neutral_band, "Neutral polarity band");
    cmd->add_option("--min-len", min_len, "Minimum content word length");
    cmd->add_option("--require-emotive", require_emotive,
                    "Require non-neutral polarity (true/false)");
  }

  ScoreConfig Config() const {
    ScoreConfig config;
    if (!config_path.empty()) config = LoadScoreConfig(config_path);
    if (theta_f) config.theta_f = *theta_f;
    if (theta_n) config.theta_n = *theta_n;
    if (neutral_band) config.neutral_band = *neutral_band;
    if (min_len) config.min_len = *min_len;
    if (require_emotive) config.require_emotive = *require_emotive;
    if (!stopword_path.empty()) config.stopword_path = stopword_path;
    config.Validate();
    return config;
  }

  Resources Load(std::ostream& err, bool want_thesaurus) const {
    Resources r;
    r.config = Config();
    r.stopwords = std::make_shared<const WordSet>(
        r.config.stopword_path.empty() ? DefaultStopwords()
                                       : LoadStopwords(r.config.stopword_path));
    r.model = std::make_shared<const FrequencyModel>(LoadModel(model_path));
    r.lexicon = std::make_shared<const SentimentLexicon>(
        ParseLexicon(ReadFile(lexicon_path), r.config.neutral_band));
    if (want_thesaurus) {
      r.thesaurus =
          std::make_shared<const Thesaurus>(ParseThesaurus(ReadFile(thesaurus_path)));
    }
    const ModelFingerprint active{StopwordFingerprint(*r.stopwords),
                                  r.config.min_len};
    if (!(active == r.model->fingerprint)) {
      err << "warning: model was built with different stopwords/min_len "
             "than the active config\n";
    }
    return r;
  }
};

void PrintAnalysisTable(std::ostream& out, const Title& title,
                        const TitleAnalysis& analysis) {
  out << "title: " << title.raw << "\n";
  out << std::left << std::setw(4) << "pos" << std::setw(18) << "word"
      << std::setw(13) << "familiarity" << std::setw(9) << "novelty"
      << std::setw(10) << "polarity" << std::setw(9) << "valence"
      << "composite\n";
  for (const WordScore& w : analysis.words) {
    out << std::left << std::setw(4) << w.position << std::setw(18) << w.word
        << std::setw(13) << Fixed(w.score.familiarity, 4) << std::setw(9)
        << Fixed(w.score.novelty, 4) << std::setw(10)
        << PolarityLabelName(w.score.polarity.label) << std::setw(9)
        << Fixed(w.score.polarity.valence, 3) << Fixed(w.score.composite, 4)
        << "\n";
  }
  out << "title_score: " << Fixed(analysis.title_score, 4) << "\n";
}

int CmdBuildModel(const std::string& context_path, const std::string& pop_path,
                  const std::string& out_path, const ScoringFlags& flags,
                  std::ostream& out) {
  const ScoreConfig config = flags.Config();
  const WordSet stopwords = config.stopword_path.empty()
                                ? DefaultStopwords()
                                : LoadStopwords(config.stopword_path);
  const std::string context_text = ReadFile(context_path);
  const std::string pop_text = ReadFile(pop_path);

  FrequencyModel model;
  model.context = BuildContextModel(ParseTitles(context_text));
  model.pop = BuildPopModel(ParseKeywords(pop_text));
  model.fingerprint = {StopwordFingerprint(stopwords), config.min_len};
  SaveModel(model, out_path);

  out << "model written: " << out_path << "\n"
      << "doc_count: " << model.context.doc_count << "\n"
      << "context vocabulary: " << model.context.df.size() << "\n"
      << "popularity vocabulary: " << model.pop.counts.size() << "\n"
      << "max_count: " << model.pop.max_count << "\n";
  return kOk;
}

int CmdAnalyze(const std::vector<std::string>& words, const std::string& format,
               const ScoringFlags& flags, std::ostream& out, std::ostream& err) {
  const Resources r = flags.Load(err, false);
  std::string text;
  for (const auto& w : words) {
    if (!text.empty()) text += ' ';
    text += w;
  }
  const Title title = Tokenize(text, "cli");
  const TitleAnalysis analysis =
      AnalyzeTitle(title, *r.model, *r.lexicon, *r.stopwords, r.config);
  if (format == "json") {
    out << TitleAnalysisToJson(title, analysis).dump(2) << "\n";
  } else {
    PrintAnalysisTable(out, title, analysis);
  }
  return kOk;
}

int CmdOptimize(const std::string& titles_path, const std::string& out_path,
                const std::string& format, std::optional<std::size_t> top,
                const ScoringFlags& flags, std::ostream& out,
                std::ostream& err) {
  const Resources r = flags.Load(err, true);
  const std::vector<Title> titles = ParseTitles(ReadFile(titles_path));

  std::ostringstream buf;
  std::size_t total = 0;
  for (const Title& title : titles) {
    std::vector<SubstitutionCandidate> candidates = GenerateCandidates(title, r);
    if (top && candidates.size() > *top) candidates.resize(*top);
    total += candidates.size();
    if (format == "jsonl") {
      std::size_t rank = 0;
      for (const auto& c : candidates) {
        Json j{{"rank", ++rank}};
        j.update(Json(c));
        j["original_text"] = title.raw;
        j["treatment_text"] = ApplySubstitution(title, c).raw;
        buf << j.dump() << "\n";
      }
      continue;
    }
    buf << "# " << title.id << "\t" << title.raw << "\n";
    if (candidates.empty()) {
      buf << "  (no candidates)\n";
      continue;
    }
    std::size_t rank = 0;
    for (const auto& c : candidates) {
      buf << "  " << ++rank << "\tpos " << c.position << "\t" << c.original
          << " -> " << c.replacement << "\tdelta " << Fixed(c.delta, 4)
          << "\t" << ApplySubstitution(title, c).raw << "\n";
    }
  }

  if (out_path.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::kIo, "cannot write " + out_path);
    file << buf.str();
    out << total << " candidates for " << titles.size() << " titles written to "
        << out_path << "\n";
  }
  return kOk;
}

void PrintGroupRow(std::ostream& out, const std::string& name,
                   const GroupSummary& g) {
  out << std::left << std::setw(14) << name << std::setw(6) << g.n
      << std::setw(10) << Fixed(g.mean, 4) << std::setw(16) << Fixed(g.sd, 5)
      << Fixed(g.se_mean, 5) << "\n";
}

void PrintTTestRow(std::ostream& out, const std::string& name,
                   const TTestResult& t) {
  out << std::left << std::setw(29) << name << std::setw(9) << Fixed(t.t, 3)
      << std::setw(10) << Fixed(t.df, 3) << std::setw(10)
      << Fixed(t.p_two_tailed, 6) << std::setw(12) << Fixed(t.mean_diff, 5)
      << std::setw(12) << Fixed(t.se_diff, 5) << Fixed(t.ci95_lower, 5)
      << "  " << Fixed(t.ci95_upper, 5) << "\n";
}

void PrintReportTable(std::ostream& out, const ExperimentReport& r) {
  const auto groups_header = [&out](const std::string& title) {
    out << title << "\n"
        << std::left << std::setw(14) << "variant" << std::setw(6) << "n"
        << std::setw(10) << "mean" << std::setw(16) << "sd" << "se_mean\n";
  };
  const auto ttest_header = [&out] {
    out << std::left << std::setw(29) << "" << std::setw(9) << "t"
        << std::setw(10) << "df" << std::setw(10) << "sig(2t)" << std::setw(12)
        << "mean_diff" << std::setw(12) << "se_diff" << "ci95\n";
  };

  groups_header("Selection statistics");
  PrintGroupRow(out, "original", r.selection_original);
  PrintGroupRow(out, "treatment", r.selection_treatment);
  out << "\nSelection t-test (original - treatment)\n"
      << "Levene F " << Fixed(r.selection_levene.f, 3) << "  sig "
      << Fixed(r.selection_levene.p, 6) << "\n";
  ttest_header();
  PrintTTestRow(out, "equal variances assumed", r.selection_pooled);

  out << "\n";
  groups_header("Evaluation statistics (UES mean)");
  PrintGroupRow(out, "original", r.ues_original);
  PrintGroupRow(out, "treatment", r.ues_treatment);
  out << "\nEvaluation t-test (original - treatment)\n"
      << "Levene F " << Fixed(r.ues_levene.f, 3) << "  sig "
      << Fixed(r.ues_levene.p, 6) << "\n";
  ttest_header();
  PrintTTestRow(out, "equal variances assumed", r.ues_pooled);
  PrintTTestRow(out, "equal variances not assumed", r.ues_welch);
}

int CmdStats(const std::string& responses_path,
             const std::vector<std::size_t>& reverse, const std::string& format,
             std::ostream& out) {
  const std::vector<UesResponse> responses =
      ParseResponseLog(ReadFile(responses_path));
  const std::set<std::size_t> reverse_items(reverse.begin(), reverse.end());
  const ExperimentReport report = AnalyzeExperiment(responses, reverse_items);
  if (format == "json") {
    out << ExperimentReportToJson(report).dump(2) << "\n";
  } else {
    PrintReportTable(out, report);
  }
  return kOk;
}

int CmdServe(const ScoringFlags& flags, const std::string& host, int port,
             const std::string& state_dir, std::ostream& out,
             std::ostream& err) {
  // Block termination signals before any thread starts so only the waiter
  // below receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  ReviewStore store(flags.Load(err, true), state_dir);
  ReviewServer server(store);
  if (!server.Bind(host, port)) {
    err << "error: cannot listen on " << host << ":" << port << "\n";
    return kServiceStartup;
  }
  out << "review service listening on http://" << host << ":" << server.port()
      << " (state: " << state_dir << ")\n"
      << std::flush;

  std::thread waiter([&server, signals] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.Stop();
  });
  server.Run();
  // Run() also returns if the listener fails; wake the waiter either way.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  out << "review service stopped\n";
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Sticky-word title scoring and rewriting", "sticky"};
  app.require_subcommand(1);

  ScoringFlags flags;
  std::string format = "table";

  auto* build = app.add_subcommand("build-model", "Compile corpora into a model file");
  std::string context_path;
  std::string pop_path;
  std::string model_out;
  build->add_option("--context", context_path, "Context corpus (one title per line)")
      ->envname("STICKY_CONTEXT")
      ->required();
  build->add_option("--pop", pop_path, "Popularity keywords (keyword<TAB>count)")
      ->envname("STICKY_POP")
      ->required();
  build->add_option("--out", model_out, "Model file to write")
      ->envname("STICKY_MODEL")
      ->required();
  flags.AddConfigFlags(build);

  auto* analyze = app.add_subcommand("analyze", "Score the words of one title");
  std::vector<std::string> analyze_text;
  flags.AddTo(analyze, false);
  analyze->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  analyze->add_option("text", analyze_text, "Title text");

  auto* optimize = app.add_subcommand("optimize", "Rank one-word substitutions");
  std::string titles_path;
  std::string optimize_out;
  std::optional<std::size_t> top;
  flags.AddTo(optimize, true);
  optimize->add_option("--titles", titles_path, "Titles file")->required();
  optimize->add_option("--out", optimize_out, "Write candidates here instead of stdout");
  optimize->add_option("--top", top, "Keep at most this many candidates per title");
  optimize->add_option("--format", format, "table or jsonl")
      ->check(CLI::IsMember({"table", "jsonl"}));

  auto* stats = app.add_subcommand("stats", "Analyze an A/B response log");
  std::string responses_path;
  std::vector<std::size_t> reverse_items;
  stats->add_option("--responses", responses_path, "Response log (CSV or TSV)")
      ->envname("STICKY_RESPONSES")
      ->required();
  stats->add_option("--reverse-items", reverse_items,
                    "1-based item numbers to reverse-code")
      ->delimiter(',');
  stats->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* serve = app.add_subcommand("serve", "Run the review service");
  std::string host = "127.0.0.1";
  int port = ReviewServer::kDefaultPort;
  std::string state_dir = "review-state";
  flags.AddTo(serve, true);
  serve->add_option("--host", host, "Listen address")->envname("STICKY_HOST");
  serve->add_option("--port", port, "Listen port")->envname("STICKY_PORT");
  serve->add_option("--state-dir", state_dir, "Session and journal directory")
      ->envname("STICKY_STATE_DIR");

  std::vector<char*> argv;
  std::vector<std::string> owned = args;
  if (owned.empty()) owned.emplace_back("sticky");
  for (auto& a : owned) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (build->parsed()) {
      return CmdBuildModel(context_path, pop_path, model_out, flags, out);
    }
    if (analyze->parsed()) return CmdAnalyze(analyze_text, format, flags, out, err);
    if (optimize->parsed()) {
      return CmdOptimize(titles_path, optimize_out, format, top, flags, out, err);
    }
    if (stats->parsed()) return CmdStats(responses_path, reverse_items, format, out);
    if (serve->parsed()) return CmdServe(flags, host, port, state_dir, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  }
  return kUsage;
}

}  // namespace sticky::cli
