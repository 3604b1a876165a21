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

#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "sticky/decision_journal.h"
#include "sticky/resources.h"
#include "sticky/substitution_engine.h"
#include "sticky/text_core.h"

namespace sticky {

struct StoredCandidate {
  std::string candidate_id;
  std::size_t title_index = 0;  // into ReviewSession::titles
  SubstitutionCandidate candidate;
};

// Titles and candidates are fixed when the session is created; only the
// candidates' statuses change, and only through recorded decisions.
struct ReviewSession {
  std::string session_id;
  std::vector<Title> titles;
  std::vector<StoredCandidate> candidates;
  std::vector<DecisionRecord> decisions;
};

struct ExportRow {
  std::string original;
  std::string treatment;
};

// Candidates for `titles` in title order, each title's candidates in rank
// order, with ids c1, c2, ...
std::vector<StoredCandidate> BuildSessionCandidates(
    const std::vector<Title>& titles, const Resources& resources);

// Applies decisions to the session's candidates. A record for an unknown
// candidate or an already-decided one is skipped; returns how many were
// applied.
std::size_t ApplyDecisions(ReviewSession& session,
                           const std::vector<DecisionRecord>& records);

// One row per Accepted candidate, in candidate order.
std::vector<ExportRow> ExportDataset(const ReviewSession& session);

// ORIGINAL<TAB>TREATMENT header then one row per pair.
std::string FormatExport(const std::vector<ExportRow>& rows);

// Review sessions backed by two append-only files in `state_dir`:
// sessions.jsonl (one session per line, written at creation) and
// decisions.tsv (the decision journal). Constructing a store over an
// existing directory replays both. An empty `state_dir` keeps everything in
// memory.
class ReviewStore {
 public:
  static constexpr std::string_view kSessionsFile = "sessions.jsonl";
  static constexpr std::string_view kJournalFile = "decisions.tsv";

  explicit ReviewStore(Resources resources,
                       std::filesystem::path state_dir = {});

  // Throws Error(kResourceMissing) if resources are incomplete.
  ReviewSession CreateSession(const std::vector<Title>& titles);

  // All throw Error(kUnknownSession) for an unknown id.
  ReviewSession GetSession(std::string_view session_id) const;
  std::vector<StoredCandidate> Candidates(
      std::string_view session_id,
      std::optional<ReviewStatus> status = std::nullopt) const;
  std::vector<ExportRow> Export(std::string_view session_id) const;

  std::vector<std::string> SessionIds() const;

  // Appends to the journal before updating in-memory state. Throws
  // Error(kUnknownSession), Error(kUnknownCandidate) or
  // Error(kAlreadyReviewed).
  StoredCandidate RecordDecision(std::string_view session_id,
                                 std::string_view candidate_id,
                                 ReviewStatus decision);

  // Ad-hoc scoring of arbitrary text.
  std::pair<Title, TitleAnalysis> Score(std::string_view text) const;

  const Resources& resources() const { return resources_; }

 private:
  const ReviewSession& FindLocked(std::string_view session_id) const;
  void Load();

  Resources resources_;
  std::filesystem::path state_dir_;
  std::unique_ptr<AppendOnlyFile> sessions_file_;
  std::unique_ptr<DecisionJournal> journal_;

  mutable std::shared_mutex mu_;
  std::map<std::string, ReviewSession, std::less<>> sessions_;
  std::size_t next_session_ = 1;
};

}  // namespace sticky
