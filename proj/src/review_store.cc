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

#include "sticky/review_store.h"

#include <algorithm>
#include <cstdio>
#include <mutex>

#include "sticky/errors.h"
#include "sticky/json_io.h"

namespace sticky {

namespace {

std::string SessionId(std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "s%06zu", n);
  return buf;
}

Json SessionToJson(const ReviewSession& s) {
  Json titles = Json::array();
  for (const Title& t : s.titles) titles.push_back({{"id", t.id}, {"text", t.raw}});
  Json candidates = Json::array();
  for (const StoredCandidate& c : s.candidates) {
    Json cj = c.candidate;
    cj.erase("status");
    candidates.push_back(Json{{"candidate_id", c.candidate_id},
                              {"title_index", c.title_index}});
    candidates.back().update(cj);
  }
  return Json{{"session_id", s.session_id},
              {"titles", std::move(titles)},
              {"candidates", std::move(candidates)}};
}

ReviewSession SessionFromJson(const Json& j) {
  ReviewSession s;
  s.session_id = j.at("session_id").get<std::string>();
  for (const auto& t : j.at("titles")) {
    s.titles.push_back(
        Tokenize(t.at("text").get<std::string>(), t.at("id").get<std::string>()));
  }
  for (const auto& c : j.at("candidates")) {
    StoredCandidate sc;
    sc.candidate_id = c.at("candidate_id").get<std::string>();
    sc.title_index = c.at("title_index").get<std::size_t>();
    sc.candidate = c.get<SubstitutionCandidate>();
    sc.candidate.status = ReviewStatus::kPending;
    if (sc.title_index >= s.titles.size()) {
      throw Error(ErrorCode::kMalformedInput,
                  "candidate " + sc.candidate_id + " addresses a missing title");
    }
    s.candidates.push_back(std::move(sc));
  }
  return s;
}

}  // namespace

std::vector<StoredCandidate> BuildSessionCandidates(
    const std::vector<Title>& titles, const Resources& resources) {
  std::vector<StoredCandidate> out;
  for (std::size_t i = 0; i < titles.size(); ++i) {
    for (auto& c : GenerateCandidates(titles[i], resources)) {
      out.push_back({"c" + std::to_string(out.size() + 1), i, std::move(c)});
    }
  }
  return out;
}

std::size_t ApplyDecisions(ReviewSession& session,
                           const std::vector<DecisionRecord>& records) {
  std::size_t applied = 0;
  for (const DecisionRecord& r : records) {
    if (r.session_id != session.session_id) continue;
    auto it = std::find_if(
        session.candidates.begin(), session.candidates.end(),
        [&](const StoredCandidate& c) { return c.candidate_id == r.candidate_id; });
    if (it == session.candidates.end()) continue;
    if (it->candidate.status != ReviewStatus::kPending) continue;
    it->candidate = Review(std::move(it->candidate), r.decision);
    session.decisions.push_back(r);
    ++applied;
  }
  return applied;
}

std::vector<ExportRow> ExportDataset(const ReviewSession& session) {
  std::vector<ExportRow> rows;
  for (const StoredCandidate& c : session.candidates) {
    if (c.candidate.status != ReviewStatus::kAccepted) continue;
    const Title& original = session.titles[c.title_index];
    rows.push_back({original.raw, ApplySubstitution(original, c.candidate).raw});
  }
  return rows;
}

std::string FormatExport(const std::vector<ExportRow>& rows) {
  auto clean = [](std::string s) {
    std::replace_if(s.begin(), s.end(),
                    [](char c) { return c == '\t' || c == '\n' || c == '\r'; },
                    ' ');
    return s;
  };
  std::string out = "ORIGINAL\tTREATMENT\n";
  for (const ExportRow& row : rows) {
    out += clean(row.original);
    out += '\t';
    out += clean(row.treatment);
    out += '\n';
  }
  return out;
}

ReviewStore::ReviewStore(Resources resources, std::filesystem::path state_dir)
    : resources_(std::move(resources)), state_dir_(std::move(state_dir)) {
  if (!state_dir_.empty()) Load();
}

void ReviewStore::Load() {
  std::error_code ec;
  std::filesystem::create_directories(state_dir_, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot create " + state_dir_.string() + ": " + ec.message());
  }
  const auto sessions_path = state_dir_ / kSessionsFile;
  const auto journal_path = state_dir_ / kJournalFile;

  std::size_t line_no = 0;
  for (const std::string& line : AppendOnlyFile::ReadCompleteLines(sessions_path)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      ReviewSession s = SessionFromJson(Json::parse(line));
      sessions_.emplace(s.session_id, std::move(s));
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kMalformedInput,
                  sessions_path.string() + " line " + std::to_string(line_no) +
                      ": " + e.what());
    }
  }
  next_session_ = sessions_.size() + 1;
  while (sessions_.contains(SessionId(next_session_))) ++next_session_;

  const std::vector<DecisionRecord> records = DecisionJournal::Replay(journal_path);
  for (auto& [id, session] : sessions_) ApplyDecisions(session, records);

  sessions_file_ = std::make_unique<AppendOnlyFile>(sessions_path);
  journal_ = std::make_unique<DecisionJournal>(journal_path);
}

ReviewSession ReviewStore::CreateSession(const std::vector<Title>& titles) {
  resources_.RequireAll();
  ReviewSession session;
  session.titles = titles;
  session.candidates = BuildSessionCandidates(session.titles, resources_);

  std::unique_lock lock(mu_);
  session.session_id = SessionId(next_session_++);
  if (sessions_file_) sessions_file_->Append(SessionToJson(session).dump());
  sessions_.emplace(session.session_id, session);
  return session;
}

const ReviewSession& ReviewStore::FindLocked(std::string_view session_id) const {
  const auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kUnknownSession,
                "no session '" + std::string(session_id) + "'");
  }
  return it->second;
}

ReviewSession ReviewStore::GetSession(std::string_view session_id) const {
  std::shared_lock lock(mu_);
  return FindLocked(session_id);
}

std::vector<StoredCandidate> ReviewStore::Candidates(
    std::string_view session_id, std::optional<ReviewStatus> status) const {
  std::shared_lock lock(mu_);
  std::vector<StoredCandidate> out;
  for (const StoredCandidate& c : FindLocked(session_id).candidates) {
    if (!status || c.candidate.status == *status) out.push_back(c);
  }
  return out;
}

std::vector<ExportRow> ReviewStore::Export(std::string_view session_id) const {
  std::shared_lock lock(mu_);
  return ExportDataset(FindLocked(session_id));
}

std::vector<std::string> ReviewStore::SessionIds() const {
  std::shared_lock lock(mu_);
  std::vector<std::string> ids;
  for (const auto& [id, s] : sessions_) ids.push_back(id);
  return ids;
}

StoredCandidate ReviewStore::RecordDecision(std::string_view session_id,
                                            std::string_view candidate_id,
                                            ReviewStatus decision) {
  std::unique_lock lock(mu_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    throw Error(ErrorCode::kUnknownSession,
                "no session '" + std::string(session_id) + "'");
  }
  ReviewSession& session = it->second;
  auto cit = std::find_if(
      session.candidates.begin(), session.candidates.end(),
      [&](const StoredCandidate& c) { return c.candidate_id == candidate_id; });
  if (cit == session.candidates.end()) {
    throw Error(ErrorCode::kUnknownCandidate,
                "no candidate '" + std::string(candidate_id) + "' in session " +
                    session.session_id);
  }
  // Validates the transition before anything is written.
  SubstitutionCandidate updated = Review(cit->candidate, decision);

  DecisionRecord record{session.session_id, cit->candidate_id, decision,
                        NowRfc3339()};
  if (journal_) journal_->Append(record);
  cit->candidate = std::move(updated);
  session.decisions.push_back(std::move(record));
  return *cit;
}

std::pair<Title, TitleAnalysis> ReviewStore::Score(std::string_view text) const {
  resources_.RequireScoring();
  Title title = Tokenize(text, "adhoc");
  const WordSet& stopwords =
      resources_.stopwords ? *resources_.stopwords : DefaultStopwords();
  TitleAnalysis analysis = AnalyzeTitle(title, *resources_.model,
                                        *resources_.lexicon, stopwords,
                                        resources_.config);
  return {std::move(title), std::move(analysis)};
}

}  // namespace sticky
